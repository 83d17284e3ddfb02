#include "sftzeta/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sftzeta {
namespace {

using RatPoly = std::vector<Rational>;  // low-to-high, not normalized

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

void rat_strip(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), exact rational division.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  rat_strip(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    Rational f = a.back() / b.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    rat_strip(a);
    if (a.empty()) break;
  }
  return a;
}

IntPoly rat_to_primitive(const RatPoly& p) {
  if (p.empty()) return IntPoly();
  BigInt l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<BigInt> ic;
  ic.reserve(p.size());
  for (const auto& c : p) ic.push_back(numerator(c) * (l / denominator(c)));
  IntPoly ip(std::move(ic));
  IntPoly prim = ip.primitive_part();
  if (prim.coeffs().back() < 0) prim = -prim;
  return prim;
}

// Exact quotient a / b; the division must leave no remainder.
IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return IntPoly();
  RatPoly ra = to_rat(a);
  const RatPoly rb = to_rat(b);
  const int db = b.degree();
  RatPoly q(a.degree() - db + 1, Rational(0));
  while (static_cast<int>(ra.size()) - 1 >= db && !ra.empty()) {
    Rational f = ra.back() / rb.back();
    int shift = static_cast<int>(ra.size()) - 1 - db;
    q[shift] = f;
    for (int j = 0; j <= db; ++j) ra[shift + j] -= f * rb[j];
    ra.pop_back();
    rat_strip(ra);
  }
  require(ra.empty(), Errc::InternalCheck, "inexact polynomial division");
  std::vector<BigInt> ic;
  ic.reserve(q.size());
  for (const auto& c : q) {
    require(denominator(c) == 1, Errc::InternalCheck, "non-integer quotient coefficient");
    ic.push_back(numerator(c));
  }
  return IntPoly(std::move(ic));
}

PowerSeries series_derivative(const PowerSeries& s) {
  PowerSeries d;
  if (s.c.size() <= 1) {
    d.c = {Rational(0)};
    return d;
  }
  for (std::size_t k = 1; k < s.c.size(); ++k) d.c.push_back(s.c[k] * static_cast<int>(k));
  return d;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order) {
  PowerSeries r;
  r.c.assign(order + 1, Rational(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.c.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.c.size()); ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

// exp of sum_{n>=1} counts(n)/n t^n via the formal-exponential recurrence
// k c_k = sum_{n=1..k} counts(n) c_{k-n}.
template <typename CountFn>
PowerSeries exp_of_count_series(CountFn counts, int m) {
  PowerSeries s;
  s.c.assign(m + 1, Rational(0));
  s.c[0] = 1;
  std::vector<BigInt> n_cache(m + 1, 0);
  for (int n = 1; n <= m; ++n) n_cache[n] = counts(n);
  for (int k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (int n = 1; n <= k; ++n) acc += Rational(n_cache[n]) * s.c[k - n];
    s.c[k] = acc / k;
  }
  return s;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { strip(); }

void IntPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, int degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> c(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<BigInt> c(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<BigInt> c(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c(c_);
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * t + Rational(c_[i]);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<BigInt> c;
  c.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<int>(i));
  return IntPoly(std::move(c));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? -g : g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  std::vector<BigInt> c(c_);
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return rat_to_primitive(to_rat(b));
  if (b.is_zero()) return rat_to_primitive(to_rat(a));
  RatPoly r0 = to_rat(a), r1 = to_rat(b);
  while (!r1.empty()) {
    RatPoly r = rat_rem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return rat_to_primitive(r0);
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalFunction make_rational_function(IntPoly num, IntPoly den) {
  require(!den.is_zero(), Errc::ZeroPolynomial, "zero denominator");
  if (num.is_zero()) return {IntPoly(), IntPoly::constant(1)};
  IntPoly g = IntPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  BigInt c = boost::multiprecision::gcd(num.content(), den.content());
  if (c > 1) {
    num = divexact(num, IntPoly::constant(c));
    den = divexact(den, IntPoly::constant(c));
  }
  bool flip = den.coeff(0) != 0 ? den.coeff(0) < 0 : den.coeffs().back() < 0;
  if (flip) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

PowerSeries expand(const RationalFunction& f, int order) {
  require(f.den.coeff(0) != 0, Errc::ZeroPolynomial,
          "series expansion needs a unit constant term in the denominator");
  PowerSeries s;
  s.c.assign(order + 1, Rational(0));
  Rational d0(f.den.coeff(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc(f.num.coeff(k));
    for (int i = 1; i <= std::min(k, f.den.degree()); ++i)
      acc -= Rational(f.den.coeff(i)) * s.c[k - i];
    s.c[k] = acc / d0;
  }
  return s;
}

IntPoly char_poly_reversed(const Sft& x) {
  require(!x.empty(), Errc::EmptyShift, "characteristic polynomial of the empty shift");
  const int n = x.size();
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.edge(i, j)) a[idx(i, j)] = 1;

  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -Tr(A M_k) / k.
  // The divisions must come out exact; a remainder means a genuine bug.
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  std::vector<BigInt> m(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> am(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[idx(i, l)] == 0) continue;
        for (int j = 0; j < n; ++j) am[idx(i, j)] += a[idx(i, l)] * m[idx(l, j)];
      }
    for (int i = 0; i < n; ++i) am[idx(i, i)] += c[k - 1];
    m = std::move(am);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a[idx(i, l)] * m[idx(l, i)];
    require(tr % k == 0, Errc::IntegralityViolation,
            "trace recursion produced a non-integer coefficient");
    c[k] = -tr / k;
  }
  // det(lambda I - A) = sum c_k lambda^{n-k}, so det(I - tA) = sum c_k t^k.
  return IntPoly(std::move(c));
}

RationalFunction dynamical_zeta(const Sft& x) {
  return make_rational_function(IntPoly::constant(1), char_poly_reversed(x));
}

PowerSeries zeta_series(const Sft& x, int m) {
  require(m >= 0, Errc::LengthZero, "series order must be non-negative");
  if (x.empty()) {
    PowerSeries s;
    s.c.assign(m + 1, Rational(0));
    s.c[0] = 1;
    return s;
  }
  PowerSeries s = exp_of_count_series([&x](int n) { return periodic_count(x, n); }, m);
  PowerSeries check = expand(dynamical_zeta(x), m);
  require(s.c == check.c, Errc::InternalCheck,
          "zeta series disagrees with the determinant expansion");
  return s;
}

TwistData make_twist(const Sft& x, std::vector<int> f0, std::uint64_t order_cap) {
  const int n = x.size();
  require(static_cast<int>(f0.size()) == n, Errc::NotBijective,
          "permutation length does not match the state count");
  std::vector<bool> hit(n, false);
  for (int v : f0) {
    require(v >= 0 && v < n && !hit[v], Errc::NotBijective, "map is not a bijection on states");
    hit[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(x.edge(i, j) == x.edge(f0[i], f0[j]), Errc::NotAutomorphism,
              "transition not preserved at witness pair (" + x.label(i) + "," + x.label(j) + ")");

  // Order = lcm of the cycle lengths.
  std::vector<bool> seen(n, false);
  unsigned long long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = f0[j];
      ++len;
    }
    order = std::lcm(order, static_cast<unsigned long long>(len));
    require(order <= order_cap, Errc::CapExceeded, "twist order exceeds the cap");
  }
  TwistData tw;
  tw.sft = x;
  tw.perm = std::move(f0);
  tw.order = static_cast<int>(order);
  return tw;
}

BigInt twisted_count(const TwistData& tw, std::uint64_t n) {
  require(n >= 1, Errc::LengthZero, "twist exponent must be positive");
  const int sz = tw.sft.size();
  const std::uint64_t r = n % static_cast<std::uint64_t>(tw.order);
  const int steps = static_cast<int>(r == 0 ? tw.order : r);
  if (sz == 0) return 0;

  std::vector<int> fn(sz);
  std::iota(fn.begin(), fn.end(), 0);
  for (int s = 0; s < steps; ++s)
    for (int i = 0; i < sz; ++i) fn[i] = tw.perm[fn[i]];
  BigInt direct = 0;
  for (int i = 0; i < sz; ++i)
    if (tw.sft.edge(i, fn[i])) ++direct;

  // Independent route: Tr(T F^steps) with F the permutation matrix of f0.
  auto idx = [sz](int i, int j) { return static_cast<std::size_t>(i) * sz + j; };
  std::vector<BigInt> f(static_cast<std::size_t>(sz) * sz, 0), acc(f);
  for (int y = 0; y < sz; ++y) f[idx(tw.perm[y], y)] = 1;
  for (int i = 0; i < sz; ++i) acc[idx(i, i)] = 1;
  for (int s = 0; s < steps; ++s) {
    std::vector<BigInt> next(static_cast<std::size_t>(sz) * sz, 0);
    for (int i = 0; i < sz; ++i)
      for (int k = 0; k < sz; ++k) {
        if (acc[idx(i, k)] == 0) continue;
        for (int j = 0; j < sz; ++j) next[idx(i, j)] += acc[idx(i, k)] * f[idx(k, j)];
      }
    acc = std::move(next);
  }
  BigInt trace = 0;
  for (int i = 0; i < sz; ++i)
    for (int k = 0; k < sz; ++k)
      if (tw.sft.edge(i, k)) trace += acc[idx(k, i)];
  require(direct == trace, Errc::InternalCheck, "twisted count disagrees with the trace formula");
  return direct;
}

namespace {

// fn[i] = perm^steps applied pointwise is recomputed by twisted_count; the
// periodic sequence N_1..N_d is all the callers below need.
std::vector<BigInt> twist_period_counts(const TwistData& tw) {
  std::vector<BigInt> n;
  n.reserve(tw.order);
  for (int r = 1; r <= tw.order; ++r) n.push_back(twisted_count(tw, r));
  return n;
}

}  // namespace

RationalFunction twisted_log_derivative(const TwistData& tw) {
  const std::vector<BigInt> counts = twist_period_counts(tw);
  const int d = tw.order;
  std::vector<BigInt> num(d, 0);
  for (int r = 1; r <= d; ++r) num[r - 1] = counts[r - 1];
  std::vector<BigInt> den(d + 1, 0);
  den[0] = 1;
  den[d] = -1;
  return make_rational_function(IntPoly(std::move(num)), IntPoly(std::move(den)));
}

PowerSeries twisted_zeta_series(const TwistData& tw, int m) {
  require(m >= 0, Errc::LengthZero, "series order must be non-negative");
  const std::vector<BigInt> counts = twist_period_counts(tw);
  const int d = tw.order;
  PowerSeries s =
      exp_of_count_series([&](int n) { return counts[static_cast<std::size_t>((n - 1) % d)]; }, m);
  if (m >= 1) {
    PowerSeries lhs = series_derivative(s);
    PowerSeries rhs = series_mul(expand(twisted_log_derivative(tw), m - 1), s, m - 1);
    require(lhs.c == rhs.c, Errc::InternalCheck,
            "series log-derivative disagrees with the rational form");
  }
  return s;
}

}  // namespace sftzeta
