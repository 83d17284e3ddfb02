#include "sftzeta/ff.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace sftzeta {
namespace {

using U32 = std::uint32_t;
using U64 = std::uint64_t;

bool is_prime(U64 n) {
  if (n < 2) return false;
  for (U64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over Z/p, low-to-high. Used only for modulus selection,
// before any FqContext exists.
using ZpPoly = std::vector<U32>;

void zp_strip(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
ZpPoly zp_rem(ZpPoly f, const ZpPoly& g, U64 p) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
    U64 v = f[i];
    if (v == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      U64 sub = v * g[j] % p;
      f[i - dg + j] = static_cast<U32>((f[i - dg + j] + p - sub) % p);
    }
  }
  f.resize(dg);
  zp_strip(f);
  return f;
}

// Walks monic polynomials of degree d in canonical order (constant term is
// the most significant key) and reports whether any divides f.
bool zp_has_monic_divisor_of_degree(const ZpPoly& f, int d, U64 p) {
  ZpPoly g(d + 1, 0);
  g[d] = 1;
  std::vector<U32> digits(d, 0);
  while (true) {
    for (int i = 0; i < d; ++i) g[i] = digits[d - 1 - i];  // last digit spins fastest
    if (zp_rem(f, g, p).empty()) return true;
    int i = d - 1;
    while (i >= 0 && digits[i] + 1 == p) digits[i--] = 0;
    if (i < 0) return false;
    ++digits[i];
  }
}

bool zp_irreducible(const ZpPoly& f, U64 p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d)
    if (zp_has_monic_divisor_of_degree(f, d, p)) return false;
  return true;
}

U64 checked_pow(U64 base, U32 exp, U64 limit) {
  U64 r = 1;
  for (U32 i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

void require_same_ctx(const FqCtxPtr& a, const FqCtxPtr& b) {
  if (a.get() == b.get()) return;
  require(a && b && a->same_field(*b), Errc::CrossContext,
          "operands belong to different field contexts");
}

}  // namespace

FqCtxPtr build_field(U32 p, U32 e, U64 scan_limit) {
  require(is_prime(p), Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  require(e >= 1, Errc::DegreeZero, "extension degree must be positive");
  U64 q = checked_pow(p, e, scan_limit);
  require(q <= scan_limit, Errc::ScanLimitExceeded,
          "field size p^e exceeds the scan limit " + std::to_string(scan_limit));

  // Scan monic degree-e candidates in canonical order; the first irreducible
  // one is the modulus.
  ZpPoly f(e + 1, 0);
  f[e] = 1;
  std::vector<U32> digits(e, 0);
  while (true) {
    for (U32 i = 0; i < e; ++i) f[i] = digits[e - 1 - i];
    if (zp_irreducible(f, p)) break;
    int i = static_cast<int>(e) - 1;
    while (i >= 0 && digits[i] + 1 == p) digits[i--] = 0;
    require(i >= 0, Errc::InternalCheck, "no irreducible polynomial found");
    ++digits[i];
  }

  auto ctx = std::make_shared<FqContext>();
  ctx->p = p;
  ctx->e = e;
  ctx->q = q;
  ctx->modulus = f;
  return ctx;
}

FqCtxPtr build_field_with_modulus(U32 p, U32 e, std::vector<U32> modulus, U64 scan_limit) {
  require(is_prime(p), Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  require(e >= 1, Errc::DegreeZero, "extension degree must be positive");
  U64 q = checked_pow(p, e, scan_limit);
  require(q <= scan_limit, Errc::ScanLimitExceeded,
          "field size p^e exceeds the scan limit " + std::to_string(scan_limit));
  for (auto& c : modulus) c %= p;
  zp_strip(modulus);
  require(modulus.size() == e + 1, Errc::SemanticError,
          "modulus must have degree e = " + std::to_string(e));
  require(modulus.back() == 1, Errc::SemanticError, "modulus must be monic");
  require(zp_irreducible(modulus, p), Errc::SemanticError, "modulus is reducible");

  auto ctx = std::make_shared<FqContext>();
  ctx->p = p;
  ctx->e = e;
  ctx->q = q;
  ctx->modulus = std::move(modulus);
  return ctx;
}

FieldElement::FieldElement(FqCtxPtr ctx, std::vector<U32> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  require(c_.size() == ctx_->e, Errc::DimensionMismatch, "coefficient vector length != e");
  for (auto& v : c_) v %= ctx_->p;
}

FieldElement FieldElement::zero(const FqCtxPtr& ctx) {
  return FieldElement(ctx, std::vector<U32>(ctx->e, 0));
}

FieldElement FieldElement::one(const FqCtxPtr& ctx) {
  std::vector<U32> c(ctx->e, 0);
  c[0] = 1 % ctx->p;
  return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_int(const FqCtxPtr& ctx, std::int64_t n) {
  std::int64_t p = ctx->p;
  std::int64_t r = ((n % p) + p) % p;
  std::vector<U32> c(ctx->e, 0);
  c[0] = static_cast<U32>(r);
  return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::generator(const FqCtxPtr& ctx) {
  std::vector<U32> c(ctx->e, 0);
  if (ctx->e > 1) c[1] = 1;
  return FieldElement(ctx, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](U32 v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1 % ctx_->p) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](U32 v) { return v == 0; });
}

U64 FieldElement::rank() const {
  U64 r = 0;
  for (U32 i = 0; i < ctx_->e; ++i) r = r * ctx_->p + c_[i];
  return r;
}

FieldElement element_at(const FqCtxPtr& ctx, U64 rank) {
  std::vector<U32> c(ctx->e, 0);
  for (int i = static_cast<int>(ctx->e) - 1; i >= 0; --i) {
    c[i] = static_cast<U32>(rank % ctx->p);
    rank /= ctx->p;
  }
  return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  std::vector<U32> c(ctx_->e);
  for (U32 i = 0; i < ctx_->e; ++i) c[i] = (c_[i] + rhs.c_[i]) % ctx_->p;
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  std::vector<U32> c(ctx_->e);
  for (U32 i = 0; i < ctx_->e; ++i) c[i] = (c_[i] + ctx_->p - rhs.c_[i]) % ctx_->p;
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<U32> c(ctx_->e);
  for (U32 i = 0; i < ctx_->e; ++i) c[i] = (ctx_->p - c_[i]) % ctx_->p;
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  const U64 p = ctx_->p;
  const U32 e = ctx_->e;
  if (e == 1) {
    U64 v = static_cast<U64>(c_[0]) * rhs.c_[0] % p;
    return FieldElement(ctx_, {static_cast<U32>(v)});
  }
  std::vector<U64> prod(2 * e - 1, 0);
  for (U32 i = 0; i < e; ++i) {
    if (c_[i] == 0) continue;
    for (U32 j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + static_cast<U64>(c_[i]) * rhs.c_[j]) % p;
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(e); --i) {
    U64 v = prod[i];
    if (v == 0) continue;
    prod[i] = 0;
    for (U32 j = 0; j < e; ++j)
      prod[i - e + j] = (prod[i - e + j] + p * p - v * ctx_->modulus[j] % p) % p;
  }
  std::vector<U32> c(e);
  for (U32 i = 0; i < e; ++i) c[i] = static_cast<U32>(prod[i]);
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::pow(U64 n) const {
  FieldElement base = *this;
  FieldElement acc = FieldElement::one(ctx_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), Errc::ZeroPolynomial, "inverse of zero");
  return pow(ctx_->q - 2);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  return c_ == rhs.c_;
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(ctx_->e) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FieldElement frobenius(const FieldElement& a, U32 k) {
  FieldElement r = a;
  for (U32 i = 0; i < k; ++i) r = r.pow(a.ctx()->p);
  return r;
}

Embedding::Embedding(FqCtxPtr from, FqCtxPtr to, FieldElement gen_image)
    : from_(std::move(from)), to_(std::move(to)), gen_image_(std::move(gen_image)) {
  gen_powers_.reserve(from_->e);
  FieldElement pw = FieldElement::one(to_);
  for (U32 i = 0; i < from_->e; ++i) {
    gen_powers_.push_back(pw);
    if (i + 1 < from_->e) pw = pw * gen_image_;
  }
  // Self-test: the map must be multiplicative (additivity and unitality hold
  // by construction). Exhaustive at desk scale, deterministic sample beyond.
  const U64 qf = from_->q;
  auto check_pair = [&](U64 ra, U64 rb) {
    FieldElement a = element_at(from_, ra), b = element_at(from_, rb);
    require((*this)(a * b) == (*this)(a) * (*this)(b), Errc::InternalCheck,
            "embedding is not multiplicative");
  };
  if (qf <= 256) {
    for (U64 ra = 0; ra < qf; ++ra)
      for (U64 rb = ra; rb < qf; ++rb) check_pair(ra, rb);
  } else {
    U64 s = 12345;
    for (int i = 0; i < 4096; ++i) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      U64 ra = (s >> 16) % qf;
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      U64 rb = (s >> 16) % qf;
      check_pair(ra, rb);
    }
  }
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  require(a.ctx().get() == from_.get() || a.ctx()->same_field(*from_), Errc::CrossContext,
          "element not in the embedding's source field");
  FieldElement r = FieldElement::zero(to_);
  for (U32 i = 0; i < from_->e; ++i) {
    if (a.coeffs()[i] == 0) continue;
    r = r + gen_powers_[i] * FieldElement::from_int(to_, a.coeffs()[i]);
  }
  return r;
}

Poly::Poly(FqCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_ctx(ctx_, c.ctx());
  strip();
}

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.ctx(), {c}); }

Poly Poly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(degree + 1, FieldElement::zero(c.ctx()));
  v[degree] = c;
  return Poly(c.ctx(), std::move(v));
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(ctx_);
  return c_[i];
}

FieldElement Poly::leading() const {
  require(!is_zero(), Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  std::vector<FieldElement> c(std::max(c_.size(), rhs.c_.size()), FieldElement::zero(ctx_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator-(const Poly& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  std::vector<FieldElement> c(std::max(c_.size(), rhs.c_.size()), FieldElement::zero(ctx_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator*(const Poly& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  if (is_zero() || rhs.is_zero()) return Poly(ctx_);
  std::vector<FieldElement> c(c_.size() + rhs.c_.size() - 1, FieldElement::zero(ctx_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * rhs.c_[j];
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator*(const FieldElement& s) const {
  std::vector<FieldElement> c(c_);
  for (auto& v : c) v = v * s;
  return Poly(ctx_, std::move(c));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(ctx_);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(ctx_);
  std::vector<FieldElement> c;
  c.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c.push_back(c_[i] * FieldElement::from_int(ctx_, static_cast<std::int64_t>(i)));
  return Poly(ctx_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  require(!rhs.is_zero(), Errc::ZeroPolynomial, "division by the zero polynomial");
  Poly rem = *this;
  if (rem.degree() < rhs.degree()) return {Poly(ctx_), rem};
  std::vector<FieldElement> q(rem.degree() - rhs.degree() + 1, FieldElement::zero(ctx_));
  FieldElement lead_inv = rhs.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= rhs.degree()) {
    int shift = rem.degree() - rhs.degree();
    FieldElement factor = rem.leading() * lead_inv;
    q[shift] = factor;
    rem = rem - Poly::monomial(factor, shift) * rhs;
  }
  return {Poly(ctx_, std::move(q)), rem};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

bool Poly::operator==(const Poly& rhs) const {
  if (c_.size() != rhs.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == rhs.c_[i])) return false;
  return true;
}

namespace {

// Monomial emission compatible with the shared polynomial text syntax:
// products of an integer, t^j, x^a, y^b joined by '+' (no parentheses).
void emit_monomial(std::ostringstream& os, bool& first, U32 coeff, int texp, int xexp, int yexp,
                   const std::string& xvar) {
  if (coeff == 0) return;
  if (!first) os << "+";
  first = false;
  bool printed = false;
  if (coeff != 1 || (texp == 0 && xexp == 0 && yexp == 0)) {
    os << coeff;
    printed = true;
  }
  auto piece = [&](const std::string& v, int exp) {
    if (exp == 0) return;
    if (printed) os << "*";
    os << v;
    if (exp > 1) os << "^" << exp;
    printed = true;
  };
  piece("t", texp);
  piece(xvar, xexp);
  piece("y", yexp);
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& coeffs = c_[i].coeffs();
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
      emit_monomial(os, first, coeffs[j], j, i, 0, var);
  }
  return os.str();
}

void BiPoly::add_term(int dx, int dy, const FieldElement& c) {
  require_same_ctx(ctx_, c.ctx());
  auto key = std::make_pair(dx, dy);
  auto it = terms_.find(key);
  FieldElement v = it == terms_.end() ? c : it->second + c;
  if (v.is_zero())
    terms_.erase(key);
  else
    terms_[key] = v;
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
  require_same_ctx(ctx_, x.ctx());
  require_same_ctx(ctx_, y.ctx());
  int max_dx = 0, max_dy = 0;
  for (const auto& [k, v] : terms_) {
    max_dx = std::max(max_dx, k.first);
    max_dy = std::max(max_dy, k.second);
  }
  std::vector<FieldElement> xp{FieldElement::one(ctx_)}, yp{FieldElement::one(ctx_)};
  for (int i = 1; i <= max_dx; ++i) xp.push_back(xp.back() * x);
  for (int i = 1; i <= max_dy; ++i) yp.push_back(yp.back() * y);
  FieldElement acc = FieldElement::zero(ctx_);
  for (const auto& [k, v] : terms_) acc = acc + v * xp[k.first] * yp[k.second];
  return acc;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
  require_same_ctx(ctx_, rhs.ctx_);
  BiPoly r = *this;
  for (const auto& [k, v] : rhs.terms_) r.add_term(k.first, k.second, v);
  return r;
}

BiPoly BiPoly::product_xy(const Poly& px, const Poly& qy) {
  require_same_ctx(px.ctx(), qy.ctx());
  BiPoly r(px.ctx());
  for (int i = 0; i <= px.degree(); ++i) {
    if (px.coeff(i).is_zero()) continue;
    for (int j = 0; j <= qy.degree(); ++j) {
      FieldElement c = px.coeff(i) * qy.coeff(j);
      if (!c.is_zero()) r.add_term(i, j, c);
    }
  }
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& coeffs = it->second.coeffs();
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
      emit_monomial(os, first, coeffs[j], j, it->first.first, it->first.second, "x");
  }
  return os.str();
}

bool is_separable(const Poly& g) {
  require(!g.is_zero(), Errc::ZeroPolynomial, "separability of the zero polynomial");
  Poly d = g.derivative();
  if (d.is_zero()) return g.degree() == 0;
  return Poly::gcd(g, d).degree() == 0;
}

std::pair<FqCtxPtr, Embedding> extend_field(const FqCtxPtr& ctx, U32 m, U64 scan_limit) {
  require(m >= 1, Errc::DegreeZero, "extension degree must be positive");
  if (m == 1) {
    return {ctx, Embedding(ctx, ctx, FieldElement::generator(ctx))};
  }
  FqCtxPtr ext = build_field(ctx->p, ctx->e * m, scan_limit);
  // Least root of the base modulus inside the extension, canonical order.
  std::vector<FieldElement> mod_coeffs;
  mod_coeffs.reserve(ctx->modulus.size());
  for (U32 c : ctx->modulus) mod_coeffs.push_back(FieldElement::from_int(ext, c));
  Poly base_mod(ext, std::move(mod_coeffs));
  for (U64 r = 0; r < ext->q; ++r) {
    FieldElement cand = element_at(ext, r);
    if (base_mod.eval(cand).is_zero()) return {ext, Embedding(ctx, ext, cand)};
  }
  fail(Errc::InternalCheck, "base modulus has no root in the extension");
}

Poly embed_poly(const Poly& g, const Embedding& emb) {
  std::vector<FieldElement> c;
  c.reserve(g.coeffs().size());
  for (const auto& v : g.coeffs()) c.push_back(emb(v));
  return Poly(emb.to(), std::move(c));
}

BiPoly embed_bipoly(const BiPoly& f, const Embedding& emb) {
  BiPoly r(emb.to());
  for (const auto& [k, v] : f.terms()) r.add_term(k.first, k.second, emb(v));
  return r;
}

std::vector<FieldElement> roots_in(const Poly& g, U32 m, U64 scan_limit) {
  require(!g.is_zero(), Errc::ZeroPolynomial, "root scan of the zero polynomial");
  auto [ext, emb] = extend_field(g.ctx(), m, scan_limit);
  Poly ge = embed_poly(g, emb);
  std::vector<FieldElement> roots;
  for (U64 r = 0; r < ext->q; ++r) {
    FieldElement cand = element_at(ext, r);
    if (ge.eval(cand).is_zero()) roots.push_back(cand);
  }
  return roots;
}

U32 splitting_degree(const Poly& g, U32 m_max, U64 scan_limit) {
  require(is_separable(g), Errc::NotSeparable, "polynomial is not separable");
  const int deg = g.degree();
  for (U32 m = 1; m <= m_max; ++m) {
    U64 size = checked_pow(g.ctx()->q, m, scan_limit);
    require(size <= scan_limit, Errc::ScanLimitExceeded,
            "splitting search passed the scan limit at m = " + std::to_string(m));
    if (static_cast<int>(roots_in(g, m, scan_limit).size()) == deg) return m;
  }
  fail(Errc::NotSplitWithinBound,
       "polynomial does not split within m_max = " + std::to_string(m_max));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ScanLimitExceeded: return "ScanLimitExceeded";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotSplitWithinBound: return "NotSplitWithinBound";
    case Errc::CrossContext: return "CrossContext";
    case Errc::NotSquare: return "NotSquare";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicateState: return "DuplicateState";
    case Errc::EmptyShift: return "EmptyShift";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::LengthZero: return "LengthZero";
    case Errc::InconsistentTable: return "InconsistentTable";
    case Errc::WordTooShort: return "WordTooShort";
    case Errc::InadmissibleWord: return "InadmissibleWord";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::Empty: return "Empty";
    case Errc::NotWeaklyConnected: return "NotWeaklyConnected";
    case Errc::NoCycle: return "NoCycle";
    case Errc::LMaxTooSmall: return "LMaxTooSmall";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::NotBijective: return "NotBijective";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::FrobeniusNotAutomorphism: return "FrobeniusNotAutomorphism";
    case Errc::AlphabetTooLarge: return "AlphabetTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::InternalCheck: return "InternalCheck";
  }
  return "UnknownError";
}

}  // namespace sftzeta
