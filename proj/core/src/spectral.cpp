#include "sftzeta/spectral.hpp"

#include <algorithm>

#include "sftzeta/decomp.hpp"

namespace sftzeta {
namespace {

// Collatz-Wielandt bracket for the Perron value of an irreducible 0/1 block.
// Iterates v <- (B+I)v over the integers; the ratio bounds of each step are
// nested, so the loop can stop as soon as the width meets the tolerance.
EntropyBracket component_bounds(const Sft& b, const Rational& tol, int max_iter) {
  const int n = b.size();
  std::vector<BigInt> v(n, 1);
  EntropyBracket best;
  best.lo = 0;
  best.hi = n;  // row sums bound the spectral radius
  best.converged = false;
  for (int iter = 1; iter <= max_iter; ++iter) {
    std::vector<BigInt> w(n, 0);
    for (int i = 0; i < n; ++i) {
      BigInt acc = v[i];  // the +I shift keeps the iteration primitive
      for (int j = 0; j < n; ++j)
        if (b.edge(i, j)) acc += v[j];
      w[i] = acc;
    }
    Rational lo = Rational(w[0], v[0]), hi = lo;
    for (int i = 1; i < n; ++i) {
      Rational r(w[i], v[i]);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    lo -= 1;
    hi -= 1;
    best.lo = std::max(best.lo, lo);
    best.hi = std::min(best.hi, hi);
    best.iterations = iter;
    if (best.hi - best.lo <= tol) {
      best.converged = true;
      break;
    }
    BigInt g = 0;
    for (const auto& e : w) g = boost::multiprecision::gcd(g, e);
    if (g > 1)
      for (auto& e : w) e /= g;
    v = std::move(w);
  }
  return best;
}

}  // namespace

EntropyBracket entropy_bounds(const Sft& x, const Rational& tol, int max_iter) {
  require(!x.empty(), Errc::EmptyShift, "entropy of the empty shift");
  require(tol > 0, Errc::DimensionMismatch, "tolerance must be positive");
  std::vector<Component> comps = irreducible_components(x);
  require(!comps.empty(), Errc::NoCycle, "shift has no cycle, entropy is -infinity");

  // The spectral radius of a block-triangular matrix is the max over the
  // diagonal blocks; transient states contribute nilpotent blocks only.
  EntropyBracket out;
  out.lo = 0;
  out.hi = 0;
  out.converged = true;
  bool first = true;
  for (const auto& c : comps) {
    EntropyBracket eb = component_bounds(c.sft, tol, max_iter);
    if (first) {
      out = eb;
      first = false;
    } else {
      out.lo = std::max(out.lo, eb.lo);
      out.hi = std::max(out.hi, eb.hi);
      out.iterations = std::max(out.iterations, eb.iterations);
      out.converged = out.converged && eb.converged;
    }
  }
  return out;
}

LimitDegreeResult limit_degree(const Sft& x, int l_max, int window) {
  require(!x.empty(), Errc::EmptyShift, "limit degree of the empty shift");
  require(window >= 2, Errc::DimensionMismatch, "window must be at least 2");
  require(l_max >= window + 1, Errc::LMaxTooSmall,
          "l_max must be at least window + 1 to witness stabilization");

  LimitDegreeResult res;
  std::vector<BigInt> counts(l_max + 1);
  for (int l = 1; l <= l_max; ++l) counts[l] = word_count(x, l);
  for (int l = 1; l + 1 <= l_max; ++l) res.ratios.emplace_back(counts[l + 1], counts[l]);

  const int total = static_cast<int>(res.ratios.size());
  const Rational& last = res.ratios.back();
  if (denominator(last) != 1) return res;
  for (int i = total - window; i < total; ++i)
    if (res.ratios[i] != last) return res;

  res.stabilized = true;
  res.degree = numerator(last);
  int first = total - window;
  while (first > 0 && res.ratios[first - 1] == last) --first;
  res.since_l = first + 1;  // ratios[i] compares lengths i+1 and i+2
  return res;
}

}  // namespace sftzeta
