#ifndef SFTZETA_SPECTRAL_HPP
#define SFTZETA_SPECTRAL_HPP

#include <vector>

#include "sftzeta/numbers.hpp"
#include "sftzeta/sft.hpp"

namespace sftzeta {

/// Exact rational bracket around the spectral radius of the transition
/// matrix. `converged` is false when max_iter ran out; the bracket is then
/// the best one seen (still valid, just wider than the tolerance).
struct EntropyBracket {
  Rational lo;
  Rational hi;
  int iterations = 0;
  bool converged = true;
};

/// Bracket [lo, hi] containing the spectral radius, hi - lo <= tol on
/// success, computed per irreducible component by Collatz-Wielandt iteration
/// on B + I in exact rational arithmetic. The entropy itself is log of the
/// bracket; logs are left to the presentation layer.
EntropyBracket entropy_bounds(const Sft& x, const Rational& tol, int max_iter = 10000);

/// Outcome of the word-count ratio stabilization scan.
struct LimitDegreeResult {
  bool stabilized = false;
  BigInt degree = 0;   // the integer ratio d, when stabilized
  int since_l = 0;     // first l with word_count(l+1) = d * word_count(l) onward
  std::vector<Rational> ratios;  // r_l = |W(X,l+1)| / |W(X,l)| for l = 1..l_max-1
};

/// Watches r_l = word_count(l+1)/word_count(l); reports Stabilized(d) only
/// when the last `window` ratios all equal the same integer d.
LimitDegreeResult limit_degree(const Sft& x, int l_max, int window = 3);

}  // namespace sftzeta

#endif
