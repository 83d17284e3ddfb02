#ifndef SFTZETA_ZETA_HPP
#define SFTZETA_ZETA_HPP

#include <string>
#include <vector>

#include "sftzeta/numbers.hpp"
#include "sftzeta/sft.hpp"

namespace sftzeta {

/// Integer polynomial, low-to-high coefficients, trailing zeros stripped.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, int degree);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int i) const;

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& rhs) const { return c_ == rhs.c_; }

  Rational eval(const Rational& t) const;
  IntPoly derivative() const;

  /// gcd of the coefficients (non-negative); 0 for the zero polynomial.
  BigInt content() const;
  IntPoly primitive_part() const;

  /// Primitive gcd with positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  /// Rendering in ascending powers, e.g. "1 - t - t^2".
  std::string str(const std::string& var = "t") const;

 private:
  void strip();
  std::vector<BigInt> c_;
};

/// Reduced quotient of integer polynomials. num/den are coprime and
/// primitive; the denominator's constant term is positive when nonzero,
/// otherwise its leading coefficient is.
struct RationalFunction {
  IntPoly num;
  IntPoly den;
};

RationalFunction make_rational_function(IntPoly num, IntPoly den);

/// Truncated power series with exact rational coefficients c_0..c_m.
struct PowerSeries {
  std::vector<Rational> c;
  int order() const { return static_cast<int>(c.size()) - 1; }
};

/// Series expansion of num/den to the given order (den(0) != 0).
PowerSeries expand(const RationalFunction& f, int order);

/// A 1-block automorphism of a vertex shift: a state permutation commuting
/// with the transition relation, plus its order.
struct TwistData {
  Sft sft;
  std::vector<int> perm;  // image of each state index
  int order = 1;          // least d with perm^d = id
};

/// det(I - tA) by the Faddeev-LeVerrier trace recursion over exact
/// rationals, with a final integrality assertion.
IntPoly char_poly_reversed(const Sft& x);

/// 1 / det(I - tA), reduced.
RationalFunction dynamical_zeta(const Sft& x);

/// First m+1 coefficients of exp(sum_n N(X,n)/n t^n); cross-checked against
/// the expansion of dynamical_zeta before returning.
PowerSeries zeta_series(const Sft& x, int m);

/// Validates the permutation and computes its order (capped: the order
/// drives period-length loops downstream).
TwistData make_twist(const Sft& x, std::vector<int> f0, std::uint64_t order_cap = kDefaultEnumCap);

/// |{x : A[x][f0^n(x)] = 1}|; cross-checked against Tr(A F^n).
BigInt twisted_count(const TwistData& tw, std::uint64_t n);

/// (sum_{r=1..d} N_r t^{r-1}) / (1 - t^d), reduced. Equals sum_n N_n t^{n-1}
/// since N_n depends only on n mod d, with r = d standing in for n = 0 mod d.
RationalFunction twisted_log_derivative(const TwistData& tw);

/// First m+1 coefficients of exp(sum_n N_n/n t^n); its formal log-derivative
/// is cross-checked against twisted_log_derivative before returning.
PowerSeries twisted_zeta_series(const TwistData& tw, int m);

}  // namespace sftzeta

#endif
