#ifndef SFTZETA_FF_HPP
#define SFTZETA_FF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sftzeta/errors.hpp"

namespace sftzeta {

/// Hard ceiling on exhaustive element scans (roots, embeddings, point counts).
inline constexpr std::uint64_t kDefaultScanLimit = std::uint64_t{1} << 20;

/// An explicit finite field F_{p^e} = (Z/p)[t] / (modulus).
///
/// Contexts are immutable and shared; two contexts are interchangeable iff
/// (p, e, modulus) agree. The modulus is the lexicographically smallest monic
/// irreducible polynomial of degree e, ordered by coefficient tuples with the
/// constant term as the most significant key, so construction is
/// deterministic. For e = 1 the modulus is t and every element is a constant.
struct FqContext {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;                  // p^e
  std::vector<std::uint32_t> modulus;   // length e+1, low-to-high, monic

  bool same_field(const FqContext& other) const {
    return p == other.p && e == other.e && modulus == other.modulus;
  }
};

using FqCtxPtr = std::shared_ptr<const FqContext>;

FqCtxPtr build_field(std::uint32_t p, std::uint32_t e, std::uint64_t scan_limit = kDefaultScanLimit);

/// Field with a caller-chosen modulus (monic irreducible of degree e, low-to-high).
FqCtxPtr build_field_with_modulus(std::uint32_t p, std::uint32_t e,
                                  std::vector<std::uint32_t> modulus,
                                  std::uint64_t scan_limit = kDefaultScanLimit);

/// Element of an FqContext: e residues mod p, low-to-high powers of t.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FqCtxPtr ctx, std::vector<std::uint32_t> coeffs);

  static FieldElement zero(const FqCtxPtr& ctx);
  static FieldElement one(const FqCtxPtr& ctx);
  static FieldElement from_int(const FqCtxPtr& ctx, std::int64_t n);
  static FieldElement generator(const FqCtxPtr& ctx);  // image of t (zero when e = 1)

  const FqCtxPtr& ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  /// Position in the canonical element order: coefficient tuples compared
  /// lexicographically, constant term first. rank(0) = 0.
  std::uint64_t rank() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t n) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// Rendering like "t^2+t+1", high powers first; "0" for zero.
  std::string str() const;

 private:
  FqCtxPtr ctx_;
  std::vector<std::uint32_t> c_;
};

/// Element with the given canonical rank (inverse of FieldElement::rank).
FieldElement element_at(const FqCtxPtr& ctx, std::uint64_t rank);

/// k-th iterate of the absolute Frobenius x -> x^p; frobenius(a, 0) = a.
/// The q-power Frobenius of a field of size p^e is frobenius(a, e).
FieldElement frobenius(const FieldElement& a, std::uint32_t k);

/// Field embedding determined by sending the generator of `from` to a chosen
/// root of the base modulus inside `to`. Verified multiplicative on
/// construction (exhaustively at desk scale, sampled beyond).
class Embedding {
 public:
  Embedding(FqCtxPtr from, FqCtxPtr to, FieldElement gen_image);

  const FqCtxPtr& from() const { return from_; }
  const FqCtxPtr& to() const { return to_; }
  const FieldElement& generator_image() const { return gen_image_; }

  FieldElement operator()(const FieldElement& a) const;

 private:
  FqCtxPtr from_, to_;
  FieldElement gen_image_;
  std::vector<FieldElement> gen_powers_;  // gen_image^0 .. gen_image^{e-1}
};

/// Univariate polynomial over an FqContext, low-to-high, trailing zeros stripped.
class Poly {
 public:
  explicit Poly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FqCtxPtr ctx, std::vector<FieldElement> coeffs);

  static Poly zero(const FqCtxPtr& ctx) { return Poly(ctx); }
  static Poly constant(const FieldElement& c);
  static Poly monomial(const FieldElement& c, int degree);

  const FqCtxPtr& ctx() const { return ctx_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const FieldElement& s) const;

  FieldElement eval(const FieldElement& x) const;
  Poly derivative() const;

  /// (quotient, remainder) with rhs nonzero.
  std::pair<Poly, Poly> divmod(const Poly& rhs) const;

  /// Monic gcd; gcd(f, 0) = monic multiple of f.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  std::string str(const std::string& var = "x") const;

 private:
  void strip();
  FqCtxPtr ctx_;
  std::vector<FieldElement> c_;
};

/// Bivariate polynomial in (x, y); sparse term map, zero coefficients absent.
class BiPoly {
 public:
  explicit BiPoly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}

  const FqCtxPtr& ctx() const { return ctx_; }
  const std::map<std::pair<int, int>, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int dx, int dy, const FieldElement& c);
  FieldElement eval(const FieldElement& x, const FieldElement& y) const;

  BiPoly operator+(const BiPoly& rhs) const;

  /// p(x) * q(y) as a bivariate polynomial.
  static BiPoly product_xy(const Poly& px, const Poly& qy);

  std::string str() const;

 private:
  FqCtxPtr ctx_;
  std::map<std::pair<int, int>, FieldElement> terms_;
};

/// true iff gcd(g, g') is constant; false when g' = 0.
bool is_separable(const Poly& g);

/// All roots of g in F_{q^m}, in canonical element order. Coefficients are
/// embedded via extend_field's canonical embedding; the returned elements
/// live in the extension context.
std::vector<FieldElement> roots_in(const Poly& g, std::uint32_t m,
                                   std::uint64_t scan_limit = kDefaultScanLimit);

/// The extension F_{q^m} = build_field(p, e*m) together with the canonical
/// embedding F_q -> F_{q^m} (generator goes to the least root of the base
/// modulus in canonical element order).
std::pair<FqCtxPtr, Embedding> extend_field(const FqCtxPtr& ctx, std::uint32_t m,
                                            std::uint64_t scan_limit = kDefaultScanLimit);

/// Least m <= m_max such that g splits completely in F_{q^m}.
std::uint32_t splitting_degree(const Poly& g, std::uint32_t m_max,
                               std::uint64_t scan_limit = kDefaultScanLimit);

Poly embed_poly(const Poly& g, const Embedding& emb);
BiPoly embed_bipoly(const BiPoly& f, const Embedding& emb);

}  // namespace sftzeta

#endif
