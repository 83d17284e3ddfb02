#ifndef SFTZETA_GALOIS_HPP
#define SFTZETA_GALOIS_HPP

#include <utility>
#include <vector>

#include "sftzeta/ff.hpp"
#include "sftzeta/sft.hpp"
#include "sftzeta/spectral.hpp"
#include "sftzeta/zeta.hpp"

namespace sftzeta {

/// Order-1 separable difference equation system over F_q: a vertex
/// polynomial g(x) and edge polynomials f_j(x, y) with y standing for the
/// shifted variable.
struct DifferenceSystem {
  FqCtxPtr ctx;
  Poly vertex;
  std::vector<BiPoly> edges;
};

/// The subshift of finite type attached to a difference system: states are
/// the roots of g in the splitting field, edges are cut out by the f_j, and
/// the q-power Frobenius acts as a 1-block automorphism.
struct SftWithFrobenius {
  Sft sft;                            // unpruned; pruning is a downstream choice
  std::vector<FieldElement> alphabet; // state i <-> alphabet[i], canonical order
  TwistData twist;                    // Frobenius a -> a^q as a state permutation
  std::uint32_t m = 1;                // splitting degree of g
  FqCtxPtr ext;                       // F_{q^m}
  Embedding embed;                    // base field -> splitting field
};

struct GaloisOptions {
  std::uint32_t m_max = 64;
  std::uint64_t scan_limit = kDefaultScanLimit;
};

SftWithFrobenius build_sft(const DifferenceSystem& sys, const GaloisOptions& opt = {});

/// |{a in F_{q^m} : g(a) = 0, f_j(a, a^{q^n}) = 0 for all j}| by exhaustive
/// scan of the splitting field; independent of the SFT construction.
BigInt point_count_direct(const DifferenceSystem& sys, std::uint64_t n,
                          const GaloisOptions& opt = {});

/// The same count through the twisted trace formula on the built shift.
BigInt point_count_matrix(const DifferenceSystem& sys, std::uint64_t n,
                          const GaloisOptions& opt = {});

/// Truncated difference zeta series and its rational logarithmic derivative.
std::pair<PowerSeries, RationalFunction> difference_zeta(const DifferenceSystem& sys, int order,
                                                         const GaloisOptions& opt = {});

/// Entropy bracket of the pruned underlying shift.
EntropyBracket system_entropy(const DifferenceSystem& sys, const Rational& tol,
                              int max_iter = 10000, const GaloisOptions& opt = {});

/// Number of Frobenius orbits on the sigma-components of the pruned shift.
int spec_sigma_component_count(const DifferenceSystem& sys, const GaloisOptions& opt = {});

/// Present an arbitrary shift as a difference system over a base field with
/// q >= |states|: g has the first |states| field elements as roots and a
/// single edge polynomial vanishes exactly on the transition pairs.
DifferenceSystem sft_to_system(const Sft& x, const FqCtxPtr& ctx);

/// limit_degree of the pruned underlying shift.
LimitDegreeResult limit_degree_system(const DifferenceSystem& sys, int l_max, int window = 3,
                                      const GaloisOptions& opt = {});

}  // namespace sftzeta

#endif
