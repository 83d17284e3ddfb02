#include "sftzeta/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sftzeta/decomp.hpp"

namespace sftzeta {
namespace {

void validate_system(const DifferenceSystem& sys) {
  require(static_cast<bool>(sys.ctx), Errc::SemanticError, "system has no field context");
  require(!sys.vertex.is_zero() && sys.vertex.degree() >= 1, Errc::SemanticError,
          "vertex polynomial must be nonconstant");
  require(is_separable(sys.vertex), Errc::NotSeparable, "vertex polynomial is not separable");
}

}  // namespace

SftWithFrobenius build_sft(const DifferenceSystem& sys, const GaloisOptions& opt) {
  validate_system(sys);
  std::uint32_t m = splitting_degree(sys.vertex, opt.m_max, opt.scan_limit);
  auto [ext, emb] = extend_field(sys.ctx, m, opt.scan_limit);
  std::vector<FieldElement> roots = roots_in(sys.vertex, m, opt.scan_limit);

  std::vector<BiPoly> constraints;
  constraints.reserve(sys.edges.size());
  for (const auto& f : sys.edges) constraints.push_back(embed_bipoly(f, emb));

  const int n = static_cast<int>(roots.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& r : roots) labels.push_back(r.str());
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool admissible = true;
      for (const auto& f : constraints)
        if (!f.eval(roots[a], roots[b]).is_zero()) {
          admissible = false;
          break;
        }
      if (admissible) t[static_cast<std::size_t>(a) * n + b] = 1;
    }
  Sft sft(std::move(labels), std::move(t), false);

  // The q-power Frobenius permutes the roots because g has base-field
  // coefficients; locate each image by rank.
  std::map<std::uint64_t, int> rank_to_state;
  for (int i = 0; i < n; ++i) rank_to_state[roots[i].rank()] = i;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    FieldElement image = frobenius(roots[i], sys.ctx->e);
    auto it = rank_to_state.find(image.rank());
    require(it != rank_to_state.end(), Errc::FrobeniusNotAutomorphism,
            "Frobenius does not permute the root set");
    perm[i] = it->second;
  }
  TwistData twist;
  try {
    twist = make_twist(sft, perm);
  } catch (const Error& e) {
    if (e.code() == Errc::NotAutomorphism || e.code() == Errc::NotBijective)
      fail(Errc::FrobeniusNotAutomorphism, e.what());
    throw;
  }

  SftWithFrobenius out{std::move(sft), std::move(roots), std::move(twist), m, ext, emb};
  return out;
}

BigInt point_count_direct(const DifferenceSystem& sys, std::uint64_t n, const GaloisOptions& opt) {
  validate_system(sys);
  require(n >= 1, Errc::LengthZero, "twist exponent must be positive");
  std::uint32_t m = splitting_degree(sys.vertex, opt.m_max, opt.scan_limit);
  auto [ext, emb] = extend_field(sys.ctx, m, opt.scan_limit);
  Poly g = embed_poly(sys.vertex, emb);
  std::vector<BiPoly> constraints;
  constraints.reserve(sys.edges.size());
  for (const auto& f : sys.edges) constraints.push_back(embed_bipoly(f, emb));

  BigInt count = 0;
  for (std::uint64_t r = 0; r < ext->q; ++r) {
    FieldElement a = element_at(ext, r);
    if (!g.eval(a).is_zero()) continue;
    // a^{q^n} by iterated p-power Frobenius; the extension's Frobenius has
    // order ext->e, so the step count reduces mod ext->e.
    FieldElement image = a;
    std::uint64_t steps = (static_cast<std::uint64_t>(sys.ctx->e) * n) % ext->e;
    for (std::uint64_t s = 0; s < steps; ++s) image = image.pow(ext->p);
    bool ok = true;
    for (const auto& f : constraints)
      if (!f.eval(a, image).is_zero()) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

BigInt point_count_matrix(const DifferenceSystem& sys, std::uint64_t n, const GaloisOptions& opt) {
  require(n >= 1, Errc::LengthZero, "twist exponent must be positive");
  SftWithFrobenius built = build_sft(sys, opt);
  return twisted_count(built.twist, n);
}

std::pair<PowerSeries, RationalFunction> difference_zeta(const DifferenceSystem& sys, int order,
                                                         const GaloisOptions& opt) {
  SftWithFrobenius built = build_sft(sys, opt);
  return {twisted_zeta_series(built.twist, order), twisted_log_derivative(built.twist)};
}

EntropyBracket system_entropy(const DifferenceSystem& sys, const Rational& tol, int max_iter,
                              const GaloisOptions& opt) {
  SftWithFrobenius built = build_sft(sys, opt);
  Sft essential = prune(built.sft);
  require(!essential.empty(), Errc::NoCycle, "system has no infinite solutions");
  return entropy_bounds(essential, tol, max_iter);
}

int spec_sigma_component_count(const DifferenceSystem& sys, const GaloisOptions& opt) {
  SftWithFrobenius built = build_sft(sys, opt);
  std::vector<int> survivors = surviving_states(built.sft);
  if (survivors.empty()) return 0;
  Sft essential = prune(built.sft);

  // Frobenius restricts to the essential part (it is an automorphism).
  std::map<int, int> position;  // original index -> pruned index
  for (std::size_t i = 0; i < survivors.size(); ++i) position[survivors[i]] = static_cast<int>(i);
  std::vector<int> perm(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    int image = built.twist.perm[survivors[i]];
    auto it = position.find(image);
    require(it != position.end(), Errc::InternalCheck,
            "Frobenius does not preserve the essential part");
    perm[i] = it->second;
  }

  std::vector<Component> comps = sigma_components(essential);
  std::vector<int> comp_of(survivors.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int s : comps[c].states) comp_of[s] = static_cast<int>(c);

  // Components map onto components; count the orbits of that action.
  std::vector<int> comp_image(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::set<int> images;
    for (int s : comps[c].states) images.insert(comp_of[perm[s]]);
    require(images.size() == 1, Errc::InternalCheck,
            "Frobenius image of a sigma-component is not a single component");
    comp_image[c] = *images.begin();
  }
  std::vector<bool> seen(comps.size(), false);
  int orbits = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (seen[c]) continue;
    ++orbits;
    int cur = static_cast<int>(c);
    while (!seen[cur]) {
      seen[cur] = true;
      cur = comp_image[cur];
    }
  }
  return orbits;
}

DifferenceSystem sft_to_system(const Sft& x, const FqCtxPtr& ctx) {
  const int n = x.size();
  require(n > 0, Errc::EmptyShift, "cannot present the empty shift as a system");
  require(static_cast<std::uint64_t>(n) <= ctx->q, Errc::AlphabetTooLarge,
          "need q >= |states| distinct base-field elements");

  std::vector<FieldElement> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) points.push_back(element_at(ctx, static_cast<std::uint64_t>(i)));

  Poly g = Poly::constant(FieldElement::one(ctx));
  for (const auto& a : points) {
    Poly lin(ctx, {-a, FieldElement::one(ctx)});
    g = g * lin;
  }

  // Lagrange basis: e_i(a_j) = delta_ij.
  std::vector<Poly> basis;
  basis.reserve(n);
  for (int i = 0; i < n; ++i) {
    Poly e = Poly::constant(FieldElement::one(ctx));
    FieldElement denom = FieldElement::one(ctx);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      e = e * Poly(ctx, {-points[j], FieldElement::one(ctx)});
      denom = denom * (points[i] - points[j]);
    }
    basis.push_back(e * denom.inverse());
  }

  // f vanishes exactly on transition pairs: sum of e_i(x) e_j(y) over
  // non-edges evaluates to 1 off the edge set and 0 on it.
  BiPoly f(ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!x.edge(i, j)) f = f + BiPoly::product_xy(basis[i], basis[j]);

  return DifferenceSystem{ctx, std::move(g), {std::move(f)}};
}

LimitDegreeResult limit_degree_system(const DifferenceSystem& sys, int l_max, int window,
                                      const GaloisOptions& opt) {
  SftWithFrobenius built = build_sft(sys, opt);
  Sft essential = prune(built.sft);
  return limit_degree(essential, l_max, window);
}

}  // namespace sftzeta
