#ifndef SFTZETA_DECOMP_HPP
#define SFTZETA_DECOMP_HPP

#include <utility>
#include <vector>

#include "sftzeta/sft.hpp"

namespace sftzeta {

/// Communicating classes in block-triangular order: an edge from class j to
/// class i (j != i) exists only when j > i, so sinks of the condensation
/// come first.
struct Decomposition {
  std::vector<std::vector<int>> classes;          // state indices, ascending within a class
  std::vector<std::pair<int, int>> condensation;  // (from, to) class indices, from > to
  std::vector<bool> has_edge;                     // class contains an edge of X
};

/// A subshift induced on a subset of states, with the subset recorded.
struct Component {
  std::vector<int> states;  // indices into the ambient shift, ascending
  Sft sft;
};

/// Finite(orbit_length) when the component is a single cycle, Infinite otherwise.
struct IrreducibleClass {
  bool finite = false;
  int orbit_length = 0;
};

/// Maximal mod-d edge-increment labeling of a weakly connected component.
struct CyclicLabeling {
  int modulus = 1;
  std::vector<int> labels;  // per state of the component's shift, in [0, modulus)
};

/// Per sigma-component maximal cyclic quotient data.
struct PeriodicQuotientComponent {
  std::vector<int> states;  // ambient state indices, ascending
  int modulus = 1;
  std::vector<int> labels;  // parallel to states
};

struct PeriodicQuotient {
  std::vector<PeriodicQuotientComponent> components;
};

Decomposition communicating_classes(const Sft& x);

/// Induced subshifts of the classes that contain an edge; each is irreducible.
std::vector<Component> irreducible_components(const Sft& x);

bool is_irreducible(const Sft& x);

/// Disjoint union of the irreducible components (no cross-class edges).
Sft nonwandering(const Sft& x);

IrreducibleClass classify_irreducible(const Sft& x);

/// Weakly connected components of the essential part of X, in order of their
/// least state index. X is pruned internally when not yet essential.
std::vector<Component> sigma_components(const Sft& x);

/// Largest d admitting labels with l(v) = l(u) + 1 (mod d) on every edge.
/// C must be weakly connected, essential and nonempty. Least-index state
/// gets label 0.
CyclicLabeling cyclic_period(const Sft& c);

/// Maximal periodic quotient: cyclic_period per sigma-component.
PeriodicQuotient strong_core(const Sft& x);

}  // namespace sftzeta

#endif
