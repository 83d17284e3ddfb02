#ifndef SFTZETA_SFT_HPP
#define SFTZETA_SFT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftzeta/errors.hpp"
#include "sftzeta/numbers.hpp"

namespace sftzeta {

/// Default ceiling on enumerated items (words, periodic words, higher-block states).
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// Finite directed multigraph; input form only, recoded to a vertex shift on load.
struct MultiGraph {
  struct Edge {
    int src = 0;
    int dst = 0;
    std::string label;  // optional; generated on recoding when empty
  };
  std::vector<std::string> states;
  std::vector<Edge> edges;
};

/// One-sided vertex shift: states plus an n-by-n 0/1 transition matrix.
/// `essential` records that forward-dead states have been pruned.
class Sft {
 public:
  Sft() = default;
  Sft(std::vector<std::string> states, std::vector<std::uint8_t> transition, bool essential);

  int size() const { return static_cast<int>(states_.size()); }
  bool empty() const { return states_.empty(); }
  bool essential() const { return essential_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& label(int i) const { return states_[i]; }
  bool edge(int i, int j) const { return trans_[static_cast<std::size_t>(i) * states_.size() + j] != 0; }
  const std::vector<std::uint8_t>& transition() const { return trans_; }

  int out_degree(int i) const;

  bool operator==(const Sft& rhs) const {
    return states_ == rhs.states_ && trans_ == rhs.trans_;
  }

 private:
  std::vector<std::string> states_;
  std::vector<std::uint8_t> trans_;  // row-major n*n
  bool essential_ = false;
};

using Word = std::vector<int>;

/// Sliding l-block code between two vertex shifts, given by its symbol table.
struct BlockMap {
  Sft domain;
  Sft codomain;
  int window = 1;
  std::map<Word, int> table;  // admissible l-word of domain -> codomain state
};

struct BlockMapDiagnostics {
  bool ok = true;
  std::string message;
  Word witness;  // offending word when !ok
};

Sft from_matrix(const std::vector<std::string>& states,
                const std::vector<std::vector<int>>& matrix);

/// Recode the edge shift of G as a vertex shift on the edges of G.
/// Unlabeled edges get generated labels "src→dst#k".
Sft edge_to_vertex(const MultiGraph& g);

/// Remove forward-dead states until every state has out-degree >= 1.
/// The set of one-sided infinite paths is unchanged; result may be empty.
Sft prune(const Sft& x);

/// Ascending indices of the states that survive pruning.
std::vector<int> surviving_states(const Sft& x);

/// Induced subshift on a subset of states (original labels kept).
Sft induced_subshift(const Sft& x, const std::vector<int>& states);

/// |W(X,l)| = sum of entries of A^{l-1}, exact.
BigInt word_count(const Sft& x, int l);

/// W(X,l) in lexicographic state-index order.
std::vector<Word> enumerate_words(const Sft& x, int l, std::uint64_t cap = kDefaultEnumCap);

bool is_word(const Sft& x, const Word& w);

/// Number of fixed points of the n-th shift iterate: trace of A^n, exact.
BigInt periodic_count(const Sft& x, int n);

/// All n-words that close up cyclically, lexicographic order.
std::vector<Word> enumerate_periodic(const Sft& x, int n, std::uint64_t cap = kDefaultEnumCap);

/// Exhaustive consistency check of the table over W(domain, window+1).
BlockMapDiagnostics validate_block_map(const BlockMap& m);

/// Image word of length |w| - window + 1; w must be admissible.
Word apply_block_map(const BlockMap& m, const Word& w);

/// Image of the cyclic extension of an n-periodic word; result has length n.
Word apply_block_map_periodic(const BlockMap& m, const Word& w);

/// Recode on l-words: states of the result are W(X,l); returns the new shift
/// and the 1-block conjugacy back to X (l-word state -> its first symbol).
std::pair<Sft, BlockMap> higher_block(const Sft& x, int l, std::uint64_t cap = kDefaultEnumCap);

}  // namespace sftzeta

#endif
