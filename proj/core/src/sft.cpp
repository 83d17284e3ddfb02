#include "sftzeta/sft.hpp"

#include <algorithm>
#include <set>

namespace sftzeta {
namespace {

using BigMatrix = std::vector<BigInt>;  // row-major n*n

BigMatrix mat_identity(int n) {
  BigMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

BigMatrix mat_mul(int n, const BigMatrix& a, const BigMatrix& b) {
  BigMatrix r(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return r;
}

BigMatrix mat_from_sft(const Sft& x) {
  int n = x.size();
  BigMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.edge(i, j)) m[static_cast<std::size_t>(i) * n + j] = 1;
  return m;
}

BigMatrix mat_pow(int n, BigMatrix base, std::uint64_t k) {
  BigMatrix acc = mat_identity(n);
  while (k > 0) {
    if (k & 1) acc = mat_mul(n, acc, base);
    base = mat_mul(n, base, base);
    k >>= 1;
  }
  return acc;
}

// Lexicographic depth-first enumeration of admissible words, iterative so
// that long words cannot overflow the call stack. `closing` restricts to
// words whose last state connects back to their first.
std::vector<Word> enumerate_impl(const Sft& x, int l, std::uint64_t cap, bool closing) {
  std::vector<Word> out;
  if (x.empty()) return out;
  const int n = x.size();
  Word w;
  w.reserve(l);
  int next = 0;  // candidate symbol to try at depth w.size()
  while (true) {
    if (static_cast<int>(w.size()) == l) {
      if (!closing || x.edge(w.back(), w.front())) {
        require(out.size() < cap, Errc::CapExceeded, "enumeration exceeds the item cap");
        out.push_back(w);
      }
      next = n;  // force backtrack
    }
    if (next >= n) {
      if (w.empty()) break;
      next = w.back() + 1;
      w.pop_back();
      continue;
    }
    if (w.empty() || x.edge(w.back(), next)) {
      w.push_back(next);
      next = 0;
    } else {
      ++next;
    }
  }
  return out;
}

}  // namespace

Sft::Sft(std::vector<std::string> states, std::vector<std::uint8_t> transition, bool essential)
    : states_(std::move(states)), trans_(std::move(transition)), essential_(essential) {
  require(trans_.size() == states_.size() * states_.size(), Errc::DimensionMismatch,
          "transition matrix size does not match state count");
}

int Sft::out_degree(int i) const {
  int d = 0;
  for (int j = 0; j < size(); ++j) d += edge(i, j);
  return d;
}

Sft from_matrix(const std::vector<std::string>& states,
                const std::vector<std::vector<int>>& matrix) {
  const std::size_t n = states.size();
  require(matrix.size() == n, Errc::DimensionMismatch,
          "matrix has " + std::to_string(matrix.size()) + " rows for " + std::to_string(n) +
              " states");
  std::set<std::string> seen;
  for (const auto& s : states)
    require(seen.insert(s).second, Errc::DuplicateState, "duplicate state label '" + s + "'");
  std::vector<std::uint8_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    require(matrix[i].size() == n, Errc::NotSquare,
            "row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      require(matrix[i][j] == 0 || matrix[i][j] == 1, Errc::EntryOutOfRange,
              "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                  std::to_string(matrix[i][j]) + " is not 0/1");
      t[i * n + j] = static_cast<std::uint8_t>(matrix[i][j]);
    }
  }
  return Sft(states, std::move(t), false);
}

Sft edge_to_vertex(const MultiGraph& g) {
  const int nv = static_cast<int>(g.states.size());
  for (const auto& e : g.edges)
    require(e.src >= 0 && e.src < nv && e.dst >= 0 && e.dst < nv, Errc::EntryOutOfRange,
            "edge endpoint out of range");
  std::map<std::pair<int, int>, int> parallel_count;
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (!e.label.empty()) {
      labels.push_back(e.label);
    } else {
      int k = parallel_count[{e.src, e.dst}]++;
      labels.push_back(g.states[e.src] + "→" + g.states[e.dst] + "#" + std::to_string(k));
    }
  }
  std::set<std::string> seen;
  for (const auto& s : labels)
    require(seen.insert(s).second, Errc::DuplicateState, "duplicate edge label '" + s + "'");
  const std::size_t m = g.edges.size();
  std::vector<std::uint8_t> t(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (g.edges[a].dst == g.edges[b].src) t[a * m + b] = 1;
  return Sft(std::move(labels), std::move(t), false);
}

std::vector<int> surviving_states(const Sft& x) {
  const int n = x.size();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      bool has_out = false;
      for (int j = 0; j < n && !has_out; ++j) has_out = alive[j] && x.edge(i, j);
      if (!has_out) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (alive[i]) keep.push_back(i);
  return keep;
}

Sft prune(const Sft& x) {
  Sft result = induced_subshift(x, surviving_states(x));
  return Sft(result.states(), result.transition(), true);
}

Sft induced_subshift(const Sft& x, const std::vector<int>& states) {
  const std::size_t m = states.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int s : states) labels.push_back(x.label(s));
  std::vector<std::uint8_t> t(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (x.edge(states[a], states[b])) t[a * m + b] = 1;
  return Sft(std::move(labels), std::move(t), false);
}

BigInt word_count(const Sft& x, int l) {
  require(!x.empty(), Errc::EmptyShift, "word count of the empty shift");
  require(l >= 1, Errc::LengthZero, "word length must be positive");
  const int n = x.size();
  BigMatrix p = mat_pow(n, mat_from_sft(x), static_cast<std::uint64_t>(l) - 1);
  BigInt total = 0;
  for (const auto& v : p) total += v;
  return total;
}

std::vector<Word> enumerate_words(const Sft& x, int l, std::uint64_t cap) {
  require(l >= 1, Errc::LengthZero, "word length must be positive");
  if (!x.empty()) {
    require(word_count(x, l) <= cap, Errc::CapExceeded,
            "word count exceeds the enumeration cap");
  }
  return enumerate_impl(x, l, cap, false);
}

bool is_word(const Sft& x, const Word& w) {
  if (x.empty()) return false;
  for (int s : w)
    if (s < 0 || s >= x.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!x.edge(w[i], w[i + 1])) return false;
  return true;
}

BigInt periodic_count(const Sft& x, int n) {
  require(n >= 1, Errc::LengthZero, "period must be positive");
  if (x.empty()) return 0;
  const int sz = x.size();
  BigMatrix p = mat_pow(sz, mat_from_sft(x), static_cast<std::uint64_t>(n));
  BigInt tr = 0;
  for (int i = 0; i < sz; ++i) tr += p[static_cast<std::size_t>(i) * sz + i];
  return tr;
}

std::vector<Word> enumerate_periodic(const Sft& x, int n, std::uint64_t cap) {
  require(n >= 1, Errc::LengthZero, "period must be positive");
  require(periodic_count(x, n) <= cap, Errc::CapExceeded,
          "periodic point count exceeds the enumeration cap");
  return enumerate_impl(x, n, cap, true);
}

BlockMapDiagnostics validate_block_map(const BlockMap& m) {
  BlockMapDiagnostics diag;
  if (m.window < 1) {
    diag.ok = false;
    diag.message = "window must be positive";
    return diag;
  }
  for (const auto& [w, s] : m.table) {
    if (s < 0 || s >= m.codomain.size()) {
      diag.ok = false;
      diag.message = "table value out of codomain range";
      diag.witness = w;
      return diag;
    }
    if (static_cast<int>(w.size()) != m.window || !is_word(m.domain, w)) {
      diag.ok = false;
      diag.message = "table key is not an admissible window word";
      diag.witness = w;
      return diag;
    }
  }
  for (const auto& w : enumerate_words(m.domain, m.window)) {
    if (!m.table.count(w)) {
      diag.ok = false;
      diag.message = "table is not total on admissible window words";
      diag.witness = w;
      return diag;
    }
  }
  for (const auto& w : enumerate_words(m.domain, m.window + 1)) {
    Word head(w.begin(), w.end() - 1);
    Word tail(w.begin() + 1, w.end());
    int a = m.table.at(head);
    int b = m.table.at(tail);
    if (!m.codomain.edge(a, b)) {
      diag.ok = false;
      diag.message = "image pair is not an admissible 2-word of the codomain";
      diag.witness = w;
      return diag;
    }
  }
  return diag;
}

Word apply_block_map(const BlockMap& m, const Word& w) {
  require(static_cast<int>(w.size()) >= m.window, Errc::WordTooShort,
          "word shorter than the block window");
  require(is_word(m.domain, w), Errc::InadmissibleWord, "input word is not admissible");
  Word out;
  out.reserve(w.size() - m.window + 1);
  for (std::size_t i = 0; i + m.window <= w.size(); ++i) {
    Word key(w.begin() + i, w.begin() + i + m.window);
    auto it = m.table.find(key);
    require(it != m.table.end(), Errc::InconsistentTable, "table missing an admissible window");
    out.push_back(it->second);
  }
  return out;
}

Word apply_block_map_periodic(const BlockMap& m, const Word& w) {
  require(!w.empty(), Errc::WordTooShort, "empty periodic word");
  require(is_word(m.domain, w) && m.domain.edge(w.back(), w.front()), Errc::InadmissibleWord,
          "word does not close up cyclically");
  const int n = static_cast<int>(w.size());
  Word out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Word key;
    key.reserve(m.window);
    for (int j = 0; j < m.window; ++j) key.push_back(w[(i + j) % n]);
    auto it = m.table.find(key);
    require(it != m.table.end(), Errc::InconsistentTable, "table missing an admissible window");
    out.push_back(it->second);
  }
  return out;
}

std::pair<Sft, BlockMap> higher_block(const Sft& x, int l, std::uint64_t cap) {
  require(!x.empty(), Errc::EmptyShift, "higher-block recoding of the empty shift");
  require(l >= 1, Errc::LengthZero, "block length must be positive");
  std::vector<Word> words = enumerate_words(x, l, cap);
  const std::size_t m = words.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& w : words) {
    std::string lab;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) lab += ",";
      lab += x.label(w[i]);
    }
    labels.push_back(lab);
  }
  // u -> v iff they overlap in l-1 symbols and the joint (l+1)-word is
  // admissible; for l = 1 the overlap is vacuous and the edge test decides.
  std::vector<std::uint8_t> t(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool overlap = std::equal(words[a].begin() + 1, words[a].end(), words[b].begin());
      if (overlap && x.edge(words[a][l - 1], words[b][l - 1])) t[a * m + b] = 1;
    }
  Sft recoded(std::move(labels), std::move(t), x.essential());
  BlockMap back;
  back.domain = recoded;
  back.codomain = x;
  back.window = 1;
  for (std::size_t a = 0; a < m; ++a) back.table[{static_cast<int>(a)}] = words[a][0];
  return {std::move(recoded), std::move(back)};
}

}  // namespace sftzeta
