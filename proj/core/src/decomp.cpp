#include "sftzeta/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sftzeta {
namespace {

// Iterative Tarjan; emits strongly connected components sinks-first, which is
// exactly the block-triangular order required of the decomposition.
std::vector<std::vector<int>> tarjan_sccs(const Sft& x) {
  const int n = x.size();
  std::vector<int> index(n, -1), lowlink(n, 0), stack_pos(n, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  struct Frame {
    int v;
    int next;  // next successor candidate
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = counter++;
    stack_pos[root] = static_cast<int>(stack.size());
    stack.push_back(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < n) {
        int w = f.next++;
        if (!x.edge(f.v, w)) continue;
        if (index[w] == -1) {
          index[w] = lowlink[w] = counter++;
          stack_pos[w] = static_cast<int>(stack.size());
          stack.push_back(w);
          frames.push_back({w, 0});
        } else if (stack_pos[w] != -1) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
        continue;
      }
      if (lowlink[f.v] == index[f.v]) {
        std::vector<int> scc(stack.begin() + stack_pos[f.v], stack.end());
        for (int s : scc) stack_pos[s] = -1;
        stack.resize(stack.size() - scc.size());
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
      }
      int v = f.v;
      frames.pop_back();
      if (!frames.empty()) lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
    }
  }
  return sccs;
}

std::vector<int> class_of_state(const std::vector<std::vector<int>>& classes, int n) {
  std::vector<int> cls(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int s : classes[c]) cls[s] = static_cast<int>(c);
  return cls;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Decomposition communicating_classes(const Sft& x) {
  Decomposition d;
  d.classes = tarjan_sccs(x);
  const int n = x.size();
  std::vector<int> cls = class_of_state(d.classes, n);
  d.has_edge.assign(d.classes.size(), false);
  std::set<std::pair<int, int>> cedges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!x.edge(u, v)) continue;
      if (cls[u] == cls[v])
        d.has_edge[cls[u]] = true;
      else
        cedges.insert({cls[u], cls[v]});
    }
  d.condensation.assign(cedges.begin(), cedges.end());
  for (const auto& [from, to] : d.condensation)
    require(from > to, Errc::InternalCheck, "condensation violates block-triangular order");
  return d;
}

std::vector<Component> irreducible_components(const Sft& x) {
  Decomposition d = communicating_classes(x);
  std::vector<Component> out;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (!d.has_edge[c]) continue;
    out.push_back({d.classes[c], induced_subshift(x, d.classes[c])});
  }
  return out;
}

bool is_irreducible(const Sft& x) {
  if (x.empty()) return false;
  Decomposition d = communicating_classes(x);
  return d.classes.size() == 1 && d.has_edge[0];
}

Sft nonwandering(const Sft& x) {
  Decomposition d = communicating_classes(x);
  std::vector<int> cls = class_of_state(d.classes, x.size());
  std::vector<int> states;
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    if (d.has_edge[c]) states.insert(states.end(), d.classes[c].begin(), d.classes[c].end());
  std::sort(states.begin(), states.end());
  const std::size_t m = states.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int s : states) labels.push_back(x.label(s));
  std::vector<std::uint8_t> t(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (cls[states[a]] == cls[states[b]] && x.edge(states[a], states[b])) t[a * m + b] = 1;
  return Sft(std::move(labels), std::move(t), false);
}

IrreducibleClass classify_irreducible(const Sft& x) {
  require(is_irreducible(x), Errc::NotIrreducible, "shift is not irreducible");
  const int n = x.size();
  bool all_single = true;
  for (int i = 0; i < n && all_single; ++i) all_single = x.out_degree(i) == 1;
  if (all_single) return {true, n};
  // Infinite case: an irreducible shift still has periodic points.
  bool found = false;
  for (int k = 1; k <= n && !found; ++k) found = periodic_count(x, k) > 0;
  require(found, Errc::InternalCheck, "irreducible shift with no periodic point");
  return {false, 0};
}

std::vector<Component> sigma_components(const Sft& x) {
  Sft ess = x.essential() ? x : prune(x);
  const int n = ess.size();
  if (n == 0) return {};
  UnionFind uf(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (ess.edge(u, v)) uf.unite(u, v);
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < n; ++s) groups[uf.find(s)].push_back(s);
  std::vector<std::vector<int>> parts;
  for (auto& [root, members] : groups) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<Component> out;
  for (auto& p : parts) {
    Sft induced = induced_subshift(ess, p);
    out.push_back({std::move(p), Sft(induced.states(), induced.transition(), true)});
  }
  return out;
}

CyclicLabeling cyclic_period(const Sft& c) {
  const int n = c.size();
  require(n > 0, Errc::Empty, "cyclic period of the empty shift");

  // Spanning-tree potentials over the integers: walking an edge forward adds
  // one, backward subtracts one. The period is the gcd of the defects
  // pi(u) + 1 - pi(v) over all edges.
  std::vector<long long> pot(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && c.edge(u, v)) {
        pot[v] = pot[u] + 1;
        seen[v] = true;
        order.push_back(v);
      }
      if (!seen[v] && c.edge(v, u)) {
        pot[v] = pot[u] - 1;
        seen[v] = true;
        order.push_back(v);
      }
    }
  }
  require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
          Errc::NotWeaklyConnected, "component is not weakly connected");

  long long g = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (c.edge(u, v)) g = std::gcd(g, pot[u] + 1 - pot[v]);
  require(g >= 1, Errc::InternalCheck,
          "no directed cycle in an essential component");  // defect sum over a cycle is its length

  CyclicLabeling res;
  res.modulus = static_cast<int>(g);
  res.labels.resize(n);
  for (int s = 0; s < n; ++s) {
    long long l = (pot[s] - pot[0]) % g;
    res.labels[s] = static_cast<int>((l + g) % g);
  }
  return res;
}

PeriodicQuotient strong_core(const Sft& x) {
  PeriodicQuotient q;
  for (const auto& comp : sigma_components(x)) {
    CyclicLabeling cl = cyclic_period(comp.sft);
    q.components.push_back({comp.states, cl.modulus, cl.labels});
  }
  return q;
}

}  // namespace sftzeta
