// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli_matrix.hpp"
#include "oracles.hpp"
#include "sftzeta/decomp.hpp"
#include "sftzeta/galois.hpp"
#include "sftzeta/parse.hpp"
#include "sftzeta/spectral.hpp"
#include "sftzeta/zeta.hpp"

using namespace sftzeta;

namespace {

int failures = 0;
std::string current_detail;

void detail(const std::string& msg) {
  if (current_detail.empty()) current_detail = msg;
}

void criterion(const char* name, double budget_seconds, const std::function<bool()>& body) {
  current_detail.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail(std::string("exception: ") + e.what());
    ok = false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = budget_seconds <= 0 || secs < budget_seconds;
  if (!in_budget) detail("over time budget");
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] %s  [%.2fs%s]%s%s\n", pass ? "PASS" : "FAIL", name, secs,
              budget_seconds > 0 ? (" / " + std::to_string(budget_seconds).substr(0, 4) + "s").c_str() : "",
              current_detail.empty() ? "" : "  -- ", current_detail.c_str());
}

// Deterministic test family: every shift on up to `exhaustive` states, plus
// seeded random shifts up to `max_states`, plus the named corpus.
std::vector<Sft> shift_family(int exhaustive, int max_states, int random_count) {
  std::vector<Sft> out;
  for (int n = 1; n <= exhaustive; ++n) {
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) states.push_back(std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = (mask >> (i * n + j)) & 1;
      out.push_back(from_matrix(states, rows));
    }
  }
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> size_dist(exhaustive + 1, max_states);
  for (int i = 0; i < random_count; ++i)
    out.push_back(oracle::random_sft(rng, size_dist(rng), 0.45));
  out.push_back(from_matrix({"a", "b"}, {{1, 1}, {1, 0}}));              // golden mean
  out.push_back(from_matrix({"0", "1"}, {{1, 1}, {1, 1}}));              // full 2-shift
  out.push_back(from_matrix({"a", "b", "c"}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));  // 3-cycle
  return out;
}

std::vector<std::string> dsys_corpus_files() {
  return {"f4_cycle.dsys",  "fixed_point.dsys", "full2pair.dsys", "conj_loops.dsys",
          "rational_loops.dsys", "golden_f5.dsys", "full3.dsys",  "f8_cycle.dsys",
          "f9_swap.dsys",   "f25_swap.dsys",    "trace_split.dsys", "f4_base.dsys"};
}

DifferenceSystem load_corpus_system(const std::string& name) {
  std::ifstream in(std::filesystem::path("data") / name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dsys_file(buf.str());
}

// 1. zeta_series equals the order-12 expansion of 1/det(I-tA), exactly.
bool ac1_zeta_identity() {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    Sft x = oracle::random_essential_sft(rng, 6);
    PowerSeries s = zeta_series(x, 12);
    std::vector<Rational> want =
        oracle::expand_series(IntPoly::constant(1), char_poly_reversed(x), 12);
    if (s.c != want) {
      detail("series mismatch on a random shift");
      return false;
    }
  }
  return true;
}

// 2. periodic_count = |enumerate_periodic| = brute-force cyclic count.
bool ac2_trace_formula() {
  for (const Sft& x : shift_family(3, 5, 300)) {
    for (int n = 1; n <= 8; ++n) {
      BigInt tr = periodic_count(x, n);
      if (tr > 100000) continue;  // enumeration stays at desk scale
      if (BigInt(enumerate_periodic(x, n).size()) != tr ||
          oracle::count_cyclic_words(x, n) != tr) {
        detail("count mismatch at n=" + std::to_string(n));
        return false;
      }
    }
  }
  return true;
}

// 3. difference zeta: trace identity, periodicity, log-derivative match.
bool ac3_difference_zeta() {
  for (const auto& name : dsys_corpus_files()) {
    DifferenceSystem sys = load_corpus_system(name);
    SftWithFrobenius built = build_sft(sys);
    const int d = built.twist.order;
    for (int n = 1; n <= 12; ++n) {
      if (point_count_direct(sys, n) != twisted_count(built.twist, n)) {
        detail(name + ": direct/matrix mismatch at n=" + std::to_string(n));
        return false;
      }
      if (twisted_count(built.twist, n) != twisted_count(built.twist, n + d)) {
        detail(name + ": counts not d-periodic at n=" + std::to_string(n));
        return false;
      }
    }
    // (log Z)' computed from the series must equal the rational form
    PowerSeries z = twisted_zeta_series(built.twist, 12);
    RationalFunction ld = twisted_log_derivative(built.twist);
    std::vector<Rational> ld_series = oracle::expand_series(ld.num, ld.den, 11);
    for (int k = 0; k <= 11; ++k) {
      Rational deriv = z.c[k + 1] * (k + 1);  // coefficient of t^k in Z'
      Rational conv = 0;                      // coefficient of t^k in (log Z)' * Z
      for (int i = 0; i <= k; ++i) conv += ld_series[i] * z.c[k - i];
      if (deriv != conv) {
        detail(name + ": log-derivative mismatch at order " + std::to_string(k));
        return false;
      }
    }
  }
  return true;
}

// 4. entropy brackets: golden mean straddles the Perron root at 1e-6,
//    full shift and cycles are exact.
bool ac4_entropy() {
  Rational tol(1, 1000000);
  EntropyBracket g = entropy_bounds(from_matrix({"a", "b"}, {{1, 1}, {1, 0}}), tol);
  if (!g.converged || g.hi - g.lo > tol) {
    detail("golden-mean bracket too wide");
    return false;
  }
  if (!(g.lo * g.lo - g.lo - 1 <= 0 && g.hi * g.hi - g.hi - 1 >= 0)) {
    detail("golden-mean bracket misses the root of x^2-x-1");
    return false;
  }
  EntropyBracket f = entropy_bounds(from_matrix({"0", "1"}, {{1, 1}, {1, 1}}), tol);
  if (f.lo != 2 || f.hi != 2) {
    detail("full 2-shift bracket is not [2,2]");
    return false;
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> states;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      states.push_back(std::to_string(i));
      rows[i][(i + 1) % n] = 1;
    }
    EntropyBracket c = entropy_bounds(from_matrix(states, rows), tol);
    if (c.lo != 1 || c.hi != 1) {
      detail("cycle bracket is not [1,1]");
      return false;
    }
  }
  return true;
}

// 5. out-degree-regular systems with stabilized limit degree d have d inside
//    the entropy bracket.
bool ac5_entropy_limit_degree() {
  int checked = 0;
  for (const auto& name : dsys_corpus_files()) {
    DifferenceSystem sys = load_corpus_system(name);
    Sft essential = prune(build_sft(sys).sft);
    if (essential.empty()) continue;
    bool regular = true;
    for (int i = 1; i < essential.size(); ++i)
      regular = regular && essential.out_degree(i) == essential.out_degree(0);
    if (!regular) continue;
    LimitDegreeResult r = limit_degree_system(sys, 9);
    if (!r.stabilized) continue;
    ++checked;
    EntropyBracket eb = system_entropy(sys, Rational(1, 1000000));
    if (!(eb.lo <= Rational(r.degree) && Rational(r.degree) <= eb.hi)) {
      detail(name + ": bracket excludes d");
      return false;
    }
  }
  if (checked == 0) {
    detail("no regular stabilized system in the corpus");
    return false;
  }
  return true;
}

// 6. sigma components form a finite partition; spectrum-side counts match the
//    hand-derived values.
bool ac6_sigma_components() {
  for (const Sft& x : shift_family(3, 6, 200)) {
    Sft essential = prune(x);
    auto comps = sigma_components(essential);
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.states.size();
      for (int s : c.states)
        if (!seen.insert(s).second) {
          detail("components overlap");
          return false;
        }
    }
    if (total != static_cast<std::size_t>(essential.size())) {
      detail("components do not cover the states");
      return false;
    }
  }
  struct Expect {
    const char* text;
    int count;
  };
  const Expect expected[] = {
      {"p 2\ne 1\nvertex x^2+x+1\nedge y+x^2\n", 1},
      {"p 2\ne 1\nvertex x^2+x+1\nedge y+x\n", 1},
      {"p 5\ne 1\nvertex x^2+2*x+2\nedge y+4*x\n", 2},
  };
  for (const auto& ex : expected) {
    if (spec_sigma_component_count(parse_dsys_file(ex.text)) != ex.count) {
      detail("spectrum component count mismatch");
      return false;
    }
  }
  return true;
}

// 7. strong core moduli match the brute-force labeling oracle; labels satisfy
//    the edge condition; built systems have Frobenius-constant moduli.
bool ac7_strong_core() {
  for (const Sft& x : shift_family(3, 6, 300)) {
    Sft essential = prune(x);
    PeriodicQuotient core = strong_core(essential);
    for (const auto& comp : core.components) {
      Sft induced = induced_subshift(essential, comp.states);
      if (comp.modulus != oracle::max_labeling_modulus(induced)) {
        detail("modulus differs from the labeling oracle");
        return false;
      }
      for (std::size_t a = 0; a < comp.states.size(); ++a)
        for (std::size_t b = 0; b < comp.states.size(); ++b)
          if (induced.edge(static_cast<int>(a), static_cast<int>(b)) &&
              comp.labels[b] != (comp.labels[a] + 1) % comp.modulus) {
            detail("labeling violates an edge");
            return false;
          }
    }
  }
  for (const auto& name : dsys_corpus_files()) {
    SftWithFrobenius built = build_sft(load_corpus_system(name));
    std::vector<int> survivors = surviving_states(built.sft);
    if (survivors.empty()) continue;
    Sft essential = prune(built.sft);
    std::map<int, int> pos;
    for (std::size_t i = 0; i < survivors.size(); ++i) pos[survivors[i]] = static_cast<int>(i);
    PeriodicQuotient core = strong_core(essential);
    auto comps = sigma_components(essential);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::set<int> image;
      for (int s : comps[c].states) image.insert(pos.at(built.twist.perm[survivors[s]]));
      for (std::size_t c2 = 0; c2 < comps.size(); ++c2) {
        std::set<int> other(comps[c2].states.begin(), comps[c2].states.end());
        if (other == image && core.components[c].modulus != core.components[c2].modulus) {
          detail(name + ": moduli differ along a Frobenius orbit");
          return false;
        }
      }
    }
  }
  return true;
}

// 8. build_sft(sft_to_system(X)) reproduces X over F_5 for every shift with
//    up to 4 states.
bool ac8_round_trip() {
  FqCtxPtr f5 = build_field(5, 1);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) states.push_back(std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = (mask >> (i * n + j)) & 1;
      Sft x = from_matrix(states, rows);
      SftWithFrobenius built = build_sft(sft_to_system(x, f5));
      if (built.sft.size() != n || built.sft.transition() != x.transition()) {
        detail("transition mismatch at n=" + std::to_string(n));
        return false;
      }
      for (int i = 0; i < n; ++i)
        if (!(built.alphabet[i] == element_at(f5, static_cast<std::uint64_t>(i)))) {
          detail("alphabet labels out of order");
          return false;
        }
      if (built.twist.order != 1) {
        detail("Frobenius should act trivially on base-field alphabets");
        return false;
      }
    }
  }
  return true;
}

// 9. higher-block recoding preserves shifted word counts and periodic counts.
bool ac9_higher_block() {
  for (const Sft& raw : shift_family(2, 4, 250)) {
    Sft x = prune(raw);
    if (x.empty()) continue;
    for (int l = 1; l <= 3; ++l) {
      auto [hb, back] = higher_block(x, l);
      for (int m = 1; m <= 6; ++m)
        if (word_count(hb, m) != word_count(x, m + l - 1)) {
          detail("word-count identity fails");
          return false;
        }
      for (int n = 1; n <= 6; ++n)
        if (periodic_count(hb, n) != periodic_count(x, n)) {
          detail("periodic counts differ");
          return false;
        }
      if (!validate_block_map(back).ok) {
        detail("conjugacy table invalid");
        return false;
      }
    }
  }
  return true;
}

// 10. CLI determinism: the command matrix reproduces the golden files and is
//     byte-identical across two runs.
bool ac10_cli_determinism() {
  namespace fs = std::filesystem;
  for (const auto& e : testmatrix::command_matrix()) {
    std::string first = testmatrix::run_envelope(e);
    std::string second = testmatrix::run_envelope(e);
    if (first != second) {
      detail(e.slug + ": two runs differ");
      return false;
    }
    fs::path file = fs::path(SFTZETA_GOLDEN_DIR) / (e.slug + ".txt");
    std::ifstream in(file, std::ios::binary);
    if (!in.good()) {
      detail(e.slug + ": missing golden file");
      return false;
    }
    std::ostringstream want;
    want << in.rdbuf();
    if (first != want.str()) {
      detail(e.slug + ": differs from the golden file");
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::filesystem::current_path(SFTZETA_TEST_SRC_DIR);
  criterion("1  zeta series = determinant expansion (200 random shifts, order 12)", 10,
            ac1_zeta_identity);
  criterion("2  periodic trace formula vs brute-force cyclic words", 0, ac2_trace_formula);
  criterion("3  difference zeta near-rationality on the .dsys corpus", 30, ac3_difference_zeta);
  criterion("4  certified entropy brackets (golden mean / full shift / cycles)", 5, ac4_entropy);
  criterion("5  entropy bracket contains the stabilized limit degree", 0,
            ac5_entropy_limit_degree);
  criterion("6  sigma components partition; spectrum-side counts match", 0, ac6_sigma_components);
  criterion("7  strong core vs labeling oracle; Frobenius-constant moduli", 0, ac7_strong_core);
  criterion("8  translation round trip over F_5, all shifts up to 4 states", 0, ac8_round_trip);
  criterion("9  higher-block conjugacy preserves counts", 0, ac9_higher_block);
  criterion("10 CLI determinism against golden files", 0, ac10_cli_determinism);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
