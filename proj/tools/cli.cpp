#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sftzeta/decomp.hpp"
#include "sftzeta/galois.hpp"
#include "sftzeta/parse.hpp"
#include "sftzeta/spectral.hpp"
#include "sftzeta/zeta.hpp"

namespace sftzeta::cli {
namespace {

using nlohmann::json;

struct UsageFailure {
  std::string message;
};

struct RunContext {
  bool json_out = false;
  std::uint64_t scan_limit = kDefaultScanLimit;
  std::uint64_t cap = kDefaultEnumCap;
  std::string path;
  std::string digest;
  std::vector<std::string> warnings;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{"cannot open file '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json j_big(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

json j_rat(const Rational& r) { return rational_string(r); }

std::string fixed_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string display_rational_function(const RationalFunction& f) {
  if (f.num.is_zero()) return "0";
  std::string num = f.num.str();
  if (num.find(' ') != std::string::npos) num = "(" + num + ")";
  return num + " / (" + f.den.str() + ")";
}

json j_int_poly(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(j_big(c));
  return a;
}

json j_rational_function(const RationalFunction& f) {
  return json{{"numerator", j_int_poly(f.num)},
              {"denominator", j_int_poly(f.den)},
              {"display", display_rational_function(f)}};
}

json j_series(const PowerSeries& s) {
  json a = json::array();
  for (const auto& c : s.c) a.push_back(j_rat(c));
  return a;
}

json j_label_set(const Sft& x, const std::vector<int>& states) {
  json a = json::array();
  for (int s : states) a.push_back(x.label(s));
  return a;
}

std::string plain_label_set(const Sft& x, const std::vector<int>& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ", ";
    out += x.label(states[i]);
  }
  return out + "}";
}

void emit(std::ostream& out, const RunContext& rc, const std::string& command, const json& result,
          const std::string& plain) {
  if (rc.json_out) {
    json env;
    env["command"] = command;
    env["input"] = json{{"path", rc.path}, {"digest", rc.digest}};
    env["result"] = result;
    env["warnings"] = rc.warnings;
    out << env.dump(2) << "\n";
  } else {
    out << "command: " << command << "\n";
    out << "input: " << rc.path << " (digest " << rc.digest << ")\n";
    out << plain;
    for (const auto& w : rc.warnings) out << "warning: " << w << "\n";
  }
}

ParsedSft load_sft(RunContext& rc, const std::string& path) {
  rc.path = path;
  std::string bytes = read_file(path);
  rc.digest = fnv1a_digest(bytes);
  ParsedSft parsed = parse_sft_file(bytes);
  for (const auto& w : parsed.warnings) rc.warnings.push_back(w);
  return parsed;
}

DifferenceSystem load_dsys(RunContext& rc, const std::string& path) {
  rc.path = path;
  std::string bytes = read_file(path);
  rc.digest = fnv1a_digest(bytes);
  return parse_dsys_file(bytes, rc.scan_limit);
}

Sft essential_part(const Sft& x, RunContext& rc) {
  Sft pruned = prune(x);
  if (pruned.size() != x.size())
    rc.warnings.push_back("pruned " + std::to_string(x.size() - pruned.size()) +
                          " forward-dead state(s)");
  return pruned;
}

Rational parse_rational_arg(const std::string& text) {
  // Accepts "p/q", plain integers, and decimal literals like "0.0001".
  auto bad = [&]() { throw UsageFailure{"cannot parse '" + text + "' as a rational"}; };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(BigInt(whole));
    bool neg = !whole.empty() && whole[0] == '-';
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() || whole == "-" ? BigInt(0) : BigInt(whole);
    if (w < 0) w = -w;
    Rational r = Rational(w) + Rational(BigInt(frac), scale);
    return neg ? -r : r;
  } catch (const std::exception&) {
    bad();
  }
  return Rational(0);
}

// --- subcommand payloads -------------------------------------------------

json entropy_payload(const EntropyBracket& eb, const Rational& tol, std::string* plain) {
  int digits = distinguishing_digits(eb.lo, eb.hi);
  double llo = std::log(static_cast<double>(eb.lo));
  double lhi = std::log(static_cast<double>(eb.hi));
  double mid = (llo + lhi) / 2, rad = (lhi - llo) / 2;
  json r;
  r["lambda_lo"] = j_rat(eb.lo);
  r["lambda_hi"] = j_rat(eb.hi);
  r["lambda_lo_decimal"] = decimal_string(eb.lo, digits);
  r["lambda_hi_decimal"] = decimal_string(eb.hi, digits);
  r["log_lambda_lo"] = fixed_double(llo, 12);
  r["log_lambda_hi"] = fixed_double(lhi, 12);
  r["iterations"] = eb.iterations;
  r["converged"] = eb.converged;
  r["tolerance"] = j_rat(tol);
  if (plain) {
    std::ostringstream os;
    os << "lambda_lo = " << rational_string(eb.lo) << " = " << decimal_string(eb.lo, digits)
       << "...\n";
    os << "lambda_hi = " << rational_string(eb.hi) << " = " << decimal_string(eb.hi, digits)
       << "...\n";
    os << "h(X) = log(lambda) = " << fixed_double(mid, 12) << " +/- " << fixed_double(rad, 12)
       << "\n";
    os << "iterations: " << eb.iterations << (eb.converged ? "" : " (did not converge)") << "\n";
    *plain = os.str();
  }
  return r;
}

json strong_core_payload(const Sft& essential, const PeriodicQuotient& q, std::string* plain) {
  json arr = json::array();
  std::ostringstream os;
  for (const auto& comp : q.components) {
    json labels = json::array();
    for (int l : comp.labels) labels.push_back(l);
    arr.push_back(json{{"states", j_label_set(essential, comp.states)},
                       {"modulus", comp.modulus},
                       {"labels", labels}});
    if (plain) {
      os << "  component " << plain_label_set(essential, comp.states) << ": modulus "
         << comp.modulus << ", labels";
      for (std::size_t i = 0; i < comp.states.size(); ++i)
        os << " " << essential.label(comp.states[i]) << ":" << comp.labels[i];
      os << "\n";
    }
  }
  if (plain) *plain = os.str();
  return arr;
}

void cmd_decompose(std::ostream& out, RunContext& rc, const Sft& x) {
  Decomposition d = communicating_classes(x);
  std::vector<Component> irr = irreducible_components(x);
  Sft essential = essential_part(x, rc);
  std::vector<Component> sigma = sigma_components(essential);
  PeriodicQuotient core = strong_core(essential);

  json r;
  json classes = json::array();
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    classes.push_back(json{{"states", j_label_set(x, d.classes[c])}, {"has_edge", bool(d.has_edge[c])}});
  r["classes"] = classes;
  json cedges = json::array();
  for (const auto& [from, to] : d.condensation) cedges.push_back(json::array({from, to}));
  r["condensation_edges"] = cedges;
  json irrj = json::array();
  for (const auto& c : irr) irrj.push_back(j_label_set(x, c.states));
  r["irreducible"] = irrj;
  json sigmaj = json::array();
  for (const auto& c : sigma) sigmaj.push_back(j_label_set(essential, c.states));
  r["sigma_components"] = sigmaj;
  std::string core_plain;
  r["strong_core"] = strong_core_payload(essential, core, &core_plain);

  std::ostringstream os;
  os << "classes (block-triangular order):\n";
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    os << "  " << c << ": " << plain_label_set(x, d.classes[c])
       << (d.has_edge[c] ? " [has edge]" : " [no edge]") << "\n";
  os << "condensation edges:";
  if (d.condensation.empty()) os << " (none)";
  for (const auto& [from, to] : d.condensation) os << " " << from << "->" << to;
  os << "\n";
  os << "irreducible components: " << irr.size() << "\n";
  for (const auto& c : irr) os << "  " << plain_label_set(x, c.states) << "\n";
  os << "sigma components: " << sigma.size() << "\n";
  for (const auto& c : sigma) os << "  " << plain_label_set(essential, c.states) << "\n";
  os << "strong core:\n" << core_plain;
  emit(out, rc, "decompose", r, os.str());
}

void cmd_strong_core(std::ostream& out, RunContext& rc, const Sft& x) {
  Sft essential = essential_part(x, rc);
  PeriodicQuotient core = strong_core(essential);
  std::string plain;
  json arr = strong_core_payload(essential, core, &plain);
  json r;
  r["strong_core"] = arr;
  emit(out, rc, "strong-core", r, "strong core:\n" + plain);
}

void cmd_entropy(std::ostream& out, RunContext& rc, const Sft& x, const Rational& tol,
                 int max_iter) {
  Sft essential = essential_part(x, rc);
  EntropyBracket eb = entropy_bounds(essential, tol, max_iter);
  if (!eb.converged) rc.warnings.push_back("bracket did not reach the tolerance before max-iter");
  std::string plain;
  json r = entropy_payload(eb, tol, &plain);
  emit(out, rc, "entropy", r, plain);
}

void cmd_limit_degree(std::ostream& out, RunContext& rc, const Sft& x, int l_max, int window) {
  Sft essential = essential_part(x, rc);
  LimitDegreeResult res = limit_degree(essential, l_max, window);
  json r;
  r["stabilized"] = res.stabilized;
  json ratios = json::array();
  for (const auto& rr : res.ratios) ratios.push_back(j_rat(rr));
  r["ratios"] = ratios;
  std::ostringstream os;
  if (res.stabilized) {
    r["degree"] = j_big(res.degree);
    r["since_l"] = res.since_l;
    os << "stabilized: d = " << res.degree << " since l = " << res.since_l << "\n";
  } else {
    os << "not stabilized\n";
  }
  os << "ratios:";
  for (const auto& rr : res.ratios) os << " " << rational_string(rr);
  os << "\n";
  emit(out, rc, "limit-degree", r, os.str());
}

void cmd_zeta(std::ostream& out, RunContext& rc, const Sft& x, int order) {
  Sft essential = essential_part(x, rc);
  RationalFunction z = dynamical_zeta(essential);
  PowerSeries s = zeta_series(essential, order);
  json r;
  r["zeta"] = j_rational_function(z);
  r["series"] = j_series(s);
  r["order"] = order;
  std::ostringstream os;
  os << "Z(X,t) = " << display_rational_function(z) << "\n";
  os << "numerator coefficients: [";
  for (std::size_t i = 0; i < z.num.coeffs().size(); ++i)
    os << (i ? ", " : "") << z.num.coeffs()[i];
  os << "]\ndenominator coefficients: [";
  for (std::size_t i = 0; i < z.den.coeffs().size(); ++i)
    os << (i ? ", " : "") << z.den.coeffs()[i];
  os << "]\nseries:";
  for (const auto& c : s.c) os << " " << rational_string(c);
  os << "\n";
  emit(out, rc, "zeta", r, os.str());
}

void cmd_twisted_zeta(std::ostream& out, RunContext& rc, const ParsedSft& parsed, int order) {
  require(parsed.perm.has_value(), Errc::SemanticError,
          "twisted-zeta requires a 'perm:' line in the .sft file");
  TwistData tw = make_twist(parsed.sft, *parsed.perm, rc.cap);
  std::vector<BigInt> counts;
  for (int n = 1; n <= tw.order; ++n) counts.push_back(twisted_count(tw, n));
  RationalFunction ld = twisted_log_derivative(tw);
  PowerSeries s = twisted_zeta_series(tw, order);
  json r;
  r["d"] = tw.order;
  json cj = json::array();
  for (const auto& c : counts) cj.push_back(j_big(c));
  r["counts"] = cj;
  r["log_derivative"] = j_rational_function(ld);
  r["series"] = j_series(s);
  r["order"] = order;
  std::ostringstream os;
  os << "d = " << tw.order << "\n";
  os << "N_1..N_d:";
  for (const auto& c : counts) os << " " << c;
  os << "\n";
  os << "log derivative = " << display_rational_function(ld) << "\n";
  os << "series:";
  for (const auto& c : s.c) os << " " << rational_string(c);
  os << "\n";
  emit(out, rc, "twisted-zeta", r, os.str());
}

void cmd_points(std::ostream& out, RunContext& rc, const DifferenceSystem& sys, int max_n) {
  GaloisOptions opt;
  opt.scan_limit = rc.scan_limit;
  SftWithFrobenius built = build_sft(sys, opt);
  json rows = json::array();
  std::ostringstream os;
  os << "  n  direct  matrix  match\n";
  bool all_match = true;
  for (int n = 1; n <= max_n; ++n) {
    BigInt direct = point_count_direct(sys, n, opt);
    BigInt matrix = twisted_count(built.twist, n);
    bool match = direct == matrix;
    all_match = all_match && match;
    rows.push_back(json{{"n", n}, {"direct", j_big(direct)}, {"matrix", j_big(matrix)}, {"match", match}});
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%3d  %6s  %6s  %s\n", n, direct.str().c_str(),
                  matrix.str().c_str(), match ? "ok" : "MISMATCH");
    os << buf;
  }
  json r;
  r["rows"] = rows;
  r["all_match"] = all_match;
  emit(out, rc, "points", r, os.str());
}

void cmd_from_sft(std::ostream& out, RunContext& rc, const Sft& x, std::uint32_t p, std::uint32_t e) {
  FqCtxPtr ctx = build_field(p, e, rc.scan_limit);
  DifferenceSystem sys = sft_to_system(x, ctx);
  std::string text = format_dsys(sys);
  if (rc.json_out) {
    json r;
    r["dsys"] = text;
    emit(out, rc, "from-sft", r, text);
  } else {
    // plain output is itself a valid .dsys, ready to pipe into a file
    for (const auto& w : rc.warnings) out << "# " << w << "\n";
    out << text;
  }
}

void cmd_analyze(std::ostream& out, RunContext& rc, const DifferenceSystem& sys,
                 const Rational& tol, int max_iter) {
  GaloisOptions opt;
  opt.scan_limit = rc.scan_limit;
  SftWithFrobenius built = build_sft(sys, opt);
  const Sft& x = built.sft;
  Sft essential = essential_part(x, rc);

  json r;
  {
    std::vector<std::uint32_t> mod = sys.ctx->modulus;
    std::ostringstream ms;
    bool first = true;
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) {
      if (mod[i] == 0) continue;
      if (!first) ms << "+";
      first = false;
      if (i == 0)
        ms << mod[i];
      else {
        if (mod[i] != 1) ms << mod[i] << "*";
        ms << "t";
        if (i > 1) ms << "^" << i;
      }
    }
    r["field"] = json{{"p", sys.ctx->p}, {"e", sys.ctx->e}, {"q", sys.ctx->q}, {"modulus", ms.str()}};
  }
  r["splitting_degree"] = built.m;
  r["extension_q"] = built.ext->q;
  json alphabet = json::array();
  for (const auto& a : built.alphabet) alphabet.push_back(a.str());
  r["alphabet"] = alphabet;
  json trans = json::array();
  for (int i = 0; i < x.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < x.size(); ++j) row.push_back(x.edge(i, j) ? 1 : 0);
    trans.push_back(row);
  }
  r["transition"] = trans;
  json permj = json::array();
  for (int v : built.twist.perm) permj.push_back(v);
  r["frobenius"] = json{{"perm", permj}, {"order", built.twist.order}};
  r["essential_states"] = j_label_set(essential, [&] {
    std::vector<int> all(essential.size());
    for (int i = 0; i < essential.size(); ++i) all[i] = i;
    return all;
  }());

  Decomposition d = communicating_classes(essential);
  json classes = json::array();
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    classes.push_back(json{{"states", j_label_set(essential, d.classes[c])},
                           {"has_edge", bool(d.has_edge[c])}});
  r["classes"] = classes;
  std::vector<Component> sigma = sigma_components(essential);
  json sigmaj = json::array();
  for (const auto& c : sigma) sigmaj.push_back(j_label_set(essential, c.states));
  r["sigma_components"] = sigmaj;
  r["spec_sigma_components"] = spec_sigma_component_count(sys, opt);
  std::string core_plain;
  r["strong_core"] = strong_core_payload(essential, strong_core(essential), &core_plain);

  std::ostringstream os;
  os << "field: F_" << sys.ctx->q << " (p=" << sys.ctx->p << ", e=" << sys.ctx->e << ")\n";
  os << "splitting degree m = " << built.m << ", alphabet in F_" << built.ext->q << ":";
  for (const auto& a : built.alphabet) os << " " << a.str();
  os << "\n";
  os << "states: " << x.size() << ", essential: " << essential.size() << "\n";
  os << "frobenius order d = " << built.twist.order << "\n";
  os << "sigma components: " << sigma.size()
     << ", spectrum components (frobenius orbits): " << r["spec_sigma_components"] << "\n";
  os << "strong core:\n" << core_plain;

  std::string entropy_plain;
  if (essential.empty()) {
    r["entropy"] = nullptr;
    rc.warnings.push_back("system has no infinite solutions; entropy undefined");
    entropy_plain = "entropy: undefined (no infinite solutions)\n";
  } else {
    EntropyBracket eb = entropy_bounds(essential, tol, max_iter);
    if (!eb.converged) rc.warnings.push_back("bracket did not reach the tolerance before max-iter");
    r["entropy"] = entropy_payload(eb, tol, &entropy_plain);
  }
  os << entropy_plain;
  emit(out, rc, "analyze", r, os.str());
}

}  // namespace

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"subshift-of-finite-type invariants and difference zeta functions"};
  app.require_subcommand(1);

  RunContext rc;
  app.add_flag("--json", rc.json_out, "structured output with sorted keys");
  app.add_option("--scan-limit", rc.scan_limit, "field element scan ceiling")
      ->envname("SFTZETA_SCAN_LIMIT")
      ->capture_default_str();
  app.add_option("--cap", rc.cap, "enumeration item cap")
      ->envname("SFTZETA_CAP")
      ->capture_default_str();

  std::string file;
  std::string tol_text = "1/1000000";
  int max_iter = 10000;
  int order = 8;
  int max_n = 8;
  int max_l = 12;
  int window = 3;
  std::uint32_t from_p = 2, from_e = 1;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file")->required();
    sub->fallthrough();
  };

  CLI::App* c_decompose = app.add_subcommand("decompose", "communicating classes and cores of a .sft");
  add_file(c_decompose);
  CLI::App* c_strong = app.add_subcommand("strong-core", "maximal periodic quotient of a .sft");
  add_file(c_strong);
  CLI::App* c_entropy = app.add_subcommand("entropy", "certified entropy bracket of a .sft");
  add_file(c_entropy);
  c_entropy->add_option("--tol", tol_text, "bracket width target (rational)")->capture_default_str();
  c_entropy->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
  CLI::App* c_limit = app.add_subcommand("limit-degree", "word-count ratio stabilization of a .sft");
  add_file(c_limit);
  c_limit->add_option("--max-l", max_l, "largest word length")->capture_default_str();
  c_limit->add_option("--window", window, "stabilization window")->capture_default_str();
  CLI::App* c_zeta = app.add_subcommand("zeta", "dynamical zeta function of a .sft");
  add_file(c_zeta);
  c_zeta->add_option("--order", order, "series truncation order")->capture_default_str();
  CLI::App* c_twisted = app.add_subcommand("twisted-zeta", "twisted zeta of a .sft with a perm: line");
  add_file(c_twisted);
  c_twisted->add_option("--order", order, "series truncation order")->capture_default_str();
  CLI::App* c_points = app.add_subcommand("points", "twisted point counts of a .dsys");
  add_file(c_points);
  c_points->add_option("--max-n", max_n, "largest twist exponent")->capture_default_str();
  CLI::App* c_from = app.add_subcommand("from-sft", "present a .sft as a .dsys");
  add_file(c_from);
  c_from->add_option("--p", from_p, "base field characteristic")->required();
  c_from->add_option("--e", from_e, "base field extension degree")->capture_default_str();
  CLI::App* c_analyze = app.add_subcommand("analyze", "full report on a .dsys");
  add_file(c_analyze);
  c_analyze->add_option("--tol", tol_text, "bracket width target (rational)")->capture_default_str();
  c_analyze->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Rational tol = parse_rational_arg(tol_text);
    if (tol <= 0) throw UsageFailure{"--tol must be positive"};
    if (order < 0) throw UsageFailure{"--order must be non-negative"};

    if (app.got_subcommand(c_decompose)) {
      cmd_decompose(out, rc, load_sft(rc, file).sft);
    } else if (app.got_subcommand(c_strong)) {
      cmd_strong_core(out, rc, load_sft(rc, file).sft);
    } else if (app.got_subcommand(c_entropy)) {
      cmd_entropy(out, rc, load_sft(rc, file).sft, tol, max_iter);
    } else if (app.got_subcommand(c_limit)) {
      cmd_limit_degree(out, rc, load_sft(rc, file).sft, max_l, window);
    } else if (app.got_subcommand(c_zeta)) {
      cmd_zeta(out, rc, load_sft(rc, file).sft, order);
    } else if (app.got_subcommand(c_twisted)) {
      cmd_twisted_zeta(out, rc, load_sft(rc, file), order);
    } else if (app.got_subcommand(c_points)) {
      cmd_points(out, rc, load_dsys(rc, file), max_n);
    } else if (app.got_subcommand(c_from)) {
      cmd_from_sft(out, rc, load_sft(rc, file).sft, from_p, from_e);
    } else if (app.got_subcommand(c_analyze)) {
      cmd_analyze(out, rc, load_dsys(rc, file), tol, max_iter);
    }
    return 0;
  } catch (const UsageFailure& u) {
    err << "error: " << u.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::SyntaxError || e.code() == Errc::SemanticError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sftzeta::cli
