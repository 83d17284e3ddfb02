#include "sftzeta/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sftzeta {
namespace {

constexpr int kMaxExponent = 4096;
constexpr int kMaxStates = 4096;

struct Line {
  int no;
  std::string text;
};

std::vector<Line> meaningful_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == '\r' || std::isspace(static_cast<unsigned char>(raw.back()))))
      raw.pop_back();
    std::size_t start = 0;
    while (start < raw.size() && std::isspace(static_cast<unsigned char>(raw[start]))) ++start;
    raw.erase(0, start);
    if (!raw.empty()) out.push_back({no, raw});
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> t;
  std::string w;
  while (in >> w) t.push_back(w);
  return t;
}

[[noreturn]] void syntax_error(int line, const std::string& msg) {
  fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void semantic_error(int line, const std::string& msg) {
  fail(Errc::SemanticError, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int_token(const std::string& tok, int line, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  bool neg = false;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) neg = tok[pos++] == '-';
  if (pos >= tok.size()) syntax_error(line, what + ": expected an integer, got '" + tok + "'");
  for (; pos < tok.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(tok[pos])))
      syntax_error(line, what + ": expected an integer, got '" + tok + "'");
    v = v * 10 + (tok[pos] - '0');
    if (v > (1LL << 40)) semantic_error(line, what + ": integer out of range");
  }
  return neg ? -v : v;
}

// One parsed monomial: residue coefficient and exponents of t, x, y.
struct Monomial {
  std::uint32_t coeff;
  int t = 0, x = 0, y = 0;
};

class PolyScanner {
 public:
  PolyScanner(const std::string& text, std::uint32_t p) : s_(text), p_(p) {}

  std::vector<Monomial> run() {
    std::vector<Monomial> out;
    skip_ws();
    if (eof()) fail(Errc::SyntaxError, "empty polynomial");
    bool neg = take_sign(false);
    while (true) {
      Monomial m = monomial();
      if (neg) m.coeff = (p_ - m.coeff) % p_;
      out.push_back(m);
      skip_ws();
      if (eof()) break;
      if (s_[i_] != '+' && s_[i_] != '-')
        fail(Errc::SyntaxError, "unexpected character '" + std::string(1, s_[i_]) +
                                    "' at column " + std::to_string(i_ + 1));
      neg = take_sign(true);
    }
    return out;
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool take_sign(bool required) {
    skip_ws();
    bool neg = false;
    bool seen = false;
    while (!eof() && (s_[i_] == '+' || s_[i_] == '-')) {
      if (s_[i_] == '-') neg = !neg;
      ++i_;
      seen = true;
      skip_ws();
    }
    if (required && !seen) fail(Errc::SyntaxError, "expected '+' or '-'");
    return neg;
  }

  std::uint32_t number_mod_p() {
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = (v * 10 + static_cast<std::uint64_t>(s_[i_] - '0')) % p_;
      ++i_;
    }
    return static_cast<std::uint32_t>(v);
  }

  int exponent() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail(Errc::SyntaxError, "expected an exponent at column " + std::to_string(i_ + 1));
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > kMaxExponent) fail(Errc::SemanticError, "exponent exceeds " + std::to_string(kMaxExponent));
      ++i_;
    }
    return static_cast<int>(v);
  }

  Monomial monomial() {
    Monomial m{1 % p_, 0, 0, 0};
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (eof()) fail(Errc::SyntaxError, "dangling '*' at end of polynomial");
      char c = s_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        m.coeff = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m.coeff) * number_mod_p() % p_);
      } else if (c == 't' || c == 'x' || c == 'y') {
        ++i_;
        int e = 1;
        skip_ws();
        if (!eof() && s_[i_] == '^') {
          ++i_;
          e = exponent();
        }
        if (c == 't') m.t += e;
        if (c == 'x') m.x += e;
        if (c == 'y') m.y += e;
        if (m.t > kMaxExponent || m.x > kMaxExponent || m.y > kMaxExponent)
          fail(Errc::SemanticError, "exponent exceeds " + std::to_string(kMaxExponent));
      } else {
        fail(Errc::SyntaxError, "unexpected character '" + std::string(1, c) + "' at column " +
                                    std::to_string(i_ + 1));
      }
      skip_ws();
      if (!eof() && s_[i_] == '*') {
        ++i_;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    return m;
  }

  const std::string& s_;
  std::uint32_t p_;
  std::size_t i_ = 0;
};

}  // namespace

BiPoly parse_xy_poly(const std::string& text, const FqCtxPtr& ctx) {
  BiPoly out(ctx);
  FieldElement gen = FieldElement::generator(ctx);
  for (const Monomial& m : PolyScanner(text, ctx->p).run()) {
    FieldElement c = FieldElement::from_int(ctx, m.coeff);
    if (m.t > 0) c = c * gen.pow(static_cast<std::uint64_t>(m.t));
    if (!c.is_zero()) out.add_term(m.x, m.y, c);
  }
  return out;
}

Poly parse_x_poly(const std::string& text, const FqCtxPtr& ctx) {
  BiPoly bi = parse_xy_poly(text, ctx);
  int deg = 0;
  for (const auto& [k, v] : bi.terms()) {
    require(k.second == 0, Errc::SyntaxError, "variable y not allowed here");
    deg = std::max(deg, k.first);
  }
  std::vector<FieldElement> c(deg + 1, FieldElement::zero(ctx));
  for (const auto& [k, v] : bi.terms()) c[k.first] = v;
  return Poly(ctx, std::move(c));
}

std::vector<std::uint32_t> parse_zp_poly(const std::string& text, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  for (const Monomial& m : PolyScanner(text, p).run()) {
    require(m.x == 0 && m.y == 0, Errc::SyntaxError, "only t may appear in a modulus");
    if (static_cast<std::size_t>(m.t) >= c.size()) c.resize(m.t + 1, 0);
    c[m.t] = static_cast<std::uint32_t>((c[m.t] + m.coeff) % p);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

ParsedSft parse_sft_file(const std::string& text) {
  std::vector<Line> lines = meaningful_lines(text);
  require(!lines.empty(), Errc::SyntaxError, "line 1: empty input");
  auto header = tokens_of(lines[0].text);
  if (header.size() != 2 || header[0] != "sft" || (header[1] != "matrix" && header[1] != "edges"))
    syntax_error(lines[0].no, "expected 'sft matrix' or 'sft edges'");

  ParsedSft out;
  std::optional<std::pair<int, std::vector<std::string>>> perm_tokens;  // line, tokens
  if (header[1] == "matrix") {
    if (lines.size() < 2) syntax_error(lines[0].no, "missing state count after 'sft matrix'");
    long long n = parse_int_token(tokens_of(lines[1].text).at(0), lines[1].no, "state count");
    if (tokens_of(lines[1].text).size() != 1)
      syntax_error(lines[1].no, "expected the state count alone on its line");
    if (n < 0 || n > kMaxStates) semantic_error(lines[1].no, "state count out of range");
    std::vector<std::vector<int>> rows;
    std::size_t li = 2;
    for (int r = 0; r < n; ++r, ++li) {
      if (li >= lines.size())
        syntax_error(lines.back().no, "expected " + std::to_string(n) + " matrix rows, got " +
                                          std::to_string(r));
      auto toks = tokens_of(lines[li].text);
      if (static_cast<long long>(toks.size()) != n)
        syntax_error(lines[li].no, "expected " + std::to_string(n) + " entries in this row");
      std::vector<int> row;
      row.reserve(toks.size());
      for (const auto& t : toks)
        row.push_back(static_cast<int>(parse_int_token(t, lines[li].no, "matrix entry")));
      rows.push_back(std::move(row));
    }
    std::vector<std::string> states;
    for (long long i = 0; i < n; ++i) states.push_back(std::to_string(i));
    for (; li < lines.size(); ++li) {
      auto toks = tokens_of(lines[li].text);
      if (toks[0] == "states:") {
        if (static_cast<long long>(toks.size()) - 1 != n)
          semantic_error(lines[li].no, "expected " + std::to_string(n) + " state labels");
        states.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "perm:") {
        perm_tokens = {lines[li].no, std::vector<std::string>(toks.begin() + 1, toks.end())};
      } else {
        syntax_error(lines[li].no, "unexpected line after the matrix");
      }
    }
    out.sft = from_matrix(states, rows);
  } else {
    if (lines.size() < 2 || tokens_of(lines[1].text)[0] != "states:")
      syntax_error(lines.size() < 2 ? lines[0].no : lines[1].no,
                   "'sft edges' must be followed by a 'states:' line");
    auto stoks = tokens_of(lines[1].text);
    std::vector<std::string> states(stoks.begin() + 1, stoks.end());
    if (static_cast<int>(states.size()) > kMaxStates)
      semantic_error(lines[1].no, "state count out of range");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (!index.emplace(states[i], static_cast<int>(i)).second)
        fail(Errc::DuplicateState, "line " + std::to_string(lines[1].no) +
                                       ": duplicate state label '" + states[i] + "'");
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t li = 2; li < lines.size(); ++li) {
      auto toks = tokens_of(lines[li].text);
      if (toks[0] == "perm:") {
        perm_tokens = {lines[li].no, std::vector<std::string>(toks.begin() + 1, toks.end())};
        continue;
      }
      if (toks.size() != 2) syntax_error(lines[li].no, "expected 'src dst'");
      auto src = index.find(toks[0]);
      auto dst = index.find(toks[1]);
      if (src == index.end()) semantic_error(lines[li].no, "unknown state '" + toks[0] + "'");
      if (dst == index.end()) semantic_error(lines[li].no, "unknown state '" + toks[1] + "'");
      pairs.push_back({src->second, dst->second});
    }
    std::map<std::pair<int, int>, int> multiplicity;
    bool multigraph = false;
    for (const auto& pr : pairs) multigraph = ++multiplicity[pr] > 1 || multigraph;
    if (multigraph) {
      MultiGraph g;
      g.states = states;
      for (const auto& [src, dst] : pairs) g.edges.push_back({src, dst, ""});
      out.sft = edge_to_vertex(g);
      out.warnings.push_back("duplicate edges: multigraph input recoded as an edge shift");
    } else {
      std::vector<std::vector<int>> rows(states.size(), std::vector<int>(states.size(), 0));
      for (const auto& [src, dst] : pairs) rows[src][dst] = 1;
      out.sft = from_matrix(states, rows);
    }
  }

  if (perm_tokens) {
    const auto& [line, toks] = *perm_tokens;
    if (static_cast<int>(toks.size()) != out.sft.size())
      semantic_error(line, "perm: expected " + std::to_string(out.sft.size()) + " images");
    std::vector<int> perm;
    perm.reserve(toks.size());
    for (const auto& t : toks) {
      long long v = parse_int_token(t, line, "perm image");
      if (v < 0 || v >= out.sft.size()) semantic_error(line, "perm image out of range");
      perm.push_back(static_cast<int>(v));
    }
    out.perm = std::move(perm);
  }
  return out;
}

DifferenceSystem parse_dsys_file(const std::string& text, std::uint64_t scan_limit) {
  std::vector<Line> lines = meaningful_lines(text);
  require(!lines.empty(), Errc::SyntaxError, "line 1: empty input");

  std::optional<std::pair<int, long long>> p_line, e_line;
  std::optional<Line> modulus_line, vertex_line;
  std::vector<Line> edge_lines;
  for (const auto& l : lines) {
    auto sp = l.text.find_first_of(" \t");
    std::string key = l.text.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : l.text.substr(sp + 1);
    if (key == "p" || key == "e") {
      auto toks = tokens_of(rest);
      if (toks.size() != 1) syntax_error(l.no, "expected a single integer after '" + key + "'");
      long long v = parse_int_token(toks[0], l.no, key);
      auto& slot = key == "p" ? p_line : e_line;
      if (slot) semantic_error(l.no, "duplicate '" + key + "' line");
      slot = {l.no, v};
    } else if (key == "modulus") {
      if (modulus_line) semantic_error(l.no, "duplicate modulus line");
      modulus_line = {l.no, rest};
    } else if (key == "vertex") {
      if (vertex_line) semantic_error(l.no, "duplicate vertex line");
      vertex_line = {l.no, rest};
    } else if (key == "edge") {
      edge_lines.push_back({l.no, rest});
    } else {
      syntax_error(l.no, "unknown directive '" + key + "'");
    }
  }
  require(p_line.has_value(), Errc::SemanticError, "missing 'p' line");
  require(e_line.has_value(), Errc::SemanticError, "missing 'e' line");
  require(vertex_line.has_value(), Errc::SemanticError, "missing 'vertex' line");
  require(!edge_lines.empty(), Errc::SemanticError, "at least one 'edge' line is required");
  if (p_line->second < 2 || p_line->second > (1 << 20))
    semantic_error(p_line->first, "p out of range");
  if (e_line->second < 1 || e_line->second > 20) semantic_error(e_line->first, "e out of range");
  auto p = static_cast<std::uint32_t>(p_line->second);
  auto e = static_cast<std::uint32_t>(e_line->second);

  auto with_line = [](int no, auto fn) {
    try {
      return fn();
    } catch (const Error& err) {
      if (err.code() == Errc::SyntaxError || err.code() == Errc::SemanticError)
        fail(err.code(), "line " + std::to_string(no) + ": " + err.what());
      throw;
    }
  };

  FqCtxPtr ctx;
  if (modulus_line) {
    ctx = with_line(modulus_line->no, [&] {
      return build_field_with_modulus(p, e, parse_zp_poly(modulus_line->text, p), scan_limit);
    });
  } else {
    ctx = build_field(p, e, scan_limit);
  }

  Poly vertex = with_line(vertex_line->no, [&] { return parse_x_poly(vertex_line->text, ctx); });
  std::vector<BiPoly> edges;
  edges.reserve(edge_lines.size());
  for (const auto& l : edge_lines)
    edges.push_back(with_line(l.no, [&] { return parse_xy_poly(l.text, ctx); }));
  return DifferenceSystem{ctx, std::move(vertex), std::move(edges)};
}

std::string format_dsys(const DifferenceSystem& sys) {
  std::ostringstream os;
  os << "p " << sys.ctx->p << "\n";
  os << "e " << sys.ctx->e << "\n";
  if (sys.ctx->e > 1) {
    os << "modulus ";
    bool first = true;
    for (int i = static_cast<int>(sys.ctx->modulus.size()) - 1; i >= 0; --i) {
      std::uint32_t c = sys.ctx->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
    }
    os << "\n";
  }
  os << "vertex " << sys.vertex.str("x") << "\n";
  for (const auto& f : sys.edges) os << "edge " << f.str() << "\n";
  return os.str();
}

}  // namespace sftzeta
