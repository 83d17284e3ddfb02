#ifndef SFTZETA_PARSE_HPP
#define SFTZETA_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sftzeta/galois.hpp"
#include "sftzeta/sft.hpp"

namespace sftzeta {

struct ParsedSft {
  Sft sft;
  std::optional<std::vector<int>> perm;
  std::vector<std::string> warnings;
};

/// `.sft` text: "sft matrix" (n, then n 0/1 rows) or "sft edges" (a states:
/// line, then src/dst pairs; duplicate pairs make a multigraph which is
/// recoded on the spot). Optional "states:" and "perm:" lines. '#' starts a
/// comment. Errors carry 1-based line numbers.
ParsedSft parse_sft_file(const std::string& text);

/// `.dsys` text: p, e, optional modulus, one vertex polynomial, one or more
/// edge polynomials.
DifferenceSystem parse_dsys_file(const std::string& text,
                                 std::uint64_t scan_limit = kDefaultScanLimit);

/// Polynomial in x and y over the context; shared term syntax: monomials
/// like "3*x^2*y" joined by '+'/'-', generator 't' allowed in coefficients.
BiPoly parse_xy_poly(const std::string& text, const FqCtxPtr& ctx);

/// Univariate restriction (y must not occur).
Poly parse_x_poly(const std::string& text, const FqCtxPtr& ctx);

/// Polynomial in t over Z/p (for modulus lines), low-to-high coefficients.
std::vector<std::uint32_t> parse_zp_poly(const std::string& text, std::uint32_t p);

/// `.dsys` text for a system (inverse of parse_dsys_file up to formatting).
std::string format_dsys(const DifferenceSystem& sys);

}  // namespace sftzeta

#endif
