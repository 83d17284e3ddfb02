#ifndef SFTZETA_CLI_HPP
#define SFTZETA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sftzeta::cli {

/// Dispatch a full command line (without argv[0]). Returns the process exit
/// code: 0 success, 1 domain error, 2 usage or file-syntax error. All output
/// goes to the given streams; never throws on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest, rendered as 16 hex characters.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace sftzeta::cli

#endif
