// The `gk` command line: table1, spectrum, graph, enumerate, verify,
// oracle. Exit status 0 on success, 1 when a check fails, 2 on usage
// errors.

#ifndef GK_CLI_HPP_
#define GK_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gk::cli {

  inline constexpr int kExitOk       = 0;
  inline constexpr int kExitFailed   = 1;
  inline constexpr int kExitUsage    = 2;

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Rows for S4(31), U3(27), G2(11), U4(31), with a header line.
  std::string table1_text();

  // Decimal or 0x-prefixed hex; nullopt when malformed.
  std::optional<std::uint64_t> parse_seed(std::string_view text);

}  // namespace gk::cli

#endif  // GK_CLI_HPP_
