#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnt/selberg.hpp"
#include "pnt/verify.hpp"

namespace pnt::cli {

enum class Command { tables, verify, estimate, pnt };

struct RunConfig {
  Command command = Command::verify;
  std::uint64_t max_n = 1'000'000;
  // Suite name for verify, catalog identity name for estimate.
  std::string suite = "all";
  std::string identity;
  std::uint64_t seed = 0;
  // Empty means the `out` stream passed to run().
  std::string out_path;
  // Sample points for pnt; empty selects the decades up to max_n plus max_n.
  std::vector<double> xs;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Writes CSV (header row, comma delimiter, LF endings, 12 significant
// digits) to out_path or `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Formatting helpers shared with the tests.
std::string format_number(double value);
void write_check_rows(std::ostream& out, const std::vector<CheckRow>& rows);
void write_pnt_rows(std::ostream& out, const std::vector<PntRow>& rows);

}  // namespace pnt::cli
