#pragma once
// Command front end. Each cmd_* writes to stdout (or cfg.output) and returns
// an exit code; run() parses argv and dispatches.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cancx::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;   // verification or internal failure
inline constexpr int kUsage = 2;  // bad flags, unknown algebra, invalid input file

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra;
  std::string algebra_file;
  std::int64_t cutoff = 8;
  std::string format = "json";  // json | csv
  std::string output;           // empty: stdout
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string dump_blocks;      // directory for .mtx block dumps
  std::string transcript;       // JSON lines of boundary evaluations
  bool exact_only = false;
  bool no_timing = false;
  bool corrupt = false;         // test hook: flip one sign of lambda
};

// These throw UsageError on invalid configuration; run() maps it to kUsage.
int cmd_homology(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_cycles(const RunConfig& cfg);
int cmd_properties(const RunConfig& cfg);
int cmd_algebra(const RunConfig& cfg);

int run(int argc, char** argv);

}  // namespace cancx::cli
