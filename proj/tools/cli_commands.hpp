#ifndef EXTREMA_TOOLS_CLI_COMMANDS_HPP
#define EXTREMA_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extrema/sequence_stats.hpp"
#include "extrema/stat_tests.hpp"

namespace extrema::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;

inline constexpr int kMaxTableDistance = 200;
inline constexpr std::size_t kMaxEvalWord = 64;
inline constexpr std::uint64_t kMinGeneratedValues = 1000;
inline constexpr int kDecimalDigits = 17;

enum class TableFormat { Human, Tsv, Exact };

int cmd_table(int d_max, TableFormat format, std::ostream& out, std::ostream& err);
int cmd_eval(const std::string& word, std::ostream& out, std::ostream& err);
int cmd_oracle(int d_max, std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
    std::optional<std::string> generator;  // randu | lcg48 | user
    std::optional<std::string> file;
    std::string format;  // floats-text | u32-be-binary, required with file
    std::uint64_t values = 0;
    std::uint64_t target_distances = 0;  // stop once this many distances are counted
    std::string seed = "1";
    std::string multiplier, increment, modulus;  // user LCG
    ExtremumKind kind = ExtremumKind::Maxima;
    TiePolicy ties = TiePolicy::Error;
    double alpha = kDefaultAlpha;
    bool tsv = false;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

/// Observed-vs-theoretical table, one row per distance 2..max observed.
void write_frequency_table(std::ostream& out, const DistanceHistogram& hist, bool tsv);

}  // namespace extrema::cli

#endif  // EXTREMA_TOOLS_CLI_COMMANDS_HPP
