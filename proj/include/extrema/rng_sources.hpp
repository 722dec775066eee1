#ifndef EXTREMA_RNG_SOURCES_HPP
#define EXTREMA_RNG_SOURCES_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extrema/big_rational.hpp"

namespace extrema {

inline constexpr std::uint64_t kRanduModulus = std::uint64_t{1} << 31;
inline constexpr std::uint64_t kRanduMultiplier = 65539;
inline constexpr std::uint64_t kLcg48Modulus = std::uint64_t{1} << 48;
inline constexpr std::uint64_t kLcg48Multiplier = 25214903917ULL;
inline constexpr std::uint64_t kLcg48Increment = 11;

struct RanduStep {
    std::uint32_t state;
    double value;  // state / 2^31, in (0, 1)
};

/// state' = 65539 * state mod 2^31. Throws std::invalid_argument unless
/// 0 < state < 2^31.
RanduStep randu_next(std::uint32_t state);

struct Lcg48Step {
    std::uint64_t state;
    double value;  // 53-bit fraction in [0, 1)
};

/// One transition (25214903917 * state + 11) mod 2^48.
std::uint64_t lcg48_advance(std::uint64_t state);

/// Draws one double from two consecutive transitions: the top 26 bits of
/// the first new state and the top 27 bits of the second form a 53-bit
/// fraction. The returned state is the second one, ready for the next draw.
Lcg48Step lcg48_next(std::uint64_t state);

enum class GeneratorFamily { Randu, Lcg48, UserLcg };

/// Parameters of a linear congruential source. For UserLcg the output is
/// state / modulus after each transition.
struct GeneratorSpec {
    GeneratorFamily family = GeneratorFamily::Lcg48;
    BigInt multiplier;
    BigInt increment;
    BigInt modulus;
    BigInt seed;

    static GeneratorSpec randu(std::uint32_t seed);
    static GeneratorSpec lcg48(std::uint64_t seed);
    static GeneratorSpec user_lcg(BigInt multiplier, BigInt increment, BigInt modulus, BigInt seed);

    /// Throws std::invalid_argument when modulus < 2 or the seed is out of
    /// range (RANDU additionally rejects seed 0).
    void validate() const;
};

/// Stateful stream over a GeneratorSpec; owns its state, no globals.
class Generator {
public:
    explicit Generator(const GeneratorSpec& spec);

    double next();
    void fill(std::span<double> out) {
        for (double& v : out) v = next();
    }

private:
    GeneratorFamily family_;
    std::uint64_t small_state_ = 0;
    BigInt multiplier_, increment_, modulus_, state_;
    double inv_modulus_ = 0.0;
};

enum class IngestFormat { FloatsText, U32BigEndian };

/// Parses "floats-text" or "u32-be-binary"; throws std::invalid_argument
/// otherwise.
IngestFormat parse_ingest_format(std::string_view name);

/// Reads a pre-downloaded random sample. Throws std::runtime_error naming
/// the offending line (text) or byte offset (binary), or when empty.
std::vector<double> ingest_file(const std::filesystem::path& path, IngestFormat format);

std::vector<double> parse_floats_text(std::string_view contents);
std::vector<double> parse_u32_be(std::span<const unsigned char> bytes);

/// Writes words as big-endian u32, the inverse of ingestion.
void write_u32_be(const std::filesystem::path& path, std::span<const std::uint32_t> words);

}  // namespace extrema

#endif  // EXTREMA_RNG_SOURCES_HPP
