#include "extrema/rng_sources.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace extrema {

RanduStep randu_next(std::uint32_t state) {
    if (state == 0 || state >= kRanduModulus) {
        throw std::invalid_argument("randu: state must lie in (0, 2^31), got " + std::to_string(state));
    }
    const auto next = static_cast<std::uint32_t>((kRanduMultiplier * state) % kRanduModulus);
    return {next, static_cast<double>(next) / static_cast<double>(kRanduModulus)};
}

std::uint64_t lcg48_advance(std::uint64_t state) {
    return (kLcg48Multiplier * state + kLcg48Increment) & (kLcg48Modulus - 1);
}

Lcg48Step lcg48_next(std::uint64_t state) {
    const std::uint64_t first = lcg48_advance(state);
    const std::uint64_t second = lcg48_advance(first);
    const std::uint64_t bits = ((first >> 22) << 27) + (second >> 21);
    return {second, std::ldexp(static_cast<double>(bits), -53)};
}

GeneratorSpec GeneratorSpec::randu(std::uint32_t seed) {
    return {GeneratorFamily::Randu, BigInt(static_cast<unsigned long>(kRanduMultiplier)), BigInt(0),
            BigInt(static_cast<unsigned long>(kRanduModulus)), BigInt(seed)};
}

GeneratorSpec GeneratorSpec::lcg48(std::uint64_t seed) {
    return {GeneratorFamily::Lcg48, BigInt(static_cast<unsigned long>(kLcg48Multiplier)),
            BigInt(static_cast<unsigned long>(kLcg48Increment)),
            BigInt(static_cast<unsigned long>(kLcg48Modulus)), BigInt(static_cast<unsigned long>(seed))};
}

GeneratorSpec GeneratorSpec::user_lcg(BigInt multiplier, BigInt increment, BigInt modulus, BigInt seed) {
    return {GeneratorFamily::UserLcg, std::move(multiplier), std::move(increment), std::move(modulus),
            std::move(seed)};
}

void GeneratorSpec::validate() const {
    if (modulus < 2) throw std::invalid_argument("generator: modulus must be >= 2");
    if (seed < 0 || seed >= modulus) {
        throw std::invalid_argument("generator: seed " + seed.get_str() + " outside [0, " +
                                    modulus.get_str() + ")");
    }
    if (family == GeneratorFamily::Randu && seed == 0) {
        throw std::invalid_argument("generator: RANDU seed 0 is a fixed point");
    }
}

Generator::Generator(const GeneratorSpec& spec) : family_(spec.family) {
    spec.validate();
    switch (family_) {
        case GeneratorFamily::Randu:
        case GeneratorFamily::Lcg48: small_state_ = spec.seed.get_ui(); break;
        case GeneratorFamily::UserLcg:
            multiplier_ = spec.multiplier;
            increment_ = spec.increment;
            modulus_ = spec.modulus;
            state_ = spec.seed;
            inv_modulus_ = 1.0 / modulus_.get_d();
            break;
    }
}

double Generator::next() {
    switch (family_) {
        case GeneratorFamily::Randu: {
            const auto step = randu_next(static_cast<std::uint32_t>(small_state_));
            small_state_ = step.state;
            return step.value;
        }
        case GeneratorFamily::Lcg48: {
            const auto step = lcg48_next(small_state_);
            small_state_ = step.state;
            return step.value;
        }
        case GeneratorFamily::UserLcg:
            state_ = multiplier_ * state_ + increment_;
            mpz_fdiv_r(state_.get_mpz_t(), state_.get_mpz_t(), modulus_.get_mpz_t());
            return state_.get_d() * inv_modulus_;
    }
    return 0.0;
}

IngestFormat parse_ingest_format(std::string_view name) {
    if (name == "floats-text") return IngestFormat::FloatsText;
    if (name == "u32-be-binary") return IngestFormat::U32BigEndian;
    throw std::invalid_argument("unknown input format '" + std::string(name) +
                                "' (expected floats-text or u32-be-binary)");
}

std::vector<double> parse_floats_text(std::string_view contents) {
    std::vector<double> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < contents.size()) {
        ++line_no;
        auto eol = contents.find('\n', pos);
        if (eol == std::string_view::npos) eol = contents.size();
        std::string_view line = contents.substr(pos, eol - pos);
        pos = eol + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);

        double value = 0.0;
        const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (line.empty() || ec != std::errc{} || end != line.data() + line.size() ||
            !std::isfinite(value)) {
            throw std::runtime_error("floats-text: malformed value on line " + std::to_string(line_no) +
                                     ": '" + std::string(line) + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) throw std::runtime_error("floats-text: input is empty");
    return out;
}

std::vector<double> parse_u32_be(std::span<const unsigned char> bytes) {
    if (bytes.empty()) throw std::runtime_error("u32-be-binary: input is empty");
    if (bytes.size() % 4 != 0) {
        throw std::runtime_error("u32-be-binary: truncated word at byte offset " +
                                 std::to_string(bytes.size() - bytes.size() % 4));
    }
    std::vector<double> out;
    out.reserve(bytes.size() / 4);
    for (std::size_t i = 0; i < bytes.size(); i += 4) {
        const std::uint32_t word = (std::uint32_t{bytes[i]} << 24) | (std::uint32_t{bytes[i + 1]} << 16) |
                                   (std::uint32_t{bytes[i + 2]} << 8) | std::uint32_t{bytes[i + 3]};
        out.push_back(std::ldexp(static_cast<double>(word), -32));
    }
    return out;
}

std::vector<double> ingest_file(const std::filesystem::path& path, IngestFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (format == IngestFormat::FloatsText) return parse_floats_text(contents);
    const auto* data = reinterpret_cast<const unsigned char*>(contents.data());
    return parse_u32_be({data, contents.size()});
}

void write_u32_be(const std::filesystem::path& path, std::span<const std::uint32_t> words) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    for (std::uint32_t w : words) {
        const char bytes[4] = {static_cast<char>(w >> 24), static_cast<char>(w >> 16),
                               static_cast<char>(w >> 8), static_cast<char>(w)};
        out.write(bytes, 4);
    }
}

}  // namespace extrema
