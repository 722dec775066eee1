#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <unordered_set>

#include <doctest.h>

#include "extrema/rng_sources.hpp"
#include "extrema/sequence_stats.hpp"
#include "support/oracles.hpp"

using namespace extrema;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("extrema_test_" + name);
}

void write_bytes(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream(p, std::ios::binary) << bytes;
}

}  // namespace

TEST_CASE("randu_next") {
    CHECK(randu_next(1).state == 65539);
    // 65539^2 mod 2^31 evaluated with GMP.
    const BigInt expected = (BigInt(65539) * BigInt(65539)) % (BigInt(1) << 31);
    CHECK(expected == 393225);
    CHECK(randu_next(65539).state == 393225);
    CHECK(randu_next(1).value == 65539.0 / 2147483648.0);
    CHECK_THROWS_AS(randu_next(0), std::invalid_argument);
    CHECK_THROWS_AS(randu_next(0x80000000U), std::invalid_argument);

    std::uint32_t s = 12345;
    for (int i = 0; i < 100'000; ++i) {
        const auto step = randu_next(s);
        REQUIRE(step.value > 0.0);
        REQUIRE(step.value < 1.0);
        s = step.state;
    }
}

TEST_CASE("randu with an odd seed does not repeat within 10^6 steps") {
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(1'100'000);
    std::uint32_t s = 1;
    seen.insert(s);
    bool repeated = false;
    for (int i = 0; i < 1'000'000 && !repeated; ++i) {
        s = randu_next(s).state;
        repeated = !seen.insert(s).second;
    }
    CHECK_FALSE(repeated);
}

TEST_CASE("lcg48_next") {
    CHECK(lcg48_advance(0) == 11);
    const auto first = lcg48_next(0);
    CHECK(first.value == testing::bigint_lcg48_first_value(0));
    CHECK(first.state == lcg48_advance(lcg48_advance(0)));
    for (std::uint64_t seed : {1ULL, 42ULL, 0xDEADBEEFULL, (1ULL << 48) - 1}) {
        CHECK(lcg48_next(seed).value == testing::bigint_lcg48_first_value(seed));
    }

    Generator a(GeneratorSpec::lcg48(2024)), b(GeneratorSpec::lcg48(2024));
    for (int i = 0; i < 10'000; ++i) {
        const double x = a.next();
        REQUIRE(x == b.next());
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}

TEST_CASE("generator specs are validated") {
    CHECK_THROWS_AS(Generator(GeneratorSpec::randu(0)), std::invalid_argument);
    CHECK_THROWS_AS(Generator(GeneratorSpec::user_lcg(3, 1, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Generator(GeneratorSpec::user_lcg(3, 1, 10, 10)), std::invalid_argument);
    CHECK_THROWS_AS(Generator(GeneratorSpec::user_lcg(3, 1, 10, -1)), std::invalid_argument);
}

TEST_CASE("user LCG with RANDU constants reproduces RANDU") {
    Generator randu(GeneratorSpec::randu(7));
    Generator user(GeneratorSpec::user_lcg(65539, 0, BigInt(1) << 31, 7));
    for (int i = 0; i < 1000; ++i) REQUIRE(randu.next() == user.next());
}

TEST_CASE("user LCG accepts a modulus beyond 64 bits") {
    const BigInt modulus = (BigInt(1) << 89) - 1;
    Generator g(GeneratorSpec::user_lcg(BigInt("1181783497276652981", 10), 0, modulus, 123456789));
    for (int i = 0; i < 1000; ++i) {
        const double v = g.next();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("output normalization does not change extrema") {
    // Any strictly increasing map of the state gives the same pattern.
    std::vector<double> scaled, raw;
    std::uint32_t s = 99;
    for (int i = 0; i < 20'000; ++i) {
        const auto step = randu_next(s);
        s = step.state;
        scaled.push_back(step.value);
        raw.push_back(static_cast<double>(step.state));
    }
    CHECK(detect_extrema(scaled, ExtremumKind::Maxima) == detect_extrema(raw, ExtremumKind::Maxima));
}

TEST_CASE("ingest floats-text") {
    const auto p = temp_file("floats.txt");
    write_bytes(p, "0.5\n0.25\n");
    CHECK(ingest_file(p, IngestFormat::FloatsText) == std::vector<double>{0.5, 0.25});
    write_bytes(p, "0.5\r\n 0.75 \n1e-3");
    CHECK(ingest_file(p, IngestFormat::FloatsText) == std::vector<double>{0.5, 0.75, 0.001});
    write_bytes(p, "0.5\nabc\n");
    try {
        ingest_file(p, IngestFormat::FloatsText);
        FAIL("expected error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    write_bytes(p, "");
    CHECK_THROWS_AS(ingest_file(p, IngestFormat::FloatsText), std::runtime_error);
    std::filesystem::remove(p);
    CHECK_THROWS_AS(ingest_file(p, IngestFormat::FloatsText), std::runtime_error);
}

TEST_CASE("ingest u32-be-binary") {
    const auto p = temp_file("words.bin");
    write_bytes(p, std::string("\x00\x00\x00\x00", 4));
    CHECK(ingest_file(p, IngestFormat::U32BigEndian) == std::vector<double>{0.0});
    write_bytes(p, std::string("\x80\x00\x00\x00", 4));
    CHECK(ingest_file(p, IngestFormat::U32BigEndian) == std::vector<double>{0.5});
    write_bytes(p, std::string("\x80\x00\x00\x00\x01\x02", 6));
    try {
        ingest_file(p, IngestFormat::U32BigEndian);
        FAIL("expected error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
    write_bytes(p, "");
    CHECK_THROWS_AS(ingest_file(p, IngestFormat::U32BigEndian), std::runtime_error);
    std::filesystem::remove(p);
}

TEST_CASE("binary write-then-ingest is bit-exact") {
    std::mt19937 rng(77);
    std::vector<std::uint32_t> words(5000);
    for (auto& w : words) w = static_cast<std::uint32_t>(rng());
    words[0] = 0;
    words[1] = 0xFFFFFFFFU;
    const auto p = temp_file("roundtrip.bin");
    write_u32_be(p, words);
    const auto values = ingest_file(p, IngestFormat::U32BigEndian);
    REQUIRE(values.size() == words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        REQUIRE(values[i] < 1.0);
        REQUIRE(static_cast<std::uint32_t>(std::ldexp(values[i], 32)) == words[i]);
    }
    std::filesystem::remove(p);
}

TEST_CASE("ingest format names") {
    CHECK(parse_ingest_format("floats-text") == IngestFormat::FloatsText);
    CHECK(parse_ingest_format("u32-be-binary") == IngestFormat::U32BigEndian);
    CHECK_THROWS_AS(parse_ingest_format("auto"), std::invalid_argument);
}
