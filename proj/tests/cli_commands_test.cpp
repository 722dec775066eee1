#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "cli_commands.hpp"
#include "support/golden.hpp"

using namespace extrema;
using namespace extrema::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run capture(F&& f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_floats(const std::string& name, const std::vector<double>& values) {
    const auto p = std::filesystem::temp_directory_path() / ("extrema_cli_" + name);
    std::ofstream f(p);
    f.precision(17);
    for (double v : values) f << v << "\n";
    return p;
}

}  // namespace

TEST_CASE("table --dmax 2") {
    const auto r = capture([](auto& o, auto& e) { return cmd_table(2, TableFormat::Human, o, e); });
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\n2  2/5  0.4  2/5  0.4\n") != std::string::npos);
}

TEST_CASE("table --dmax 29 --format exact reproduces both tables") {
    const auto r = capture([](auto& o, auto& e) { return cmd_table(29, TableFormat::Exact, o, e); });
    REQUIRE(r.code == kExitOk);
    const auto pmf = testing::load_tsv("table1_pmf.tsv");
    const auto cdf = testing::load_tsv("table2_cdf.tsv");
    std::istringstream lines(r.out);
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line) && line.rfind("residual", 0) != 0) {
        REQUIRE(i < pmf.size());
        CHECK(line == pmf[i][0] + "\t" + pmf[i][1] + "\t" + cdf[i][1]);
        ++i;
    }
    CHECK(i == 28);
    CHECK(line == "residual\t1/2722885427931256697484375");
}

TEST_CASE("table tsv layout") {
    const auto r = capture([](auto& o, auto& e) { return cmd_table(3, TableFormat::Tsv, o, e); });
    CHECK(r.out == "d\tpmf\tpmf_decimal\tcdf\tcdf_decimal\n2\t2/5\t0.4\t2/5\t0.4\n"
                   "3\t1/3\t0.33333333333333333\t11/15\t0.73333333333333333\n"
                   "residual\t4/15\t0.26666666666666667\n");
}

TEST_CASE("table range errors") {
    CHECK(capture([](auto& o, auto& e) { return cmd_table(1, TableFormat::Human, o, e); }).code == kExitUsage);
    CHECK(capture([](auto& o, auto& e) { return cmd_table(201, TableFormat::Human, o, e); }).code == kExitUsage);
}

TEST_CASE("eval") {
    auto r = capture([](auto& o, auto& e) { return cmd_eval("UD", o, e); });
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("1/3  ", 0) == 0);
    r = capture([](auto& o, auto& e) { return cmd_eval("UDUD", o, e); });
    CHECK(r.out.rfind("2/15  ", 0) == 0);
    CHECK(capture([](auto& o, auto& e) { return cmd_eval("X", o, e); }).code == kExitUsage);
    CHECK(capture([](auto& o, auto& e) { return cmd_eval(std::string(65, 'U'), o, e); }).code == kExitUsage);
    CHECK(capture([](auto& o, auto& e) { return cmd_eval(std::string(64, 'U'), o, e); }).code == kExitOk);
}

TEST_CASE("oracle") {
    auto r = capture([](auto& o, auto& e) { return cmd_oracle(2, o, e); });
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2  2/5  2/5  EQUAL\n");
    r = capture([](auto& o, auto& e) { return cmd_oracle(7, o, e); });
    CHECK(r.code == kExitOk);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(capture([](auto& o, auto& e) { return cmd_oracle(9, o, e); }).code == kExitUsage);
}

TEST_CASE("analyze rejects undersized generated samples and bad sources") {
    AnalyzeOptions o;
    o.generator = "lcg48";
    o.values = 100;
    CHECK(capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); }).code == kExitUsage);

    AnalyzeOptions none;
    CHECK(capture([&](auto& out, auto& err) { return cmd_analyze(none, out, err); }).code == kExitUsage);

    AnalyzeOptions missing;
    missing.file = "/nonexistent/extrema.txt";
    missing.format = "floats-text";
    const auto r = capture([&](auto& out, auto& err) { return cmd_analyze(missing, out, err); });
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("analyze an ingested file") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u;
    std::vector<double> values(200'000);
    for (auto& v : values) v = u(rng);
    const auto path = write_floats("uniform.txt", values);

    AnalyzeOptions o;
    o.file = path.string();
    o.format = "floats-text";
    o.tsv = true;
    const auto r = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("distance\ttheoretical\tobserved\n2\t", 0) == 0);
    CHECK(r.out.find("\nchi-square\t") != std::string::npos);
    CHECK(r.out.find("\nkolmogorov-smirnov\t") != std::string::npos);
    CHECK(r.out.find("\nmean-z\t") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("analyze exits 2 when the stream violates the law") {
    // Peaks alternate at distances 2 and 3: mean 2.5, no longer tails.
    std::vector<double> zigzag;
    for (int i = 0; i < 4000; ++i) {
        const int d = i % 2 == 0 ? 2 : 3;
        zigzag.push_back(0.9);
        for (int k = 1; k < d; ++k) zigzag.push_back(0.1 * k);
    }
    zigzag.push_back(0.9);
    const auto path = write_floats("zigzag.txt", zigzag);
    AnalyzeOptions o;
    o.file = path.string();
    o.format = "floats-text";
    const auto r = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    CHECK(r.code == kExitRejected);
    std::filesystem::remove(path);
}

TEST_CASE("analyze output is deterministic for a seed") {
    AnalyzeOptions o;
    o.generator = "lcg48";
    o.seed = "12345";
    o.values = 50'000;
    o.tsv = true;
    const auto a = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    const auto b = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    CHECK(a.out == b.out);
    o.seed = "12346";
    const auto c = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    CHECK(a.out != c.out);
}

TEST_CASE("analyze can stop at a distance count") {
    AnalyzeOptions o;
    o.generator = "randu";
    o.seed = "1";
    o.target_distances = 5000;
    o.kind = ExtremumKind::Minima;
    const auto r = capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); });
    CHECK(r.out.find("minima, 5000 distances") != std::string::npos);
}

TEST_CASE("user generator flags") {
    AnalyzeOptions o;
    o.generator = "user";
    o.multiplier = "65539";
    o.modulus = "2147483648";
    o.seed = "1";
    o.values = 30'000;
    CHECK(capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); }).code != kExitUsage);
    o.modulus.clear();
    CHECK(capture([&](auto& out, auto& err) { return cmd_analyze(o, out, err); }).code == kExitUsage);
}
