#include "cli_commands.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "extrema/big_rational.hpp"
#include "extrema/operator_engine.hpp"
#include "extrema/perm_oracle.hpp"
#include "extrema/rng_sources.hpp"

namespace extrema::cli {

namespace {

constexpr std::size_t kChunkValues = std::size_t{1} << 20;

GeneratorSpec make_spec(const AnalyzeOptions& o) {
    const BigInt seed(o.seed, 10);
    if (*o.generator == "randu") {
        if (seed <= 0 || seed >= static_cast<unsigned long>(kRanduModulus)) {
            throw std::invalid_argument("randu seed must lie in (0, 2^31)");
        }
        return GeneratorSpec::randu(static_cast<std::uint32_t>(seed.get_ui()));
    }
    if (*o.generator == "lcg48") {
        if (seed < 0 || seed >= static_cast<unsigned long>(kLcg48Modulus)) {
            throw std::invalid_argument("lcg48 seed must lie in [0, 2^48)");
        }
        return GeneratorSpec::lcg48(seed.get_ui());
    }
    if (*o.generator == "user") {
        if (o.multiplier.empty() || o.modulus.empty()) {
            throw std::invalid_argument("user generator needs --multiplier and --modulus");
        }
        return GeneratorSpec::user_lcg(BigInt(o.multiplier, 10),
                                       BigInt(o.increment.empty() ? "0" : o.increment, 10),
                                       BigInt(o.modulus, 10), seed);
    }
    throw std::invalid_argument("unknown generator '" + *o.generator + "'");
}

DistanceHistogram collect(const AnalyzeOptions& o, std::string& description) {
    if (o.generator.has_value() == o.file.has_value()) {
        throw std::invalid_argument("exactly one of --gen or --file is required");
    }
    if (o.file) {
        if (o.format.empty()) throw std::invalid_argument("--format is required with --file");
        const auto values = ingest_file(*o.file, parse_ingest_format(o.format));
        description = "file " + *o.file + " (" + std::to_string(values.size()) + " values)";
        return analyze_chunked(values, o.kind, o.ties, kChunkValues);
    }

    if (o.target_distances == 0 && o.values < kMinGeneratedValues) {
        throw std::invalid_argument("--values must be at least " + std::to_string(kMinGeneratedValues) +
                                    " when generating");
    }
    const auto spec = make_spec(o);
    Generator gen(spec);
    DistanceAccumulator acc(o.kind, o.ties);
    if (o.target_distances > 0) {
        while (acc.histogram().total() < o.target_distances) acc.push(gen.next());
    } else {
        for (std::uint64_t i = 0; i < o.values; ++i) acc.push(gen.next());
    }
    description = *o.generator + " seed=" + o.seed + " values=" + std::to_string(acc.histogram().n_values);
    return acc.histogram();
}

}  // namespace

int cmd_table(int d_max, TableFormat format, std::ostream& out, std::ostream& err) {
    if (d_max < 2 || d_max > kMaxTableDistance) {
        err << "table: --dmax must lie in [2, " << kMaxTableDistance << "], got " << d_max << "\n";
        return kExitUsage;
    }
    const auto rows = pmf_table(d_max);
    const BigRational residual = BigRational(1) - rows.back().cumulative;
    switch (format) {
        case TableFormat::Human:
            out << "d  f_m(d)  decimal  F_m(d)  decimal\n";
            for (const auto& r : rows) {
                out << r.d << "  " << r.probability << "  " << rat_to_decimal(r.probability, kDecimalDigits)
                    << "  " << r.cumulative << "  " << rat_to_decimal(r.cumulative, kDecimalDigits) << "\n";
            }
            out << "residual  " << residual << "  " << rat_to_decimal(residual, kDecimalDigits) << "\n";
            break;
        case TableFormat::Tsv:
            out << "d\tpmf\tpmf_decimal\tcdf\tcdf_decimal\n";
            for (const auto& r : rows) {
                out << r.d << '\t' << r.probability << '\t' << rat_to_decimal(r.probability, kDecimalDigits)
                    << '\t' << r.cumulative << '\t' << rat_to_decimal(r.cumulative, kDecimalDigits) << '\n';
            }
            out << "residual\t" << residual << '\t' << rat_to_decimal(residual, kDecimalDigits) << '\n';
            break;
        case TableFormat::Exact:
            for (const auto& r : rows) out << r.d << '\t' << r.probability << '\t' << r.cumulative << '\n';
            out << "residual\t" << residual << '\n';
            break;
    }
    return kExitOk;
}

int cmd_eval(const std::string& word, std::ostream& out, std::ostream& err) {
    if (word.empty() || word.size() > kMaxEvalWord) {
        err << "eval: word length must lie in [1, " << kMaxEvalWord << "]\n";
        return kExitUsage;
    }
    try {
        const auto value = eval_word(OperatorWord::parse(word));
        out << value << "  " << rat_to_decimal(value, kDecimalDigits) << "\n";
    } catch (const std::invalid_argument& e) {
        err << "eval: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_oracle(int d_max, std::ostream& out, std::ostream& err) {
    if (d_max < 2 || d_max > kMaxOracleDistance) {
        err << "oracle: --dmax must lie in [2, " << kMaxOracleDistance << "], got " << d_max << "\n";
        return kExitUsage;
    }
    bool all_equal = true;
    for (int d = 2; d <= d_max; ++d) {
        const auto brute = oracle_pmf(d);
        const auto closed = pmf_closed_form(d);
        const bool equal = brute == closed;
        all_equal = all_equal && equal;
        out << d << "  " << brute << "  " << closed << "  " << (equal ? "EQUAL" : "MISMATCH") << "\n";
    }
    return all_equal ? kExitOk : kExitRejected;
}

void write_frequency_table(std::ostream& out, const DistanceHistogram& hist, bool tsv) {
    const auto n = BigRational(BigInt(static_cast<unsigned long>(hist.total())));
    const char* sep = tsv ? "\t" : "  ";
    out << "distance" << sep << "theoretical" << sep << "observed\n";
    for (int d = 2; d <= hist.max_distance(); ++d) {
        out << d << sep << round_half_even(n * pmf_closed_form(d)).get_str() << sep << hist.count(d) << "\n";
    }
}

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<TestReport> reports;
    SampleSummary summary;
    DistanceHistogram hist;
    std::string description;
    try {
        hist = collect(options, description);
        summary = summarize(hist);
        reports.push_back(chi_square_gof(hist, options.alpha));
        reports.push_back(ks_test(hist, options.alpha));
        reports.push_back(mean_z_test(summary, options.alpha));
    } catch (const std::exception& e) {
        err << "analyze: " << e.what() << "\n";
        return kExitUsage;
    }

    const char* kind = options.kind == ExtremumKind::Maxima ? "maxima" : "minima";
    if (options.tsv) {
        write_frequency_table(out, hist, true);
        out << "average\t" << std::setprecision(6) << summary.mean << "\n";
        out << "std_dev_of_mean\t" << std::setprecision(4) << std_error_of_mean(summary.n) << "\n";
        write_reports_tsv(out, reports);
    } else {
        out << "source: " << description << ", " << kind << ", " << summary.n << " distances\n\n";
        write_frequency_table(out, hist, false);
        out << "\naverage  " << std::setprecision(6) << summary.mean << "\n";
        out << "std dev of mean  " << std::setprecision(4) << std_error_of_mean(summary.n) << "\n\n";
        write_reports_table(out, reports);
    }
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) return kExitRejected;
    }
    return kExitOk;
}

}  // namespace extrema::cli
