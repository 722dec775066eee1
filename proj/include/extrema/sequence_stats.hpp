#ifndef EXTREMA_SEQUENCE_STATS_HPP
#define EXTREMA_SEQUENCE_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace extrema {

enum class ExtremumKind { Maxima, Minima };
enum class TiePolicy { Error, Skip };

/// Raised under TiePolicy::Error when two neighbouring values compare equal.
class TieError : public std::runtime_error {
public:
    TieError(std::size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}
    /// 1-based position of the candidate extremum whose triple is tied.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Single-pass extremum detector over a sliding window of three values.
/// Positions are 1-based; the first and last values are never extrema.
class ExtremaDetector {
public:
    explicit ExtremaDetector(ExtremumKind kind = ExtremumKind::Maxima,
                             TiePolicy ties = TiePolicy::Error)
        : kind_(kind), ties_(ties) {}

    /// Feeds the next value; returns the position of the previous value if
    /// it turned out to be an extremum.
    std::optional<std::size_t> push(double value);

    std::size_t values_seen() const { return seen_; }

private:
    ExtremumKind kind_;
    TiePolicy ties_;
    double prev2_ = 0.0;
    double prev1_ = 0.0;
    std::size_t seen_ = 0;
};

std::vector<std::size_t> detect_extrema(std::span<const double> stream, ExtremumKind kind,
                                        TiePolicy ties = TiePolicy::Error);

/// Consecutive differences. Throws std::invalid_argument unless strictly
/// increasing.
std::vector<int> distances(std::span<const std::size_t> positions);

/// Counts of distances between consecutive extrema of one stream.
struct DistanceHistogram {
    std::map<int, std::uint64_t> counts;
    std::uint64_t n_extrema = 0;
    std::uint64_t n_values = 0;

    std::uint64_t total() const;
    std::uint64_t count(int d) const;
    /// 0 when empty.
    int max_distance() const;

    /// Appends distances that continue the chain of extrema already
    /// counted. Throws std::invalid_argument for any distance below 2.
    void add(std::span<const int> ds);

    friend bool operator==(const DistanceHistogram&, const DistanceHistogram&) = default;
};

DistanceHistogram accumulate(DistanceHistogram hist, std::span<const int> ds);

/// Histogram of the concatenated distance lists.
DistanceHistogram merge(const DistanceHistogram& a, const DistanceHistogram& b);

struct SampleSummary {
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation, n - 1 denominator
    std::uint64_t n = 0;
};

/// Throws std::invalid_argument for an empty histogram.
SampleSummary summarize(const DistanceHistogram& hist);

/// Streams values straight into a histogram; memory is proportional to the
/// number of distinct distances.
class DistanceAccumulator {
public:
    explicit DistanceAccumulator(ExtremumKind kind = ExtremumKind::Maxima,
                                 TiePolicy ties = TiePolicy::Error)
        : detector_(kind, ties) {}

    void push(double value);
    void push(std::span<const double> values) {
        for (double v : values) push(v);
    }

    const DistanceHistogram& histogram() const { return hist_; }
    std::optional<std::size_t> first_extremum() const { return first_; }
    std::optional<std::size_t> last_extremum() const { return last_; }

private:
    ExtremaDetector detector_;
    DistanceHistogram hist_;
    std::optional<std::size_t> first_;
    std::optional<std::size_t> last_;
};

/// Chunked analysis of an in-memory stream: chunks are scanned in parallel
/// with one value of overlap on each side and stitched in order, so the
/// result is independent of `chunk_size`.
DistanceHistogram analyze_chunked(std::span<const double> stream, ExtremumKind kind,
                                  TiePolicy ties, std::size_t chunk_size);

}  // namespace extrema

#endif  // EXTREMA_SEQUENCE_STATS_HPP
