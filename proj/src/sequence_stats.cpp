#include "extrema/sequence_stats.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>
#include <utility>

namespace extrema {

std::optional<std::size_t> ExtremaDetector::push(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("non-finite value at position " + std::to_string(seen_ + 1));
    }
    std::optional<std::size_t> found;
    if (seen_ >= 2) {
        const std::size_t middle = seen_;  // 1-based position of prev1_
        const bool tied = prev2_ == prev1_ || prev1_ == value;
        if (tied) {
            if (ties_ == TiePolicy::Error) {
                throw TieError(middle, "tied values around position " + std::to_string(middle));
            }
        } else {
            const bool hit = kind_ == ExtremumKind::Maxima ? (prev2_ < prev1_ && prev1_ > value)
                                                           : (prev2_ > prev1_ && prev1_ < value);
            if (hit) found = middle;
        }
    }
    prev2_ = prev1_;
    prev1_ = value;
    ++seen_;
    return found;
}

std::vector<std::size_t> detect_extrema(std::span<const double> stream, ExtremumKind kind,
                                        TiePolicy ties) {
    ExtremaDetector detector(kind, ties);
    std::vector<std::size_t> positions;
    for (double v : stream) {
        if (auto p = detector.push(v)) positions.push_back(*p);
    }
    return positions;
}

std::vector<int> distances(std::span<const std::size_t> positions) {
    std::vector<int> out;
    if (positions.size() < 2) return out;
    out.reserve(positions.size() - 1);
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("distances: positions not strictly increasing at index " +
                                        std::to_string(i));
        }
        out.push_back(static_cast<int>(positions[i] - positions[i - 1]));
    }
    return out;
}

std::uint64_t DistanceHistogram::total() const {
    std::uint64_t n = 0;
    for (const auto& [d, c] : counts) n += c;
    return n;
}

std::uint64_t DistanceHistogram::count(int d) const {
    const auto it = counts.find(d);
    return it == counts.end() ? 0 : it->second;
}

int DistanceHistogram::max_distance() const { return counts.empty() ? 0 : counts.rbegin()->first; }

void DistanceHistogram::add(std::span<const int> ds) {
    for (int d : ds) {
        if (d < 2) {
            throw std::invalid_argument("distance " + std::to_string(d) +
                                        " below 2 cannot separate two strict extrema");
        }
    }
    if (ds.empty()) return;
    for (int d : ds) ++counts[d];
    n_extrema = std::max<std::uint64_t>(n_extrema, 1) + ds.size();
}

DistanceHistogram accumulate(DistanceHistogram hist, std::span<const int> ds) {
    hist.add(ds);
    return hist;
}

DistanceHistogram merge(const DistanceHistogram& a, const DistanceHistogram& b) {
    DistanceHistogram out = a;
    for (const auto& [d, c] : b.counts) out.counts[d] += c;
    out.n_values = a.n_values + b.n_values;
    const auto total = out.total();
    out.n_extrema = total > 0 ? total + 1 : std::min<std::uint64_t>(a.n_extrema + b.n_extrema, 1);
    return out;
}

SampleSummary summarize(const DistanceHistogram& hist) {
    const auto n = hist.total();
    if (n == 0) throw std::invalid_argument("summarize: empty histogram");
    double sum = 0.0;
    for (const auto& [d, c] : hist.counts) sum += static_cast<double>(d) * static_cast<double>(c);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& [d, c] : hist.counts) {
        const double dev = static_cast<double>(d) - mean;
        ss += dev * dev * static_cast<double>(c);
    }
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    return {mean, sd, n};
}

void DistanceAccumulator::push(double value) {
    const auto pos = detector_.push(value);
    ++hist_.n_values;
    if (!pos) return;
    if (last_) {
        const int d = static_cast<int>(*pos - *last_);
        ++hist_.counts[d];
    } else {
        first_ = pos;
    }
    ++hist_.n_extrema;
    last_ = pos;
}

namespace {

struct ChunkResult {
    DistanceHistogram hist;
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
};

ChunkResult scan_chunk(std::span<const double> stream, std::size_t begin, std::size_t end,
                       ExtremumKind kind, TiePolicy ties) {
    ChunkResult out;
    const std::size_t lo = begin == 0 ? 0 : begin - 1;
    const std::size_t hi = std::min(end + 1, stream.size());
    ExtremaDetector detector(kind, ties);
    for (std::size_t i = lo; i < hi; ++i) {
        const auto local = detector.push(stream[i]);
        if (!local) continue;
        const std::size_t pos = lo + *local;  // back to global 1-based
        if (pos - 1 < begin || pos - 1 >= end) continue;
        if (out.last) ++out.hist.counts[static_cast<int>(pos - *out.last)];
        else out.first = pos;
        ++out.hist.n_extrema;
        out.last = pos;
    }
    out.hist.n_values = end - begin;
    return out;
}

}  // namespace

DistanceHistogram analyze_chunked(std::span<const double> stream, ExtremumKind kind,
                                  TiePolicy ties, std::size_t chunk_size) {
    if (chunk_size == 0) throw std::invalid_argument("analyze_chunked: chunk_size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> bounds;
    for (std::size_t begin = 0; begin < stream.size(); begin += chunk_size) {
        bounds.emplace_back(begin, std::min(begin + chunk_size, stream.size()));
    }
    std::vector<ChunkResult> parts(bounds.size());
    const std::size_t workers =
        std::min<std::size_t>(bounds.size(), std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < bounds.size(); i += workers) {
                parts[i] = scan_chunk(stream, bounds[i].first, bounds[i].second, kind, ties);
            }
        }));
    }
    for (auto& j : jobs) j.get();

    DistanceHistogram hist;
    std::optional<std::size_t> last;
    for (const auto& part : parts) {
        for (const auto& [d, c] : part.hist.counts) hist.counts[d] += c;
        hist.n_values += part.hist.n_values;
        hist.n_extrema += part.hist.n_extrema;
        if (part.first) {
            if (last) ++hist.counts[static_cast<int>(*part.first - *last)];
            last = part.last;
        }
    }
    return hist;
}

}  // namespace extrema
