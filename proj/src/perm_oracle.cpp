#include "extrema/perm_oracle.hpp"

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace extrema {

namespace {

// Depth-first walk over permutations in lexicographic order, abandoning a
// prefix as soon as its last comparison disagrees with the pattern.
std::uint64_t count_from(const std::vector<bool>& up, std::uint32_t used, unsigned last,
                         std::size_t pos, unsigned n) {
    if (pos == n) return 1;
    std::uint64_t total = 0;
    const bool ascend = up[pos - 1];
    for (unsigned v = 0; v < n; ++v) {
        if ((used >> v) & 1U) continue;
        if (ascend ? v <= last : v >= last) continue;
        total += count_from(up, used | (1U << v), v, pos + 1, n);
    }
    return total;
}

}  // namespace

BigInt count_pattern_perms(const OperatorWord& w) {
    if (w.size() > kMaxOracleWordLength) {
        throw std::invalid_argument("count_pattern_perms: word length " + std::to_string(w.size()) +
                                    " exceeds enumeration bound " +
                                    std::to_string(kMaxOracleWordLength));
    }
    const auto n = static_cast<unsigned>(w.size() + 1);
    std::vector<bool> up;
    up.reserve(w.size());
    for (Step s : w.steps()) up.push_back(s == Step::Up);

    // One task per first element; the branches are disjoint.
    std::vector<std::future<std::uint64_t>> branches;
    branches.reserve(n);
    for (unsigned first = 0; first < n; ++first) {
        branches.push_back(std::async(std::launch::async, [&up, first, n] {
            return count_from(up, 1U << first, first, 1, n);
        }));
    }
    std::uint64_t total = 0;
    for (auto& b : branches) total += b.get();
    return BigInt(static_cast<unsigned long>(total));
}

BigRational oracle_pmf(int d) {
    if (d < 2 || d > kMaxOracleDistance) {
        throw std::invalid_argument("oracle_pmf: distance must lie in [2, " +
                                    std::to_string(kMaxOracleDistance) + "], got " +
                                    std::to_string(d));
    }
    // Words U D^j U^(d-j) D, built here rather than borrowed from the engine.
    BigInt hits = 0;
    for (int j = 1; j <= d - 1; ++j) {
        std::string text = "U" + std::string(static_cast<std::size_t>(j), 'D') +
                           std::string(static_cast<std::size_t>(d - j), 'U') + "D";
        hits += count_pattern_perms(OperatorWord::parse(text));
    }
    BigInt orderings;
    mpz_fac_ui(orderings.get_mpz_t(), static_cast<unsigned long>(d + 3));
    return BigRational(hits, orderings) / BigRational(BigInt(1), BigInt(3));
}

BigRational oracle_pmax() {
    return BigRational(count_pattern_perms(OperatorWord::parse("UD")), BigInt(6));
}

}  // namespace extrema
