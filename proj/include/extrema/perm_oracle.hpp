#ifndef EXTREMA_PERM_ORACLE_HPP
#define EXTREMA_PERM_ORACLE_HPP

#include <cstddef>

#include "extrema/big_rational.hpp"
#include "extrema/operator_word.hpp"

namespace extrema {

// Brute-force ground truth for the operator engine. Nothing in here may
// depend on the engine's integration path.

inline constexpr std::size_t kMaxOracleWordLength = 12;
inline constexpr int kMaxOracleDistance = 8;

/// Number of permutations of len(w)+1 distinct values whose consecutive
/// comparisons realize w. Throws std::invalid_argument when len(w) exceeds
/// kMaxOracleWordLength.
BigInt count_pattern_perms(const OperatorWord& w);

/// PMF at distance d by permutation counting, 2 <= d <= kMaxOracleDistance.
BigRational oracle_pmf(int d);

/// count_pattern_perms("UD") / 3!.
BigRational oracle_pmax();

}  // namespace extrema

#endif  // EXTREMA_PERM_ORACLE_HPP
