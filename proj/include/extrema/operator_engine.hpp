#ifndef EXTREMA_OPERATOR_ENGINE_HPP
#define EXTREMA_OPERATOR_ENGINE_HPP

#include <vector>

#include "extrema/big_rational.hpp"
#include "extrema/operator_word.hpp"
#include "extrema/rational_polynomial.hpp"

namespace extrema {

/// Probability that len(w)+1 i.i.d. continuous values realize w.
/// Throws std::invalid_argument for the empty word.
BigRational eval_word(const OperatorWord& w);

/// The integrand left after applying the letters of w to the constant 1,
/// right to left. Its degree equals len(w).
RationalPolynomial apply_word(const OperatorWord& w);

/// Probability that an interior element is a local maximum, computed as
/// the value of "UD".
BigRational p_max();

/// The d-1 words U D^j U^(d-j) D, j = 1..d-1. Requires d >= 2.
std::vector<OperatorWord> words_for_distance(int d);

/// PMF of the distance between consecutive maxima, summed over the
/// operator words and normalized by p_max(). Requires d >= 2.
BigRational pmf_symbolic(int d);

/// 3 * 2^d * (d-1)(d+2) / (d+3)!. Requires d >= 2.
BigRational pmf_closed_form(int d);

/// Sum of pmf_closed_form over 2..d. Requires d >= 2.
BigRational cdf(int d);

struct PmfEntry {
    int d = 0;
    BigRational probability;
    BigRational cumulative;
};

/// Rows d = 2..d_max with exact PMF and CDF.
std::vector<PmfEntry> pmf_table(int d_max);

struct MomentSummary {
    BigRational mean_partial;
    BigRational variance_partial;
    BigRational tail_mass;
    int d_max = 0;

    double std_dev() const;
};

/// Truncated moments over 2..d_max: mean, variance about the partial mean,
/// and the mass 1 - cdf(d_max) left out.
MomentSummary moments(int d_max);

}  // namespace extrema

#endif  // EXTREMA_OPERATOR_ENGINE_HPP
