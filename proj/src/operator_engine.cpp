#include "extrema/operator_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extrema {

namespace {

void require_distance(int d, const char* what) {
    if (d < 2) {
        throw std::invalid_argument(std::string(what) + ": distance must be >= 2, got " +
                                    std::to_string(d));
    }
}

}  // namespace

RationalPolynomial apply_word(const OperatorWord& w) {
    // p(t) is the probability that the values after the current one follow
    // the remaining suffix, given the current value maps to t under its CDF.
    auto p = RationalPolynomial::constant(1);
    const auto& steps = w.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        auto integral = poly_antiderivative(p);
        if (*it == Step::Down) {
            p = std::move(integral);  // next value lies in [0, t]
        } else {
            p = RationalPolynomial::constant(poly_eval(integral, 1)) - integral;  // [t, 1]
        }
    }
    return p;
}

BigRational eval_word(const OperatorWord& w) {
    if (w.empty()) throw std::invalid_argument("eval_word: empty operator word");
    return poly_eval(poly_antiderivative(apply_word(w)), 1);
}

BigRational p_max() {
    static const BigRational value = [] {
        auto v = eval_word(OperatorWord({Step::Up, Step::Down}));
        if (v != BigRational(BigInt(1), BigInt(3))) {
            throw std::logic_error("operator engine self-check failed: <UD> = " + v.to_string());
        }
        return v;
    }();
    return value;
}

std::vector<OperatorWord> words_for_distance(int d) {
    require_distance(d, "words_for_distance");
    std::vector<OperatorWord> words;
    words.reserve(static_cast<std::size_t>(d - 1));
    for (int j = 1; j <= d - 1; ++j) {
        std::vector<Step> steps;
        steps.reserve(static_cast<std::size_t>(d + 2));
        steps.push_back(Step::Up);
        steps.insert(steps.end(), static_cast<std::size_t>(j), Step::Down);
        steps.insert(steps.end(), static_cast<std::size_t>(d - j), Step::Up);
        steps.push_back(Step::Down);
        words.emplace_back(std::move(steps));
    }
    return words;
}

BigRational pmf_symbolic(int d) {
    require_distance(d, "pmf_symbolic");
    BigRational sum;
    for (const auto& w : words_for_distance(d)) sum += eval_word(w);
    return sum / p_max();
}

BigRational pmf_closed_form(int d) {
    require_distance(d, "pmf_closed_form");
    const auto ud = static_cast<unsigned>(d);
    BigInt num = 3 * pow2(ud) * BigInt(d - 1) * BigInt(d + 2);
    return BigRational(num, factorial(ud + 3));
}

BigRational cdf(int d) {
    require_distance(d, "cdf");
    BigRational sum;
    for (int k = 2; k <= d; ++k) sum += pmf_closed_form(k);
    return sum;
}

std::vector<PmfEntry> pmf_table(int d_max) {
    require_distance(d_max, "pmf_table");
    std::vector<PmfEntry> rows;
    BigRational cumulative;
    for (int d = 2; d <= d_max; ++d) {
        auto p = pmf_closed_form(d);
        cumulative += p;
        rows.push_back({d, std::move(p), cumulative});
    }
    return rows;
}

double MomentSummary::std_dev() const { return std::sqrt(variance_partial.to_double()); }

MomentSummary moments(int d_max) {
    require_distance(d_max, "moments");
    BigRational first, second, mass;
    for (int d = 2; d <= d_max; ++d) {
        const auto p = pmf_closed_form(d);
        const BigRational bd(static_cast<long>(d));
        first += bd * p;
        second += bd * bd * p;
        mass += p;
    }
    return {first, second - first * first, BigRational(1) - mass, d_max};
}

}  // namespace extrema
