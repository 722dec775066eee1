#ifndef EXTREMA_RATIONAL_POLYNOMIAL_HPP
#define EXTREMA_RATIONAL_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "extrema/big_rational.hpp"

namespace extrema {

/// Univariate polynomial in t with exact rational coefficients; coefficient
/// k multiplies t^k. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coefficients);

    static RationalPolynomial constant(const BigRational& c);

    std::span<const BigRational> coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of t^k (zero beyond the degree).
    BigRational coefficient(std::size_t k) const;

    friend RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

/// The antiderivative P with P(0) = 0.
RationalPolynomial poly_antiderivative(const RationalPolynomial& p);

/// Horner evaluation.
BigRational poly_eval(const RationalPolynomial& p, const BigRational& t);

}  // namespace extrema

#endif  // EXTREMA_RATIONAL_POLYNOMIAL_HPP
