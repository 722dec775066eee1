#include "extrema/rational_polynomial.hpp"

#include <algorithm>
#include <utility>

namespace extrema {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
    return RationalPolynomial(std::vector<BigRational>{c});
}

BigRational RationalPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational{};
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    std::vector<BigRational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs.coefficient(k) + rhs.coefficient(k);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    std::vector<BigRational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs.coefficient(k) - rhs.coefficient(k);
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (k > 0) out += "*t^" + std::to_string(k);
    }
    return out;
}

RationalPolynomial poly_antiderivative(const RationalPolynomial& p) {
    const auto coeffs = p.coefficients();
    if (coeffs.empty()) return {};
    std::vector<BigRational> out;
    out.reserve(coeffs.size() + 1);
    out.emplace_back();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out.push_back(coeffs[k] / BigRational(static_cast<long>(k + 1)));
    }
    return RationalPolynomial(std::move(out));
}

BigRational poly_eval(const RationalPolynomial& p, const BigRational& t) {
    BigRational acc;
    const auto coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

}  // namespace extrema
