#ifndef EXTREMA_BIG_RATIONAL_HPP
#define EXTREMA_BIG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace extrema {

using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: the denominator is
/// positive and shares no factor with the numerator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& value) : value_(value) {}

    /// Reduces n/d. Throws std::domain_error when d is zero.
    BigRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "n/d" or "n". Throws std::invalid_argument on malformed input.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    /// Throws std::domain_error on division by zero.
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Nearest double (truncating conversion of the exact value by GMP).
    double to_double() const { return value_.get_d(); }

    /// Machine-readable form: always "num/den", including integers ("3/1").
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Canonical rational n/d. Throws std::domain_error when d == 0.
BigRational rat_normalize(const BigInt& n, const BigInt& d);

/// Round-half-even decimal rendering with `sig_digits` significant digits.
/// Trailing zeros are dropped; scientific notation ("5.3E-24") is used when
/// the decimal exponent is below -4 or at least `sig_digits`.
std::string rat_to_decimal(const BigRational& r, int sig_digits);

/// Nearest double, ties to even (GMP's own conversion truncates).
double to_nearest_double(const BigRational& r);

/// Shortest round-trip digits of the nearest double, in the layout Java
/// prints doubles: plain for magnitudes in [1e-3, 1e7), otherwise
/// "d.dddE-n". Always keeps one fractional digit ("1.0", "5.0E-24").
std::string double_decimal(const BigRational& r);

/// Nearest integer, ties to even.
BigInt round_half_even(const BigRational& r);

BigInt factorial(unsigned n);
BigInt pow2(unsigned n);

}  // namespace extrema

#endif  // EXTREMA_BIG_RATIONAL_HPP
