#include "extrema/big_rational.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace extrema {

namespace {

BigInt pow10(unsigned n) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, n);
    return out;
}

// floor(log10(a/b)) for a, b > 0.
long decimal_exponent(const BigInt& a, const BigInt& b) {
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    // mpz_sizeinbase may overshoot by one, so the estimate is off by at most 2.
    auto at_least = [&](long k) {
        return k >= 0 ? a >= b * pow10(static_cast<unsigned>(k))
                      : a * pow10(static_cast<unsigned>(-k)) >= b;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;
    return e;
}

// Nearest integer to num/den, ties to even.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int c = cmp(BigInt(2 * r), den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) ++q;
    return q;
}

}  // namespace

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
    if (sgn(denominator) == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s, 10));
        return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational out;
    out.value_ = -value_;
    return out;
}

std::string BigRational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational rat_normalize(const BigInt& n, const BigInt& d) { return BigRational(n, d); }

std::string rat_to_decimal(const BigRational& r, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("rat_to_decimal: sig_digits must be >= 1");
    if (r.is_zero()) return "0";

    const BigInt a = abs(r.numerator());
    const BigInt b = r.denominator();
    const auto sig = static_cast<long>(sig_digits);
    long e = decimal_exponent(a, b);

    const long shift = sig - 1 - e;
    BigInt mantissa = shift >= 0 ? round_quotient(a * pow10(static_cast<unsigned>(shift)), b)
                                 : round_quotient(a, b * pow10(static_cast<unsigned>(-shift)));
    if (mantissa == pow10(static_cast<unsigned>(sig))) {
        mantissa /= 10;
        ++e;
    }

    std::string digits = mantissa.get_str();
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out = r.sign() < 0 ? "-" : "";
    if (e < -4 || e >= sig) {
        out += digits.substr(0, 1);
        out += '.';
        out += digits.size() > 1 ? digits.substr(1) : "0";
        out += 'E';
        out += std::to_string(e);
    } else if (e >= 0) {
        const auto int_len = static_cast<std::size_t>(e + 1);
        if (digits.size() <= int_len) {
            out += digits + std::string(int_len - digits.size(), '0');
        } else {
            out += digits.substr(0, int_len) + "." + digits.substr(int_len);
        }
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    return out;
}

double to_nearest_double(const BigRational& r) {
    const double toward_zero = r.raw().get_d();
    if (std::isinf(toward_zero)) return toward_zero;
    const double away = std::nextafter(toward_zero, r.sign() < 0 ? -HUGE_VAL : HUGE_VAL);
    if (std::isinf(away)) return toward_zero;
    const mpq_class exact = r.raw();
    const mpq_class gap_low = abs(exact - mpq_class(toward_zero));
    const mpq_class gap_high = abs(mpq_class(away) - exact);
    const int c = cmp(gap_low, gap_high);
    if (c < 0) return toward_zero;
    if (c > 0) return away;
    // Tie: pick the candidate with an even significand.
    int exp = 0;
    const double mant = std::frexp(toward_zero, &exp);
    const auto bits = static_cast<long long>(std::ldexp(std::fabs(mant), 53));
    return bits % 2 == 0 ? toward_zero : away;
}

std::string double_decimal(const BigRational& r) {
    const double value = to_nearest_double(r);
    if (value == 0.0) return "0.0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
    std::string sci(buf, res.ptr);  // e.g. "-3.6725746509274224e-25"
    std::string out;
    if (sci.front() == '-') {
        out = "-";
        sci.erase(0, 1);
    }
    const auto e_pos = sci.find('e');
    const int exponent = std::stoi(sci.substr(e_pos + 1));
    std::string digits = sci.substr(0, 1) + (e_pos > 2 ? sci.substr(2, e_pos - 2) : "");

    const double magnitude = std::fabs(value);
    if (magnitude >= 1e-3 && magnitude < 1e7) {
        if (exponent >= 0) {
            const auto int_len = static_cast<std::size_t>(exponent + 1);
            if (digits.size() < int_len) digits.append(int_len - digits.size(), '0');
            const std::string frac = digits.substr(int_len);
            out += digits.substr(0, int_len) + "." + (frac.empty() ? "0" : frac);
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
        }
        return out;
    }
    out += digits.substr(0, 1) + "." + (digits.size() > 1 ? digits.substr(1) : "0");
    out += "E" + std::to_string(exponent);
    return out;
}

BigInt round_half_even(const BigRational& r) {
    return round_quotient(r.numerator(), r.denominator());
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt pow2(unsigned n) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
    return out;
}

}  // namespace extrema
