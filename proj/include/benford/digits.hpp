#ifndef BENFORD_DIGITS_HPP
#define BENFORD_DIGITS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace benford::digits {

using DigitString = std::vector<int>;

/// A leading-digit string d in base k; never starts with 0.
class DigitQuery {
public:
    DigitQuery(int base, DigitString digits) : base_(base), digits_(std::move(digits))
    {
        detail::require(base_ >= 2, "base must be at least 2");
        detail::require(!digits_.empty(), "digit string must be nonempty");
        detail::require(digits_.front() != 0, "digit string must not start with 0");
        value_ = 0;
        for (int d : digits_) {
            detail::require(d >= 0 && d < base_, "digit out of range for base");
            value_ = value_ * base_ + d;
        }
    }

    // Parses "101" style strings; digits beyond 9 use letters a-z.
    static DigitQuery parse(int base, std::string_view text)
    {
        DigitString ds;
        for (char c : text) {
            int d = -1;
            if (c >= '0' && c <= '9') {
                d = c - '0';
            } else if (c >= 'a' && c <= 'z') {
                d = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'Z') {
                d = c - 'A' + 10;
            }
            detail::require(d >= 0, "invalid digit character");
            ds.push_back(d);
        }
        return {base, std::move(ds)};
    }

    // The len-digit base-k representation of value.
    static DigitQuery from_value(int base, const BigInt& value)
    {
        detail::require(value > 0, "digit string value must be positive");
        DigitString ds;
        BigInt v = value;
        while (v > 0) {
            ds.push_back(static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(base))));
            v /= base;
        }
        std::reverse(ds.begin(), ds.end());
        return {base, std::move(ds)};
    }

    int base() const noexcept { return base_; }
    const DigitString& digits() const noexcept { return digits_; }
    std::size_t length() const noexcept { return digits_.size(); }
    const BigInt& value() const noexcept { return value_; }

    std::string to_string() const
    {
        std::string s;
        for (int d : digits_) {
            s.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10));
        }
        return s;
    }

    friend bool operator==(const DigitQuery& a, const DigitQuery& b)
    {
        return a.base_ == b.base_ && a.digits_ == b.digits_;
    }

private:
    int base_;
    DigitString digits_;
    BigInt value_;
};

/// Every len-digit string in base k, in increasing numeric order.
inline std::vector<DigitQuery> all_strings(int base, std::size_t len)
{
    detail::require(base >= 2, "base must be at least 2");
    detail::require(len >= 1, "string length must be positive");
    const BigInt lo = detail::ipow(base, static_cast<unsigned long>(len - 1));
    const BigInt hi = lo * base;
    std::vector<DigitQuery> out;
    for (BigInt v = lo; v < hi; ++v) {
        out.push_back(DigitQuery::from_value(base, v));
    }
    return out;
}

/// Number of base-k digits of |a|, exact.
inline std::size_t digit_count(const BigInt& a, int base)
{
    detail::require(sgn(a) != 0, "zero has no leading digits");
    const BigInt m = abs(a);
    // mpz_sizeinbase is exact for powers of two and at most one too large otherwise.
    std::size_t n = mpz_sizeinbase(m.get_mpz_t(), base);
    if (n > 1 && m < detail::ipow(base, static_cast<unsigned long>(n - 1))) {
        --n;
    }
    return n;
}

/// The first len base-k digits of |a|, or nullopt if |a| is shorter than len.
inline std::optional<DigitString> leading_string(const BigInt& a, int base, std::size_t len)
{
    detail::require(base >= 2, "base must be at least 2");
    const std::size_t n = digit_count(a, base);
    if (n < len) {
        return std::nullopt;
    }
    BigInt top = abs(a) / detail::ipow(base, static_cast<unsigned long>(n - len));
    DigitString ds(len);
    for (std::size_t i = len; i-- > 0;) {
        ds[i] = static_cast<int>(mpz_fdiv_q_ui(top.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(base)));
    }
    return ds;
}

/// Exact test value_d * k^m <= |a| < (value_d + 1) * k^m.
inline bool matches(const BigInt& a, const DigitQuery& q)
{
    const std::size_t n = digit_count(a, q.base());
    if (n < q.length()) {
        return false;
    }
    const BigInt scale = detail::ipow(q.base(), static_cast<unsigned long>(n - q.length()));
    const BigInt m = abs(a);
    return q.value() * scale <= m && m < (q.value() + 1) * scale;
}

struct LogFrac {
    Real value;              // frac(log_k |a|) in [0, 1)
    double abs_error_bound;  // certified, always <= 1e-18
};

namespace detail {

constexpr unsigned mantissa_bits = 192;

// ln |a| from the top 192 bits of |a| and its binary exponent.
// Truncation contributes a relative error below 2^-191.
inline Real log_abs(const BigInt& a)
{
    benford::detail::require(sgn(a) != 0, "zero has no logarithm");
    const BigInt m = abs(a);
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    if (bits <= mantissa_bits) {
        return log(Real(m.get_mpz_t()));
    }
    const std::size_t e = bits - mantissa_bits;
    BigInt top;
    mpz_fdiv_q_2exp(top.get_mpz_t(), m.get_mpz_t(), e);
    return log(Real(top.get_mpz_t())) + Real(static_cast<unsigned long>(e)) * log(Real(2));
}

inline bool is_power_of(const BigInt& m, int base, long exponent)
{
    return exponent >= 0 && m == benford::detail::ipow(base, static_cast<unsigned long>(exponent));
}

}  // namespace detail

/// Natural logarithm of |a| to roughly 58 significant digits.
inline Real log_natural(const BigInt& a) { return detail::log_abs(a); }

/// log_k |a| as an extended-precision real.
inline Real log_base(const BigInt& a, int base)
{
    benford::detail::require(base >= 2, "base must be at least 2");
    return detail::log_abs(a) / log(Real(base));
}

inline Real frac(const Real& x)
{
    Real f = x - floor(x);
    if (f >= 1) {
        f = 0;
    }
    return f;
}

/// frac(log_k |a|) with a certified absolute error bound.
inline LogFrac log_frac(const BigInt& a, int base)
{
    benford::detail::require(sgn(a) != 0, "zero has no leading digits");
    const Real lg = log_base(a, base);
    Real f = frac(lg);
    // Exact powers of k must land on 0, not just below 1.
    static const Real near("1e-40");
    if (f < near || f > 1 - near) {
        const Real r = round(lg);
        if (detail::is_power_of(abs(a), base, r.convert_to<long>())) {
            f = 0;
        }
    }
    // mantissa truncation (2^-191 / ln 2) plus working-precision rounding of |log|
    const double bound = 1e-57 + 1e-55 * (1.0 + abs(lg).convert_to<double>());
    return {f, bound};
}

}  // namespace benford::digits

#endif  // BENFORD_DIGITS_HPP
