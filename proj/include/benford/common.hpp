#ifndef BENFORD_COMMON_HPP
#define BENFORD_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace benford {

/// Arbitrary-precision integer used for every exact coefficient.
using BigInt = mpz_class;

/// Extended-precision real: 60 significant decimal digits, exponent range of MPFR.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                           boost::multiprecision::et_off>;

/// Raised for contract violations (bad arguments, exhausted precision, oracle bounds).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const char* message)
{
    if (!cond) {
        throw Error(message);
    }
}

inline BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline BigInt ipow(long base, unsigned long exponent)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
    return r;
}

inline Real pi()
{
    return boost::math::constants::pi<Real>();
}

}  // namespace detail
}  // namespace benford

#endif  // BENFORD_COMMON_HPP
