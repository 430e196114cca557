#ifndef BENFORD_QSERIES_HPP
#define BENFORD_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"

namespace benford::qseries {

// Laurent series in q with exact integer coefficients, known for exponents
// in [lead, prec). Everything from q^prec upward is untracked.
class TruncatedLaurentSeries {
public:
    TruncatedLaurentSeries(long lead, std::vector<BigInt> coeffs)
        : lead_(lead), coeffs_(std::move(coeffs))
    {
        detail::require(!coeffs_.empty(), "precision exhausted");
    }

    // Constant c + O(q^prec).
    static TruncatedLaurentSeries constant(const BigInt& c, long prec)
    {
        detail::require(prec > 0, "precision exhausted");
        std::vector<BigInt> v(static_cast<std::size_t>(prec));
        v[0] = c;
        return {0, std::move(v)};
    }

    static TruncatedLaurentSeries one(long prec) { return constant(1, prec); }

    static TruncatedLaurentSeries zero(long lead, long prec)
    {
        detail::require(lead < prec, "precision exhausted");
        return {lead, std::vector<BigInt>(static_cast<std::size_t>(prec - lead))};
    }

    long lead() const noexcept { return lead_; }
    long prec() const noexcept { return lead_ + static_cast<long>(coeffs_.size()); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of q^n. Zero below lead; unknown (throws) at or above prec.
    BigInt coeff(long n) const
    {
        detail::require(n < prec(), "precision exhausted");
        if (n < lead_) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(n - lead_)];
    }

    const BigInt& leading_coeff() const noexcept { return coeffs_.front(); }

    // Multiplication by q^k.
    TruncatedLaurentSeries shifted(long k) const { return {lead_ + k, coeffs_}; }

    TruncatedLaurentSeries truncated(long new_prec) const
    {
        detail::require(new_prec <= prec(), "precision exhausted");
        detail::require(new_prec > lead_, "precision exhausted");
        return {lead_, {coeffs_.begin(), coeffs_.begin() + (new_prec - lead_)}};
    }

    // Substitute q -> q^factor.
    TruncatedLaurentSeries dilated(long factor) const
    {
        detail::require(factor >= 1, "dilation factor must be positive");
        const long new_lead = lead_ * factor;
        const long new_prec = prec() * factor;
        std::vector<BigInt> v(static_cast<std::size_t>(new_prec - new_lead));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v[i * static_cast<std::size_t>(factor)] = coeffs_[i];
        }
        return {new_lead, std::move(v)};
    }

    friend bool operator==(const TruncatedLaurentSeries&, const TruncatedLaurentSeries&) = default;

private:
    long lead_;
    std::vector<BigInt> coeffs_;
};

namespace detail {

inline TruncatedLaurentSeries add_sub(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, bool subtract)
{
    const long lead = std::min(a.lead(), b.lead());
    const long prec = std::min(a.prec(), b.prec());
    benford::detail::require(lead < prec, "precision exhausted");
    std::vector<BigInt> v(static_cast<std::size_t>(prec - lead));
    for (long n = lead; n < prec; ++n) {
        auto& out = v[static_cast<std::size_t>(n - lead)];
        out = a.coeff(n);
        if (subtract) {
            out -= b.coeff(n);
        } else {
            out += b.coeff(n);
        }
    }
    return {lead, std::move(v)};
}

}  // namespace detail

inline TruncatedLaurentSeries series_add(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b)
{
    return detail::add_sub(a, b, false);
}

inline TruncatedLaurentSeries series_sub(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b)
{
    return detail::add_sub(a, b, true);
}

/// Product of two truncated series. The result is known up to
/// min(a.prec + b.lead, b.prec + a.lead).
inline TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b)
{
    const long lead = a.lead() + b.lead();
    const long prec = std::min(a.prec() + b.lead(), b.prec() + a.lead());
    benford::detail::require(lead < prec, "precision exhausted");
    const std::size_t len = static_cast<std::size_t>(prec - lead);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<BigInt> r(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < len; ++j) {
            if (sgn(y[j]) != 0) {
                mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
            }
        }
    }
    return {lead, std::move(r)};
}

/// Multiplicative inverse. The leading coefficient must be +1 or -1 so that
/// the inverse stays integral; the relative precision is preserved.
inline TruncatedLaurentSeries series_inverse(const TruncatedLaurentSeries& a)
{
    const BigInt& u0 = a.leading_coeff();
    benford::detail::require(abs(u0) == 1, "non-unit leading coefficient");
    const auto& u = a.coeffs();
    const std::size_t len = u.size();
    std::vector<BigInt> b(len);
    b[0] = u0;
    BigInt acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(u[k]) != 0) {
                mpz_addmul(acc.get_mpz_t(), u[k].get_mpz_t(), b[n - k].get_mpz_t());
            }
        }
        // u0 * b_n = -sum, and u0 is its own inverse.
        b[n] = -u0 * acc;
    }
    return {-a.lead(), std::move(b)};
}

inline TruncatedLaurentSeries series_pow(const TruncatedLaurentSeries& a, long e)
{
    if (e < 0) {
        return series_pow(series_inverse(a), -e);
    }
    if (e == 0) {
        return TruncatedLaurentSeries::one(static_cast<long>(a.size()));
    }
    std::optional<TruncatedLaurentSeries> result;
    TruncatedLaurentSeries base = a;
    for (unsigned long k = static_cast<unsigned long>(e);;) {
        if (k & 1UL) {
            result = result ? series_mul(*result, base) : base;
        }
        k >>= 1;
        if (k == 0) {
            break;
        }
        base = series_mul(base, base);
    }
    return *result;
}

/// prod_{n>=1} (1 - q^n) + O(q^prec), via Euler's pentagonal number theorem.
/// The q^(1/24) prefactor of eta is left to the caller.
inline TruncatedLaurentSeries eta_series(long prec)
{
    benford::detail::require(prec >= 1, "precision must be positive");
    std::vector<BigInt> v(static_cast<std::size_t>(prec));
    v[0] = 1;
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 >= prec) {
            break;
        }
        const int sign = (k % 2 == 1) ? -1 : 1;
        v[static_cast<std::size_t>(e1)] = sign;
        if (e2 < prec) {
            v[static_cast<std::size_t>(e2)] = sign;
        }
    }
    return {0, std::move(v)};
}

struct EtaFactor {
    long delta;
    long r;
    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// prod eta(delta z)^r_delta, optionally tied to a level N.
class EtaQuotientSpec {
public:
    EtaQuotientSpec() = default;

    explicit EtaQuotientSpec(std::vector<EtaFactor> terms, std::optional<long> level_hint = std::nullopt)
        : terms_(std::move(terms)), level_hint_(level_hint)
    {
        std::set<long> seen;
        for (const auto& t : terms_) {
            benford::detail::require(t.delta >= 1, "eta quotient delta must be positive");
            benford::detail::require(t.r != 0, "eta quotient exponent must be nonzero");
            benford::detail::require(seen.insert(t.delta).second, "duplicate delta in eta quotient");
        }
        if (level_hint_) {
            benford::detail::require(*level_hint_ >= 1, "level must be positive");
            for (const auto& t : terms_) {
                benford::detail::require(*level_hint_ % t.delta == 0, "delta does not divide level");
            }
        }
    }

    const std::vector<EtaFactor>& terms() const noexcept { return terms_; }
    std::optional<long> level_hint() const noexcept { return level_hint_; }

    // sum delta * r_delta; the q-power prefactor is q^(this / 24).
    long prefactor_numerator() const noexcept
    {
        long s = 0;
        for (const auto& t : terms_) {
            s += t.delta * t.r;
        }
        return s;
    }

private:
    std::vector<EtaFactor> terms_;
    std::optional<long> level_hint_;
};

struct EtaQuotientSeries {
    long offset24;  // full object is q^(offset24/24) * series
    TruncatedLaurentSeries series;

    // Folds the prefactor into the exponents; only legal when 24 | offset24.
    TruncatedLaurentSeries folded() const
    {
        benford::detail::require(offset24 % 24 == 0, "fractional q-power cannot be folded");
        return series.shifted(offset24 / 24);
    }
};

inline EtaQuotientSeries eta_quotient_series(const EtaQuotientSpec& spec, long prec)
{
    benford::detail::require(prec >= 1, "precision must be positive");
    auto series = TruncatedLaurentSeries::one(prec);
    for (const auto& t : spec.terms()) {
        const long base_prec = (prec + t.delta - 1) / t.delta;
        auto factor = eta_series(base_prec).dilated(t.delta);
        // eta products always lead with 1, so negative powers stay integral.
        if (factor.leading_coeff() != 1) {
            throw Error("eta product with non-unit leading coefficient");
        }
        series = series_mul(series, series_pow(factor, t.r).truncated(prec));
    }
    return {spec.prefactor_numerator(), std::move(series)};
}

struct ModularityVerdict {
    long weight_times_two = 0;
    bool cond_a = false;  // sum delta r_delta == 0 mod 24
    bool cond_b = false;  // sum (N/delta) r_delta == 0 mod 24
    mpq_class character_s;  // prod delta^r_delta
};

/// Integer-arithmetic part of the eta-quotient modularity criterion on Gamma_0(N).
inline ModularityVerdict eta_quotient_modularity_check(const EtaQuotientSpec& spec, long level)
{
    benford::detail::require(level >= 1, "level must be positive");
    ModularityVerdict v;
    BigInt sum_a = 0;
    BigInt sum_b = 0;
    BigInt num = 1;
    BigInt den = 1;
    for (const auto& t : spec.terms()) {
        benford::detail::require(level % t.delta == 0, "delta does not divide level");
        v.weight_times_two += t.r;
        sum_a += BigInt(t.delta) * t.r;
        sum_b += BigInt(level / t.delta) * t.r;
        const BigInt p = benford::detail::ipow(t.delta, static_cast<unsigned long>(t.r < 0 ? -t.r : t.r));
        (t.r > 0 ? num : den) *= p;
    }
    v.cond_a = mpz_divisible_ui_p(sum_a.get_mpz_t(), 24) != 0;
    v.cond_b = mpz_divisible_ui_p(sum_b.get_mpz_t(), 24) != 0;
    v.character_s = mpq_class(num, den);
    v.character_s.canonicalize();
    return v;
}

/// E4 = 1 + 240 sum sigma_3(n) q^n.
inline TruncatedLaurentSeries eisenstein_e4(long prec)
{
    benford::detail::require(prec >= 1, "precision must be positive");
    const auto len = static_cast<std::size_t>(prec);
    std::vector<BigInt> sigma3(len);
    for (std::size_t d = 1; d < len; ++d) {
        const BigInt cube = BigInt(static_cast<unsigned long>(d)) * d * d;
        for (std::size_t m = d; m < len; m += d) {
            sigma3[m] += cube;
        }
    }
    std::vector<BigInt> v(len);
    v[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        v[n] = 240 * sigma3[n];
    }
    return {0, std::move(v)};
}

/// Delta = q * prod (1 - q^n)^24, built without fractional exponents.
inline TruncatedLaurentSeries discriminant(long prec)
{
    benford::detail::require(prec >= 2, "precision exhausted");
    return series_pow(eta_series(prec - 1), 24).shifted(1);
}

/// j = E4^3 / Delta, known for exponents in [-1, prec).
inline TruncatedLaurentSeries j_invariant(long prec)
{
    benford::detail::require(prec >= 0, "precision exhausted");
    const auto e4 = eisenstein_e4(prec + 1);
    const auto e4_cubed = series_mul(series_mul(e4, e4), e4);
    return series_mul(e4_cubed, series_inverse(discriminant(prec + 2)));
}

/// The weight-12 form j * E4^3 = q^-1 + 1464 + 911844 q + ..., known below q^prec.
inline TruncatedLaurentSeries j_times_e4_cubed(long prec)
{
    benford::detail::require(prec >= 0, "precision exhausted");
    const auto e4 = eisenstein_e4(prec + 1);
    const auto e4_cubed = series_mul(series_mul(e4, e4), e4);
    return series_mul(j_invariant(prec), e4_cubed);
}

inline void validate_progression(long g, long delta)
{
    benford::detail::require(delta >= 2 && g > 0 && g < (delta + 1) / 2, "invalid (g, delta)");
}

/// prod over n == +-g (mod delta) of 1/(1 - q^n); coefficients are r_{g,delta}(n).
inline TruncatedLaurentSeries arithmetic_progression_product_inverse(long g, long delta, long prec)
{
    validate_progression(g, delta);
    benford::detail::require(prec >= 1, "precision must be positive");
    std::vector<BigInt> v(static_cast<std::size_t>(prec));
    v[0] = 1;
    for (long part = 1; part < prec; ++part) {
        const long residue = part % delta;
        if (residue != g && residue != delta - g) {
            continue;
        }
        // multiply by 1/(1 - q^part)
        for (long i = part; i < prec; ++i) {
            v[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i - part)];
        }
    }
    return {0, std::move(v)};
}

/// (a; q)_n = prod_{i=0}^{n-1} (1 - a q^i), truncated below q^prec.
inline TruncatedLaurentSeries q_pochhammer(const TruncatedLaurentSeries& a, long n, long prec)
{
    const auto one = TruncatedLaurentSeries::one(prec);
    auto result = one;
    for (long i = 0; i < n; ++i) {
        result = series_mul(result, series_sub(one, a.shifted(i)));
    }
    return result;
}

/// Sum side of the Rogers-Ramanujan identities: sum_n q^(n^2 + a n) / (q; q)_n.
inline TruncatedLaurentSeries rogers_ramanujan_sum_side(int a, long prec)
{
    benford::detail::require(a == 0 || a == 1, "rogers-ramanujan parameter must be 0 or 1");
    benford::detail::require(prec >= 1, "precision must be positive");
    const auto q = TruncatedLaurentSeries(0, [&] {
        std::vector<BigInt> v(static_cast<std::size_t>(prec));
        if (prec > 1) {
            v[1] = 1;
        }
        return v;
    }());
    auto sum = TruncatedLaurentSeries::zero(0, prec);
    for (long n = 0; n * n + a * n < prec; ++n) {
        const long shift = n * n + a * n;
        const auto term = series_inverse(q_pochhammer(q, n, prec - shift)).shifted(shift);
        sum = series_add(sum, term);
    }
    return sum;
}

}  // namespace benford::qseries

#endif  // BENFORD_QSERIES_HPP
