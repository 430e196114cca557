#ifndef BENFORD_ASYMPTOTICS_HPP
#define BENFORD_ASYMPTOTICS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"
#include "digits.hpp"
#include "sequences.hpp"

namespace benford::asymptotics {

/// p(n) ~ e^(pi sqrt(2n/3)) / (4 n sqrt 3).
inline Real hardy_ramanujan(long n)
{
    detail::require(n >= 1, "hardy-ramanujan formula is singular at n = 0");
    const Real nn(n);
    return exp(detail::pi() * sqrt(2 * nn / 3)) / (4 * nn * sqrt(Real(3)));
}

/// Leading terms of I_alpha(x) ~ e^x / sqrt(2 pi x) (1 + (1 - 2 alpha)(1 + 2 alpha) / (8x)).
inline Real bessel_i_asymptotic(const Real& alpha, const Real& x, int terms)
{
    detail::require(x > 0, "bessel asymptotic needs x > 0");
    detail::require(terms == 1 || terms == 2, "only one or two asymptotic terms are available");
    Real v = exp(x) / sqrt(2 * detail::pi() * x);
    if (terms == 2) {
        v *= 1 + (1 - 2 * alpha) * (1 + 2 * alpha) / (8 * x);
    }
    return v;
}

/// K n^((k-1)/2) I_(1-k)(alpha sqrt n), with I replaced by its two-term asymptotic.
inline Real coefficient_asymptotic_model(const Real& weight, const Real& scale_k, const Real& alpha, long n)
{
    detail::require(scale_k > 0, "model scale K must be positive");
    detail::require(alpha > 0, "model alpha must be positive");
    detail::require(n >= 1, "model index must be positive");
    const Real nn(n);
    return scale_k * pow(nn, (weight - 1) / 2) * bessel_i_asymptotic(1 - weight, alpha * sqrt(nn), 2);
}

/// b(n) e^(c(n)) with b(n) = C n^beta and c(n) = A n^gamma.
struct GrowthModel {
    Real log_c = 0;
    Real beta = 0;
    Real a = 0;
    Real gamma = 0;

    Real log_value(long n) const
    {
        const Real nn(n);
        return log_c + beta * log(nn) + a * pow(nn, gamma);
    }

    Real value(long n) const { return exp(log_value(n)); }

    // The Hardy-Ramanujan model: C = 1/(4 sqrt 3), beta = -1, A = pi sqrt(2/3), gamma = 1/2.
    static GrowthModel hardy_ramanujan()
    {
        return {-log(4 * sqrt(Real(3))), Real(-1), detail::pi() * sqrt(Real(2) / 3), Real(1) / 2};
    }
};

enum class Outcome { Pass, Fail, Inconclusive };

inline std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass:
        return "PASS";
    case Outcome::Fail:
        return "FAIL";
    case Outcome::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

struct GoodVerdict {
    int h = 1;
    Outcome cond1 = Outcome::Inconclusive;
    Outcome cond2 = Outcome::Inconclusive;
    Outcome cond3 = Outcome::Inconclusive;
    std::vector<std::string> trace;

    bool all_pass() const
    {
        return cond1 == Outcome::Pass && cond2 == Outcome::Pass && cond3 == Outcome::Pass;
    }
    bool any_fail() const
    {
        return cond1 == Outcome::Fail || cond2 == Outcome::Fail || cond3 == Outcome::Fail;
    }
};

/// Decides the three growth conditions for a power-law model analytically with h = 1:
/// c'(n) = A gamma n^(gamma-1) must decrease to 0, n c'(n) must diverge, and
/// (beta / n) / c'(n) = (beta / (A gamma)) n^-gamma must vanish.
inline GoodVerdict good_check_powerlaw(const GrowthModel& m)
{
    GoodVerdict v;
    v.h = 1;
    const bool a_pos = m.a > 0;
    const bool a_nonzero = m.a != 0;
    v.cond1 = (a_pos && m.gamma > 0 && m.gamma < 1) ? Outcome::Pass : Outcome::Fail;
    v.cond2 = (a_nonzero && m.gamma > 0) ? Outcome::Pass : Outcome::Fail;
    v.cond3 = (a_nonzero && m.gamma > 0) ? Outcome::Pass : Outcome::Fail;
    std::ostringstream s;
    s << "A=" << m.a.convert_to<double>() << " gamma=" << m.gamma.convert_to<double>()
      << " beta=" << m.beta.convert_to<double>();
    v.trace.push_back(s.str());
    return v;
}

namespace detail {

inline Real binomial(int h, int j)
{
    Real r = 1;
    for (int i = 1; i <= j; ++i) {
        r = r * (h - j + i) / i;
    }
    return r;
}

// h-th forward difference with unit step.
template <typename F>
Real forward_difference(F&& f, long n, int h)
{
    Real s = 0;
    for (int j = 0; j <= h; ++j) {
        const Real term = binomial(h, j) * Real(f(n + j));
        s += ((h - j) % 2 == 0) ? term : Real(-term);
    }
    return s;
}

// Minimum and maximum local log-log slope of a positive sampled sequence.
inline std::pair<Real, Real> slope_range(const std::vector<long>& grid, const std::vector<Real>& y)
{
    Real lo = 0;
    Real hi = 0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        const Real s = log(y[i + 1] / y[i]) / log(Real(grid[i + 1]) / Real(grid[i]));
        if (i == 0 || s < lo) {
            lo = s;
        }
        if (i == 0 || s > hi) {
            hi = s;
        }
    }
    return {lo, hi};
}

enum class Trend { Increasing, Decreasing, Flat, Mixed };

inline Trend trend(const std::vector<Real>& y, const Real& tol)
{
    bool up = false;
    bool down = false;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        const Real scale = std::max(Real(1), Real(abs(y[i])));
        const Real diff = y[i + 1] - y[i];
        if (diff > tol * scale) {
            up = true;
        } else if (diff < -tol * scale) {
            down = true;
        } else {
            // steps inside tolerance count as neither
        }
    }
    if (up && down) {
        return Trend::Mixed;
    }
    if (up) {
        return Trend::Increasing;
    }
    return down ? Trend::Decreasing : Trend::Flat;
}

}  // namespace detail

/// Sampled check of the van der Corput hypotheses on f with h-th differences:
/// (a) |D^h f| decreases monotonically toward 0, (b) n |D^h f| grows without bound.
/// f plays the role of c(n) with b(n) = 1, so the third growth condition holds trivially.
template <typename F>
GoodVerdict vdk_check_numeric(F&& f, int h, const std::vector<long>& grid)
{
    benford::detail::require(grid.size() >= 10, "grid needs at least 10 points");
    benford::detail::require(h >= 1, "derivative order must be at least 1");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        benford::detail::require(grid[i] < grid[i + 1], "grid must be strictly increasing");
    }
    static const Real tol("1e-9");
    // Local power-law exponents closer to 0 than this are treated as saturation.
    static const Real min_exponent("0.05");

    GoodVerdict v;
    v.h = h;
    v.cond3 = Outcome::Pass;
    v.trace.push_back("b(n) = 1: D^h log b vanishes identically");

    std::vector<Real> d;
    std::vector<Real> nd;
    for (long n : grid) {
        const Real diff = abs(detail::forward_difference(f, n, h));
        d.push_back(diff);
        nd.push_back(Real(n) * diff);
        std::ostringstream s;
        s << "n=" << n << " |D^h f|=" << diff.convert_to<double>() << " n|D^h f|=" << nd.back().convert_to<double>();
        v.trace.push_back(s.str());
    }

    const bool any_zero = std::any_of(d.begin(), d.end(), [](const Real& x) { return x == 0; });
    const auto td = detail::trend(d, tol);
    if (any_zero) {
        // an identically vanishing difference already sits at 0 but n|D^h f| cannot diverge
        v.cond1 = td == detail::Trend::Mixed ? Outcome::Inconclusive : Outcome::Pass;
        v.cond2 = Outcome::Fail;
        return v;
    }
    if (td == detail::Trend::Flat || td == detail::Trend::Increasing) {
        v.cond1 = Outcome::Fail;
    } else if (td == detail::Trend::Mixed) {
        v.cond1 = Outcome::Inconclusive;
    } else {
        const auto [lo, hi] = detail::slope_range(grid, d);
        v.cond1 = hi <= -min_exponent ? Outcome::Pass : Outcome::Inconclusive;
    }

    const auto tn = detail::trend(nd, tol);
    if (tn == detail::Trend::Mixed) {
        v.cond2 = Outcome::Inconclusive;
    } else if (tn != detail::Trend::Increasing) {
        v.cond2 = Outcome::Fail;
    } else {
        const auto [lo, hi] = detail::slope_range(grid, nd);
        v.cond2 = lo >= min_exponent ? Outcome::Pass : Outcome::Fail;
    }
    return v;
}

struct FitResult {
    GrowthModel model;
    Real residual;  // root-mean-square residual of the log fit
};

/// Least squares for log a(n) ~ log C + beta ln n + A n^gamma at fixed gamma.
inline FitResult fit_growth_model(const std::vector<std::pair<long, Real>>& log_data, const Real& gamma)
{
    benford::detail::require(log_data.size() >= 3, "fit needs at least three points");
    std::array<std::array<Real, 4>, 3> m{};
    for (const auto& [n, y] : log_data) {
        benford::detail::require(n >= 1, "fit indices must be positive");
        const std::array<Real, 3> row{Real(1), log(Real(n)), pow(Real(n), gamma)};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m[i][j] += row[i] * row[j];
            }
            m[i][3] += row[i] * y;
        }
    }
    Real norm = 0;
    for (const auto& r : m) {
        for (std::size_t j = 0; j < 3; ++j) {
            norm = std::max(norm, Real(abs(r[j])));
        }
    }
    static const Real singular_tol("1e-40");
    // Gaussian elimination with partial pivoting.
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < 3; ++r) {
            if (abs(m[r][c]) > abs(m[p][c])) {
                p = r;
            }
        }
        benford::detail::require(abs(m[p][c]) > singular_tol * norm, "singular design matrix");
        std::swap(m[c], m[p]);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == c) {
                continue;
            }
            const Real factor = m[r][c] / m[c][c];
            for (std::size_t j = c; j < 4; ++j) {
                m[r][j] -= factor * m[c][j];
            }
        }
    }
    GrowthModel model{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2], gamma};
    Real sq = 0;
    for (const auto& [n, y] : log_data) {
        const Real e = y - model.log_value(n);
        sq += e * e;
    }
    return {model, sqrt(sq / Real(static_cast<unsigned long>(log_data.size())))};
}

/// Fits the growth model to log |a(n)| for n in [first, last].
inline FitResult fit_growth_model(sequences::IntegerSequence& seq, const Real& gamma, long first, long last)
{
    benford::detail::require(last - first + 1 >= 3, "fit needs at least three points");
    benford::detail::require(first >= 1 && first >= seq.first_index(), "fit indices must be positive");
    seq.ensure(last);
    std::vector<std::pair<long, Real>> data;
    for (long n = first; n <= last; ++n) {
        const auto& a = seq.at(n);
        benford::detail::require(sgn(a) > 0, "fit requires positive terms");
        data.emplace_back(n, digits::log_natural(a));
    }
    return fit_growth_model(data, gamma);
}

}  // namespace benford::asymptotics

#endif  // BENFORD_ASYMPTOTICS_HPP
