#include "emshift/photon_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "emshift/errors.hpp"
#include "emshift/log_gamma.hpp"
#include "emshift/units.hpp"

namespace emshift::photon
{
namespace
{
// The default ladder ends where log p has fallen this far below its peak
constexpr long double tail_log_drop = 46.0L;
// Below-threshold geometric ladders end where r^n < 1e-14
constexpr double geometric_tail = 1e-14;
constexpr std::size_t max_ladder = 200'000'000;

long ceil_to_long(long double x)
{
    return static_cast<long>(std::ceil(x));
}

void check_ladder_size(std::size_t n_max)
{
    if (n_max > max_ladder)
    {
        throw TruncationError("ladder of " + std::to_string(n_max)
                                  + " rungs exceeds the supported size",
                              static_cast<long>(max_ladder));
    }
}

void check_tail(PhotonDistribution const& d, LaserParams const& params)
{
    if (d.tail_mass() > max_tail_mass)
    {
        long const suggested = static_cast<long>(default_n_max(params));
        throw TruncationError(
            "n_max = " + std::to_string(d.n_max())
                + " truncates the distribution (tail mass "
                + std::to_string(d.tail_mass()) + "); try n_max >= "
                + std::to_string(suggested),
            suggested);
    }
}

//! Build a ladder from p(0) = 1 and successive ratios p(n)/p(n-1).
template<class Ratio>
std::vector<double> ladder_from_ratios(std::size_t n_max, Ratio ratio)
{
    // Long double keeps the accumulated rounding of ~1e6 products well
    // below 1e-12; rescaling keeps the running product inside its range.
    constexpr long double rescale_at = 1e300L;
    constexpr long double rescale_by = 1e-300L;
    std::vector<long double> v(n_max + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n)
    {
        v[n] = v[n - 1] * ratio(n);
        if (v[n] > rescale_at)
        {
            for (std::size_t i = 0; i <= n; ++i)
            {
                v[i] *= rescale_by;
            }
        }
    }
    long double const total = std::accumulate(v.begin(), v.end(), 0.0L);
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [total](long double x) {
        return static_cast<double>(x / total);
    });
    return out;
}

void require_steady_state(LaserParams const& params)
{
    if (params.beta() == 0 && !(params.alpha() < params.gamma()))
    {
        throw DomainError(
            "no normalizable steady state: alpha >= gamma without "
            "saturation (beta = 0)");
    }
}

// Saturated gain rate n-1 -> n
double gain_rate(LaserParams const& params, double n, SaturationModel model)
{
    double const a = params.alpha();
    double const b = params.beta();
    if (model == SaturationModel::resummed)
    {
        return a * n / (1 + b * n / a);
    }
    return a * n - b * n * n;
}

}  // namespace

//---------------------------------------------------------------------------//
LaserParams::LaserParams(double gain_alpha, double sat_beta, double loss_gamma)
    : alpha_(gain_alpha), beta_(sat_beta), gamma_(loss_gamma)
{
    if (!(gain_alpha > 0) || !(loss_gamma > 0) || !(sat_beta >= 0)
        || !std::isfinite(gain_alpha) || !std::isfinite(loss_gamma)
        || !std::isfinite(sat_beta))
    {
        throw DomainError("laser parameters require alpha > 0, gamma > 0, "
                          "beta >= 0, all finite");
    }
}

std::string_view to_string(Construction c)
{
    switch (c)
    {
        case Construction::recursion:
            return "recursion";
        case Construction::closed_form:
            return "closed-form";
        case Construction::evolved:
            return "evolved";
        case Construction::geometric:
            return "geometric";
        case Construction::user:
            return "user";
    }
    return "unknown";
}

PhotonDistribution::PhotonDistribution(std::vector<double> probs,
                                       Construction how)
    : probs_(std::move(probs)), construction_(how)
{
    if (probs_.empty())
    {
        throw DomainError("photon distribution needs at least one rung");
    }
    long double total = 0;
    for (double p : probs_)
    {
        if (!(p >= 0) || !std::isfinite(p))
        {
            throw DomainError("probabilities must be finite and >= 0");
        }
        total += p;
    }
    if (!(total > 0))
    {
        throw DomainError("photon distribution has zero total mass");
    }
    if (std::abs(total - 1.0L) > 1e-12L)
    {
        for (double& p : probs_)
        {
            p = static_cast<double>(p / total);
        }
    }
}

PhotonDistribution PhotonDistribution::delta(std::size_t k, std::size_t n_max)
{
    if (k > n_max)
    {
        throw DomainError("delta index beyond the ladder");
    }
    std::vector<double> p(n_max + 1, 0.0);
    p[k] = 1;
    return {std::move(p), Construction::user};
}

double PhotonDistribution::tail_mass() const
{
    long double const total
        = std::accumulate(probs_.begin(), probs_.end(), 0.0L);
    return static_cast<double>(probs_.back() / total);
}

//---------------------------------------------------------------------------//
std::size_t default_n_max(LaserParams const& params)
{
    require_steady_state(params);
    long double const a = params.alpha();
    long double const b = params.beta();
    long double const g = params.gamma();
    if (b == 0)
    {
        long double const r = a / g;
        long const n = ceil_to_long(std::log(geometric_tail) / std::log(r));
        return static_cast<std::size_t>(std::max(n, 1L));
    }
    // Ratio p(n)/p(n-1) = x / (a/b + n) falls below one past the mode
    long double const x = a * a / (b * g);
    long double const shift = a / b;
    std::size_t const mode
        = static_cast<std::size_t>(std::max(0.0L, std::floor(x - shift)));
    long double drop = 0;
    std::size_t n = mode;
    while (drop < tail_log_drop)
    {
        ++n;
        drop -= std::log(x / (shift + n));
        if (n > max_ladder)
        {
            check_ladder_size(n);
        }
    }
    return std::max<std::size_t>(n, 1);
}

PhotonDistribution steady_state_recursion(LaserParams const& params,
                                          std::optional<std::size_t> n_max)
{
    require_steady_state(params);
    std::size_t const size = n_max.value_or(default_n_max(params));
    check_ladder_size(size);
    long double const gain_over_loss
        = static_cast<long double>(params.alpha()) / params.gamma();
    long double const sat
        = static_cast<long double>(params.beta()) / params.alpha();
    PhotonDistribution d(
        ladder_from_ratios(size,
                           [&](std::size_t n) {
                               return gain_over_loss / (1 + sat * n);
                           }),
        Construction::recursion);
    check_tail(d, params);
    return d;
}

PhotonDistribution steady_state_closed_form(LaserParams const& params,
                                            std::optional<std::size_t> n_max)
{
    if (!(params.beta() > 0))
    {
        throw DomainError("closed-form steady state requires beta > 0");
    }
    std::size_t const size = n_max.value_or(default_n_max(params));
    check_ladder_size(size);

    // p(n) ~ x^n / Gamma(a + n + 1), x = alpha^2/(beta gamma), a = alpha/beta.
    // Log weights are taken relative to a reference rung m near the mode so
    // that only differences of ln Gamma enter.
    // With z = a + 1 + m, log p(m+k) - log p(m) = k ln(x/z) minus the
    // excess of ln Gamma(z+k) - ln Gamma(z) over k ln z. Both pieces stay
    // small, where k ln x and the full difference would cancel at ~1e6.
    long double const alpha = params.alpha();
    long double const x = alpha * alpha
                          / (static_cast<long double>(params.beta())
                             * params.gamma());
    long double const a = alpha / params.beta();
    long double const mode = std::floor(x - a);
    long double const m
        = std::clamp(mode, 0.0L, static_cast<long double>(size));
    long double const z = a + 1 + m;
    long double const log_x_over_z = std::log1p((x - z) / z);

    std::vector<long double> log_p(size + 1);
    for (std::size_t n = 0; n <= size; ++n)
    {
        long double const k = static_cast<long double>(n) - m;
        log_p[n] = k * log_x_over_z
                   - special::log_gamma_difference_excess(z, k);
    }
    long double const peak = *std::max_element(log_p.begin(), log_p.end());
    std::vector<long double> w(size + 1);
    std::transform(log_p.begin(), log_p.end(), w.begin(),
                   [peak](long double lp) { return std::exp(lp - peak); });
    long double const total = std::accumulate(w.begin(), w.end(), 0.0L);
    std::vector<double> probs(size + 1);
    std::transform(w.begin(), w.end(), probs.begin(), [total](long double x) {
        return static_cast<double>(x / total);
    });

    PhotonDistribution d(std::move(probs), Construction::closed_form);
    check_tail(d, params);
    return d;
}

GaussianApprox gaussian_approx(LaserParams const& params)
{
    if (params.alpha() < params.gamma())
    {
        throw DomainError("below threshold (alpha < gamma): use "
                          "below_threshold_distribution");
    }
    if (!(params.beta() > 0))
    {
        throw DomainError("Gaussian approximation requires beta > 0");
    }
    double const mean = (params.alpha() - params.gamma()) / params.beta();
    double const spread = std::sqrt(params.alpha() / params.beta());
    return {mean, spread, mean > 0 && mean >= 10 * spread};
}

PhotonDistribution below_threshold_distribution(
    LaserParams const& params, std::optional<std::size_t> n_max)
{
    if (!(params.alpha() < params.gamma()))
    {
        throw DomainError("thermal distribution requires alpha < gamma");
    }
    double const r = params.alpha() / params.gamma();
    long double const log_r = std::log(static_cast<long double>(r));
    std::size_t const size = n_max.value_or(static_cast<std::size_t>(
        std::max(1L, ceil_to_long(std::log(geometric_tail) / log_r))));
    check_ladder_size(size);
    std::vector<double> probs(size + 1);
    for (std::size_t n = 0; n <= size; ++n)
    {
        probs[n] = static_cast<double>(-std::expm1(log_r)
                                       * std::exp(n * log_r));
    }
    PhotonDistribution d(std::move(probs), Construction::geometric);
    if (d.tail_mass() > max_tail_mass)
    {
        throw TruncationError("n_max too small for the thermal ladder",
                              ceil_to_long(std::log(geometric_tail) / log_r));
    }
    return d;
}

EffectiveTemperature effective_temperature(LaserParams const& params,
                                           double omega0)
{
    if (!(params.alpha() < params.gamma()))
    {
        throw DomainError(
            "effective temperature requires alpha < gamma (below threshold)");
    }
    if (!(omega0 > 0))
    {
        throw DomainError("omega0 must be > 0");
    }
    auto const& k = units::codata2018;
    // ln(gamma/alpha) = -log1p((alpha - gamma)/gamma)
    double const log_ratio
        = -std::log1p((params.alpha() - params.gamma()) / params.gamma());
    double const kT = k.hbar * omega0 / log_ratio;
    // Gain matched to loss at the rounding level: T_eff carries no digits
    bool const saturated = !std::isfinite(kT)
                           || (params.gamma() - params.alpha())
                                  < 1e-12 * params.gamma();
    if (!std::isfinite(kT))
    {
        double const big = std::numeric_limits<double>::max();
        return {big, big, true};
    }
    return {kT / k.k_B, units::energy_erg_to_ev(kT), saturated};
}

Moments moments(PhotonDistribution const& dist)
{
    auto const& p = dist.probs();
    long double total = 0;
    long double first = 0;
    for (std::size_t n = 0; n < p.size(); ++n)
    {
        total += p[n];
        first += static_cast<long double>(n) * p[n];
    }
    long double const mean = first / total;
    long double second = 0;
    for (std::size_t n = 0; n < p.size(); ++n)
    {
        long double const dn = n - mean;
        second += dn * dn * p[n];
    }
    return {static_cast<double>(mean), static_cast<double>(second / total)};
}

//---------------------------------------------------------------------------//
PhotonDistribution stationary_distribution(LaserParams const& params,
                                           std::size_t n_max,
                                           SaturationModel model)
{
    check_ladder_size(n_max);
    long double const loss = params.gamma();
    return PhotonDistribution(
        ladder_from_ratios(n_max,
                           [&](std::size_t n) {
                               long double const birth
                                   = gain_rate(params, n, model);
                               return std::max(0.0L, birth / (loss * n));
                           }),
        Construction::recursion);
}

namespace
{
//! Birth/death rates of the truncated chain
struct LadderRates
{
    std::vector<double> up;     // n -> n+1
    std::vector<double> down;   // n -> n-1
};

LadderRates ladder_rates(LaserParams const& params, std::size_t n_max,
                         SaturationModel model)
{
    LadderRates r{std::vector<double>(n_max + 1, 0.0),
                  std::vector<double>(n_max + 1, 0.0)};
    for (std::size_t n = 0; n <= n_max; ++n)
    {
        r.down[n] = params.gamma() * n;
        if (n < n_max)
        {
            r.up[n] = gain_rate(params, n + 1.0, model);
            if (r.up[n] < 0)
            {
                throw DomainError(
                    "lowest-order gain turns negative above n = alpha/beta; "
                    "shorten the ladder or use the resummed model");
            }
        }
    }
    return r;
}

//! out = M p for the birth-death generator
void apply_generator(LadderRates const& r, std::vector<double> const& p,
                     std::vector<double>& out)
{
    std::size_t const size = p.size();
    for (std::size_t n = 0; n < size; ++n)
    {
        double v = -(r.up[n] + r.down[n]) * p[n];
        if (n > 0)
        {
            v += r.up[n - 1] * p[n - 1];
        }
        if (n + 1 < size)
        {
            v += r.down[n + 1] * p[n + 1];
        }
        out[n] = v;
    }
}

//! Solves (I - s M) x = rhs with the Thomas algorithm.
class StageSolver
{
  public:
    explicit StageSolver(LadderRates const& r) : rates_(r)
    {
        std::size_t const size = r.up.size();
        cprime_.resize(size);
        denom_.resize(size);
    }

    void factor(double s)
    {
        std::size_t const size = rates_.up.size();
        double prev_c = 0;
        for (std::size_t n = 0; n < size; ++n)
        {
            double const diag = 1 + s * (rates_.up[n] + rates_.down[n]);
            double const lower = n > 0 ? -s * rates_.up[n - 1] : 0.0;
            double const upper = n + 1 < size ? -s * rates_.down[n + 1] : 0.0;
            double const den = diag - lower * prev_c;
            denom_[n] = den;
            cprime_[n] = upper / den;
            prev_c = cprime_[n];
        }
        s_ = s;
    }

    void solve(std::vector<double> const& rhs, std::vector<double>& x) const
    {
        std::size_t const size = rhs.size();
        double prev = 0;
        for (std::size_t n = 0; n < size; ++n)
        {
            double const lower = n > 0 ? -s_ * rates_.up[n - 1] : 0.0;
            prev = (rhs[n] - lower * prev) / denom_[n];
            x[n] = prev;
        }
        for (std::size_t n = size - 1; n-- > 0;)
        {
            x[n] -= cprime_[n] * x[n + 1];
        }
    }

  private:
    LadderRates const& rates_;
    std::vector<double> cprime_;
    std::vector<double> denom_;
    double s_ = 0;
};

double l1_norm(std::vector<double> const& v)
{
    long double s = 0;
    for (double x : v)
    {
        s += std::abs(x);
    }
    return static_cast<double>(s);
}

double mass(std::vector<double> const& v)
{
    return static_cast<double>(std::accumulate(v.begin(), v.end(), 0.0L));
}
}  // namespace

EvolveResult evolve_master_equation(LaserParams const& params,
                                    PhotonDistribution const& p0,
                                    double t_final, EvolveOptions const& opts)
{
    if (!(t_final >= 0) || !std::isfinite(t_final))
    {
        throw DomainError("t_final must be finite and >= 0");
    }
    if (!(opts.rel_tol > 0))
    {
        throw DomainError("tolerance must be > 0");
    }
    if (t_final == 0)
    {
        return {p0, 0, 0, 0.0};
    }

    std::size_t const n_max = p0.n_max();
    LadderRates const rates = ladder_rates(params, n_max, opts.saturation);
    StageSolver solver(rates);

    // Alexander's L-stable SDIRK2; stiffly accurate, so y_{n+1} = Y2
    double const g = 1 - std::sqrt(0.5);

    std::vector<double> y = p0.probs();
    std::vector<double> y1(y.size()), k1(y.size()), y2(y.size()),
        k2(y.size()), rhs(y.size()), err(y.size()), filtered(y.size());

    double fastest = 0;
    for (std::size_t n = 0; n <= n_max; ++n)
    {
        fastest = std::max(fastest, rates.up[n] + rates.down[n]);
    }
    double h = opts.initial_step > 0 ? opts.initial_step
                                     : 1e-3 / std::max(fastest, 1e-300);
    h = std::min(h, t_final);

    double t = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    double max_mass_error = std::abs(mass(y) - 1);

    while (t < t_final)
    {
        if (accepted + rejected >= opts.max_steps)
        {
            throw StiffnessError("step budget exhausted at t = "
                                     + std::to_string(t),
                                 t);
        }
        if (h < opts.min_step * std::max(1.0, t_final))
        {
            throw StiffnessError("step size underflow at t = "
                                     + std::to_string(t),
                                 t);
        }
        bool const last = t + h >= t_final;
        if (last)
        {
            h = t_final - t;
        }

        solver.factor(g * h);
        solver.solve(y, y1);
        apply_generator(rates, y1, k1);
        for (std::size_t n = 0; n <= n_max; ++n)
        {
            rhs[n] = y[n] + h * (1 - g) * k1[n];
        }
        solver.solve(rhs, y2);
        apply_generator(rates, y2, k2);

        // Difference to the first-order y + h k1, smoothed for stiff modes
        for (std::size_t n = 0; n <= n_max; ++n)
        {
            err[n] = h * g * (k2[n] - k1[n]);
        }
        solver.solve(err, filtered);
        double const err_norm = l1_norm(filtered) / opts.rel_tol;

        if (err_norm <= 1)
        {
            t = last ? t_final : t + h;
            y.swap(y2);
            ++accepted;
            max_mass_error = std::max(max_mass_error, std::abs(mass(y) - 1));
        }
        else
        {
            ++rejected;
        }
        double const factor
            = err_norm > 0 ? 0.9 / std::sqrt(err_norm) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }

    // Stage 2 may leave rounding-level negatives; the ladder must be >= 0
    for (double& p : y)
    {
        p = std::max(p, 0.0);
    }
    return {PhotonDistribution(std::move(y), Construction::evolved), accepted,
            rejected, max_mass_error};
}

}  // namespace emshift::photon
