#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace emshift::photon
{
//---------------------------------------------------------------------------//
/*!
 * Gain, saturation and loss rates [1/s] of the single-mode master equation.
 */
class LaserParams
{
  public:
    LaserParams(double gain_alpha, double sat_beta, double loss_gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    //! Normalized gain excess (alpha - gamma) / alpha
    double delta() const { return (alpha_ - gamma_) / alpha_; }

    bool above_threshold() const { return alpha_ > gamma_; }

  private:
    double alpha_;
    double beta_;
    double gamma_;
};

enum class Construction
{
    recursion,
    closed_form,
    evolved,
    geometric,
    user,
};

std::string_view to_string(Construction c);

//---------------------------------------------------------------------------//
/*!
 * Normalized probability ladder p(0..n_max).
 *
 * Construction validates non-negativity and normalization (1e-12). The
 * tail-adequacy invariant p(n_max) <= 1e-10 is checked by the builders that
 * choose the ladder, not here, so arbitrary initial states remain possible.
 */
class PhotonDistribution
{
  public:
    PhotonDistribution(std::vector<double> probs, Construction how);

    //! Point mass at k on a ladder of size n_max + 1
    static PhotonDistribution delta(std::size_t k, std::size_t n_max);

    std::vector<double> const& probs() const { return probs_; }
    std::size_t n_max() const { return probs_.size() - 1; }
    Construction construction() const { return construction_; }
    double operator[](std::size_t n) const { return probs_[n]; }

    //! Ratio of the last entry to the total mass
    double tail_mass() const;

  private:
    std::vector<double> probs_;
    Construction construction_;
};

//! Tail adequacy bound on p(n_max)
inline constexpr double max_tail_mass = 1e-10;

//! Ladder size used when the caller does not choose one
std::size_t default_n_max(LaserParams const& params);

PhotonDistribution steady_state_recursion(
    LaserParams const& params, std::optional<std::size_t> n_max = {});

PhotonDistribution steady_state_closed_form(
    LaserParams const& params, std::optional<std::size_t> n_max = {});

struct GaussianApprox
{
    double mean;
    double spread;
    //! mean >= 10 spread
    bool valid;
};

GaussianApprox gaussian_approx(LaserParams const& params);

//! Geometric (thermal) ladder (1 - r) r^n with r = alpha / gamma
PhotonDistribution below_threshold_distribution(
    LaserParams const& params, std::optional<std::size_t> n_max = {});

struct EffectiveTemperature
{
    double kelvin;
    double kT_eV;
    //! Set when alpha/gamma is so close to 1 that T_eff overflowed
    bool saturated;
};

EffectiveTemperature effective_temperature(LaserParams const& params,
                                           double omega0);

struct Moments
{
    double mean;
    double variance;
};

Moments moments(PhotonDistribution const& dist);

//---------------------------------------------------------------------------//
// Time evolution

/*!
 * Form of the saturated gain rate from n-1 to n.
 *
 * lowest_order is the truncated expansion alpha n - beta n^2. resummed is
 * alpha n / (1 + beta n / alpha), whose detailed balance reproduces the
 * steady-state recursion exactly; expanding it to first order in beta gives
 * lowest_order.
 */
enum class SaturationModel
{
    resummed,
    lowest_order,
};

struct EvolveOptions
{
    double rel_tol = 1e-8;
    SaturationModel saturation = SaturationModel::resummed;
    //! Initial step; zero picks one from the fastest rate
    double initial_step = 0;
    double min_step = 1e-14;
    std::size_t max_steps = 10'000'000;
};

struct EvolveResult
{
    PhotonDistribution dist;
    std::size_t accepted_steps;
    std::size_t rejected_steps;
    //! max |sum p - 1| over accepted steps
    double max_mass_error;
};

/*!
 * Integrate the master equation on the ladder of p0 up to t_final.
 *
 * The ladder is reflecting at n_max (no gain out of the top rung). Uses an
 * L-stable two-stage SDIRK with an embedded first-order estimate filtered
 * through the stage matrix; each stage is a tridiagonal solve.
 */
EvolveResult evolve_master_equation(LaserParams const& params,
                                    PhotonDistribution const& p0,
                                    double t_final,
                                    EvolveOptions const& opts = {});

//! Exact stationary ladder of the chosen saturation model by detailed balance
PhotonDistribution stationary_distribution(LaserParams const& params,
                                           std::size_t n_max,
                                           SaturationModel model);

}  // namespace emshift::photon
