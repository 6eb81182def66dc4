#pragma once

#include <string>

#include "hollow_wire.hpp"

namespace emshift::circuit
{
//! LC circuit in cgs: inductance [s^2/cm], capacitance [cm]
class CircuitParams
{
  public:
    CircuitParams(double inductance, double capacitance,
                  double phase_mean = 0.0);

    double inductance() const { return l_; }
    double capacitance() const { return c_; }
    double omega0() const { return omega0_; }
    double phase_mean() const { return phase_; }

  private:
    double l_;
    double c_;
    double omega0_;
    double phase_;
};

double resonant_frequency(double inductance, double capacitance);

//! <I>(t) = sqrt(hbar w0 n / 2L) cos(w0 t + <phi>) [statamp]
double mean_current(double n_mean, CircuitParams const& circuit, double t);

enum class Regime
{
    above_threshold,
    below_threshold,
};

std::string to_string(Regime r);

struct CurrentStatistics
{
    double mean_peak;   //!< <I>_max [statamp]
    double variance;    //!< [statamp^2]
    Regime regime;
    //! High-temperature limit k_B T / L (below threshold only, else 0)
    double high_t_variance = 0;
};

/*!
 * Current variance from number fluctuations alone.
 *
 * Evaluated where sin(w0 t + <phi>) = 0, so cos^2 = 1 and neither the phase
 * variance nor the number-phase correlation contributes.
 */
CurrentStatistics current_variance_above_threshold(
    double n_mean, double n_variance, CircuitParams const& circuit);

CurrentStatistics current_variance_below_threshold(
    CircuitParams const& circuit, double t_eff_K);

//---------------------------------------------------------------------------//
struct ShiftReport
{
    double dm_g;
    double dmc2_erg;
    double dmc2_eV;
    double dmc2_joule;
    //! dm/m < 1e-3, where the linearized shift formulas hold
    bool valid;
    std::string regime;
};

inline constexpr double max_trusted_relative_shift = 1e-3;

//! dm = 2 N^2 e^2 mu^2 ln^2(r2/r1) Var(I) / (m c^6)
ShiftReport mass_shift_from_current_variance(
    MagneticCore const& core, double i_variance,
    Regime regime = Regime::below_threshold);
ShiftReport mass_shift_from_current_variance(
    WireGeometry const& g, double i_variance,
    Regime regime = Regime::below_threshold);

//! Below-threshold shift with L = L_hw substituted; independent of N
ShiftReport below_threshold_mass_shift(MagneticCore const& core,
                                       double t_eff_K);
ShiftReport below_threshold_mass_shift(WireGeometry const& g, double t_eff_K);

struct ScalingReference
{
    double length_cm = 10.0;
    double mu = 20000.0;
    double kT_eV = 1.0;
};

/*!
 * dmc^2 = prefactor * ln(r2/r1) * (l_ref / l_z) * (mu / mu_ref)
 *         * (k_B T_eff / kT_ref)
 *
 * with prefactor = r_e mu_ref kT_ref / l_ref recomputed from constants.
 */
struct ScalingReport
{
    double prefactor_eV;
    double ln_factor;
    double length_factor;
    double mu_factor;
    double temperature_factor;
    double total_eV;
};

ScalingReport energy_shift_scaling(MagneticCore const& core, double t_eff_K,
                                   ScalingReference const& ref = {});

}  // namespace emshift::circuit
