#include "emshift/circuit_noise.hpp"

#include <cmath>

#include "emshift/errors.hpp"
#include "emshift/units.hpp"

namespace emshift::circuit
{
namespace
{
constexpr auto const& k = units::codata2018;

ShiftReport make_report(double dm, Regime regime)
{
    double const erg = dm * k.c * k.c;
    return {dm,
            erg,
            units::energy_erg_to_ev(erg),
            units::energy_erg_to_joule(erg),
            std::abs(dm) / k.m_e < max_trusted_relative_shift,
            to_string(regime)};
}

void require_temperature(double t_eff_K)
{
    if (!(t_eff_K >= 0) || !std::isfinite(t_eff_K))
    {
        throw DomainError("effective temperature must be finite and >= 0");
    }
}
}  // namespace

double resonant_frequency(double inductance, double capacitance)
{
    if (!(inductance > 0) || !(capacitance > 0))
    {
        throw DomainError("inductance and capacitance must be > 0");
    }
    return 1 / std::sqrt(inductance * capacitance);
}

CircuitParams::CircuitParams(double inductance, double capacitance,
                             double phase_mean)
    : l_(inductance)
    , c_(capacitance)
    , omega0_(resonant_frequency(inductance, capacitance))
    , phase_(phase_mean)
{
}

double mean_current(double n_mean, CircuitParams const& circuit, double t)
{
    if (!(n_mean >= 0))
    {
        throw DomainError("mean photon number must be >= 0");
    }
    double const w = circuit.omega0();
    double const peak = std::sqrt(k.hbar * w * n_mean / (2 * circuit.inductance()));
    return peak * std::cos(w * t + circuit.phase_mean());
}

std::string to_string(Regime r)
{
    return r == Regime::above_threshold ? "above-threshold"
                                        : "below-threshold";
}

CurrentStatistics current_variance_above_threshold(
    double n_mean, double n_variance, CircuitParams const& circuit)
{
    if (!(n_mean > 0))
    {
        throw DomainError("mean photon number must be > 0");
    }
    if (!(n_variance >= 0))
    {
        throw DomainError("photon-number variance must be >= 0");
    }
    double const peak_sq
        = k.hbar * circuit.omega0() * n_mean / (2 * circuit.inductance());
    double const variance = 0.25 * peak_sq * (n_variance / (n_mean * n_mean));
    return {std::sqrt(peak_sq), variance, Regime::above_threshold};
}

CurrentStatistics current_variance_below_threshold(
    CircuitParams const& circuit, double t_eff_K)
{
    require_temperature(t_eff_K);
    double const quantum = k.hbar * circuit.omega0();
    double const kT = k.k_B * t_eff_K;
    // Bose occupation 1/(e^x - 1); x -> inf at T = 0 gives the zero-point floor
    double const occupation
        = kT > 0 ? 1 / std::expm1(quantum / kT) : 0.0;
    double const l = circuit.inductance();
    return {0.0, quantum / l * (occupation + 0.5), Regime::below_threshold,
            kT / l};
}

ShiftReport mass_shift_from_current_variance(MagneticCore const& core,
                                             double i_variance, Regime regime)
{
    if (!(i_variance >= 0))
    {
        throw DomainError("current variance must be >= 0");
    }
    double const n = core.n_turns;
    double const c2 = k.c * k.c;
    double const dm = 2 * n * n * k.e * k.e * core.mu * core.mu
                      / (k.m_e * c2 * c2 * c2) * core.ln_ratio * core.ln_ratio
                      * i_variance;
    return make_report(dm, regime);
}

ShiftReport mass_shift_from_current_variance(WireGeometry const& g,
                                             double i_variance, Regime regime)
{
    return mass_shift_from_current_variance(g.core(), i_variance, regime);
}

ShiftReport below_threshold_mass_shift(MagneticCore const& core,
                                       double t_eff_K)
{
    require_temperature(t_eff_K);
    double const c2 = k.c * k.c;
    double const dm = k.e * k.e * core.mu * k.k_B * t_eff_K * core.ln_ratio
                      / (k.m_e * c2 * c2 * core.length_z);
    return make_report(dm, Regime::below_threshold);
}

ShiftReport below_threshold_mass_shift(WireGeometry const& g, double t_eff_K)
{
    return below_threshold_mass_shift(g.core(), t_eff_K);
}

ScalingReport energy_shift_scaling(MagneticCore const& core, double t_eff_K,
                                   ScalingReference const& ref)
{
    require_temperature(t_eff_K);
    if (!(ref.length_cm > 0) || !(ref.mu > 0) || !(ref.kT_eV > 0))
    {
        throw DomainError("scaling reference values must be > 0");
    }
    // r_e * mu_ref * kT_ref / l_ref, already an energy in eV when kT_ref is
    double const prefactor = units::classical_electron_radius() * ref.mu
                             * ref.kT_eV / ref.length_cm;
    ScalingReport r{};
    r.prefactor_eV = prefactor;
    r.ln_factor = core.ln_ratio;
    r.length_factor = ref.length_cm / core.length_z;
    r.mu_factor = core.mu / ref.mu;
    r.temperature_factor = units::temperature_to_ev(t_eff_K) / ref.kT_eV;
    r.total_eV = prefactor * r.ln_factor * r.length_factor * r.mu_factor
                 * r.temperature_factor;
    return r;
}

}  // namespace emshift::circuit
