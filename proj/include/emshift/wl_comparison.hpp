#pragma once

namespace emshift::wl
{
//! Proton oscillation quantum [eV] and excursion [cm]
struct ProtonOscillation
{
    double hbar_omega_eV;
    double range_d_cm;
};

//! Inputs to the gauge-invariant dressed-mass estimate
struct WLInputs
{
    double u_rms_cm;        //!< rms proton displacement
    double plasma_omega;    //!< local plasma frequency [rad/s]
};

//! Critical field |m c Omega / e| [statvolt/cm]
double critical_field(double plasma_omega);

//! Gauss's-law rms field 4 e u / (3 a0^3) [statvolt/cm]
double field_estimate(double u_rms_cm);

//! m*/m = sqrt(1 + (E/crit)^2)
double dressed_mass_ratio(double e_rms, double crit);

//! Convenience: dressed_mass_ratio(field_estimate(u), critical_field(Omega))
double dressed_mass_ratio(WLInputs const& in);

//! v/c for an oscillation of amplitude d at angular frequency hbar_omega/hbar
double proton_velocity(ProtonOscillation const& osc);

//! |E_T|/|E_L| ~ (v/c)^2 in the d ~ v/omega regime
double transverse_longitudinal_ratio(double v_over_c);

//! General form v omega d / c^2 before setting d ~ v/omega
double transverse_longitudinal_ratio(double v_over_c, double omega,
                                     double d_cm);

//! [dm/m]_Coulomb gauge / [dm/m]_Widom-Larsen ~ (v/c)^4
double cg_wl_shift_ratio(double v_over_c);

}  // namespace emshift::wl
