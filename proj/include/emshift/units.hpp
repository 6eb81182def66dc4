#pragma once

namespace emshift::units
{
//---------------------------------------------------------------------------//
/*!
 * Physical constants in cgs-Gaussian units (CODATA 2018).
 *
 * Everything inside the library is computed in cgs; SI only appears at the
 * interfaces through the conversion factors below. Exact SI-defined values
 * (c, e, h, k_B) are carried to full double precision.
 */
struct Constants
{
    double c;                  //!< speed of light [cm/s]
    double e;                  //!< elementary charge [statC]
    double m_e;                //!< electron mass [g]
    double hbar;               //!< reduced Planck constant [erg s]
    double k_B;                //!< Boltzmann constant [erg/K]
    double alpha_fs;           //!< fine-structure constant
    double a0;                 //!< Bohr radius [cm]
    double erg_per_eV;         //!< [erg/eV]
    double statvolt_per_volt;  //!< 1 V expressed in statvolt
    double statamp_per_amp;    //!< 1 A expressed in statampere
};

inline constexpr Constants codata2018{
    2.99792458e10,
    4.803204712570263e-10,
    9.1093837015e-28,
    1.054571817646156e-27,
    1.380649e-16,
    7.2973525693e-3,
    5.29177210903e-9,
    1.602176634e-12,
    1.0 / 299.792458,
    2.99792458e9,
};

inline constexpr char const constants_version[] = "CODATA-2018";

//! Constant table used throughout the library.
constexpr Constants const& constants() noexcept { return codata2018; }

//! Electron rest energy m_e c^2 [erg]
constexpr double electron_rest_energy_erg() noexcept
{
    return codata2018.m_e * codata2018.c * codata2018.c;
}

//! Classical electron radius e^2/(m_e c^2) [cm]
constexpr double classical_electron_radius() noexcept
{
    return codata2018.e * codata2018.e / electron_rest_energy_erg();
}

// Conversions
double current_si_to_cgs(double amperes);
double current_cgs_to_si(double statamperes);
double potential_si_to_cgs(double volts);
double potential_cgs_to_si(double statvolts);
double energy_ev_to_erg(double ev);
double energy_erg_to_ev(double erg);
double energy_erg_to_joule(double erg);
//! Temperature [K] to thermal energy k_B T [eV]
double temperature_to_ev(double kelvin);
double ev_to_temperature(double ev);
//! Inductance in cgs (s^2/cm) to henry
double inductance_cgs_to_si(double s2_per_cm);
double inductance_si_to_cgs(double henry);
//! Capacitance in cgs (cm) to farad
double capacitance_cgs_to_si(double cm);
double capacitance_si_to_cgs(double farad);

}  // namespace emshift::units
