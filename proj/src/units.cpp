#include "emshift/units.hpp"

namespace emshift::units
{
namespace
{
constexpr Constants const& k = codata2018;
// 1 H = 1e9 abhenry = 1e9 / c^2 statH (c in cm/s)
constexpr double henry_per_cgs = k.c * k.c * 1e-9;
// 1 F = c^2 * 1e-9 statF (cm)
constexpr double cm_per_farad = k.c * k.c * 1e-9;
}  // namespace

double current_si_to_cgs(double amperes) { return amperes * k.statamp_per_amp; }
double current_cgs_to_si(double statamperes)
{
    return statamperes / k.statamp_per_amp;
}

double potential_si_to_cgs(double volts) { return volts * k.statvolt_per_volt; }
double potential_cgs_to_si(double statvolts)
{
    return statvolts / k.statvolt_per_volt;
}

double energy_ev_to_erg(double ev) { return ev * k.erg_per_eV; }
double energy_erg_to_ev(double erg) { return erg / k.erg_per_eV; }
double energy_erg_to_joule(double erg) { return erg * 1e-7; }

double temperature_to_ev(double kelvin)
{
    return energy_erg_to_ev(kelvin * k.k_B);
}
double ev_to_temperature(double ev) { return energy_ev_to_erg(ev) / k.k_B; }

double inductance_cgs_to_si(double s2_per_cm) { return s2_per_cm * henry_per_cgs; }
double inductance_si_to_cgs(double henry) { return henry / henry_per_cgs; }

double capacitance_cgs_to_si(double cm) { return cm / cm_per_farad; }
double capacitance_si_to_cgs(double farad) { return farad * cm_per_farad; }

}  // namespace emshift::units
