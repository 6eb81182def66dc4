#include <cmath>
#include <random>

#include <doctest.h>

#include "emshift/units.hpp"

using namespace emshift::units;

namespace
{
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("constants are self-consistent")
{
    auto const& k = constants();
    CHECK(rel(k.alpha_fs, k.e * k.e / (k.hbar * k.c)) < 1e-6);
    CHECK(rel(k.a0, k.hbar * k.hbar / (k.m_e * k.e * k.e)) < 1e-6);
    CHECK(rel(energy_erg_to_ev(electron_rest_energy_erg()), 510998.95) < 1e-6);
    CHECK(rel(classical_electron_radius(), 2.8179403262e-13) < 1e-9);
}

TEST_CASE("current conversion")
{
    CHECK(current_si_to_cgs(1.0) == doctest::Approx(2.998e9).epsilon(1e-3));
    CHECK(current_si_to_cgs(0.0) == 0.0);
    CHECK(current_si_to_cgs(2.0) == 2 * current_si_to_cgs(1.0));
}

TEST_CASE("potential conversion")
{
    CHECK(potential_cgs_to_si(1.0) == doctest::Approx(299.792458).epsilon(1e-12));
    CHECK(potential_cgs_to_si(0.0) == 0.0);
    CHECK(potential_cgs_to_si(400.0) == doctest::Approx(1.199e5).epsilon(1e-3));
}

TEST_CASE("energy conversion")
{
    CHECK(energy_ev_to_erg(1.0) == doctest::Approx(1.602177e-12).epsilon(1e-6));
    CHECK(energy_ev_to_erg(0.0) == 0.0);
    CHECK(energy_erg_to_ev(electron_rest_energy_erg())
          == doctest::Approx(510998.95).epsilon(1e-8));
}

TEST_CASE("SI inductance and capacitance")
{
    // 1 statH = c^2 * 1e-9 H with c in cm/s
    CHECK(inductance_cgs_to_si(1.0) == doctest::Approx(8.987551787e11));
    CHECK(capacitance_si_to_cgs(1.0) == doctest::Approx(8.987551787e11));
}

TEST_CASE("conversions composed with their inverse are the identity")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(-10, 10);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (int i = 0; i < 1000; ++i)
    {
        double const x = mant(rng) * std::pow(10.0, expo(rng));
        CAPTURE(x);
        CHECK(rel(current_cgs_to_si(current_si_to_cgs(x)), x) <= 1e-15);
        CHECK(rel(potential_si_to_cgs(potential_cgs_to_si(x)), x) <= 1e-15);
        CHECK(rel(energy_erg_to_ev(energy_ev_to_erg(x)), x) <= 1e-15);
        CHECK(rel(ev_to_temperature(temperature_to_ev(x)), x) <= 1e-15);
        CHECK(rel(inductance_si_to_cgs(inductance_cgs_to_si(x)), x) <= 1e-15);
        CHECK(rel(capacitance_cgs_to_si(capacitance_si_to_cgs(x)), x) <= 1e-15);
    }
}
