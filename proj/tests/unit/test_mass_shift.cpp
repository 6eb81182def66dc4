#include <cmath>
#include <random>

#include <doctest.h>

#include "emshift/errors.hpp"
#include "emshift/mass_shift.hpp"
#include "emshift/units.hpp"
#include "oracles.hpp"

using namespace emshift;

namespace
{
auto const& k = units::codata2018;
double const e2_over_2mc2 = k.e * k.e / (2 * k.m_e * k.c * k.c);
}  // namespace

TEST_CASE("mass_shift_from_A")
{
    SUBCASE("vanishing net fluctuation")
    {
        auto const r = mass_shift_from_A(FieldFluctuations(5.0, 2.0, 3.0));
        CHECK(r.dm_g == 0.0);
        CHECK_FALSE(r.sub_vacuum);
    }
    SUBCASE("unit net fluctuation against an SI re-derivation")
    {
        // 1 statvolt of vector potential is 1 G cm = 1e-6 T m; in SI the
        // shift is (e A)^2 / (2 m) in joules.
        double const eA = 1.602176634e-19 * 1e-6;
        double const si_joule = eA * eA / (2 * 9.1093837015e-31);
        auto const r = mass_shift_from_A(FieldFluctuations::from_net(1.0));
        CHECK(r.dmc2_erg == doctest::Approx(si_joule * 1e7).epsilon(1e-9));
        CHECK(r.dmc2_erg == doctest::Approx(1.409e-13).epsilon(1e-3));
        CHECK(r.dmc2_eV == doctest::Approx(8.79e-2).epsilon(1e-3));
    }
    SUBCASE("sub-vacuum net is returned with a flag")
    {
        auto const r = mass_shift_from_A(FieldFluctuations(1.0, 2.0, 0.0));
        CHECK(r.dm_g < 0);
        CHECK(r.sub_vacuum);
    }
    SUBCASE("linear in the net fluctuation")
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-1e3, 1e3);
        for (int i = 0; i < 200; ++i)
        {
            double const net = u(rng);
            double const s = std::abs(u(rng));
            double const one = mass_shift_from_A(FieldFluctuations::from_net(net)).dm_g;
            double const scaled
                = mass_shift_from_A(FieldFluctuations::from_net(s * net)).dm_g;
            CHECK(scaled == doctest::Approx(s * one).epsilon(1e-14));
        }
        double const x = mass_shift_from_A(FieldFluctuations::from_net(3.0)).dm_g;
        CHECK(mass_shift_from_A(FieldFluctuations::from_net(6.0)).dm_g == 2 * x);
    }
    SUBCASE("non-finite input")
    {
        CHECK_THROWS_AS(FieldFluctuations(NAN, 0, 0), DomainError);
        CHECK_THROWS_AS(FieldFluctuations(1, -1, 0), DomainError);
        CHECK_THROWS_AS(FieldFluctuations(INFINITY, 0, 0), DomainError);
    }
}

TEST_CASE("dressed_mass")
{
    double const coupling2 = std::pow(k.e / (k.c * k.c), 2);
    CHECK(dressed_mass(FieldFluctuations::from_net(0)) == k.m_e);
    // (e/c^2)^2 net = 3 m^2 gives m* = 2m
    double const net3 = 3 * k.m_e * k.m_e / coupling2;
    CHECK(dressed_mass(FieldFluctuations::from_net(net3))
          == doctest::Approx(2 * k.m_e).epsilon(1e-14));

    SUBCASE("first-order agreement with the mass shift")
    {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> u(-1, 1);
        for (int i = 0; i < 200; ++i)
        {
            double const net = u(rng) * 1e-6 * k.m_e * k.m_e / coupling2;
            auto const f = FieldFluctuations::from_net(net);
            double const gap
                = std::abs(dressed_mass(f) - (k.m_e + mass_shift_from_A(f).dm_g));
            CHECK(gap / k.m_e <= 1e-11);
        }
    }
    SUBCASE("negative radicand is unphysical")
    {
        double const too_low = -1.01 * k.m_e * k.m_e / coupling2;
        CHECK_THROWS_AS(dressed_mass(FieldFluctuations::from_net(too_low)),
                        DomainError);
    }
}

TEST_CASE("thermal_mass_shift")
{
    CHECK(thermal_mass_shift(0) == 0.0);
    CHECK(thermal_mass_shift(300) == doctest::Approx(oracle::thermal_shift(300)).epsilon(1e-9));
    CHECK(thermal_mass_shift(300) == doctest::Approx(1.96e-17).epsilon(5e-3));
    for (double t : {1.0, 77.0, 300.0, 5800.0})
    {
        CHECK(thermal_mass_shift(2 * t) / thermal_mass_shift(t)
              == doctest::Approx(4.0).epsilon(1e-15));
    }
    double prev = 0;
    for (double t = 1; t < 1e6; t *= 1.7)
    {
        double const v = thermal_mass_shift(t);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(thermal_mass_shift(-1), DomainError);
}

TEST_CASE("mass_shift_from_E_spectrum")
{
    SUBCASE("zero density")
    {
        CHECK(mass_shift_from_E_spectrum({[](double) { return 0.0; }, 1.0, 10.0})
              == 0.0);
    }
    SUBCASE("C omega^2 density integrates to C (w2 - w1)")
    {
        double const c = 2.5e-3;
        double const w1 = 1e3;
        double const w2 = 7e5;
        double const dm = mass_shift_from_E_spectrum(
            {[c](double w) { return c * w * w; }, w1, w2});
        CHECK(dm == doctest::Approx(e2_over_2mc2 * c * (w2 - w1)).epsilon(1e-9));
    }
    SUBCASE("narrowing top-hat approaches the line-spectrum limit")
    {
        double const s0 = 4.0;
        double const w1 = 2e6;
        double prev_err = 1;
        for (double frac : {1e-1, 1e-2, 1e-3, 1e-4})
        {
            double const width = frac * w1;
            double const dm = mass_shift_from_E_spectrum(
                {[s0](double) { return s0; }, w1 - width / 2, w1 + width / 2});
            double const limit = e2_over_2mc2 * s0 * width / (w1 * w1);
            double const err = std::abs(dm / limit - 1);
            // Exact top-hat result differs from the limit by (w/w1)^2 / 4
            CHECK(err == doctest::Approx(frac * frac / 4 / (1 - frac * frac / 4))
                             .epsilon(1e-5));
            CHECK(err < prev_err);
            prev_err = err;
        }
    }
    SUBCASE("invalid bounds")
    {
        auto f = [](double) { return 1.0; };
        CHECK_THROWS_AS(mass_shift_from_E_spectrum({f, 0.0, 1.0}), DomainError);
        CHECK_THROWS_AS(mass_shift_from_E_spectrum({f, 2.0, 1.0}), DomainError);
    }
    SUBCASE("non-convergence reports the achieved error")
    {
        QuadratureOptions opts;
        opts.rel_tol = 1e-14;
        opts.max_depth = 1;
        TransverseESpectrum const spec{
            [](double w) { return w * w * (1 + std::sin(1e4 * w)); }, 1.0,
            100.0};
        try
        {
            mass_shift_from_E_spectrum(spec, opts);
            FAIL("expected QuadratureError");
        }
        catch (QuadratureError const& e)
        {
            CHECK(e.achieved_error() > 0);
        }
    }
}
