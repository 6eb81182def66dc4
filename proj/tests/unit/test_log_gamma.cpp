#include <cmath>
#include <random>

#include <doctest.h>

#include "emshift/errors.hpp"
#include "emshift/log_gamma.hpp"
#include "oracles.hpp"

using emshift::special::log_gamma;
using emshift::special::log_gamma_difference;

TEST_CASE("log_gamma at known points")
{
    CHECK(std::abs(log_gamma(1.0L)) < 1e-17L);
    CHECK(std::abs(log_gamma(2.0L)) < 1e-17L);
    long double const sqrt_pi_log = 0.5L * std::log(3.14159265358979323846264L);
    CHECK(std::abs(log_gamma(0.5L) - sqrt_pi_log) < 1e-17L);
    // ln 10! by direct summation
    long double sum = 0;
    for (int i = 2; i <= 10; ++i)
    {
        sum += std::log(static_cast<long double>(i));
    }
    CHECK(std::abs(log_gamma(11.0L) - sum) < 1e-16L);
}

TEST_CASE("log_gamma matches 50-digit reference")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> expo(-3, 8);
    for (int i = 0; i < 300; ++i)
    {
        long double const x = std::pow(10.0L, expo(rng));
        long double const ref = oracle::log_gamma(x);
        long double const got = log_gamma(x);
        CAPTURE(static_cast<double>(x));
        // Relative where |lnG| is large, absolute near its zeros at 1 and 2
        CHECK(std::abs(got - ref) <= 1e-15L * std::max(1.0L, std::abs(ref)));
    }
}

TEST_CASE("log_gamma_difference is accurate where lnG itself is huge")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> z_exp(0, 7.5);
    std::uniform_real_distribution<double> frac(-0.9, 3);
    for (int i = 0; i < 200; ++i)
    {
        long double const z = std::pow(10.0L, z_exp(rng));
        long double const k = std::round(frac(rng) * std::sqrt(z) * 5);
        if (z + k <= 0)
        {
            continue;
        }
        using bf = boost::multiprecision::cpp_bin_float_50;
        bf const ref = boost::multiprecision::lgamma(bf(z + k))
                       - boost::multiprecision::lgamma(bf(z));
        long double const got = log_gamma_difference(z, k);
        CAPTURE(static_cast<double>(z));
        CAPTURE(static_cast<double>(k));
        long double const scale
            = std::max(1.0L, std::abs(static_cast<long double>(ref)));
        CHECK(std::abs(got - static_cast<long double>(ref)) <= 1e-16L * scale);
    }
}

TEST_CASE("log_gamma_difference_excess keeps digits far from the reference")
{
    using emshift::special::log_gamma_difference_excess;
    using bf = boost::multiprecision::cpp_bin_float_50;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> z_exp(-1, 9.5);
    std::uniform_real_distribution<double> frac(-0.99, 3);
    for (int i = 0; i < 300; ++i)
    {
        long double const z = std::pow(10.0L, z_exp(rng));
        long double const k = std::round(frac(rng) * std::sqrt(z) * 10);
        if (z + k <= 0)
        {
            continue;
        }
        bf const ref = boost::multiprecision::lgamma(bf(z + k))
                       - boost::multiprecision::lgamma(bf(z))
                       - bf(k) * boost::multiprecision::log(bf(z));
        long double const got = log_gamma_difference_excess(z, k);
        CAPTURE(static_cast<double>(z));
        CAPTURE(static_cast<double>(k));
        long double const scale
            = std::max(1.0L, std::abs(static_cast<long double>(ref)));
        CHECK(std::abs(got - static_cast<long double>(ref)) <= 1e-16L * scale);
    }
}

TEST_CASE("log_gamma_difference reproduces the Gamma recurrence")
{
    for (long double z : {0.3L, 5.0L, 19.5L, 1.1e7L})
    {
        CHECK(std::abs(log_gamma_difference(z, 1) - std::log(z)) < 1e-17L * std::max(1.0L, std::log(z)));
        CHECK(log_gamma_difference(z, 0) == 0);
    }
}

TEST_CASE("log_gamma rejects non-positive arguments")
{
    CHECK_THROWS_AS(log_gamma(0.0L), emshift::DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5L), emshift::DomainError);
    CHECK_THROWS_AS(log_gamma_difference(1.0L, -2.0L), emshift::DomainError);
}
