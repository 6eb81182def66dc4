#include "emshift/mass_shift.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "emshift/errors.hpp"
#include "emshift/units.hpp"

namespace emshift
{
namespace
{
constexpr auto const& k = units::codata2018;

void require_finite(double x, char const* what)
{
    if (!std::isfinite(x))
    {
        throw DomainError(std::string(what) + " must be finite");
    }
}
}  // namespace

FieldFluctuations::FieldFluctuations(double mean_sq_A, double vacuum_sq_A,
                                     double mean_A_sq)
    : mean_sq_A_(mean_sq_A), vacuum_sq_A_(vacuum_sq_A), mean_A_sq_(mean_A_sq)
{
    require_finite(mean_sq_A, "<|A|^2>");
    require_finite(vacuum_sq_A, "<|A|^2>_0");
    require_finite(mean_A_sq, "|<A>|^2");
    if (vacuum_sq_A < 0 || mean_A_sq < 0)
    {
        throw DomainError("vacuum and classical |A|^2 terms must be >= 0");
    }
}

FieldFluctuations FieldFluctuations::from_net(double net)
{
    return FieldFluctuations(net, 0.0, 0.0);
}

MassShift mass_shift_from_A(FieldFluctuations const& fluct)
{
    double const net = fluct.net();
    require_finite(net, "net fluctuation");
    double const c2 = k.c * k.c;
    double const dm = k.e * k.e / (2 * k.m_e * c2 * c2) * net;
    double const erg = dm * c2;
    return {dm, erg, units::energy_erg_to_ev(erg), net < 0};
}

double dressed_mass(FieldFluctuations const& fluct)
{
    double const coupling = k.e / (k.c * k.c);
    double const radicand = k.m_e * k.m_e + coupling * coupling * fluct.net();
    if (!(radicand >= 0))
    {
        throw DomainError(
            "dressed mass undefined: net fluctuation drives m*^2 negative");
    }
    return std::sqrt(radicand);
}

double thermal_mass_shift(double temperature_K)
{
    if (!(temperature_K >= 0) || !std::isfinite(temperature_K))
    {
        throw DomainError("temperature must be finite and >= 0");
    }
    double const x = k.k_B * temperature_K / units::electron_rest_energy_erg();
    return std::numbers::pi * k.alpha_fs / 3 * x * x;
}

double mass_shift_from_E_spectrum(TransverseESpectrum const& spec,
                                  QuadratureOptions const& opts)
{
    if (!spec.spectral_density)
    {
        throw DomainError("spectral density is not set");
    }
    if (!(spec.omega_min > 0))
    {
        throw DomainError("omega_min must be > 0");
    }
    if (!(spec.omega_max > spec.omega_min) || !std::isfinite(spec.omega_max))
    {
        throw DomainError("omega_max must be finite and exceed omega_min");
    }

    auto integrand = [&spec](double w) {
        return spec.spectral_density(w) / (w * w);
    };
    double error = 0;
    double l1 = 0;
    double const integral
        = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, spec.omega_min, spec.omega_max, opts.max_depth,
            opts.rel_tol, &error, &l1);
    if (!std::isfinite(integral))
    {
        throw QuadratureError("spectral integral is not finite", error);
    }
    // Compare against the L1 norm so sign-changing densities with a near-zero
    // net integral do not report spurious failure.
    if (error > opts.rel_tol * l1 && error > 0)
    {
        throw QuadratureError("spectral integral did not converge: error "
                                  "estimate "
                                  + std::to_string(error),
                              error);
    }
    return k.e * k.e / (2 * k.m_e * k.c * k.c) * integral;
}

}  // namespace emshift
