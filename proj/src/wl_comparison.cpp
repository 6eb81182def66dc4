#include "emshift/wl_comparison.hpp"

#include <cmath>

#include "emshift/errors.hpp"
#include "emshift/units.hpp"

namespace emshift::wl
{
namespace
{
constexpr auto const& k = units::codata2018;

void require_subluminal(double v_over_c)
{
    if (!(v_over_c >= 0) || v_over_c > 1)
    {
        throw DomainError("v/c must lie in [0, 1]");
    }
}
}  // namespace

double critical_field(double plasma_omega)
{
    if (!(plasma_omega > 0))
    {
        throw DomainError("plasma frequency must be > 0");
    }
    return std::abs(k.m_e * k.c * plasma_omega / k.e);
}

double field_estimate(double u_rms_cm)
{
    // u = 0 is accepted as the trivial endpoint
    if (!(u_rms_cm >= 0))
    {
        throw DomainError("rms displacement must be >= 0");
    }
    return 4 * k.e * u_rms_cm / (3 * k.a0 * k.a0 * k.a0);
}

double dressed_mass_ratio(double e_rms, double crit)
{
    if (!(crit > 0))
    {
        throw DomainError("critical field must be > 0");
    }
    if (!(e_rms >= 0))
    {
        throw DomainError("rms field must be >= 0");
    }
    return std::hypot(1.0, e_rms / crit);
}

double dressed_mass_ratio(WLInputs const& in)
{
    if (!(in.u_rms_cm > 0))
    {
        throw DomainError("rms displacement must be > 0");
    }
    return dressed_mass_ratio(field_estimate(in.u_rms_cm),
                              critical_field(in.plasma_omega));
}

double proton_velocity(ProtonOscillation const& osc)
{
    if (!(osc.hbar_omega_eV > 0) || !(osc.range_d_cm > 0))
    {
        throw DomainError("oscillation quantum and range must be > 0");
    }
    double const omega = units::energy_ev_to_erg(osc.hbar_omega_eV) / k.hbar;
    return omega * osc.range_d_cm / k.c;
}

double transverse_longitudinal_ratio(double v_over_c)
{
    require_subluminal(v_over_c);
    return v_over_c * v_over_c;
}

double transverse_longitudinal_ratio(double v_over_c, double omega,
                                     double d_cm)
{
    require_subluminal(v_over_c);
    if (!(omega > 0) || !(d_cm > 0))
    {
        throw DomainError("omega and d must be > 0");
    }
    return v_over_c * omega * d_cm / k.c;
}

double cg_wl_shift_ratio(double v_over_c)
{
    double const r = transverse_longitudinal_ratio(v_over_c);
    return r * r;
}

}  // namespace emshift::wl
