#include "emshift/hollow_wire.hpp"

#include <cmath>
#include <numbers>

#include "emshift/errors.hpp"
#include "emshift/units.hpp"

namespace emshift
{
namespace
{
constexpr auto const& k = units::codata2018;

void check_core(double mu, int n_turns, double length_z)
{
    if (!(mu >= 1) || !std::isfinite(mu))
    {
        throw DomainError("permeability must be finite and >= 1");
    }
    if (n_turns < 1)
    {
        throw DomainError("winding count must be >= 1");
    }
    if (!(length_z > 0) || !std::isfinite(length_z))
    {
        throw DomainError("axial length must be finite and > 0");
    }
}

// r0^2/(r1^2 - r0^2) ln(r1/r0); zero in the solid-conductor limit r0 -> 0
double inner_conductor_term(double r0, double r1)
{
    if (r0 == 0)
    {
        return 0;
    }
    return r0 * r0 / ((r1 - r0) * (r1 + r0)) * std::log(r1 / r0);
}
}  // namespace

MagneticCore::MagneticCore(double mu, int n_turns, double length_z,
                           double ln_ratio)
    : mu(mu), n_turns(n_turns), length_z(length_z), ln_ratio(ln_ratio)
{
    check_core(mu, n_turns, length_z);
    if (!(ln_ratio >= 0) || !std::isfinite(ln_ratio))
    {
        throw DomainError("ln(r2/r1) must be finite and >= 0");
    }
}

WireGeometry::WireGeometry(double r0, double r1, double r2, double r3,
                           double mu, int n_turns, double length_z)
    : r0_(r0)
    , r1_(r1)
    , r2_(r2)
    , r3_(r3)
    , mu_(mu)
    , n_turns_(n_turns)
    , length_z_(length_z)
{
    if (!(r0 >= 0 && r0 < r1 && r1 < r2 && r2 < r3) || !std::isfinite(r3))
    {
        throw DomainError("radii must satisfy 0 <= r0 < r1 < r2 < r3");
    }
    check_core(mu, n_turns, length_z);
}

MagneticCore WireGeometry::core() const
{
    return MagneticCore(mu_, n_turns_, length_z_, std::log(r2_ / r1_));
}

double WireGeometry::permeability_at(double rho) const
{
    return (rho >= r1_ && rho < r2_) ? mu_ : 1.0;
}

double CurrentLoad::j0(WireGeometry const& g) const
{
    return i_total / (std::numbers::pi * (g.r1() - g.r0()) * (g.r1() + g.r0()));
}

double CurrentLoad::j1(WireGeometry const& g) const
{
    return i_total / (std::numbers::pi * (g.r3() - g.r2()) * (g.r3() + g.r2()));
}

double h_field(WireGeometry const& g, CurrentLoad const& load, double rho)
{
    if (!(rho >= 0))
    {
        throw DomainError("radius must be >= 0");
    }
    if (rho < g.r0() || rho >= g.r3() || rho == 0)
    {
        return 0;
    }
    // Field of the full enclosed current N I at radius rho
    double const free_field = 2 * g.n_turns() * load.i_total / (rho * k.c);
    if (rho < g.r1())
    {
        double const r0 = g.r0();
        return free_field * ((rho - r0) * (rho + r0))
               / ((g.r1() - r0) * (g.r1() + r0));
    }
    if (rho < g.r2())
    {
        return free_field;
    }
    double const r3 = g.r3();
    return free_field * ((r3 - rho) * (r3 + rho))
           / ((r3 - g.r2()) * (r3 + g.r2()));
}

double vector_potential_axis(WireGeometry const& g, CurrentLoad const& load)
{
    double const r2 = g.r2();
    double const r3 = g.r3();
    double const ln_outer = std::log(r3 / r2);
    double const bracket = g.mu() * std::log(r2 / g.r1()) + ln_outer
                           - inner_conductor_term(g.r0(), g.r1())
                           + r2 * r2 / ((r3 - r2) * (r3 + r2)) * ln_outer;
    return 2 * g.n_turns() * load.i_total / k.c * bracket;
}

double vector_potential_axis_highmu(MagneticCore const& core, double i_total)
{
    return 2 * core.n_turns * core.mu * i_total / k.c * core.ln_ratio;
}

double vector_potential_axis_highmu(WireGeometry const& g,
                                    CurrentLoad const& load)
{
    return vector_potential_axis_highmu(g.core(), load.i_total);
}

Inductance inductance(MagneticCore const& core)
{
    double const n = core.n_turns;
    double const l = 2 * n * n * core.mu * core.length_z * core.ln_ratio
                     / (k.c * k.c);
    return {l, units::inductance_cgs_to_si(l)};
}

Inductance inductance(WireGeometry const& g) { return inductance(g.core()); }

}  // namespace emshift
