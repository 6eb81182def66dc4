#pragma once

#include <functional>

namespace emshift
{
//---------------------------------------------------------------------------//
/*!
 * Vector-potential expectation values entering the mass shift.
 *
 * All three are in statvolt^2. The combination that shifts the mass is
 * net() = <|A|^2> - <|A|^2>_0 - |<A>|^2.
 */
class FieldFluctuations
{
  public:
    FieldFluctuations(double mean_sq_A, double vacuum_sq_A, double mean_A_sq);

    //! Fluctuations with a given net value and no vacuum or classical part
    static FieldFluctuations from_net(double net);

    double mean_sq_A() const { return mean_sq_A_; }
    double vacuum_sq_A() const { return vacuum_sq_A_; }
    double mean_A_sq() const { return mean_A_sq_; }
    double net() const { return mean_sq_A_ - vacuum_sq_A_ - mean_A_sq_; }

  private:
    double mean_sq_A_;
    double vacuum_sq_A_;
    double mean_A_sq_;
};

struct MassShift
{
    double dm_g;       //!< delta m [g]
    double dmc2_erg;   //!< delta m c^2 [erg]
    double dmc2_eV;    //!< delta m c^2 [eV]
    bool sub_vacuum;   //!< net fluctuation below the vacuum level
};

MassShift mass_shift_from_A(FieldFluctuations const& fluct);

//! Dressed mass m* = sqrt(m^2 + (e/c^2)^2 net) [g]
double dressed_mass(FieldFluctuations const& fluct);

//! Relative shift delta m / m of an electron in blackbody radiation at T [K]
double thermal_mass_shift(double temperature_K);

//---------------------------------------------------------------------------//
/*!
 * Net transverse electric-field fluctuation spectrum.
 *
 * The density is one-sided (omega > 0) and normalized so that its integral
 * over omega is the net <|E_T|^2> in (statvolt/cm)^2. The lower bound must
 * stay away from zero because the integrand carries 1/omega^2.
 */
struct TransverseESpectrum
{
    std::function<double(double)> spectral_density;
    double omega_min;
    double omega_max;
};

struct QuadratureOptions
{
    double rel_tol = 1e-9;
    //! Maximum bisection depth of the adaptive Gauss-Kronrod scheme
    unsigned max_depth = 30;
};

//! Mass shift [g] from the transverse-field spectrum
double mass_shift_from_E_spectrum(TransverseESpectrum const& spec,
                                  QuadratureOptions const& opts = {});

}  // namespace emshift
