#pragma once

namespace emshift
{
//---------------------------------------------------------------------------//
/*!
 * The part of the hollow wire that matters for flux: permeability, winding
 * count, axial length, and ln(r2/r1) of the magnetic shell.
 */
struct MagneticCore
{
    double mu;
    int n_turns;
    double length_z;   //!< [cm]
    double ln_ratio;   //!< ln(r2/r1)

    MagneticCore(double mu, int n_turns, double length_z, double ln_ratio);
};

//---------------------------------------------------------------------------//
/*!
 * Layered coaxial geometry, radii in cm.
 *
 * [0, r0) bore, [r0, r1) inner conductor, [r1, r2) magnetic shell with
 * relative permeability mu, [r2, r3) return conductor. r0 = 0 is accepted as
 * the solid-inner-conductor limit.
 */
class WireGeometry
{
  public:
    WireGeometry(double r0, double r1, double r2, double r3, double mu,
                 int n_turns, double length_z);

    double r0() const { return r0_; }
    double r1() const { return r1_; }
    double r2() const { return r2_; }
    double r3() const { return r3_; }
    double mu() const { return mu_; }
    int n_turns() const { return n_turns_; }
    double length_z() const { return length_z_; }

    MagneticCore core() const;

    //! Relative permeability at radius rho
    double permeability_at(double rho) const;

  private:
    double r0_, r1_, r2_, r3_;
    double mu_;
    int n_turns_;
    double length_z_;
};

//! Forward current I [statamp]; the return conductor carries -I.
struct CurrentLoad
{
    double i_total;

    //! Forward current density in the inner conductor (per winding)
    double j0(WireGeometry const& g) const;
    //! Return current density magnitude in the outer conductor
    double j1(WireGeometry const& g) const;
};

//! Azimuthal field H_phi(rho) [oersted]; enclosed current scales with N
double h_field(WireGeometry const& g, CurrentLoad const& load, double rho);

//! On-axis A_z(0) [statvolt] with the gauge A_z(r3) = 0
double vector_potential_axis(WireGeometry const& g, CurrentLoad const& load);

//! High-permeability limit (2 N mu I / c) ln(r2/r1) [statvolt]
double vector_potential_axis_highmu(WireGeometry const& g,
                                    CurrentLoad const& load);
double vector_potential_axis_highmu(MagneticCore const& core, double i_total);

struct Inductance
{
    double cgs;     //!< [s^2/cm]
    double henry;
};

//! L = 2 N^2 mu l_z ln(r2/r1) / c^2
Inductance inductance(WireGeometry const& g);
Inductance inductance(MagneticCore const& core);

}  // namespace emshift
