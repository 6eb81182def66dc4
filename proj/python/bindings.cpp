#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emshift/circuit_noise.hpp"
#include "emshift/errors.hpp"
#include "emshift/hollow_wire.hpp"
#include "emshift/mass_shift.hpp"
#include "emshift/photon_stats.hpp"
#include "emshift/runner.hpp"
#include "emshift/scenario.hpp"
#include "emshift/units.hpp"
#include "emshift/wl_comparison.hpp"

namespace py = pybind11;
using namespace emshift;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Electron mass shift from field fluctuations (cgs-Gaussian core)";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<cli::ScenarioError>(m, "ScenarioError", PyExc_ValueError);
    (void)domain_error;

    m.attr("constants_version") = units::constants_version;
    m.attr("tool_version") = cli::tool_version;

    // Units
    m.def("ev_to_temperature", &units::ev_to_temperature, py::arg("ev"));
    m.def("temperature_to_ev", &units::temperature_to_ev, py::arg("kelvin"));
    m.def("current_si_to_cgs", &units::current_si_to_cgs, py::arg("amp"));
    m.def("potential_cgs_to_si", &units::potential_cgs_to_si, py::arg("statvolt"));

    // Mass shift
    m.def("thermal_mass_shift", &thermal_mass_shift, py::arg("temperature_K"),
          "Relative thermal shift dm/m of the electron");

    // Widom-Larsen comparison
    m.def("proton_velocity",
          [](double hbar_omega_eV, double d_cm) {
              return wl::proton_velocity({hbar_omega_eV, d_cm});
          },
          py::arg("hbar_omega_eV"), py::arg("d_cm"));
    m.def("cg_wl_shift_ratio", &wl::cg_wl_shift_ratio, py::arg("v_over_c"));
    m.def("dressed_mass_ratio",
          py::overload_cast<double, double>(&wl::dressed_mass_ratio),
          py::arg("e_rms"), py::arg("critical_field"));
    m.def("critical_field", &wl::critical_field, py::arg("plasma_omega"));

    // Hollow wire
    py::class_<WireGeometry>(m, "WireGeometry")
        .def(py::init<double, double, double, double, double, int, double>(),
             py::arg("r0"), py::arg("r1"), py::arg("r2"), py::arg("r3"),
             py::arg("mu"), py::arg("n_turns") = 1, py::arg("length_z"))
        .def_property_readonly("mu", &WireGeometry::mu)
        .def_property_readonly("n_turns", &WireGeometry::n_turns);
    m.def("h_field",
          [](WireGeometry const& g, double i, double rho) {
              return h_field(g, CurrentLoad{i}, rho);
          },
          py::arg("geometry"), py::arg("current"), py::arg("rho"));
    m.def("vector_potential_axis",
          [](WireGeometry const& g, double i) {
              return vector_potential_axis(g, CurrentLoad{i});
          },
          py::arg("geometry"), py::arg("current"));
    m.def("inductance_henry",
          [](WireGeometry const& g) { return inductance(g).henry; },
          py::arg("geometry"));

    // Photon statistics
    py::class_<photon::LaserParams>(m, "LaserParams")
        .def(py::init<double, double, double>(), py::arg("alpha"),
             py::arg("beta"), py::arg("gamma"))
        .def_property_readonly("alpha", &photon::LaserParams::alpha)
        .def_property_readonly("beta", &photon::LaserParams::beta)
        .def_property_readonly("gamma", &photon::LaserParams::gamma)
        .def_property_readonly("delta", &photon::LaserParams::delta);
    m.def("steady_state",
          [](photon::LaserParams const& p, std::optional<std::size_t> n_max,
             std::string const& method) {
              auto const d = method == "recursion"
                                 ? photon::steady_state_recursion(p, n_max)
                                 : photon::steady_state_closed_form(p, n_max);
              return d.probs();
          },
          py::arg("params"), py::arg("n_max") = py::none(),
          py::arg("method") = "closed-form");
    m.def("gaussian_approx",
          [](photon::LaserParams const& p) {
              auto const g = photon::gaussian_approx(p);
              return py::make_tuple(g.mean, g.spread, g.valid);
          },
          py::arg("params"));
    m.def("effective_temperature_eV",
          [](photon::LaserParams const& p, double omega0) {
              return photon::effective_temperature(p, omega0).kT_eV;
          },
          py::arg("params"), py::arg("omega0"));

    // Circuit noise
    m.def("below_threshold_shift_eV",
          [](double mu, int n_turns, double length_z, double ln_ratio, double t_eff_K) {
              return circuit::below_threshold_mass_shift(
                         MagneticCore(mu, n_turns, length_z, ln_ratio), t_eff_K)
                  .dmc2_eV;
          },
          py::arg("mu"), py::arg("n_turns"), py::arg("length_z"),
          py::arg("ln_ratio"), py::arg("t_eff_K"));

    // Scenarios
    m.def("run_scenario",
          [](std::string const& text, std::string const& format) {
              auto const s = cli::parse_scenario(text);
              auto const table = cli::run_scenario(s);
              return format == "json" ? cli::to_json(table, s).dump()
                                      : cli::to_csv(table);
          },
          py::arg("text"), py::arg("format") = "csv",
          "Parse and run a scenario, returning CSV or JSON text");
}
