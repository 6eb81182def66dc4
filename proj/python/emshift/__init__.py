"""Electron mass shift from electromagnetic-field fluctuations."""

from ._core import (
    DomainError,
    LaserParams,
    ScenarioError,
    WireGeometry,
    below_threshold_shift_eV,
    cg_wl_shift_ratio,
    constants_version,
    critical_field,
    current_si_to_cgs,
    dressed_mass_ratio,
    effective_temperature_eV,
    ev_to_temperature,
    gaussian_approx,
    h_field,
    inductance_henry,
    potential_cgs_to_si,
    proton_velocity,
    run_scenario,
    steady_state,
    temperature_to_ev,
    thermal_mass_shift,
    tool_version,
    vector_potential_axis,
)

__version__ = tool_version
