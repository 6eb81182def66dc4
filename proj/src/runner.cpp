#include "emshift/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "emshift/circuit_noise.hpp"
#include "emshift/hollow_wire.hpp"
#include "emshift/mass_shift.hpp"
#include "emshift/photon_stats.hpp"
#include "emshift/units.hpp"
#include "emshift/wl_comparison.hpp"

namespace emshift::cli
{
namespace
{
constexpr auto const& k = units::codata2018;

using Row = std::vector<Cell>;
using Rows = std::vector<Row>;

//! Parameter lookup for one sweep point
class Inputs
{
  public:
    Inputs(Scenario const& s, std::optional<double> swept)
        : s_(s), swept_(swept)
    {
    }

    bool has(std::string const& name) const
    {
        return is_swept(name) || s_.has(name);
    }

    double operator()(std::string const& name) const
    {
        return is_swept(name) ? *swept_ : s_.value(name);
    }

    std::string const& choice(std::string const& name) const
    {
        return s_.choice(name);
    }

  private:
    bool is_swept(std::string const& name) const
    {
        return swept_ && s_.sweep && s_.sweep->parameter == name;
    }

    Scenario const& s_;
    std::optional<double> swept_;
};

int as_int(double x)
{
    return static_cast<int>(std::lround(x));
}

MagneticCore core_from(Inputs const& in)
{
    double const ln_ratio = in.has("ln_ratio")
                                ? in("ln_ratio")
                                : std::log(in("r2") / in("r1"));
    return MagneticCore(in("mu"), as_int(in("N")), in("l_z"), ln_ratio);
}

photon::LaserParams laser_from(Inputs const& in)
{
    return photon::LaserParams(in("alpha"), in("beta"), in("gamma"));
}

std::optional<std::size_t> n_max_from(Inputs const& in)
{
    if (!in.has("n_max"))
    {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::llround(in("n_max")));
}

//---------------------------------------------------------------------------//
// Per-kind tables

struct KindTable
{
    std::vector<Column> columns;
    std::function<Rows(Inputs const&)> evaluate;
    //! Ladder kinds emit many rows per point and get a sweep column
    bool ladder = false;
};

Row shift_cells(circuit::ShiftReport const& r)
{
    return {r.dm_g, r.dmc2_erg, r.dmc2_eV, r.dmc2_joule, r.valid, r.regime};
}

std::vector<Column> shift_columns()
{
    return {{"dm", "g"},
            {"dmc2", "erg"},
            {"dmc2", "eV"},
            {"dmc2", "J"},
            {"valid", ""},
            {"regime", ""}};
}

KindTable thermal_table()
{
    return {{{"T", "K"},
             {"kT", "eV"},
             {"dm_over_m", ""},
             {"dmc2", "eV"},
             {"valid", ""}},
            [](Inputs const& in) {
                double const t = in("T");
                double const rel = thermal_mass_shift(t);
                double const rest_ev = units::energy_erg_to_ev(
                    units::electron_rest_energy_erg());
                return Rows{{t, units::temperature_to_ev(t), rel,
                             rel * rest_ev,
                             rel < circuit::max_trusted_relative_shift}};
            }};
}

KindTable wl_table(Scenario const& s)
{
    std::vector<Column> cols{{"hbar_omega", "eV"},
                             {"d", "cm"},
                             {"v_over_c", ""},
                             {"ET_over_EL", ""},
                             {"cg_over_wl", ""}};
    bool const with_field = s.has("u_rms")
                            || (s.sweep && s.sweep->parameter == "u_rms");
    if (with_field)
    {
        cols.insert(cols.end(), {{"u_rms", "cm"},
                                 {"plasma_omega", "rad/s"},
                                 {"E_rms", "statvolt/cm"},
                                 {"critical_field", "statvolt/cm"},
                                 {"mstar_over_m_wl", ""},
                                 {"dm_over_m_wl", ""},
                                 {"dm_over_m_cg", ""},
                                 {"dmc2_cg", "eV"}});
    }
    return {cols, [with_field](Inputs const& in) {
                double const hw = units::energy_erg_to_ev(in("hbar_omega"));
                double const d = in("d");
                double const v = wl::proton_velocity({hw, d});
                double const ratio = wl::cg_wl_shift_ratio(v);
                Row row{hw, d, v, wl::transverse_longitudinal_ratio(v), ratio};
                if (with_field)
                {
                    double const u = in("u_rms");
                    double const omega = in("plasma_omega");
                    double const e_rms = wl::field_estimate(u);
                    double const crit = wl::critical_field(omega);
                    double const mstar = wl::dressed_mass_ratio(e_rms, crit);
                    double const dm_cg = (mstar - 1) * ratio;
                    double const rest_ev = units::energy_erg_to_ev(
                        units::electron_rest_energy_erg());
                    row.insert(row.end(), {u, omega, e_rms, crit, mstar,
                                           mstar - 1, dm_cg, dm_cg * rest_ev});
                }
                return Rows{row};
            }};
}

KindTable hollow_wire_table()
{
    return {{{"I", "A"},
             {"A_z", "statvolt"},
             {"A_z", "V"},
             {"A_z_highmu", "statvolt"},
             {"A_z_highmu", "V"},
             {"highmu_rel_diff", ""},
             {"H_gap_inner", "Oe"},
             {"L", "s^2/cm"},
             {"L", "H"}},
            [](Inputs const& in) {
                WireGeometry const g(in("r0"), in("r1"), in("r2"), in("r3"),
                                     in("mu"), as_int(in("N")), in("l_z"));
                CurrentLoad const load{in("I")};
                double const full = vector_potential_axis(g, load);
                double const high = vector_potential_axis_highmu(g, load);
                auto const l = inductance(g);
                double const rel = full != 0 ? (full - high) / full : 0.0;
                return Rows{{units::current_cgs_to_si(load.i_total), full,
                             units::potential_cgs_to_si(full), high,
                             units::potential_cgs_to_si(high), rel,
                             h_field(g, load, g.r1()), l.cgs, l.henry}};
            }};
}

KindTable steady_state_table()
{
    return {{{"n", ""}, {"p", ""}, {"construction", ""}, {"gaussian_valid", ""}},
            [](Inputs const& in) {
                auto const params = laser_from(in);
                auto const n_max = n_max_from(in);
                auto const dist = in.choice("method") == "recursion"
                                      ? photon::steady_state_recursion(params,
                                                                       n_max)
                                      : photon::steady_state_closed_form(
                                          params, n_max);
                bool gauss_ok = false;
                if (params.alpha() >= params.gamma())
                {
                    gauss_ok = photon::gaussian_approx(params).valid;
                }
                std::string const how(to_string(dist.construction()));
                Rows rows;
                rows.reserve(dist.probs().size());
                for (std::size_t n = 0; n < dist.probs().size(); ++n)
                {
                    rows.push_back({static_cast<std::int64_t>(n), dist[n], how,
                                    gauss_ok});
                }
                return rows;
            },
            true};
}

photon::PhotonDistribution initial_state(std::string const& name,
                                         std::size_t n_max)
{
    if (name == "vacuum")
    {
        return photon::PhotonDistribution::delta(0, n_max);
    }
    if (name == "top")
    {
        return photon::PhotonDistribution::delta(n_max, n_max);
    }
    std::vector<double> p(n_max + 1, 1.0);
    if (name == "geometric")
    {
        for (std::size_t n = 0; n <= n_max; ++n)
        {
            p[n] = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 1000)));
        }
    }
    return {std::move(p), photon::Construction::user};
}

KindTable evolution_table()
{
    return {{{"n", ""}, {"p", ""}, {"p_stationary", ""}, {"mass_conserved", ""}},
            [](Inputs const& in) {
                auto const params = laser_from(in);
                photon::EvolveOptions opts;
                opts.rel_tol = in("tol");
                opts.saturation = in.choice("saturation") == "lowest-order"
                                      ? photon::SaturationModel::lowest_order
                                      : photon::SaturationModel::resummed;
                std::size_t const n_max
                    = n_max_from(in).value_or(photon::default_n_max(params));
                auto const p0 = initial_state(in.choice("initial"), n_max);
                auto const result = photon::evolve_master_equation(
                    params, p0, in("t_final"), opts);
                auto const stationary = photon::stationary_distribution(
                    params, n_max, opts.saturation);
                bool const conserved = result.max_mass_error <= 1e-9;
                Rows rows;
                rows.reserve(n_max + 1);
                for (std::size_t n = 0; n <= n_max; ++n)
                {
                    rows.push_back({static_cast<std::int64_t>(n),
                                    result.dist[n], stationary[n], conserved});
                }
                return rows;
            },
            true};
}

KindTable below_shift_table()
{
    std::vector<Column> cols{{"T_eff", "K"}, {"kT_eff", "eV"}};
    auto const sc = shift_columns();
    cols.insert(cols.end(), sc.begin(), sc.end());
    cols.insert(cols.end(), {{"prefactor", "eV"},
                             {"ln_factor", ""},
                             {"length_factor", ""},
                             {"mu_factor", ""},
                             {"temperature_factor", ""}});
    return {cols, [](Inputs const& in) {
                auto const core = core_from(in);
                double const t = in("T_eff");
                auto const shift = circuit::below_threshold_mass_shift(core, t);
                auto const scaling = circuit::energy_shift_scaling(core, t);
                Row row{t, units::temperature_to_ev(t)};
                auto const cells = shift_cells(shift);
                row.insert(row.end(), cells.begin(), cells.end());
                row.insert(row.end(),
                           {scaling.prefactor_eV, scaling.ln_factor,
                            scaling.length_factor, scaling.mu_factor,
                            scaling.temperature_factor});
                return Rows{row};
            }};
}

KindTable above_shift_table()
{
    std::vector<Column> cols{{"alpha", "1/s"},
                             {"beta", "1/s"},
                             {"gamma", "1/s"},
                             {"n_mean", ""},
                             {"n_spread", ""},
                             {"gaussian_valid", ""},
                             {"L", "s^2/cm"},
                             {"L", "H"},
                             {"omega0", "rad/s"},
                             {"I_peak", "statA"},
                             {"I_peak", "A"},
                             {"I_variance", "statA^2"},
                             {"I_variance", "A^2"}};
    auto const sc = shift_columns();
    cols.insert(cols.end(), sc.begin(), sc.end());
    return {cols, [](Inputs const& in) {
                auto const core = core_from(in);
                auto const params = laser_from(in);
                auto const gauss = photon::gaussian_approx(params);
                auto const l = inductance(core);
                circuit::CircuitParams const lc(l.cgs, in("C"));
                auto const stats = circuit::current_variance_above_threshold(
                    gauss.mean, gauss.spread * gauss.spread, lc);
                auto const shift = circuit::mass_shift_from_current_variance(
                    core, stats.variance, circuit::Regime::above_threshold);
                double const amp = k.statamp_per_amp;
                Row row{params.alpha(),
                        params.beta(),
                        params.gamma(),
                        gauss.mean,
                        gauss.spread,
                        gauss.valid,
                        l.cgs,
                        l.henry,
                        lc.omega0(),
                        stats.mean_peak,
                        stats.mean_peak / amp,
                        stats.variance,
                        stats.variance / (amp * amp)};
                auto const cells = shift_cells(shift);
                row.insert(row.end(), cells.begin(), cells.end());
                return Rows{row};
            }};
}

KindTable table_for(Scenario const& s)
{
    switch (s.kind)
    {
        case ScenarioKind::thermal:
            return thermal_table();
        case ScenarioKind::wl_comparison:
            return wl_table(s);
        case ScenarioKind::hollow_wire_static:
            return hollow_wire_table();
        case ScenarioKind::photon_steady_state:
            return steady_state_table();
        case ScenarioKind::photon_evolution:
            return evolution_table();
        case ScenarioKind::below_threshold_shift:
            return below_shift_table();
        case ScenarioKind::above_threshold_shift:
            return above_shift_table();
    }
    throw DomainError("unsupported scenario kind");
}

std::string sweep_unit(Scenario const& s)
{
    for (auto const& spec : parameter_specs(s.kind))
    {
        if (spec.name == s.sweep->parameter)
        {
            switch (spec.dim)
            {
                case Dimension::temperature:
                    return "K";
                case Dimension::length:
                case Dimension::capacitance:
                    return "cm";
                case Dimension::energy:
                    return "erg";
                case Dimension::current:
                    return "statA";
                case Dimension::rate:
                    return "1/s";
                case Dimension::angular_freq:
                    return "rad/s";
                case Dimension::time:
                    return "s";
                default:
                    return "";
            }
        }
    }
    return "";
}

}  // namespace

//---------------------------------------------------------------------------//
std::string Column::header() const
{
    return unit.empty() ? name : name + " (" + unit + ")";
}

SweepPointError::SweepPointError(std::string const& what, int index,
                                 double value)
    : DomainError(what), index_(index), value_(value)
{
}

ResultTable run_scenario(Scenario const& s)
{
    KindTable const kind = table_for(s);
    ResultTable table;
    table.columns = kind.columns;

    if (!s.sweep)
    {
        table.rows = kind.evaluate(Inputs(s, std::nullopt));
        return table;
    }

    std::vector<double> const points = s.sweep->values();
    std::vector<Rows> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());

    // Independent points run concurrently; rows are joined in sweep order
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++)
        {
            try
            {
                results[i] = kind.evaluate(Inputs(s, points[i]));
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned const n_threads = std::max(
        1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                               static_cast<unsigned>(points.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
    {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (!errors[i])
        {
            continue;
        }
        std::string what = "unknown error";
        try
        {
            std::rethrow_exception(errors[i]);
        }
        catch (std::exception const& e)
        {
            what = e.what();
        }
        throw SweepPointError("sweep point " + std::to_string(i) + " ("
                                  + s.sweep->parameter + " = "
                                  + format_number(points[i]) + "): " + what,
                              static_cast<int>(i), points[i]);
    }

    if (kind.ladder)
    {
        table.columns.insert(table.columns.begin(),
                             Column{s.sweep->parameter, sweep_unit(s)});
    }
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        for (auto& row : results[i])
        {
            if (kind.ladder)
            {
                row.insert(row.begin(), Cell{points[i]});
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string format_number(double x)
{
    if (std::isnan(x))
    {
        return "nan";
    }
    if (std::isinf(x))
    {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace
{
std::string cell_text(Cell const& c)
{
    return std::visit(
        [](auto const& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
            {
                return format_number(v);
            }
            else if constexpr (std::is_same_v<T, bool>)
            {
                return v ? "true" : "false";
            }
            else if constexpr (std::is_same_v<T, std::int64_t>)
            {
                return std::to_string(v);
            }
            else
            {
                return v;
            }
        },
        c);
}

nlohmann::ordered_json cell_json(Cell const& c)
{
    return std::visit(
        [](auto const& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
            {
                if (!std::isfinite(v))
                {
                    return format_number(v);
                }
                // Same 12-digit rounding as the CSV emitter
                return std::strtod(format_number(v).c_str(), nullptr);
            }
            else
            {
                return v;
            }
        },
        c);
}
}  // namespace

std::string to_csv(ResultTable const& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
    {
        out += (i ? "," : "") + t.columns[i].header();
    }
    out += '\n';
    for (auto const& row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
            {
                out += ',';
            }
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(ResultTable const& t, Scenario const& s)
{
    nlohmann::ordered_json meta;
    meta["kind"] = std::string(to_string(s.kind));
    meta["scenario"] = serialize_scenario(s);
    meta["constants_version"] = units::constants_version;
    meta["tool_version"] = tool_version;
    auto& cols = meta["columns"] = nlohmann::ordered_json::array();
    for (auto const& c : t.columns)
    {
        cols.push_back(c.header());
    }

    // Shift tables also carry a compact report record per row
    auto find = [&t](std::string const& header) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
        {
            if (t.columns[i].header() == header)
            {
                return static_cast<std::ptrdiff_t>(i);
            }
        }
        return -1;
    };
    std::ptrdiff_t const cgs = find("dmc2 (erg)");
    std::ptrdiff_t const si = find("dmc2 (J)");
    std::ptrdiff_t const valid = find("valid");
    std::ptrdiff_t const regime = find("regime");
    bool const has_shift = cgs >= 0 && si >= 0 && valid >= 0 && regime >= 0;

    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : t.rows)
    {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            obj[t.columns[i].header()] = cell_json(row[i]);
        }
        if (has_shift)
        {
            obj["shift"] = {{"value_cgs", cell_json(row[cgs])},
                            {"value_si", cell_json(row[si])},
                            {"validity_flag", cell_json(row[valid])},
                            {"regime", cell_json(row[regime])}};
        }
        rows.push_back(std::move(obj));
    }
    return {{"metadata", std::move(meta)}, {"rows", std::move(rows)}};
}

}  // namespace emshift::cli
