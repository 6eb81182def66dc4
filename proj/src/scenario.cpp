#include "emshift/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "emshift/units.hpp"

namespace emshift::cli
{
namespace
{
using Units = std::map<std::string, double, std::less<>>;

constexpr auto const& k = units::codata2018;

Units const& unit_table(Dimension dim)
{
    static Units const temperature{
        {"K", 1.0},
        {"mK", 1e-3},
        {"meV", units::ev_to_temperature(1e-3)},
        {"eV", units::ev_to_temperature(1.0)},
        {"keV", units::ev_to_temperature(1e3)},
    };
    static Units const length{
        {"cm", 1.0},   {"m", 100.0},     {"mm", 0.1},
        {"um", 1e-4},  {"nm", 1e-7},     {"angstrom", 1e-8},
        {"Å", 1e-8},
    };
    static Units const energy{
        {"erg", 1.0},
        {"J", 1e7},
        {"meV", units::energy_ev_to_erg(1e-3)},
        {"eV", units::energy_ev_to_erg(1.0)},
        {"keV", units::energy_ev_to_erg(1e3)},
        {"MeV", units::energy_ev_to_erg(1e6)},
    };
    static Units const current{
        {"A", k.statamp_per_amp},
        {"mA", 1e-3 * k.statamp_per_amp},
        {"kA", 1e3 * k.statamp_per_amp},
        {"statA", 1.0},
        {"statamp", 1.0},
    };
    static Units const rate{{"1/s", 1.0}, {"/s", 1.0}, {"s^-1", 1.0}};
    static Units const angular{{"rad/s", 1.0}};
    static Units const time{
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}};
    static Units const capacitance{
        {"cm", 1.0},
        {"F", units::capacitance_si_to_cgs(1.0)},
        {"uF", units::capacitance_si_to_cgs(1e-6)},
        {"nF", units::capacitance_si_to_cgs(1e-9)},
        {"pF", units::capacitance_si_to_cgs(1e-12)},
    };
    static Units const none{};
    switch (dim)
    {
        case Dimension::temperature:
            return temperature;
        case Dimension::length:
            return length;
        case Dimension::energy:
            return energy;
        case Dimension::current:
            return current;
        case Dimension::rate:
            return rate;
        case Dimension::angular_freq:
            return angular;
        case Dimension::time:
            return time;
        case Dimension::capacitance:
            return capacitance;
        default:
            return none;
    }
}

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string join_units(Dimension dim)
{
    std::string out;
    for (auto const& [name, factor] : unit_table(dim))
    {
        out += out.empty() ? "" : ", ";
        out += name;
    }
    return out;
}

struct KindName
{
    ScenarioKind kind;
    std::string_view name;
};

constexpr KindName kind_names[] = {
    {ScenarioKind::thermal, "thermal"},
    {ScenarioKind::wl_comparison, "wl-comparison"},
    {ScenarioKind::hollow_wire_static, "hollow-wire-static"},
    {ScenarioKind::photon_steady_state, "photon-steady-state"},
    {ScenarioKind::photon_evolution, "photon-evolution"},
    {ScenarioKind::below_threshold_shift, "below-threshold-shift"},
    {ScenarioKind::above_threshold_shift, "above-threshold-shift"},
};

ParamSpec req(std::string name, Dimension dim)
{
    return {std::move(name), dim, true, {}, {}};
}

ParamSpec opt(std::string name, Dimension dim, std::string def = {})
{
    return {std::move(name), dim, false, std::move(def), {}};
}

ParamSpec pick(std::string name, std::vector<std::string> choices)
{
    std::string def = choices.front();
    return {std::move(name), Dimension::choice, false, std::move(def),
            std::move(choices)};
}

void append(std::vector<ParamSpec>& to, std::vector<ParamSpec> const& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

std::vector<ParamSpec> laser_specs()
{
    return {req("alpha", Dimension::rate), req("beta", Dimension::rate),
            req("gamma", Dimension::rate)};
}

std::vector<ParamSpec> core_specs()
{
    return {req("mu", Dimension::dimensionless),
            opt("N", Dimension::integer, "1"),
            req("l_z", Dimension::length),
            opt("ln_ratio", Dimension::dimensionless),
            opt("r1", Dimension::length),
            opt("r2", Dimension::length)};
}

std::map<ScenarioKind, std::vector<ParamSpec>> build_specs()
{
    using D = Dimension;
    std::map<ScenarioKind, std::vector<ParamSpec>> m;
    m[ScenarioKind::thermal] = {req("T", D::temperature)};
    m[ScenarioKind::wl_comparison]
        = {req("hbar_omega", D::energy), req("d", D::length),
           opt("u_rms", D::length), opt("plasma_omega", D::angular_freq)};
    m[ScenarioKind::hollow_wire_static]
        = {req("r0", D::length),         req("r1", D::length),
           req("r2", D::length),         req("r3", D::length),
           req("mu", D::dimensionless),  opt("N", D::integer, "1"),
           req("l_z", D::length),        req("I", D::current)};

    auto& steady = m[ScenarioKind::photon_steady_state];
    steady = laser_specs();
    steady.push_back(opt("n_max", D::integer));
    steady.push_back(pick("method", {"closed-form", "recursion"}));

    auto& evolve = m[ScenarioKind::photon_evolution];
    evolve = laser_specs();
    append(evolve, {req("t_final", D::time), opt("n_max", D::integer),
                    pick("initial", {"vacuum", "geometric", "uniform", "top"}),
                    opt("tol", D::dimensionless, "1e-8"),
                    pick("saturation", {"resummed", "lowest-order"})});

    auto& below = m[ScenarioKind::below_threshold_shift];
    below = core_specs();
    below.push_back(req("T_eff", D::temperature));

    auto& above = m[ScenarioKind::above_threshold_shift];
    above = core_specs();
    append(above, laser_specs());
    above.push_back(req("C", D::capacitance));
    return m;
}

ParamSpec const* find_spec(ScenarioKind kind, std::string_view name)
{
    for (auto const& p : parameter_specs(kind))
    {
        if (p.name == name)
        {
            return &p;
        }
    }
    return nullptr;
}

struct Entry
{
    std::string value;
    int line;
};

class Collector
{
  public:
    void add(int line, std::string msg)
    {
        diags_.push_back({line, std::move(msg)});
    }
    bool empty() const { return diags_.empty(); }
    std::vector<Diagnostic> take()
    {
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](Diagnostic const& a, Diagnostic const& b) {
                             return a.line < b.line;
                         });
        return std::move(diags_);
    }

  private:
    std::vector<Diagnostic> diags_;
};

// Parse one parameter value; false (with a diagnostic) on failure
bool parse_parameter(ParamSpec const& spec, Entry const& entry,
                     Parameter& out, Collector& diag)
{
    out.raw = entry.value;
    out.line = entry.line;
    if (spec.dim == Dimension::choice)
    {
        if (std::find(spec.choices.begin(), spec.choices.end(), entry.value)
            == spec.choices.end())
        {
            std::string all;
            for (auto const& c : spec.choices)
            {
                all += all.empty() ? c : ", " + c;
            }
            diag.add(entry.line, "parameter '" + spec.name + "': '"
                                     + entry.value + "' is not one of "
                                     + all);
            return false;
        }
        out.text = entry.value;
        return true;
    }
    try
    {
        out.value = parse_quantity(entry.value, spec.dim);
        return true;
    }
    catch (std::invalid_argument const& e)
    {
        diag.add(entry.line,
                 "parameter '" + spec.name + "': " + e.what());
        return false;
    }
}

}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(ScenarioKind kind)
{
    for (auto const& kn : kind_names)
    {
        if (kn.kind == kind)
        {
            return kn.name;
        }
    }
    return "unknown";
}

std::optional<ScenarioKind> kind_from_string(std::string_view s)
{
    for (auto const& kn : kind_names)
    {
        if (kn.name == s)
        {
            return kn.kind;
        }
    }
    return std::nullopt;
}

std::vector<ParamSpec> const& parameter_specs(ScenarioKind kind)
{
    static auto const specs = build_specs();
    return specs.at(kind);
}

double parse_quantity(std::string_view text, Dimension dim)
{
    text = trim(text);
    double number = 0;
    auto const [end, ec]
        = std::from_chars(text.data(), text.data() + text.size(), number);
    if (ec != std::errc{} || !std::isfinite(number))
    {
        throw std::invalid_argument("malformed number in '"
                                    + std::string(text) + "'");
    }
    std::string_view const unit
        = trim(text.substr(static_cast<std::size_t>(end - text.data())));

    if (dim == Dimension::dimensionless || dim == Dimension::integer)
    {
        if (!unit.empty())
        {
            throw std::invalid_argument("unexpected unit '"
                                        + std::string(unit)
                                        + "' on a dimensionless value");
        }
        if (dim == Dimension::integer && number != std::floor(number))
        {
            throw std::invalid_argument("expected an integer, got '"
                                        + std::string(text) + "'");
        }
        return number;
    }
    if (unit.empty())
    {
        throw std::invalid_argument("missing unit in '" + std::string(text)
                                    + "' (accepted: " + join_units(dim)
                                    + ")");
    }
    auto const& table = unit_table(dim);
    auto const it = table.find(unit);
    if (it == table.end())
    {
        throw std::invalid_argument("unknown unit '" + std::string(unit)
                                    + "' (accepted: " + join_units(dim)
                                    + ")");
    }
    return number * it->second;
}

std::vector<double> Sweep::values() const
{
    std::vector<double> v(static_cast<std::size_t>(std::max(points, 0)));
    if (v.empty())
    {
        return v;
    }
    if (points == 1)
    {
        v[0] = start;
        return v;
    }
    double const last = points - 1;
    for (int i = 0; i < points; ++i)
    {
        double const f = i / last;
        v[i] = scale == SweepScale::log
                   ? std::exp(std::log(start)
                              + f * (std::log(stop) - std::log(start)))
                   : start + f * (stop - start);
    }
    v.front() = start;
    v.back() = stop;
    return v;
}

bool Scenario::has(std::string const& name) const
{
    return parameters.count(name) > 0;
}

double Scenario::value(std::string const& name) const
{
    return parameters.at(name).value;
}

std::string const& Scenario::choice(std::string const& name) const
{
    return parameters.at(name).text;
}

ScenarioError::ScenarioError(std::vector<Diagnostic> diags)
    : std::runtime_error([&] {
        std::string msg = "invalid scenario:";
        for (auto const& d : diags)
        {
            msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
        }
        return msg;
    }())
    , diags_(std::move(diags))
{
}

//---------------------------------------------------------------------------//
Scenario parse_scenario(std::string_view text)
{
    Collector diag;
    std::map<std::string, Entry> entries;

    // Pass 1: split lines into unique key/value entries
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto const eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos
                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto const hash = line.find('#'); hash != std::string_view::npos)
        {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty())
        {
            continue;
        }
        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            diag.add(line_no, "expected 'key = value'");
            continue;
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty())
        {
            diag.add(line_no, "empty key or value");
            continue;
        }
        auto const [it, inserted]
            = entries.emplace(key, Entry{std::move(value), line_no});
        if (!inserted)
        {
            diag.add(line_no, "duplicate key '" + key + "' (first on line "
                                  + std::to_string(it->second.line) + ")");
        }
    }

    Scenario s;
    auto take = [&entries](std::string const& key) -> std::optional<Entry> {
        auto it = entries.find(key);
        if (it == entries.end())
        {
            return std::nullopt;
        }
        Entry e = std::move(it->second);
        entries.erase(it);
        return e;
    };

    // Kind
    auto const kind_entry = take("kind");
    if (!kind_entry)
    {
        diag.add(0, "missing required key 'kind'");
        throw ScenarioError(diag.take());
    }
    auto const kind = kind_from_string(kind_entry->value);
    if (!kind)
    {
        diag.add(kind_entry->line,
                 "unknown kind '" + kind_entry->value + "'");
        throw ScenarioError(diag.take());
    }
    s.kind = *kind;

    // Output
    if (auto f = take("output.format"))
    {
        if (f->value == "csv" || f->value == "json")
        {
            s.output.format = f->value == "csv" ? OutputFormat::csv
                                                : OutputFormat::json;
        }
        else
        {
            diag.add(f->line, "output.format must be csv or json");
        }
    }
    if (auto p = take("output.path"))
    {
        s.output.path = p->value;
    }

    // Sweep
    auto sweep_param = take("sweep.parameter");
    auto sweep_start = take("sweep.start");
    auto sweep_stop = take("sweep.stop");
    auto sweep_points = take("sweep.points");
    auto sweep_scale = take("sweep.scale");
    bool const any_sweep = sweep_param || sweep_start || sweep_stop
                           || sweep_points || sweep_scale;
    ParamSpec const* swept = nullptr;
    if (any_sweep)
    {
        Sweep sw;
        bool ok = true;
        if (!sweep_param || !sweep_start || !sweep_stop || !sweep_points)
        {
            diag.add(0, "sweep needs sweep.parameter, sweep.start, "
                        "sweep.stop and sweep.points");
            ok = false;
        }
        if (sweep_param)
        {
            sw.parameter = sweep_param->value;
            swept = find_spec(s.kind, sw.parameter);
            if (!swept || swept->dim == Dimension::choice)
            {
                diag.add(sweep_param->line,
                         "sweep parameter '" + sw.parameter
                             + "' is not a numeric parameter of kind "
                             + std::string(to_string(s.kind)));
                swept = nullptr;
                ok = false;
            }
        }
        auto bound = [&](std::optional<Entry> const& e, std::string& raw,
                         double& value) {
            if (!e || !swept)
            {
                return;
            }
            raw = e->value;
            try
            {
                value = parse_quantity(e->value, swept->dim);
            }
            catch (std::invalid_argument const& ex)
            {
                diag.add(e->line, std::string("sweep bound: ") + ex.what());
                ok = false;
            }
        };
        bound(sweep_start, sw.start_raw, sw.start);
        bound(sweep_stop, sw.stop_raw, sw.stop);
        if (sweep_points)
        {
            try
            {
                double const n
                    = parse_quantity(sweep_points->value, Dimension::integer);
                if (n < 1 || n > 1e6)
                {
                    throw std::invalid_argument("must be in [1, 1e6]");
                }
                sw.points = static_cast<int>(n);
            }
            catch (std::invalid_argument const& ex)
            {
                diag.add(sweep_points->line,
                         std::string("sweep.points: ") + ex.what());
                ok = false;
            }
        }
        if (sweep_scale)
        {
            if (sweep_scale->value == "linear" || sweep_scale->value == "log")
            {
                sw.scale = sweep_scale->value == "log" ? SweepScale::log
                                                       : SweepScale::linear;
            }
            else
            {
                diag.add(sweep_scale->line,
                         "sweep.scale must be linear or log");
                ok = false;
            }
        }
        if (ok && sw.scale == SweepScale::log
            && !(sw.start > 0 && sw.stop > 0))
        {
            diag.add(sweep_scale->line,
                     "log sweep needs positive start and stop");
            ok = false;
        }
        if (ok)
        {
            s.sweep = sw;
        }
    }

    // Parameters of the kind
    for (auto const& spec : parameter_specs(s.kind))
    {
        auto e = take(spec.name);
        bool const is_swept = swept && swept->name == spec.name;
        if (!e)
        {
            if (!spec.default_raw.empty())
            {
                e = Entry{spec.default_raw, 0};
            }
            else
            {
                if (spec.required && !is_swept)
                {
                    diag.add(0, "missing required parameter '" + spec.name
                                    + "'");
                }
                continue;
            }
        }
        Parameter p;
        if (parse_parameter(spec, *e, p, diag))
        {
            s.parameters.emplace(spec.name, std::move(p));
        }
    }
    for (auto const& [key, e] : entries)
    {
        diag.add(e.line, "unknown key '" + key + "' for kind "
                             + std::string(to_string(s.kind)));
    }

    // Kind-level constraints on statically given values
    auto line_of = [&s](char const* name) {
        auto it = s.parameters.find(name);
        return it == s.parameters.end() ? 0 : it->second.line;
    };
    auto has = [&s](char const* name) { return s.has(name); };
    if (has("mu") && !(s.value("mu") >= 1))
    {
        diag.add(line_of("mu"), "mu must be >= 1");
    }
    if (has("N") && !(s.value("N") >= 1))
    {
        diag.add(line_of("N"), "N must be >= 1");
    }
    switch (s.kind)
    {
        case ScenarioKind::hollow_wire_static:
            if (has("r0") && has("r1") && has("r2") && has("r3")
                && !(s.value("r0") >= 0 && s.value("r0") < s.value("r1")
                     && s.value("r1") < s.value("r2")
                     && s.value("r2") < s.value("r3")))
            {
                diag.add(line_of("r1"),
                         "radii must be ordered 0 <= r0 < r1 < r2 < r3");
            }
            break;
        case ScenarioKind::wl_comparison:
            if (has("u_rms") != has("plasma_omega"))
            {
                diag.add(0, "u_rms and plasma_omega must be given together");
            }
            break;
        case ScenarioKind::below_threshold_shift:
        case ScenarioKind::above_threshold_shift: {
            bool const by_ratio = has("ln_ratio");
            bool const by_radii = has("r1") || has("r2");
            if (by_ratio == by_radii)
            {
                diag.add(0, "give either ln_ratio or both r1 and r2");
            }
            else if (by_radii)
            {
                if (!has("r1") || !has("r2"))
                {
                    diag.add(0, "give both r1 and r2");
                }
                else if (!(s.value("r1") > 0
                           && s.value("r1") < s.value("r2")))
                {
                    diag.add(line_of("r1"),
                             "radii must be ordered 0 < r1 < r2");
                }
            }
            break;
        }
        default:
            break;
    }

    if (!diag.empty())
    {
        throw ScenarioError(diag.take());
    }
    return s;
}

std::string serialize_scenario(Scenario const& s)
{
    std::ostringstream os;
    os << "kind = " << to_string(s.kind) << '\n';
    for (auto const& spec : parameter_specs(s.kind))
    {
        auto it = s.parameters.find(spec.name);
        if (it != s.parameters.end())
        {
            os << spec.name << " = " << it->second.raw << '\n';
        }
    }
    if (s.sweep)
    {
        os << "sweep.parameter = " << s.sweep->parameter << '\n'
           << "sweep.start = " << s.sweep->start_raw << '\n'
           << "sweep.stop = " << s.sweep->stop_raw << '\n'
           << "sweep.points = " << s.sweep->points << '\n'
           << "sweep.scale = "
           << (s.sweep->scale == SweepScale::log ? "log" : "linear") << '\n';
    }
    os << "output.format = "
       << (s.output.format == OutputFormat::json ? "json" : "csv") << '\n';
    if (!s.output.path.empty())
    {
        os << "output.path = " << s.output.path << '\n';
    }
    return os.str();
}

}  // namespace emshift::cli
