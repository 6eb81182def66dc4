#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace emshift::cli
{
enum class ScenarioKind
{
    thermal,
    wl_comparison,
    hollow_wire_static,
    photon_steady_state,
    photon_evolution,
    below_threshold_shift,
    above_threshold_shift,
};

std::string_view to_string(ScenarioKind k);
std::optional<ScenarioKind> kind_from_string(std::string_view s);

//! Physical dimension of a scenario parameter, which fixes accepted units
enum class Dimension
{
    temperature,    //!< stored in K; energy units accepted via k_B
    length,         //!< cm
    energy,         //!< erg
    current,        //!< statamp
    rate,           //!< 1/s
    angular_freq,   //!< rad/s
    time,           //!< s
    capacitance,    //!< cm
    dimensionless,
    integer,
    choice,
};

struct Parameter
{
    std::string raw;     //!< value text as written, unit included
    double value = 0;    //!< converted to internal cgs units
    std::string text;    //!< for choice parameters
    int line = 0;

    //! Equal content; the source line is not compared
    bool operator==(Parameter const& o) const
    {
        return raw == o.raw && value == o.value && text == o.text;
    }
};

enum class SweepScale
{
    linear,
    log,
};

struct Sweep
{
    std::string parameter;
    std::string start_raw;
    std::string stop_raw;
    double start = 0;
    double stop = 0;
    int points = 0;
    SweepScale scale = SweepScale::linear;

    //! Sweep values in internal units, in order
    std::vector<double> values() const;

    bool operator==(Sweep const&) const = default;
};

enum class OutputFormat
{
    csv,
    json,
};

struct OutputSpec
{
    OutputFormat format = OutputFormat::csv;
    std::string path;   //!< empty means stdout

    bool operator==(OutputSpec const&) const = default;
};

struct Scenario
{
    ScenarioKind kind = ScenarioKind::thermal;
    std::map<std::string, Parameter> parameters;
    std::optional<Sweep> sweep;
    OutputSpec output;

    bool has(std::string const& name) const;
    double value(std::string const& name) const;
    std::string const& choice(std::string const& name) const;

    bool operator==(Scenario const&) const = default;
};

struct Diagnostic
{
    int line;    //!< 0 when not tied to a line
    std::string message;
};

class ScenarioError : public std::runtime_error
{
  public:
    explicit ScenarioError(std::vector<Diagnostic> diags);

    std::vector<Diagnostic> const& diagnostics() const { return diags_; }

  private:
    std::vector<Diagnostic> diags_;
};

/*!
 * Parse and validate a scenario file.
 *
 * Line-oriented `key = value` text, `#` starts a comment. Keys: `kind`,
 * the kind's parameters, `sweep.parameter|start|stop|points|scale`, and
 * `output.format|path`. Dimensional values must carry a unit suffix. All
 * violations are collected before throwing ScenarioError.
 */
Scenario parse_scenario(std::string_view text);

//! Canonical text form; parse_scenario(serialize_scenario(s)) reproduces s
std::string serialize_scenario(Scenario const& s);

//! Parse "<number> <unit>" for a dimension into internal units
double parse_quantity(std::string_view text, Dimension dim);

struct ParamSpec
{
    std::string name;
    Dimension dim;
    bool required;
    std::string default_raw;            //!< used when absent and not required
    std::vector<std::string> choices;   //!< for Dimension::choice
};

//! Parameters understood by a scenario kind
std::vector<ParamSpec> const& parameter_specs(ScenarioKind k);

}  // namespace emshift::cli
