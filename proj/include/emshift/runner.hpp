#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "scenario.hpp"

namespace emshift::cli
{
struct Column
{
    std::string name;
    std::string unit;   //!< empty for dimensionless/flags

    std::string header() const;
};

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct ResultTable
{
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
};

//! Domain failure at one sweep point
class SweepPointError : public DomainError
{
  public:
    SweepPointError(std::string const& what, int index, double value);

    int index() const { return index_; }
    double value() const { return value_; }

  private:
    int index_;
    double value_;
};

ResultTable run_scenario(Scenario const& s);

//! 12 significant digits, the precision used by both emitters
std::string format_number(double x);

std::string to_csv(ResultTable const& t);
nlohmann::ordered_json to_json(ResultTable const& t, Scenario const& s);

inline constexpr char const tool_version[] = "0.1.0";

}  // namespace emshift::cli
