#pragma once

// Named quantities and figure tables shared by the CLI and the python module.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moshinsky/sweep_table.hpp"

namespace moshinsky {

/// Which argument a quantity is a function of.
enum class Parameter { K, E, Lambda, Concurrence, None };

/// Values supplied on the command line; unset fields are empty.
struct EvalArgs {
  std::optional<double> k;
  std::optional<double> e;
  std::optional<double> lambda;
  std::optional<double> concurrence;
  std::optional<double> r;
  std::optional<double> alpha;
  unsigned n = 0;
  unsigned m = 0;
  int quad_points = 64;
};

struct QuantityInfo {
  std::string name;
  Parameter parameter;
  std::string description;
  std::function<double(const EvalArgs&)> evaluate;
};

/// All quantities accepted by `eval` and `sweep --quantity`, in display order.
const std::vector<QuantityInfo>& quantity_registry();
/// nullptr when the name is unknown.
const QuantityInfo* find_quantity(const std::string& name);
const char* parameter_flag(Parameter p);

struct SweepRange {
  double min = 0.0;
  double max = 1.0;
  int points = 101;
};

std::vector<double> uniform_grid(const SweepRange& range);

/// fig1 .. fig10. Unset range fields fall back to the figure's default grid.
SweepTable figure_table(const std::string& figure, std::optional<double> range_min,
                        std::optional<double> range_max, std::optional<int> points,
                        int quad_points = 64);
bool is_figure(const std::string& name);

/// One quantity against its own parameter on a uniform grid.
SweepTable quantity_sweep(const QuantityInfo& quantity, const SweepRange& range, const EvalArgs& fixed);

}  // namespace moshinsky
