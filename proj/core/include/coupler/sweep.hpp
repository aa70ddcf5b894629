#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coupler/coefficients.hpp"
#include "coupler/witnesses.hpp"

namespace coupler {

/// Invalid sweep configuration (bad grid, unknown witness, malformed value).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain failure at one grid point; the message names the axis value.
class EvaluationError : public DomainError {
 public:
  EvaluationError(const std::string& what, double axis_value)
      : DomainError(what), axis_value_(axis_value) {}
  [[nodiscard]] double axis_value() const { return axis_value_; }

 private:
  double axis_value_;
};

/// Parses "re+imi" literals: "0.1+0i", "-1", "2.5i", "1e-3-2e-4i".
[[nodiscard]] Complex parse_complex(std::string_view text);

/// A named scalar witness, e.g. "VarY_a", "D_b1(3)", "E_ab1(2;1)", "E3_a|b1b2".
class WitnessSelector {
 public:
  /// Throws ConfigError for unknown names, modes or orders.
  [[nodiscard]] static WitnessSelector parse(std::string_view text);

  /// Canonical name; parse(name()) round-trips.
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] double evaluate(const Coefficients& c, const CoherentInput& in) const;

  friend bool operator==(const WitnessSelector& l, const WitnessSelector& r) { return l.name_ == r.name_; }

 private:
  std::string family_;
  std::string mode_;
  int m_ = 0;
  int n_ = 0;
  std::string name_;
};

/// Every witness at default orders (n = 2, 3 for A; 2..5 for D; (1,1),
/// (2,1), (2,2) for HZ on ab1).
[[nodiscard]] std::vector<WitnessSelector> all_witness_selectors();

enum class GridAxis { kLength, kRescaledLength };

[[nodiscard]] std::string_view axis_name(GridAxis axis);
[[nodiscard]] GridAxis parse_axis(std::string_view text);

struct GridSpec {
  double start = 0.0;
  double stop = 0.1;
  std::size_t points = 1000;

  /// Inclusive, evenly spaced.
  [[nodiscard]] std::vector<double> values() const;
};

struct SweepColumn {
  WitnessSelector selector;
  double display_scale = 1.0;
};

struct SweepConfig {
  CouplerParams params;  // length is supplied by the grid
  CoherentInput input;
  GridAxis axis = GridAxis::kRescaledLength;
  GridSpec grid;
  std::vector<SweepColumn> columns;
  /// Appended to every witness name, e.g. "@alpha=3"; empty for plain sweeps.
  std::string series;

  /// Throws ConfigError.
  void validate() const;
};

struct SweepRow {
  GridAxis axis;
  double axis_value;
  std::string witness;
  double value;
  double display_value;
};

/// Evaluates every column at every grid point, rows ordered by (axis value,
/// witness). Grid points are spread over `threads` workers (0 = hardware
/// concurrency); the result does not depend on the thread count.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads = 0);

/// Concatenates and re-sorts the rows of several sweeps.
[[nodiscard]] std::vector<SweepRow> merge_rows(std::vector<std::vector<SweepRow>> parts);

/// Header `axis,axis_value,witness,value,display_value`, 17 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace coupler
