#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "configuration.hpp"
#include "counting.hpp"
#include "degeneracy.hpp"
#include "partition.hpp"

namespace incid4 {

enum class ReportFormat { Text, Csv };

const char* to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view name);

struct ExperimentSpec {
  GeneratorSpec generator;
  std::uint64_t seed = 0;
  // When set the configuration is loaded from here and `generator` is ignored.
  std::optional<std::filesystem::path> config_path;
  std::optional<PartitionParams> partition;
  // L and S are taken from the configuration; D, epsilon and the regime
  // factor from here.
  BoundParams bound_params;
  ConstantsProfile constants;
  Scalar dominance_constant = 1000;
  std::optional<std::filesystem::path> output;
  ReportFormat format = ReportFormat::Text;
  bool strict = false;

  /// Throws InvalidArgument.
  void validate() const;
};

/// Canonical JSON; parse(serialize(s)) reproduces s.
std::string serialize_spec(const ExperimentSpec& spec);
ExperimentSpec parse_spec(std::string_view text);

enum class VerdictStatus { Pass, Fail, Informational };

const char* to_string(VerdictStatus status);

/// One comparison of an exact empirical count against a bound.
struct Verdict {
  std::string bound;
  std::size_t empirical = 0;
  Enclosure value;
  bool hypothesis_satisfied = false;
  bool holds = false;  // empirical <= upper end of value
  VerdictStatus status = VerdictStatus::Informational;
  std::string detail;
};

struct ExperimentReport {
  std::string spec_json;
  std::string digest;
  std::size_t lines = 0;
  std::size_t planes = 0;
  IncidenceReport incidences;
  std::optional<PartitionPolynomial> partition;
  std::size_t flat_threshold = 0;
  std::size_t hyperplane_threshold = 0;
  std::vector<RichFlatRecord> rich_flats;
  std::vector<RichFlatRecord> rich_hyperplanes;
  std::string bound_table;  // empty when L or S is 0
  std::vector<Verdict> verdicts;
  bool strict = false;

  /// 0 success, 2 a bound whose hypotheses hold was exceeded, 3 strict mode
  /// with an out-of-regime comparison.
  int exit_code() const;
  std::string render(ReportFormat format) const;
};

/// max(2, ceil(n^(1/2 + eps))); detector threshold for n objects.
std::size_t richness_threshold(std::size_t n, const Scalar& epsilon);

/// Points handed to build_partition: the incidence locations followed by the
/// base points of the lines, duplicates removed, in first-seen order.
std::vector<Point4> partition_points(const ConfigurationSet& cfg, const IncidenceReport& report);

ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Renders the report in spec.format and writes it to spec.output, if set.
void write_report(const ExperimentReport& report, const ExperimentSpec& spec);

/// Detector output at the given thresholds, one record per line.
std::string format_degeneracy_report(const ConfigurationSet& cfg, std::size_t flat_threshold,
                                     std::size_t hyperplane_threshold);

/// Degree, occupancy of partition_points, incidence attribution and the
/// worst line and plane crossings.
std::string format_partition_report(const ConfigurationSet& cfg, const PartitionPolynomial& part);

struct VerifyResult {
  bool ok = true;
  std::string report;  // one "check ok|FAILED detail" line per check
};

/// Re-derives the structural invariants: no duplicates, incidence and
/// containment sets disjoint, and with a partition the per-cell/zero-set
/// reconciliation plus the D+1 and D^2+D+1 crossing bounds.
VerifyResult verify_configuration(const ConfigurationSet& cfg, const PartitionPolynomial* part);

struct GridSpec {
  std::vector<Scalar> L;
  std::vector<Scalar> S;
  std::vector<Scalar> D;
  std::vector<Scalar> epsilon;
  ConstantsProfile constants;
  Scalar dominance_constant = 1000;
  Scalar regime_factor = 10;
};

struct GridRow {
  BoundParams params;
  bool in_regime = false;
  TotalBound total;
  BoundResult cell_sum;
  PruningBound g2;
  PruningBound g3;
  TwoSurfaceCases two;
  ThreeSurfaceCases three;
  ZeroSetCases zero;
};

struct GridResult {
  std::vector<GridRow> rows;  // sorted by (L, S, D, epsilon)
  std::string csv;
  std::string summary;
};

/// JSON with arrays "L", "S", "D", "epsilon" (rational strings or integers)
/// and optional "constants", "dominance_constant", "regime_factor".
GridSpec parse_grid_spec(std::string_view text);

GridResult run_grid(const GridSpec& grid);

/// `count` log-spaced integers in [ceil(factor L^(1/2)), floor(L / factor)],
/// duplicates removed. Empty when the range is.
std::vector<Scalar> regime_s_values(const Scalar& L, std::size_t count, const Scalar& factor = 10);

}  // namespace incid4
