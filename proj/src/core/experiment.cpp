#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace incid4 {

namespace {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& s) { return to_string(s); }

Scalar read_scalar(const json& j, const char* what) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  fail(ErrorCode::InvalidArgument, std::string(what) + " must be a rational string or an integer");
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return it->get<T>();
}

Scalar scalar_or(const json& obj, const char* key, const Scalar& fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return read_scalar(*it, key);
}

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Enclosure E(const Scalar& s) { return Enclosure(s); }

Verdict compare(const std::string& name, std::size_t empirical, const BoundResult& bound) {
  Verdict v;
  v.bound = name;
  v.empirical = empirical;
  v.value = bound.value;
  v.hypothesis_satisfied = bound.hypothesis_satisfied;
  v.holds = certainly_le(E(Scalar(static_cast<unsigned long>(empirical))), bound.value);
  if (!bound.hypothesis_satisfied) {
    v.status = VerdictStatus::Informational;
    v.detail = bound.hypothesis_detail;
  } else {
    v.status = v.holds ? VerdictStatus::Pass : VerdictStatus::Fail;
    v.detail = bound.hypothesis_detail;
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(ReportFormat format) { return format == ReportFormat::Csv ? "csv" : "text"; }

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Informational: return "out-of-regime, informational";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  if (!config_path) generator.validate();
  if (partition) partition->validate();
  constants.validate();
  if (bound_params.D < 2) fail(ErrorCode::InvalidArgument, "D must be at least 2");
  if (bound_params.epsilon <= 0) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (bound_params.regime_factor <= 0) fail(ErrorCode::InvalidArgument, "regime factor must be positive");
  if (dominance_constant <= 0) fail(ErrorCode::InvalidArgument, "dominance constant must be positive");
}

std::string serialize_spec(const ExperimentSpec& spec) {
  json g;
  g["kind"] = to_string(spec.generator.kind);
  g["lines"] = spec.generator.lines;
  g["planes"] = spec.generator.planes;
  g["planted_lines"] = spec.generator.planted_lines;
  g["planted_planes"] = spec.generator.planted_planes;
  g["coordinate_range"] = spec.generator.coordinate_range;
  json c = json::array();
  for (const auto& x : spec.generator.center) c.push_back(scalar_json(x));
  g["center"] = c;

  json root;
  root["generator"] = g;
  root["seed"] = spec.seed;
  root["config_path"] = spec.config_path ? json(spec.config_path->string()) : json(nullptr);
  if (spec.partition) {
    json p;
    p["J"] = spec.partition->J;
    p["delta"] = scalar_json(spec.partition->delta);
    p["lift_degree_schedule"] = spec.partition->lift_degree_schedule;
    p["seed"] = spec.partition->seed;
    root["partition"] = p;
  } else {
    root["partition"] = nullptr;
  }
  json b;
  b["D"] = scalar_json(spec.bound_params.D);
  b["epsilon"] = scalar_json(spec.bound_params.epsilon);
  b["regime_factor"] = scalar_json(spec.bound_params.regime_factor);
  root["bounds"] = b;
  json k;
  k["C1"] = scalar_json(spec.constants.C1);
  k["C2"] = scalar_json(spec.constants.C2);
  k["C4"] = scalar_json(spec.constants.C4);
  root["constants"] = k;
  root["dominance_constant"] = scalar_json(spec.dominance_constant);
  root["output"] = spec.output ? json(spec.output->string()) : json(nullptr);
  root["format"] = to_string(spec.format);
  root["strict"] = spec.strict;
  return root.dump();
}

ExperimentSpec parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed experiment spec", line, col);
  }
  if (!root.is_object()) throw ParseError("experiment spec must be a JSON object", 1, 1);
  ExperimentSpec spec;
  try {
    if (auto it = root.find("generator"); it != root.end() && !it->is_null()) {
      const json& g = *it;
      spec.generator.kind = parse_generator_kind(get_or<std::string>(g, "kind", "generic"));
      spec.generator.lines = get_or<std::size_t>(g, "lines", 0);
      spec.generator.planes = get_or<std::size_t>(g, "planes", 0);
      spec.generator.planted_lines = get_or<std::size_t>(g, "planted_lines", 0);
      spec.generator.planted_planes = get_or<std::size_t>(g, "planted_planes", 0);
      spec.generator.coordinate_range = get_or<std::int64_t>(g, "coordinate_range", 1000);
      if (auto c = g.find("center"); c != g.end() && !c->is_null()) {
        if (!c->is_array() || c->size() != 4) fail(ErrorCode::InvalidArgument, "center needs 4 coordinates");
        for (std::size_t i = 0; i < 4; ++i) spec.generator.center[i] = read_scalar((*c)[i], "center");
      }
    }
    spec.seed = get_or<std::uint64_t>(root, "seed", 0);
    if (auto it = root.find("config_path"); it != root.end() && !it->is_null())
      spec.config_path = it->get<std::string>();
    if (auto it = root.find("partition"); it != root.end() && !it->is_null()) {
      PartitionParams p;
      p.J = get_or<unsigned>(*it, "J", 0);
      p.delta = scalar_or(*it, "delta", 0);
      p.lift_degree_schedule = get_or<std::vector<unsigned>>(*it, "lift_degree_schedule", {});
      p.seed = get_or<std::uint64_t>(*it, "seed", 0);
      spec.partition = p;
    }
    if (auto it = root.find("bounds"); it != root.end() && !it->is_null()) {
      spec.bound_params.D = scalar_or(*it, "D", spec.bound_params.D);
      spec.bound_params.epsilon = scalar_or(*it, "epsilon", spec.bound_params.epsilon);
      spec.bound_params.regime_factor = scalar_or(*it, "regime_factor", spec.bound_params.regime_factor);
    }
    if (auto it = root.find("constants"); it != root.end() && !it->is_null()) {
      spec.constants.C1 = scalar_or(*it, "C1", 1);
      spec.constants.C2 = scalar_or(*it, "C2", 1);
      spec.constants.C4 = scalar_or(*it, "C4", 1);
    }
    spec.dominance_constant = scalar_or(root, "dominance_constant", spec.dominance_constant);
    if (auto it = root.find("output"); it != root.end() && !it->is_null()) spec.output = it->get<std::string>();
    spec.format = parse_report_format(get_or<std::string>(root, "format", "text"));
    spec.strict = get_or<bool>(root, "strict", false);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("experiment spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::size_t richness_threshold(std::size_t n, const Scalar& epsilon) {
  if (n == 0) return 2;
  Enclosure x = pow(E(Scalar(static_cast<unsigned long>(n))), Scalar(1, 2) + epsilon);
  Scalar c(static_cast<long>(std::ceil(x.mid())));
  while (!certainly_le(x, E(c))) c += 1;
  while (c > 1 && certainly_le(x, E(c - 1))) c -= 1;
  return std::max<std::size_t>(2, c.get_num().get_ui());
}

std::vector<Point4> partition_points(const ConfigurationSet& cfg, const IncidenceReport& report) {
  std::vector<Point4> pts;
  std::set<Point4> seen;
  auto add = [&](const Point4& p) {
    if (seen.insert(p).second) pts.push_back(p);
  };
  for (const auto& r : report.incidence_records) add(r.location);
  for (const auto& l : cfg.lines) add(l.base());
  return pts;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  ConfigurationSet cfg = spec.config_path ? load_config(*spec.config_path) : generate(spec.generator, spec.seed).config;

  ExperimentReport r;
  r.strict = spec.strict;
  r.spec_json = serialize_spec(spec);
  r.digest = config_digest(cfg);
  r.lines = cfg.line_count();
  r.planes = cfg.plane_count();
  r.incidences = count_incidences(cfg);
  if (spec.partition) {
    r.partition = build_partition(partition_points(cfg, r.incidences), *spec.partition);
    r.incidences = classify_by_partition(std::move(r.incidences), *r.partition);
  }

  const Scalar& eps = spec.bound_params.epsilon;
  r.flat_threshold = richness_threshold(r.lines, eps);
  r.hyperplane_threshold = richness_threshold(r.planes, eps);
  r.rich_flats = detect_rich_flat2(cfg.lines, r.flat_threshold);
  r.rich_hyperplanes = detect_rich_hyperplane(cfg.planes, r.hyperplane_threshold);

  if (r.lines == 0 || r.planes == 0) return r;

  BoundParams bp = spec.bound_params;
  bp.L = Scalar(static_cast<unsigned long>(r.lines));
  bp.S = Scalar(static_cast<unsigned long>(r.planes));
  r.bound_table = format_bound_table(bp, spec.constants, spec.dominance_constant);

  TotalBound total = eval_total_and_dominance(bp, spec.constants, spec.dominance_constant);
  r.verdicts.push_back(compare("main", r.incidences.point_incidences, total.main));
  r.verdicts.push_back(compare("total", r.incidences.point_incidences, total.total));
  if (r.partition) {
    std::size_t in_cells = 0;
    for (const auto& [cell, n] : r.incidences.per_cell) in_cells += n;
    r.verdicts.push_back(compare("cell_sum", in_cells, eval_cell_decomposition(bp).summed));
    r.verdicts.push_back(
        compare("zero_set_sum", r.incidences.zero_set_count, eval_zero_set_cases(bp, spec.constants).sum));
  }
  return r;
}

int ExperimentReport::exit_code() const {
  bool informational = false;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::Fail) return 2;
    informational |= v.status == VerdictStatus::Informational;
  }
  return strict && informational ? 3 : 0;
}

std::string ExperimentReport::render(ReportFormat format) const {
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << "# spec " << spec_json << "\n";
    os << "# config_digest " << digest << "\n";
    os << "bound,empirical,value,lower,upper,hypothesis,holds,status\n";
    for (const auto& v : verdicts) {
      char lo[64], hi[64];
      std::snprintf(lo, sizeof lo, "%.17g", v.value.lower());
      std::snprintf(hi, sizeof hi, "%.17g", v.value.upper());
      os << v.bound << "," << v.empirical << "," << v.value.to_string() << "," << lo << "," << hi << ","
         << (v.hypothesis_satisfied ? "true" : "false") << "," << (v.holds ? "true" : "false") << ","
         << csv_field(to_string(v.status)) << "\n";
    }
    return os.str();
  }
  os << "experiment\n";
  os << "spec " << spec_json << "\n";
  os << "config_digest " << digest << "\n";
  os << "lines " << lines << "\nplanes " << planes << "\n";
  os << "[incidences]\n" << format_incidence_report(incidences);
  os << "[partition]\n";
  if (partition) {
    os << "degree " << partition->degree() << "\n" << dump_partition(*partition);
  } else {
    os << "none\n";
  }
  os << "[detectors]\n";
  os << "flat_threshold " << flat_threshold << "\n";
  for (const auto& f : rich_flats) os << to_string(f) << "\n";
  os << "hyperplane_threshold " << hyperplane_threshold << "\n";
  for (const auto& h : rich_hyperplanes) os << to_string(h) << "\n";
  os << "[bounds]\n";
  os << (bound_table.empty() ? "skipped: empty configuration\n" : bound_table);
  os << "[verdicts]\n";
  for (const auto& v : verdicts)
    os << v.bound << " " << v.empirical << " <= " << v.value.to_string() << " " << to_string(v.status) << " ("
       << v.detail << ")\n";
  os << "exit_code " << exit_code() << "\n";
  return os.str();
}

void write_report(const ExperimentReport& report, const ExperimentSpec& spec) {
  if (!spec.output) return;
  std::ofstream out(*spec.output, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + spec.output->string() + " for writing");
  out << report.render(spec.format);
  if (!out) fail(ErrorCode::IoError, "failed writing " + spec.output->string());
}

std::string format_degeneracy_report(const ConfigurationSet& cfg, std::size_t flat_threshold,
                                     std::size_t hyperplane_threshold) {
  std::ostringstream os;
  auto flats = detect_rich_flat2(cfg.lines, flat_threshold);
  auto hyps = detect_rich_hyperplane(cfg.planes, hyperplane_threshold);
  os << "flat_threshold " << flat_threshold << "\n";
  os << "rich_flats " << flats.size() << "\n";
  for (const auto& f : flats) os << to_string(f) << "\n";
  os << "hyperplane_threshold " << hyperplane_threshold << "\n";
  os << "rich_hyperplanes " << hyps.size() << "\n";
  for (const auto& h : hyps) os << to_string(h) << "\n";
  return os.str();
}

namespace {

struct CrossingSummary {
  std::size_t worst_line = 0;
  std::size_t lines_in_zero_set = 0;
  std::size_t worst_plane = 0;
  std::size_t planes_in_zero_set = 0;
  std::vector<std::string> violations;
};

constexpr std::size_t kFlatSamples = 256;

CrossingSummary crossings(const ConfigurationSet& cfg, const PartitionPolynomial& part) {
  CrossingSummary c;
  const std::size_t line_bound = static_cast<std::size_t>(part.degree()) + 1;
  for (std::size_t i = 0; i < cfg.lines.size(); ++i) {
    try {
      auto st = line_crossing_stats(cfg.lines[i], part);
      c.worst_line = std::max(c.worst_line, st.distinct_cells);
      if (st.distinct_cells > line_bound) c.violations.push_back("line " + std::to_string(i));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LineInZeroSet) {
        ++c.lines_in_zero_set;
      } else if (e.code() == ErrorCode::InvariantViolation) {
        c.violations.push_back("line " + std::to_string(i) + ": " + e.what());
      } else {
        throw;
      }
    }
  }
  for (std::size_t j = 0; j < cfg.planes.size(); ++j) {
    try {
      auto st = flat2_crossing_stats(cfg.planes[j], part, kFlatSamples);
      c.worst_plane = std::max(c.worst_plane, st.distinct_cells);
      if (st.distinct_cells > st.bound) c.violations.push_back("plane " + std::to_string(j));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::FlatInZeroSet) {
        ++c.planes_in_zero_set;
      } else if (e.code() == ErrorCode::InvariantViolation) {
        c.violations.push_back("plane " + std::to_string(j) + ": " + e.what());
      } else {
        throw;
      }
    }
  }
  return c;
}

}  // namespace

std::string format_partition_report(const ConfigurationSet& cfg, const PartitionPolynomial& part) {
  std::ostringstream os;
  IncidenceReport inc = count_incidences(cfg);
  auto pts = partition_points(cfg, inc);
  auto occ = occupancy(pts, part);
  inc = classify_by_partition(std::move(inc), part);
  const long D = part.degree();
  char ref[32];
  std::snprintf(ref, sizeof ref, "%.6f", part.reference_degree());
  os << "rounds " << part.rounds() << "\n";
  os << "degree " << D << "\n";
  os << "reference_degree " << ref << "\n";
  os << "delta " << to_string(part.delta) << "\n";
  os << "points " << pts.size() << "\n";
  os << "occupied_cells " << occ.cells.size() << "\n";
  os << "largest_cell " << occ.largest << "\n";
  os << "cap " << cumulative_cap(pts.size(), static_cast<unsigned>(part.rounds()), part.delta) << "\n";
  os << "points_on_zero_set " << occ.zero_set << "\n";
  std::size_t in_cells = 0;
  for (const auto& [cell, n] : inc.per_cell) in_cells += n;
  os << "incidences_in_cells " << in_cells << "\n";
  os << "incidences_on_zero_set " << inc.zero_set_count << "\n";
  auto c = crossings(cfg, part);
  os << "max_line_cells " << c.worst_line << " bound " << D + 1 << "\n";
  os << "lines_in_zero_set " << c.lines_in_zero_set << "\n";
  os << "max_plane_cells " << c.worst_plane << " bound " << D * D + D + 1 << "\n";
  os << "planes_in_zero_set " << c.planes_in_zero_set << "\n";
  os << dump_partition(part);
  return os.str();
}

VerifyResult verify_configuration(const ConfigurationSet& cfg, const PartitionPolynomial* part) {
  VerifyResult v;
  std::ostringstream os;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    v.ok = v.ok && ok;
    os << name << (ok ? " ok" : " FAILED") << (detail.empty() ? "" : " " + detail) << "\n";
  };
  try {
    cfg.validate();
    check("distinct_objects", true, "");
  } catch (const Error& e) {
    check("distinct_objects", false, e.what());
  }
  IncidenceReport inc = count_incidences(cfg);
  std::set<std::pair<std::size_t, std::size_t>> hit;
  for (const auto& r : inc.incidence_records) hit.insert({r.line, r.plane});
  bool disjoint = hit.size() == inc.point_incidences;
  for (const auto& pr : inc.contained_pairs) disjoint = disjoint && !hit.count(pr);
  check("incidence_records", disjoint && inc.contained_pairs.size() == inc.containments,
        std::to_string(inc.point_incidences) + " incidences, " + std::to_string(inc.containments) + " containments");
  if (part) {
    std::size_t total = inc.point_incidences;
    try {
      IncidenceReport split = classify_by_partition(std::move(inc), *part);
      std::size_t in_cells = 0;
      for (const auto& [cell, n] : split.per_cell) in_cells += n;
      check("reconciliation", in_cells + split.zero_set_count == total,
            std::to_string(in_cells) + " + " + std::to_string(split.zero_set_count) + " = " + std::to_string(total));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvariantViolation) throw;
      check("reconciliation", false, e.what());
    }
    auto c = crossings(cfg, *part);
    std::string detail = "max lines " + std::to_string(c.worst_line) + ", max planes " + std::to_string(c.worst_plane);
    for (const auto& s : c.violations) detail += "; " + s;
    check("crossing_bounds", c.violations.empty(), detail);
  }
  v.report = os.str();
  return v;
}

std::vector<Scalar> regime_s_values(const Scalar& L, std::size_t count, const Scalar& factor) {
  if (L <= 0 || factor <= 0) fail(ErrorCode::InvalidArgument, "L and factor must be positive");
  std::vector<Scalar> out;
  if (count == 0) return out;
  // Smallest integer s >= factor * sqrt(L), i.e. s^2 >= factor^2 L.
  Scalar need = factor * factor * L;
  mpz_class lo;
  mpz_class t = need.get_num() / need.get_den();
  mpz_sqrt(lo.get_mpz_t(), t.get_mpz_t());
  while (Scalar(lo * lo) < need) ++lo;
  while (lo > 0 && Scalar((lo - 1) * (lo - 1)) >= need) --lo;
  Scalar upper = L / factor;
  mpz_class hi;
  mpz_fdiv_q(hi.get_mpz_t(), upper.get_num_mpz_t(), upper.get_den_mpz_t());
  if (lo > hi) return out;
  double a = lo.get_d(), b = hi.get_d();
  for (std::size_t i = 0; i < count; ++i) {
    Scalar v;
    if (i == 0) {
      v = lo;
    } else if (i + 1 == count) {
      v = hi;
    } else {
      double x = a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(count - 1));
      v = Scalar(static_cast<long>(std::llround(x)));
      if (v < Scalar(lo)) v = lo;
      if (v > Scalar(hi)) v = hi;
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

GridSpec parse_grid_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed grid spec", line, col);
  }
  if (!root.is_object()) throw ParseError("grid spec must be a JSON object", 1, 1);
  GridSpec g;
  auto list = [&](const char* key, std::vector<Scalar>& out) {
    auto it = root.find(key);
    if (it == root.end() || it->is_null()) return;
    if (!it->is_array()) fail(ErrorCode::InvalidArgument, std::string("grid ") + key + " must be an array");
    for (const auto& v : *it) out.push_back(read_scalar(v, key));
  };
  list("L", g.L);
  list("S", g.S);
  list("D", g.D);
  list("epsilon", g.epsilon);
  if (auto it = root.find("constants"); it != root.end() && !it->is_null()) {
    g.constants.C1 = scalar_or(*it, "C1", 1);
    g.constants.C2 = scalar_or(*it, "C2", 1);
    g.constants.C4 = scalar_or(*it, "C4", 1);
  }
  g.constants.validate();
  g.dominance_constant = scalar_or(root, "dominance_constant", g.dominance_constant);
  g.regime_factor = scalar_or(root, "regime_factor", g.regime_factor);
  return g;
}

GridResult run_grid(const GridSpec& grid) {
  GridResult result;
  for (const auto& L : grid.L)
    for (const auto& S : grid.S)
      for (const auto& D : grid.D)
        for (const auto& eps : grid.epsilon) {
          GridRow row;
          row.params.L = L;
          row.params.S = S;
          row.params.D = D;
          row.params.epsilon = eps;
          row.params.regime_factor = grid.regime_factor;
          row.in_regime = check_regime(L, S, grid.regime_factor).in_regime;
          row.total = eval_total_and_dominance(row.params, grid.constants, grid.dominance_constant);
          row.cell_sum = eval_cell_decomposition(row.params).summed;
          row.g2 = eval_g2_bound(row.params);
          row.g3 = eval_g3_bound(row.params);
          row.two = eval_two_surface_cases(row.params, grid.constants);
          row.three = eval_three_surface_cases(row.params, grid.constants);
          row.zero = eval_zero_set_cases(row.params, grid.constants);
          result.rows.push_back(std::move(row));
        }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const GridRow& a, const GridRow& b) {
    const auto& p = a.params;
    const auto& q = b.params;
    if (p.L != q.L) return p.L < q.L;
    if (p.S != q.S) return p.S < q.S;
    if (p.D != q.D) return p.D < q.D;
    return p.epsilon < q.epsilon;
  });

  std::ostringstream os;
  os << "L,S,D,epsilon,C1,C2,C3,C4,main,cell_sum,G2,G3,two_surface_case1,two_surface_case2,two_surface_case3,"
        "three_surface_case1,three_surface_case2,kst_intermediate,zero_set_case1,zero_set_case2,zero_set_case3,"
        "zero_set_case4,zero_set_sum,total,ratio,in_regime,G2_hypothesis,G3_hypothesis,total_hypothesis,dominated\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  const auto& c = grid.constants;
  for (const auto& r : result.rows) {
    const auto& p = r.params;
    os << to_string(p.L) << "," << to_string(p.S) << "," << to_string(p.D) << "," << to_string(p.epsilon) << ","
       << to_string(c.C1) << "," << to_string(c.C2) << "," << to_string(c.C3()) << "," << to_string(c.C4) << ","
       << r.total.main.value.to_string() << "," << r.cell_sum.value.to_string() << ","
       << r.g2.count.value.to_string() << "," << r.g3.count.value.to_string() << ","
       << r.two.case1.value.to_string() << "," << r.two.case2.value.to_string() << ","
       << r.two.case3.value.to_string() << "," << r.three.case1.value.to_string() << ","
       << r.three.case2.value.to_string() << "," << r.three.kst_intermediate.value.to_string() << ","
       << r.zero.case1.value.to_string() << "," << r.zero.case2.value.to_string() << ","
       << r.zero.case3.value.to_string() << "," << r.zero.case4.value.to_string() << ","
       << r.zero.sum.value.to_string() << "," << r.total.total.value.to_string() << "," << r.total.ratio.to_string()
       << "," << b(r.in_regime) << "," << b(r.g2.count.hypothesis_satisfied) << ","
       << b(r.g3.count.hypothesis_satisfied) << "," << b(r.total.total.hypothesis_satisfied) << ","
       << b(r.total.dominated) << "\n";
  }
  result.csv = os.str();

  const GridRow* best = nullptr;
  for (const auto& r : result.rows)
    if (r.in_regime && (!best || r.total.ratio.mid() > best->total.ratio.mid())) best = &r;
  if (result.rows.empty()) {
    result.summary = "no rows";
  } else if (!best) {
    result.summary = "rows " + std::to_string(result.rows.size()) + "; no in-regime rows";
  } else {
    std::size_t in = 0, dominated = 0;
    for (const auto& r : result.rows) {
      in += r.in_regime;
      dominated += r.in_regime && r.total.dominated;
    }
    const auto& p = best->params;
    result.summary = "rows " + std::to_string(result.rows.size()) + "; in-regime " + std::to_string(in) +
                     "; dominated " + std::to_string(dominated) + "; max ratio " + best->total.ratio.to_string() +
                     " at L=" + to_string(p.L) + " S=" + to_string(p.S) + " D=" + to_string(p.D) +
                     " epsilon=" + to_string(p.epsilon);
  }
  return result;
}

}  // namespace incid4
