// Command-line front end; talks to the library only through the C API.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incid4/incid4.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitStrict = 3;

struct Failure {
  i4_status status;
  std::string message;
};

void check(i4_status s) {
  if (s != I4_OK) throw Failure{s, i4_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  i4_string_free(s);
  return out;
}

struct ConfigHandle {
  i4_config* p = nullptr;
  ~ConfigHandle() { i4_config_free(p); }
};

struct PartitionHandle {
  i4_partition* p = nullptr;
  ~PartitionHandle() { i4_partition_free(p); }
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t L = 0;
  std::size_t S = 0;
  std::string D = "2";
  std::string epsilon = "1/10";
  unsigned J = 0;
  std::string delta = "0";
  std::string out;
  std::string format = "text";
  bool strict = false;

  std::string in;
  std::string kind = "generic";
  std::size_t planted_lines = 0;
  std::size_t planted_planes = 0;
  std::int64_t range = 0;
  std::string C1 = "1", C2 = "1", C4 = "1";
  std::string regime_factor = "10";
  std::size_t flat_threshold = 0;
  std::size_t hyperplane_threshold = 0;
  std::string spec;

  // grid lists, comma separated
  std::string grid_L, grid_S, grid_D, grid_eps;
};

void add_shared(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "RNG seed");
  sub->add_option("--L", o.L, "number of lines");
  sub->add_option("--S", o.S, "number of 2-planes");
  sub->add_option("--D", o.D, "partition degree in the bounds");
  sub->add_option("--epsilon", o.epsilon, "epsilon, rational");
  sub->add_option("--J", o.J, "partition rounds");
  sub->add_option("--delta", o.delta, "bisection slack, rational in [0, 1)");
  sub->add_option("--out", o.out, "output file (default: stdout or $INCID4_OUT_DIR)");
  sub->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  sub->add_flag("--strict", o.strict, "treat out-of-regime comparisons as failures");
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "configuration JSON to load instead of generating");
  sub->add_option("--kind", o.kind, "generator: generic, star, planted-flat, planted-hyperplane, mixed");
  sub->add_option("--planted-lines", o.planted_lines, "lines in the planted 2-flat");
  sub->add_option("--planted-planes", o.planted_planes, "planes in the planted hyperplane");
  sub->add_option("--range", o.range, "coordinate range of generated objects");
}

void add_constants(CLI::App* sub, Options& o) {
  sub->add_option("--C1", o.C1);
  sub->add_option("--C2", o.C2);
  sub->add_option("--C4", o.C4);
  sub->add_option("--regime-factor", o.regime_factor);
}

void emit(const Options& o, const std::string& default_name, const std::string& text) {
  std::filesystem::path target;
  if (!o.out.empty()) {
    target = o.out;
  } else if (const char* dir = std::getenv("INCID4_OUT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    target = std::filesystem::path(dir) / default_name;
  } else {
    std::cout << text;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw Failure{I4_IO_ERROR, "cannot open " + target.string() + " for writing"};
  f << text;
  if (!f) throw Failure{I4_IO_ERROR, "failed writing " + target.string()};
}

std::string ext(const Options& o) { return o.format == "csv" ? ".csv" : ".txt"; }

void load_config(const Options& o, ConfigHandle& cfg) {
  if (!o.in.empty()) {
    check(i4_config_load(o.in.c_str(), &cfg.p));
    return;
  }
  i4_generator g{o.kind.c_str(), o.L, o.S, o.planted_lines, o.planted_planes, o.range};
  check(i4_config_generate(&g, o.seed, &cfg.p));
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json generator_json(const Options& o) {
  json g;
  g["kind"] = o.kind;
  g["lines"] = o.L;
  g["planes"] = o.S;
  g["planted_lines"] = o.planted_lines;
  g["planted_planes"] = o.planted_planes;
  if (o.range != 0) g["coordinate_range"] = o.range;
  return g;
}

int cmd_gen(const Options& o) {
  ConfigHandle cfg;
  load_config(o, cfg);
  char* text = nullptr;
  check(i4_config_serialize(cfg.p, &text));
  emit(o, "config.json", take(text));
  return 0;
}

int cmd_count(const Options& o) {
  ConfigHandle cfg;
  load_config(o, cfg);
  PartitionHandle part;
  if (o.J > 0) check(i4_partition_build(cfg.p, o.J, o.delta.c_str(), o.seed, &part.p));
  char* text = nullptr;
  check(i4_count_report(cfg.p, part.p, o.format == "csv", &text));
  emit(o, "count" + ext(o), take(text));
  return 0;
}

int cmd_partition(const Options& o) {
  ConfigHandle cfg;
  load_config(o, cfg);
  PartitionHandle part;
  check(i4_partition_build(cfg.p, o.J, o.delta.c_str(), o.seed, &part.p));
  char* text = nullptr;
  if (o.format == "csv")
    check(i4_count_report(cfg.p, part.p, 1, &text));
  else
    check(i4_partition_report(cfg.p, part.p, &text));
  emit(o, "partition" + ext(o), take(text));
  return 0;
}

int cmd_degeneracy(const Options& o) {
  ConfigHandle cfg;
  load_config(o, cfg);
  char* text = nullptr;
  check(i4_degeneracy_report(cfg.p, o.epsilon.c_str(), o.flat_threshold, o.hyperplane_threshold, &text));
  emit(o, "degeneracy.txt", take(text));
  return 0;
}

json constants_json(const Options& o) { return json{{"C1", o.C1}, {"C2", o.C2}, {"C4", o.C4}}; }

int cmd_bounds(const Options& o) {
  std::string L = std::to_string(o.L ? o.L : 1), S = std::to_string(o.S ? o.S : 1);
  i4_bound_params p{L.c_str(),       S.c_str(),        o.D.c_str(),      o.epsilon.c_str(), o.regime_factor.c_str(),
                    o.C1.c_str(),    o.C2.c_str(),     o.C4.c_str(),     nullptr};
  int in_regime = 0;
  check(i4_bound_in_regime(&p, &in_regime));
  std::string text;
  if (o.format == "csv") {
    json grid{{"L", {L}}, {"S", {S}}, {"D", {o.D}}, {"epsilon", {o.epsilon}}, {"constants", constants_json(o)},
              {"regime_factor", o.regime_factor}};
    char* csv = nullptr;
    check(i4_grid(grid.dump().c_str(), &csv, nullptr));
    text = take(csv);
  } else {
    char* table = nullptr;
    check(i4_bound_table(&p, &table));
    text = take(table);
  }
  emit(o, "bounds" + ext(o), text);
  if (o.strict && !in_regime) {
    std::cerr << "strict: parameters are outside the regime\n";
    return kExitStrict;
  }
  return 0;
}

int cmd_grid(const Options& o) {
  json grid;
  if (!o.spec.empty()) {
    std::ifstream f(o.spec);
    if (!f) throw Failure{I4_IO_ERROR, "cannot read " + o.spec};
    std::stringstream ss;
    ss << f.rdbuf();
    grid = json::parse(ss.str(), nullptr, false);
    if (grid.is_discarded()) throw Failure{I4_PARSE_ERROR, "malformed grid spec " + o.spec};
  } else {
    grid["L"] = split(o.grid_L.empty() ? std::to_string(o.L) : o.grid_L);
    grid["S"] = split(o.grid_S.empty() ? std::to_string(o.S) : o.grid_S);
    grid["D"] = split(o.grid_D.empty() ? o.D : o.grid_D);
    grid["epsilon"] = split(o.grid_eps.empty() ? o.epsilon : o.grid_eps);
    grid["constants"] = constants_json(o);
    grid["regime_factor"] = o.regime_factor;
  }
  char *csv = nullptr, *summary = nullptr;
  check(i4_grid(grid.dump().c_str(), &csv, &summary));
  std::string table = take(csv), sum = take(summary);
  if (o.format == "csv") {
    emit(o, "grid.csv", table);
    std::cerr << "summary " << sum << "\n";
  } else {
    emit(o, "grid.txt", "summary " + sum + "\n" + table);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  json spec;
  if (!o.spec.empty()) {
    std::ifstream f(o.spec);
    if (!f) throw Failure{I4_IO_ERROR, "cannot read " + o.spec};
    std::stringstream ss;
    ss << f.rdbuf();
    spec = json::parse(ss.str(), nullptr, false);
    if (spec.is_discarded()) throw Failure{I4_PARSE_ERROR, "malformed experiment spec " + o.spec};
  } else {
    spec["generator"] = generator_json(o);
    spec["seed"] = o.seed;
    if (!o.in.empty()) spec["config_path"] = o.in;
    if (o.J > 0) spec["partition"] = json{{"J", o.J}, {"delta", o.delta}, {"seed", o.seed}};
    spec["bounds"] = json{{"D", o.D}, {"epsilon", o.epsilon}, {"regime_factor", o.regime_factor}};
    spec["constants"] = constants_json(o);
    spec["format"] = o.format;
    spec["strict"] = o.strict;
  }
  char* report = nullptr;
  int code = 0;
  check(i4_experiment_run(spec.dump().c_str(), &report, &code));
  std::string text = take(report);

  // Structural checks on the same configuration.
  ConfigHandle cfg;
  if (spec.contains("config_path") && spec["config_path"].is_string()) {
    check(i4_config_load(spec["config_path"].get<std::string>().c_str(), &cfg.p));
  } else {
    const json& g = spec.value("generator", json::object());
    std::string kind = g.value("kind", std::string("generic"));
    i4_generator gen{kind.c_str(),
                     g.value("lines", std::size_t{0}),
                     g.value("planes", std::size_t{0}),
                     g.value("planted_lines", std::size_t{0}),
                     g.value("planted_planes", std::size_t{0}),
                     g.value("coordinate_range", std::int64_t{0})};
    check(i4_config_generate(&gen, spec.value("seed", std::uint64_t{0}), &cfg.p));
  }
  char* checks = nullptr;
  i4_status vs = i4_verify(cfg.p, nullptr, &checks);
  std::string structural = take(checks);
  if (vs != I4_OK && vs != I4_INVARIANT_VIOLATION) check(vs);
  if (o.format == "text") text += "[checks]\n" + structural;
  emit(o, "verify" + ext(o), text);
  if (vs == I4_INVARIANT_VIOLATION) {
    std::cerr << "verification failed\n" << structural;
    return kExitInvariant;
  }
  if (code == kExitInvariant) std::cerr << "a bound whose hypotheses hold was exceeded\n";
  if (code == kExitStrict) std::cerr << "strict: out-of-regime comparisons present\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line/2-plane incidence experiments in R^4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(i4_version()));
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a configuration as JSON");
  add_shared(gen, o);
  add_source(gen, o);

  auto* count = app.add_subcommand("count", "count incidences exactly");
  add_shared(count, o);
  add_source(count, o);

  auto* partition = app.add_subcommand("partition", "build a polynomial partition and report cells and crossings");
  add_shared(partition, o);
  add_source(partition, o);

  auto* degeneracy = app.add_subcommand("degeneracy", "detect rich 2-flats and hyperplanes");
  add_shared(degeneracy, o);
  add_source(degeneracy, o);
  degeneracy->add_option("--flat-threshold", o.flat_threshold, "default max(2, ceil(L^(1/2+eps)))");
  degeneracy->add_option("--hyperplane-threshold", o.hyperplane_threshold, "default max(2, ceil(S^(1/2+eps)))");

  auto* bounds = app.add_subcommand("bounds", "evaluate every closed-form bound");
  add_shared(bounds, o);
  add_constants(bounds, o);

  auto* grid = app.add_subcommand("grid", "bound table over a parameter grid");
  add_shared(grid, o);
  add_constants(grid, o);
  grid->add_option("--L-list", o.grid_L, "comma-separated L values");
  grid->add_option("--S-list", o.grid_S, "comma-separated S values");
  grid->add_option("--D-list", o.grid_D, "comma-separated D values");
  grid->add_option("--epsilon-list", o.grid_eps, "comma-separated epsilon values");
  grid->add_option("--spec", o.spec, "grid spec JSON file");

  auto* verify = app.add_subcommand("verify", "run an experiment and compare counts against the bounds");
  add_shared(verify, o);
  add_source(verify, o);
  add_constants(verify, o);
  verify->add_option("--spec", o.spec, "experiment spec JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(o);
    if (*count) return cmd_count(o);
    if (*partition) return cmd_partition(o);
    if (*degeneracy) return cmd_degeneracy(o);
    if (*bounds) return cmd_bounds(o);
    if (*grid) return cmd_grid(o);
    if (*verify) return cmd_verify(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << i4_status_name(f.status) << ": " << f.message << "\n";
    return f.status == I4_INVARIANT_VIOLATION ? kExitInvariant : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
