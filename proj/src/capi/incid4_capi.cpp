#include "incid4/incid4.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "bounds.hpp"
#include "configuration.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "partition.hpp"

struct i4_config {
  incid4::ConfigurationSet cfg;
};

struct i4_partition {
  incid4::PartitionPolynomial part;
};

namespace {

using namespace incid4;

thread_local std::string last_error;

i4_status status_of(ErrorCode code) { return static_cast<i4_status>(static_cast<int>(code)); }

template <typename F>
i4_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return I4_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return I4_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return I4_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

i4_status put(char** out, const std::string& s) {
  *out = dup(s);
  return I4_OK;
}

Scalar scalar_or(const char* text, const Scalar& fallback) { return text ? parse_scalar(text) : fallback; }

struct Bound {
  BoundParams p;
  ConstantsProfile c;
  Scalar dominance = 1000;
};

Bound read_bound(const i4_bound_params* in) {
  require(in, "params is null");
  Bound b;
  b.p.L = scalar_or(in->L, 1);
  b.p.S = scalar_or(in->S, 1);
  b.p.D = scalar_or(in->D, 2);
  b.p.epsilon = scalar_or(in->epsilon, Scalar(1, 10));
  b.p.regime_factor = scalar_or(in->regime_factor, 10);
  b.c.C1 = scalar_or(in->C1, 1);
  b.c.C2 = scalar_or(in->C2, 1);
  b.c.C4 = scalar_or(in->C4, 1);
  b.dominance = scalar_or(in->dominance, 1000);
  b.p.validate();
  b.c.validate();
  return b;
}

}  // namespace

extern "C" {

const char* i4_version(void) { return "1.0.0"; }

const char* i4_status_name(i4_status status) {
  if (status == I4_OK) return "Ok";
  if (status < I4_INVALID_ARGUMENT || status > I4_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* i4_last_error(void) { return last_error.c_str(); }

void i4_string_free(char* s) { std::free(s); }

i4_status i4_config_generate(const i4_generator* spec, uint64_t seed, i4_config** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    GeneratorSpec g;
    g.kind = parse_generator_kind(spec->kind ? spec->kind : "generic");
    g.lines = spec->lines;
    g.planes = spec->planes;
    g.planted_lines = spec->planted_lines;
    g.planted_planes = spec->planted_planes;
    if (spec->coordinate_range != 0) g.coordinate_range = spec->coordinate_range;
    auto* h = new i4_config{generate(g, seed).config};
    *out = h;
    return I4_OK;
  });
}

i4_status i4_config_parse(const char* json, i4_config** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new i4_config{parse_config(json)};
    return I4_OK;
  });
}

i4_status i4_config_load(const char* path, i4_config** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new i4_config{load_config(path)};
    return I4_OK;
  });
}

i4_status i4_config_save(const i4_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg && path, "null argument");
    save_config(cfg->cfg, path);
    return I4_OK;
  });
}

i4_status i4_config_serialize(const i4_config* cfg, char** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    return put(out, serialize_config(cfg->cfg));
  });
}

i4_status i4_config_digest(const i4_config* cfg, char** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    return put(out, config_digest(cfg->cfg));
  });
}

size_t i4_config_line_count(const i4_config* cfg) { return cfg ? cfg->cfg.line_count() : 0; }
size_t i4_config_plane_count(const i4_config* cfg) { return cfg ? cfg->cfg.plane_count() : 0; }
void i4_config_free(i4_config* cfg) { delete cfg; }

i4_status i4_count(const i4_config* cfg, size_t* incidences, size_t* containments) {
  return guarded([&] {
    require(cfg, "null configuration");
    auto r = count_incidences(cfg->cfg);
    if (incidences) *incidences = r.point_incidences;
    if (containments) *containments = r.containments;
    return I4_OK;
  });
}

i4_status i4_count_report(const i4_config* cfg, const i4_partition* part, int csv, char** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    auto r = part ? classify_by_partition(cfg->cfg, part->part) : count_incidences(cfg->cfg);
    return put(out, csv ? incidence_csv(r) : format_incidence_report(r));
  });
}

i4_status i4_partition_build(const i4_config* cfg, unsigned J, const char* delta, uint64_t seed,
                             i4_partition** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    PartitionParams p;
    p.J = J;
    p.delta = scalar_or(delta, 0);
    p.seed = seed;
    auto pts = partition_points(cfg->cfg, count_incidences(cfg->cfg));
    *out = new i4_partition{build_partition(pts, p)};
    return I4_OK;
  });
}

i4_status i4_partition_parse(const char* text, i4_partition** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new i4_partition{parse_partition(text)};
    return I4_OK;
  });
}

int i4_partition_degree(const i4_partition* part) { return part ? part->part.degree() : -1; }
size_t i4_partition_rounds(const i4_partition* part) { return part ? part->part.rounds() : 0; }

i4_status i4_partition_dump(const i4_partition* part, char** out) {
  return guarded([&] {
    require(part && out, "null argument");
    return put(out, dump_partition(part->part));
  });
}

i4_status i4_partition_report(const i4_config* cfg, const i4_partition* part, char** out) {
  return guarded([&] {
    require(cfg && part && out, "null argument");
    return put(out, format_partition_report(cfg->cfg, part->part));
  });
}

void i4_partition_free(i4_partition* part) { delete part; }

i4_status i4_degeneracy_report(const i4_config* cfg, const char* epsilon, size_t flat_threshold,
                               size_t hyperplane_threshold, char** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    Scalar eps = scalar_or(epsilon, Scalar(1, 10));
    require(eps > 0, "epsilon must be positive");
    if (flat_threshold == 0) flat_threshold = richness_threshold(cfg->cfg.line_count(), eps);
    if (hyperplane_threshold == 0) hyperplane_threshold = richness_threshold(cfg->cfg.plane_count(), eps);
    return put(out, format_degeneracy_report(cfg->cfg, flat_threshold, hyperplane_threshold));
  });
}

i4_status i4_bound_table(const i4_bound_params* params, char** out) {
  return guarded([&] {
    require(out, "null argument");
    Bound b = read_bound(params);
    return put(out, format_bound_table(b.p, b.c, b.dominance));
  });
}

i4_status i4_bound_in_regime(const i4_bound_params* params, int* in_regime) {
  return guarded([&] {
    require(in_regime, "null argument");
    Bound b = read_bound(params);
    *in_regime = eval_main_bound(b.p).hypothesis_satisfied ? 1 : 0;
    return I4_OK;
  });
}

i4_status i4_grid(const char* grid_json, char** csv, char** summary) {
  return guarded([&] {
    require(grid_json, "null argument");
    auto r = run_grid(parse_grid_spec(grid_json));
    if (csv) *csv = dup(r.csv);
    if (summary) {
      try {
        *summary = dup(r.summary);
      } catch (...) {
        if (csv) std::free(*csv);
        throw;
      }
    }
    return I4_OK;
  });
}

i4_status i4_experiment_run(const char* spec_json, char** report, int* exit_code) {
  return guarded([&] {
    require(spec_json, "null argument");
    ExperimentSpec spec = parse_spec(spec_json);
    auto r = run_experiment(spec);
    write_report(r, spec);
    if (exit_code) *exit_code = r.exit_code();
    if (report) *report = dup(r.render(spec.format));
    return I4_OK;
  });
}

i4_status i4_verify(const i4_config* cfg, const i4_partition* part, char** report) {
  return guarded([&] {
    require(cfg, "null configuration");
    auto v = verify_configuration(cfg->cfg, part ? &part->part : nullptr);
    if (report) *report = dup(v.report);
    if (!v.ok) {
      last_error = "verification failed";
      return I4_INVARIANT_VIOLATION;
    }
    return I4_OK;
  });
}

}  // extern "C"
