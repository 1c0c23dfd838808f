#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "incid4/incid4.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  i4_string_free(s);
  return out;
}

i4_config* generate(const char* kind, size_t lines, size_t planes, uint64_t seed) {
  i4_generator g{kind, lines, planes, 0, 0, 0};
  i4_config* cfg = nullptr;
  REQUIRE(i4_config_generate(&g, seed, &cfg) == I4_OK);
  return cfg;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(i4_status_name(I4_OK)) == "Ok");
  CHECK(std::string(i4_status_name(I4_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(i4_status_name(static_cast<i4_status>(99))) == "Unknown");
  i4_config* cfg = nullptr;
  CHECK(i4_config_parse("{\"lines\": [", &cfg) == I4_PARSE_ERROR);
  CHECK(cfg == nullptr);
  CHECK(std::string(i4_last_error()).find("line 1") != std::string::npos);
  CHECK(i4_config_parse(nullptr, &cfg) == I4_INVALID_ARGUMENT);
  i4_generator bad{"nope", 1, 1, 0, 0, 0};
  CHECK(i4_config_generate(&bad, 1, &cfg) == I4_INVALID_ARGUMENT);
  CHECK(std::string(i4_last_error()).find("nope") != std::string::npos);
  CHECK(i4_config_load("/nonexistent/x.json", &cfg) == I4_IO_ERROR);
  CHECK(i4_config_line_count(nullptr) == 0);
  i4_config_free(nullptr);
  i4_string_free(nullptr);
}

TEST_CASE("configurations and counting") {
  i4_config* star = generate("star", 3, 2, 7);
  CHECK(i4_config_line_count(star) == 3);
  CHECK(i4_config_plane_count(star) == 2);
  size_t inc = 99, con = 99;
  REQUIRE(i4_count(star, &inc, &con) == I4_OK);
  CHECK(inc == 6);
  CHECK(con == 0);

  char* text = nullptr;
  REQUIRE(i4_config_serialize(star, &text) == I4_OK);
  std::string json = take(text);
  i4_config* back = nullptr;
  REQUIRE(i4_config_parse(json.c_str(), &back) == I4_OK);
  char *d1 = nullptr, *d2 = nullptr;
  i4_config_digest(star, &d1);
  i4_config_digest(back, &d2);
  CHECK(take(d1) == take(d2));

  auto path = (std::filesystem::temp_directory_path() / "incid4_capi_cfg.json").string();
  REQUIRE(i4_config_save(star, path.c_str()) == I4_OK);
  i4_config* loaded = nullptr;
  REQUIRE(i4_config_load(path.c_str(), &loaded) == I4_OK);
  CHECK(i4_config_line_count(loaded) == 3);
  std::remove(path.c_str());

  char* report = nullptr;
  REQUIRE(i4_count_report(star, nullptr, 0, &report) == I4_OK);
  CHECK(take(report).find("point_incidences 6") != std::string::npos);
  REQUIRE(i4_count_report(star, nullptr, 1, &report) == I4_OK);
  CHECK(take(report).rfind("line_idx,plane_idx", 0) == 0);

  i4_config* fixture = nullptr;
  REQUIRE(i4_config_load(INCID4_FIXTURE_DIR "/star_3_2.json", &fixture) == I4_OK);
  REQUIRE(i4_count(fixture, &inc, nullptr) == I4_OK);
  CHECK(inc == 6);

  i4_config* generic = generate("generic", 50, 30, 1);
  REQUIRE(i4_count(generic, &inc, &con) == I4_OK);
  CHECK(inc == 0);
  CHECK(con == 0);

  for (auto* c : {star, back, loaded, fixture, generic}) i4_config_free(c);
}

TEST_CASE("partition") {
  i4_config* cfg = generate("generic", 40, 5, 3);
  i4_partition* part = nullptr;
  REQUIRE(i4_partition_build(cfg, 3, "1/10", 2, &part) == I4_OK);
  CHECK(i4_partition_rounds(part) == 3);
  CHECK(i4_partition_degree(part) >= 3);
  char* dump = nullptr;
  REQUIRE(i4_partition_dump(part, &dump) == I4_OK);
  std::string text = take(dump);
  i4_partition* back = nullptr;
  REQUIRE(i4_partition_parse(text.c_str(), &back) == I4_OK);
  CHECK(i4_partition_degree(back) == i4_partition_degree(part));

  char* report = nullptr;
  REQUIRE(i4_partition_report(cfg, part, &report) == I4_OK);
  std::string r = take(report);
  CHECK(r.find("rounds 3\n") != std::string::npos);
  CHECK(r.find("points 40\n") != std::string::npos);

  REQUIRE(i4_verify(cfg, part, &report) == I4_OK);
  CHECK(take(report).find("crossing_bounds ok") != std::string::npos);
  CHECK(i4_partition_build(cfg, 2, "1", 0, &back) == I4_INVALID_ARGUMENT);
  CHECK(i4_partition_build(cfg, 2, "x", 0, &back) == I4_INVALID_ARGUMENT);

  i4_partition_free(part);
  i4_partition_free(back);
  i4_config_free(cfg);
}

TEST_CASE("verify a parsed configuration") {
  const char* dup =
      "{\"lines\": [{\"p\": [\"0\",\"0\",\"0\",\"0\"], \"d\": [\"1\",\"0\",\"0\",\"0\"]}], \"planes\": []}";
  i4_config* cfg = nullptr;
  REQUIRE(i4_config_parse(dup, &cfg) == I4_OK);
  char* report = nullptr;
  CHECK(i4_verify(cfg, nullptr, &report) == I4_OK);
  CHECK(take(report).find("FAILED") == std::string::npos);
  i4_config_free(cfg);
}

TEST_CASE("degeneracy") {
  i4_generator g{"planted-flat", 20, 0, 8, 0, 0};
  i4_config* cfg = nullptr;
  REQUIRE(i4_config_generate(&g, 5, &cfg) == I4_OK);
  char* out = nullptr;
  REQUIRE(i4_degeneracy_report(cfg, nullptr, 0, 0, &out) == I4_OK);
  std::string r = take(out);
  CHECK(r.find("flat_threshold 7\n") != std::string::npos);
  CHECK(r.find("rich_flats 1\n") != std::string::npos);
  REQUIRE(i4_degeneracy_report(cfg, nullptr, 9, 0, &out) == I4_OK);
  CHECK(take(out).find("rich_flats 0\n") != std::string::npos);
  CHECK(i4_degeneracy_report(cfg, "0", 0, 0, &out) == I4_INVALID_ARGUMENT);
  i4_config_free(cfg);
}

TEST_CASE("bounds and grid") {
  i4_bound_params p{"10000", "1000", "2", "1/2", nullptr, nullptr, nullptr, nullptr, nullptr};
  char* out = nullptr;
  REQUIRE(i4_bound_table(&p, &out) == I4_OK);
  std::string t = take(out);
  CHECK(t.find("main 20000000 hypothesis=true") != std::string::npos);
  CHECK(t.find("two_surface_case1 32000") != std::string::npos);
  int in = -1;
  REQUIRE(i4_bound_in_regime(&p, &in) == I4_OK);
  CHECK(in == 1);
  i4_bound_params small{"100", "50", nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  REQUIRE(i4_bound_in_regime(&small, &in) == I4_OK);
  CHECK(in == 0);
  i4_bound_params bad{"0", nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  CHECK(i4_bound_table(&bad, &out) == I4_INVALID_ARGUMENT);

  char *csv = nullptr, *summary = nullptr;
  REQUIRE(i4_grid(R"({"L": [10000], "S": [1000], "D": [2], "epsilon": ["1/2"]})", &csv, &summary) == I4_OK);
  std::string c = take(csv);
  CHECK(std::count(c.begin(), c.end(), '\n') == 2);
  CHECK(take(summary).find("max ratio") != std::string::npos);
  REQUIRE(i4_grid("{}", nullptr, &summary) == I4_OK);
  CHECK(take(summary) == "no rows");
}

TEST_CASE("experiment") {
  const char* spec = R"({"generator": {"kind": "star", "lines": 3, "planes": 2}, "seed": 7,
                         "bounds": {"epsilon": "1/2"}})";
  char* report = nullptr;
  int code = -1;
  REQUIRE(i4_experiment_run(spec, &report, &code) == I4_OK);
  std::string r = take(report);
  CHECK(code == 0);
  CHECK(r.find("point_incidences 6\n") != std::string::npos);
  REQUIRE(i4_experiment_run(spec, &report, nullptr) == I4_OK);
  CHECK(take(report) == r);

  const char* strict = R"({"generator": {"kind": "star", "lines": 3, "planes": 2}, "strict": true})";
  REQUIRE(i4_experiment_run(strict, nullptr, &code) == I4_OK);
  CHECK(code == 3);
  CHECK(i4_experiment_run("{\"format\": 3}", nullptr, &code) == I4_INVALID_ARGUMENT);
}
