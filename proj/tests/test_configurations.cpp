#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "configuration.hpp"
#include "errors.hpp"

using namespace incid4;

namespace {

using Kind = IncidenceOutcome::Kind;

std::filesystem::path fixture(const char* name) { return std::filesystem::path(INCID4_FIXTURE_DIR) / name; }

// Plain double loop over classify_line_flat2; the counting module is not used here.
std::pair<std::size_t, std::size_t> count_pairs(const ConfigurationSet& cfg) {
  std::size_t points = 0, contained = 0;
  for (const auto& l : cfg.lines)
    for (const auto& f : cfg.planes) {
      auto k = classify_line_flat2(l, f).kind;
      points += k == Kind::Point;
      contained += k == Kind::Contained;
    }
  return {points, contained};
}

}  // namespace

TEST_CASE("gen_generic") {
  auto empty = gen_generic(0, 0, 5);
  CHECK(empty.lines.empty());
  CHECK(empty.planes.empty());

  auto a = gen_generic(5, 5, 42, 1000000);
  CHECK(a.line_count() == 5);
  CHECK(a.plane_count() == 5);
  CHECK(count_pairs(a) == std::pair<std::size_t, std::size_t>(0, 0));
  auto b = gen_generic(5, 5, 42, 1000000);
  CHECK(serialize_config(a) == serialize_config(b));
  CHECK(serialize_config(a) != serialize_config(gen_generic(5, 5, 43, 1000000)));
  a.validate();

  CHECK_THROWS_AS(gen_generic(1, 1, 1, 1), Error);
}

TEST_CASE("gen_star") {
  for (auto [L, S] : {std::pair<std::size_t, std::size_t>{1, 1}, {3, 2}, {10, 10}}) {
    auto cfg = gen_star(L, S, {1, -2, 3, 0}, 7);
    CHECK(count_pairs(cfg) == std::pair<std::size_t, std::size_t>(L * S, 0));
    for (const auto& l : cfg.lines)
      for (const auto& f : cfg.planes) CHECK(*classify_line_flat2(l, f).location == Point4{1, -2, 3, 0});
  }
  auto big = gen_star(100, 100, {0, 0, 0, 0}, 7);
  CHECK(count_pairs(big).first == 10000);
}

TEST_CASE("gen_planted") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PlantedRichFlat;
  spec.lines = 20;
  spec.planted_lines = 5;
  auto g = gen_planted(spec, 3);
  REQUIRE(g.truth.flat.has_value());
  CHECK(g.truth.flat_members.size() == 5);
  std::size_t inside = 0;
  for (const auto& l : g.config.lines) inside += line_in_flat2(l, *g.truth.flat);
  CHECK(inside == 5);
  for (auto idx : g.truth.flat_members) CHECK(line_in_flat2(g.config.lines[idx], *g.truth.flat));

  GeneratorSpec hs;
  hs.kind = GeneratorKind::PlantedRichHyperplane;
  hs.planes = 10;
  hs.planted_planes = 4;
  auto h = gen_planted(hs, 4);
  REQUIRE(h.truth.hyperplane.has_value());
  std::size_t contained = 0;
  for (const auto& f : h.config.planes) contained += flat2_in_hyperplane(f, *h.truth.hyperplane);
  CHECK(contained == 4);

  GeneratorSpec zero;
  zero.kind = GeneratorKind::PlantedRichFlat;
  zero.lines = 6;
  auto z = gen_planted(zero, 1);
  CHECK_FALSE(z.truth.flat.has_value());
  CHECK(z.config.line_count() == 6);

  GeneratorSpec bad;
  bad.kind = GeneratorKind::PlantedRichFlat;
  bad.lines = 3;
  bad.planted_lines = 4;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.planted_lines = 0;
  bad.kind = GeneratorKind::Generic;
  bad.planted_planes = 1;
  bad.planes = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("save and load round trip") {
  auto dir = std::filesystem::temp_directory_path() / "incid4_cfg_test";
  std::filesystem::create_directories(dir);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto cfg = gen_generic(7, 4, seed);
    save_config(cfg, dir / "cfg.json");
    auto back = load_config(dir / "cfg.json");
    CHECK(same_geometry(cfg, back));
    CHECK(back.seed == cfg.seed);
    CHECK(serialize_config(back) == serialize_config(cfg));
    CHECK(config_digest(back) == config_digest(cfg));
  }
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Mixed;
  spec.lines = 8;
  spec.planes = 6;
  spec.planted_lines = 3;
  spec.planted_planes = 3;
  auto m = generate(spec, 9).config;
  CHECK(same_geometry(parse_config(serialize_config(m)), m));
  std::filesystem::remove_all(dir);
}

TEST_CASE("sample fixtures") {
  auto s = load_config(fixture("sample.json"));
  CHECK(s.line_count() == 2);
  CHECK(s.plane_count() == 1);
  CHECK_FALSE(s.seed.has_value());
  CHECK(s.lines[1].base()[0] == Scalar(1, 2));
  CHECK(s.lines[1].direction()[3] == Scalar(-7, 2));

  auto star = load_config(fixture("star_3_2.json"));
  CHECK(count_pairs(star) == std::pair<std::size_t, std::size_t>(6, 0));

  try {
    load_config(fixture("zero_direction.json"));
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_config("{\n  \"lines\": [\n    {\"p\": [\"0\", \"0\", \"0\"], \"d\": [\"1\", \"0\", \"0\", \"0\"]}\n  ],\n  \"planes\": []\n}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  try {
    parse_config("{\"lines\": [}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 11);
  }
  try {
    parse_config("{\"lines\": [],\n \"planes\": [\n  {\"q\": [\"0\",\"0\",\"0\",\"0\"], \"u\": [\"1\",\"0\",\"0\",\"0\"], "
                 "\"v\": [\"0\",\"1\",\"0\",\"0\"]},\n  {\"q\": [\"0\",\"0\",\"0\",\"x\"]}]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
  // Duplicate lines are an invariant violation.
  CHECK_THROWS_AS(parse_config("{\"lines\": [{\"p\": [\"0\",\"0\",\"0\",\"0\"], \"d\": [\"1\",\"0\",\"0\",\"0\"]},"
                               "{\"p\": [\"5\",\"0\",\"0\",\"0\"], \"d\": [\"2\",\"0\",\"0\",\"0\"]}]}"),
                  Error);
}
