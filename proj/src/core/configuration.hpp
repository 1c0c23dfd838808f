#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace incid4 {

struct Provenance {
  std::string generator;
  // Ordered key/value pairs; values are already formatted.
  std::vector<std::pair<std::string, std::string>> params;
};

/// The L lines and S 2-planes of one experiment.
struct ConfigurationSet {
  std::vector<Line4> lines;
  std::vector<Flat2> planes;
  std::optional<std::uint64_t> seed;
  Provenance provenance;

  std::size_t line_count() const { return lines.size(); }
  std::size_t plane_count() const { return planes.size(); }

  /// Throws InvariantViolation on duplicate lines or planes.
  void validate() const;
};

/// Structural equality of canonical forms, in order.
bool same_geometry(const ConfigurationSet& a, const ConfigurationSet& b);

enum class GeneratorKind { Generic, Star, PlantedRichFlat, PlantedRichHyperplane, Mixed };

const char* to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Generic;
  std::size_t lines = 0;
  std::size_t planes = 0;
  std::size_t planted_lines = 0;   // lines inside the planted 2-flat
  std::size_t planted_planes = 0;  // planes inside the planted hyperplane
  std::int64_t coordinate_range = 1000;
  Point4 center{0, 0, 0, 0};  // star generator only

  /// Throws InvalidArgument.
  void validate() const;
};

/// Ground truth for planted generators.
struct PlantedTruth {
  std::optional<Flat2> flat;
  std::vector<std::size_t> flat_members;
  std::optional<Hyperplane3> hyperplane;
  std::vector<std::size_t> hyperplane_members;
};

struct GeneratedConfiguration {
  ConfigurationSet config;
  PlantedTruth truth;
};

ConfigurationSet gen_generic(std::size_t lines, std::size_t planes, std::uint64_t seed,
                             std::int64_t coordinate_range = 1000);

/// Every line and plane passes through center; no line lies in any plane.
ConfigurationSet gen_star(std::size_t lines, std::size_t planes, const Point4& center, std::uint64_t seed,
                          std::int64_t coordinate_range = 100);

/// Planted rich 2-flat and/or rich hyperplane. Lines outside the planted
/// flat are pairwise skew and skew to every planted line; planes outside the
/// planted hyperplane share no hyperplane with any other plane.
GeneratedConfiguration gen_planted(const GeneratorSpec& spec, std::uint64_t seed);

/// Dispatches on spec.kind.
GeneratedConfiguration generate(const GeneratorSpec& spec, std::uint64_t seed);

std::string serialize_config(const ConfigurationSet& cfg);
/// Throws ParseError (with line/column) or InvariantViolation.
ConfigurationSet parse_config(std::string_view text);

void save_config(const ConfigurationSet& cfg, const std::filesystem::path& destination);
ConfigurationSet load_config(const std::filesystem::path& source);

/// 64-bit FNV-1a of the serialized configuration, as 16 hex digits.
std::string config_digest(const ConfigurationSet& cfg);

}  // namespace incid4
