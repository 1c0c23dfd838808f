#include "configuration.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace incid4 {

using json = nlohmann::ordered_json;

void ConfigurationSet::validate() const {
  std::set<Line4> seen_lines;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!seen_lines.insert(lines[i].canonical()).second)
      fail(ErrorCode::InvariantViolation, "duplicate line at index " + std::to_string(i));
  std::set<Flat2> seen_planes;
  for (std::size_t i = 0; i < planes.size(); ++i)
    if (!seen_planes.insert(planes[i].canonical()).second)
      fail(ErrorCode::InvariantViolation, "duplicate plane at index " + std::to_string(i));
}

bool same_geometry(const ConfigurationSet& a, const ConfigurationSet& b) {
  if (a.lines.size() != b.lines.size() || a.planes.size() != b.planes.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    if (!same_line(a.lines[i], b.lines[i])) return false;
  for (std::size_t i = 0; i < a.planes.size(); ++i)
    if (!same_flat(a.planes[i], b.planes[i])) return false;
  return true;
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Generic: return "generic";
    case GeneratorKind::Star: return "star";
    case GeneratorKind::PlantedRichFlat: return "planted-flat";
    case GeneratorKind::PlantedRichHyperplane: return "planted-hyperplane";
    case GeneratorKind::Mixed: return "mixed";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto k : {GeneratorKind::Generic, GeneratorKind::Star, GeneratorKind::PlantedRichFlat,
                 GeneratorKind::PlantedRichHyperplane, GeneratorKind::Mixed})
    if (name == to_string(k)) return k;
  fail(ErrorCode::InvalidArgument, "unknown generator kind '" + std::string(name) + "'");
}

void GeneratorSpec::validate() const {
  if (coordinate_range < 2) fail(ErrorCode::InvalidArgument, "coordinate range must be at least 2");
  if (planted_lines > lines) fail(ErrorCode::InvalidArgument, "planted line count exceeds the line count");
  if (planted_planes > planes) fail(ErrorCode::InvalidArgument, "planted plane count exceeds the plane count");
  bool uses_flat = kind == GeneratorKind::PlantedRichFlat || kind == GeneratorKind::Mixed;
  bool uses_hyperplane = kind == GeneratorKind::PlantedRichHyperplane || kind == GeneratorKind::Mixed;
  if (!uses_flat && planted_lines != 0)
    fail(ErrorCode::InvalidArgument, std::string("generator '") + to_string(kind) + "' plants no lines");
  if (!uses_hyperplane && planted_planes != 0)
    fail(ErrorCode::InvalidArgument, std::string("generator '") + to_string(kind) + "' plants no planes");
}

namespace {

constexpr std::size_t kAttemptsPerObject = 10000;

Vec4 random_vec(SeededRng& rng, std::int64_t range) {
  return {scalar_from_int(rng.symmetric(range)), scalar_from_int(rng.symmetric(range)),
          scalar_from_int(rng.symmetric(range)), scalar_from_int(rng.symmetric(range))};
}

Vec4 random_nonzero_vec(SeededRng& rng, std::int64_t range) {
  while (true) {
    Vec4 v = random_vec(rng, range);
    if (!is_zero(v)) return v;
  }
}

Line4 random_line(SeededRng& rng, std::int64_t range) {
  Point4 p = random_vec(rng, range);
  return Line4(std::move(p), random_nonzero_vec(rng, range));
}

Flat2 random_flat(SeededRng& rng, std::int64_t range) {
  Point4 q = random_vec(rng, range);
  while (true) {
    Vec4 u = random_vec(rng, range);
    Vec4 v = random_vec(rng, range);
    if (rank_of({u, v}) == 2) return Flat2(q, std::move(u), std::move(v));
  }
}

std::string range_text(std::int64_t r) { return std::to_string(r); }

// Draws objects until `count` accepted ones exist; `make` returns nullopt to reject.
template <class T, class Make>
void draw(std::vector<T>& out, std::size_t count, Make make, ErrorCode on_exhaustion, const char* what) {
  std::size_t attempts = 0;
  const std::size_t budget = kAttemptsPerObject * std::max<std::size_t>(count, 1);
  while (out.size() < count) {
    if (++attempts > budget)
      fail(on_exhaustion, std::string("could not draw enough distinct ") + what + " within the attempt budget");
    if (auto obj = make()) out.push_back(std::move(*obj));
  }
}

template <class T>
void shuffle(std::vector<T>& v, SeededRng& rng, std::vector<std::size_t>& order) {
  order.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
  for (std::size_t i = v.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<T> out;
  out.reserve(v.size());
  for (auto idx : order) out.push_back(v[idx]);
  v = std::move(out);
}

// Integer basis of the direction space of {x : n . x = c} and a point on it.
struct HyperplaneFrame {
  Point4 origin;
  std::vector<Vec4> basis;
};

HyperplaneFrame frame_of(const Hyperplane3& h) {
  RationalMatrix m(1, 4);
  for (std::size_t i = 0; i < 4; ++i) m(0, i) = h.normal()[i];
  HyperplaneFrame f;
  for (auto& k : m.null_space()) {
    mpz_class den = 1;
    for (auto& c : k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    f.basis.push_back({k[0] * den, k[1] * den, k[2] * den, k[3] * den});
  }
  f.origin = {0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i)
    if (h.normal()[i] != 0) {
      f.origin[i] = h.offset() / h.normal()[i];
      break;
    }
  return f;
}

}  // namespace

ConfigurationSet gen_generic(std::size_t lines, std::size_t planes, std::uint64_t seed, std::int64_t range) {
  if (range < 2) fail(ErrorCode::InvalidArgument, "coordinate range must be at least 2");
  SeededRng rng(seed);
  ConfigurationSet cfg;
  cfg.seed = seed;
  cfg.provenance = {"generic",
                    {{"L", std::to_string(lines)}, {"S", std::to_string(planes)}, {"range", range_text(range)}}};
  std::set<Line4> seen_lines;
  draw(cfg.lines, lines, [&]() -> std::optional<Line4> {
    Line4 l = random_line(rng, range);
    if (!seen_lines.insert(l.canonical()).second) return std::nullopt;
    return l;
  }, ErrorCode::RangeTooSmall, "lines");
  std::set<Flat2> seen_planes;
  draw(cfg.planes, planes, [&]() -> std::optional<Flat2> {
    Flat2 f = random_flat(rng, range);
    if (!seen_planes.insert(f.canonical()).second) return std::nullopt;
    return f;
  }, ErrorCode::RangeTooSmall, "planes");
  return cfg;
}

ConfigurationSet gen_star(std::size_t lines, std::size_t planes, const Point4& center, std::uint64_t seed,
                          std::int64_t range) {
  if (range < 2) fail(ErrorCode::InvalidArgument, "coordinate range must be at least 2");
  SeededRng rng(seed);
  ConfigurationSet cfg;
  cfg.seed = seed;
  cfg.provenance = {"star",
                    {{"L", std::to_string(lines)},
                     {"S", std::to_string(planes)},
                     {"center", to_string(center)},
                     {"range", range_text(range)}}};
  std::set<Flat2> seen_planes;
  draw(cfg.planes, planes, [&]() -> std::optional<Flat2> {
    Vec4 u = random_nonzero_vec(rng, range);
    Vec4 v = random_nonzero_vec(rng, range);
    if (rank_of({u, v}) != 2) return std::nullopt;
    Flat2 f(center, std::move(u), std::move(v));
    if (!seen_planes.insert(f.canonical()).second) return std::nullopt;
    return f;
  }, ErrorCode::RejectionBudgetExceeded, "star planes");
  std::set<Line4> seen_lines;
  draw(cfg.lines, lines, [&]() -> std::optional<Line4> {
    Line4 l(center, random_nonzero_vec(rng, range));
    for (const auto& f : cfg.planes)
      if (f.spans(l.direction())) return std::nullopt;
    if (!seen_lines.insert(l.canonical()).second) return std::nullopt;
    return l;
  }, ErrorCode::RejectionBudgetExceeded, "star lines");
  return cfg;
}

GeneratedConfiguration gen_planted(const GeneratorSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::int64_t range = spec.coordinate_range;
  SeededRng rng(seed);
  GeneratedConfiguration out;
  ConfigurationSet& cfg = out.config;
  cfg.seed = seed;
  cfg.provenance = {to_string(spec.kind),
                    {{"L", std::to_string(spec.lines)},
                     {"S", std::to_string(spec.planes)},
                     {"planted_lines", std::to_string(spec.planted_lines)},
                     {"planted_planes", std::to_string(spec.planted_planes)},
                     {"range", range_text(range)}}};

  const bool plant_flat = spec.kind == GeneratorKind::PlantedRichFlat || spec.kind == GeneratorKind::Mixed;
  const bool plant_hyperplane =
      spec.kind == GeneratorKind::PlantedRichHyperplane || spec.kind == GeneratorKind::Mixed;

  // Lines.
  std::optional<Flat2> flat;
  std::vector<Line4> planted_lines;
  std::set<Line4> seen_lines;
  if (plant_flat && spec.planted_lines > 0) {
    flat = random_flat(rng, range).canonical();
    draw(planted_lines, spec.planted_lines, [&]() -> std::optional<Line4> {
      Point4 p = flat->at(scalar_from_int(rng.symmetric(range)), scalar_from_int(rng.symmetric(range)));
      Scalar a = scalar_from_int(rng.symmetric(range));
      Scalar b = scalar_from_int(rng.symmetric(range));
      if (a == 0 && b == 0) return std::nullopt;
      Line4 l(std::move(p), a * flat->u() + b * flat->v());
      if (!seen_lines.insert(l.canonical()).second) return std::nullopt;
      return l;
    }, ErrorCode::RangeTooSmall, "planted lines");
  }
  std::vector<Line4> all_lines = planted_lines;
  draw(all_lines, spec.lines, [&]() -> std::optional<Line4> {
    Line4 l = random_line(rng, range);
    if (flat && line_in_flat2(l, *flat)) return std::nullopt;
    if (seen_lines.count(l.canonical())) return std::nullopt;
    for (const auto& other : all_lines)
      if (span_flat2_of_lines(l, other)) return std::nullopt;
    seen_lines.insert(l.canonical());
    return l;
  }, ErrorCode::RangeTooSmall, "lines");

  // Planes.
  std::optional<Hyperplane3> hyperplane;
  std::vector<Flat2> planted_planes;
  std::set<Flat2> seen_planes;
  if (plant_hyperplane && spec.planted_planes > 0) {
    Vec4 normal = random_nonzero_vec(rng, range);
    hyperplane = Hyperplane3(normal, scalar_from_int(rng.symmetric(range))).canonical();
    HyperplaneFrame frame = frame_of(*hyperplane);
    auto combo = [&](bool with_origin) {
      Vec4 acc = with_origin ? frame.origin : Vec4{0, 0, 0, 0};
      for (const auto& w : frame.basis) acc = acc + scalar_from_int(rng.symmetric(range)) * w;
      return acc;
    };
    draw(planted_planes, spec.planted_planes, [&]() -> std::optional<Flat2> {
      Point4 q = combo(true);
      Vec4 u = combo(false);
      Vec4 v = combo(false);
      if (rank_of({u, v}) != 2) return std::nullopt;
      Flat2 f(std::move(q), std::move(u), std::move(v));
      if (!seen_planes.insert(f.canonical()).second) return std::nullopt;
      return f;
    }, ErrorCode::RangeTooSmall, "planted planes");
  }
  std::vector<Flat2> all_planes = planted_planes;
  draw(all_planes, spec.planes, [&]() -> std::optional<Flat2> {
    Flat2 f = random_flat(rng, range);
    if (hyperplane && flat2_in_hyperplane(f, *hyperplane)) return std::nullopt;
    if (seen_planes.count(f.canonical())) return std::nullopt;
    for (const auto& other : all_planes)
      if (span_hyperplane_of_flats(f, other)) return std::nullopt;
    seen_planes.insert(f.canonical());
    return f;
  }, ErrorCode::RangeTooSmall, "planes");

  std::vector<std::size_t> line_order;
  std::vector<std::size_t> plane_order;
  shuffle(all_lines, rng, line_order);
  shuffle(all_planes, rng, plane_order);
  cfg.lines = std::move(all_lines);
  cfg.planes = std::move(all_planes);

  if (flat) {
    out.truth.flat = flat;
    for (std::size_t i = 0; i < line_order.size(); ++i)
      if (line_order[i] < spec.planted_lines) out.truth.flat_members.push_back(i);
  }
  if (hyperplane) {
    out.truth.hyperplane = hyperplane;
    for (std::size_t i = 0; i < plane_order.size(); ++i)
      if (plane_order[i] < spec.planted_planes) out.truth.hyperplane_members.push_back(i);
  }
  return out;
}

GeneratedConfiguration generate(const GeneratorSpec& spec, std::uint64_t seed) {
  spec.validate();
  switch (spec.kind) {
    case GeneratorKind::Generic:
      return {gen_generic(spec.lines, spec.planes, seed, spec.coordinate_range), {}};
    case GeneratorKind::Star:
      return {gen_star(spec.lines, spec.planes, spec.center, seed, spec.coordinate_range), {}};
    default:
      return gen_planted(spec, seed);
  }
}

// ----------------------------------------------------------- persistence

namespace {

json vec_json(const Vec4& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Index just past the string literal opening at text[i].
std::size_t skip_string(std::string_view text, std::size_t i) {
  for (++i; i < text.size(); ++i) {
    if (text[i] == '\\')
      ++i;
    else if (text[i] == '"')
      return i + 1;
  }
  return i;
}

// Byte offsets of the elements of the root object's array `key`. The text is
// already known to be valid JSON.
std::vector<std::size_t> element_offsets(std::string_view text, std::string_view key) {
  std::vector<std::size_t> out;
  int depth = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '"') {
      std::size_t end = skip_string(text, i);
      if (depth == 1 && end >= i + 2 && text.substr(i + 1, end - i - 2) == key) {
        std::size_t j = end;
        while (j < text.size() && (std::isspace(static_cast<unsigned char>(text[j])) || text[j] == ':')) ++j;
        if (j >= text.size() || text[j] != '[') return out;
        int d = 0;
        bool expect = true;
        for (++j; j < text.size();) {
          char ch = text[j];
          if (std::isspace(static_cast<unsigned char>(ch))) {
            ++j;
            continue;
          }
          if (d == 0 && expect && ch != ']') {
            out.push_back(j);
            expect = false;
          }
          if (ch == '"') {
            j = skip_string(text, j);
            continue;
          }
          if (ch == '[' || ch == '{') {
            ++d;
          } else if (ch == ']' || ch == '}') {
            if (d == 0) return out;
            --d;
          } else if (ch == ',' && d == 0) {
            expect = true;
          }
          ++j;
        }
        return out;
      }
      i = end;
      continue;
    }
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    ++i;
  }
  return out;
}

class ConfigReader {
 public:
  explicit ConfigReader(std::string_view text)
      : text_(text), line_offsets_(element_offsets(text, "lines")), plane_offsets_(element_offsets(text, "planes")) {}

  [[noreturn]] void error(const std::string& what, std::string_view near = {}) const {
    std::size_t byte = 0;
    if (!near.empty()) {
      auto found = text_.find(near);
      if (found != std::string_view::npos) byte = found;
    }
    error_at(what, byte);
  }

  [[noreturn]] void error_at(const std::string& what, std::size_t byte) const {
    auto [line, column] = position_of(text_, byte);
    throw ParseError(what, line, column);
  }

  std::size_t line_offset(std::size_t i) const { return i < line_offsets_.size() ? line_offsets_[i] : 0; }
  std::size_t plane_offset(std::size_t i) const { return i < plane_offsets_.size() ? plane_offsets_[i] : 0; }

  std::string position(std::size_t byte) const {
    auto [line, column] = position_of(text_, byte);
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }

  Scalar scalar(const json& j, const std::string& where, std::size_t at) const {
    if (j.is_number_integer()) return scalar_from_int(j.get<std::int64_t>());
    if (!j.is_string()) error_at(where + ": rational must be a \"num/den\" string", at);
    const auto& s = j.get_ref<const std::string&>();
    try {
      return parse_scalar(s);
    } catch (const Error& e) {
      error_at(where + ": " + e.what(), at);
    }
  }

  Vec4 vec(const json& obj, const char* key, const std::string& where, std::size_t at) const {
    if (!obj.contains(key)) error_at(where + ": missing field '" + key + "'", at);
    const json& a = obj.at(key);
    if (!a.is_array() || a.size() != 4) error_at(where + "." + key + ": expected an array of 4 rationals", at);
    const std::string w = where + "." + key;
    return {scalar(a[0], w, at), scalar(a[1], w, at), scalar(a[2], w, at), scalar(a[3], w, at)};
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> line_offsets_;
  std::vector<std::size_t> plane_offsets_;
};

}  // namespace

std::string serialize_config(const ConfigurationSet& cfg) {
  std::ostringstream os;
  os << "{\n  \"lines\": [";
  for (std::size_t i = 0; i < cfg.lines.size(); ++i) {
    json o;
    o["p"] = vec_json(cfg.lines[i].base());
    o["d"] = vec_json(cfg.lines[i].direction());
    os << (i ? ",\n    " : "\n    ") << o.dump();
  }
  os << (cfg.lines.empty() ? "],\n" : "\n  ],\n");
  os << "  \"planes\": [";
  for (std::size_t i = 0; i < cfg.planes.size(); ++i) {
    json o;
    o["q"] = vec_json(cfg.planes[i].base());
    o["u"] = vec_json(cfg.planes[i].u());
    o["v"] = vec_json(cfg.planes[i].v());
    os << (i ? ",\n    " : "\n    ") << o.dump();
  }
  os << (cfg.planes.empty() ? "],\n" : "\n  ],\n");
  os << "  \"seed\": " << (cfg.seed ? std::to_string(*cfg.seed) : std::string("null")) << ",\n";
  json prov;
  prov["generator"] = cfg.provenance.generator;
  prov["params"] = json::object();
  for (const auto& [k, v] : cfg.provenance.params) prov["params"][k] = v;
  os << "  \"provenance\": " << prov.dump() << "\n}\n";
  return os.str();
}

ConfigurationSet parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed configuration", line, column);
  }
  ConfigReader reader(text);
  if (!root.is_object()) reader.error("configuration must be an object");
  ConfigurationSet cfg;
  if (!root.contains("lines") || !root["lines"].is_array()) reader.error("missing array 'lines'");
  if (!root.contains("planes") || !root["planes"].is_array()) reader.error("missing array 'planes'");

  const json& lines = root["lines"];
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string where = "lines[" + std::to_string(i) + "]";
    const std::size_t at = reader.line_offset(i);
    if (!lines[i].is_object()) reader.error_at(where + ": expected an object", at);
    Vec4 p = reader.vec(lines[i], "p", where, at);
    Vec4 d = reader.vec(lines[i], "d", where, at);
    try {
      cfg.lines.emplace_back(std::move(p), std::move(d));
    } catch (const Error& e) {
      fail(ErrorCode::InvariantViolation, where + " (" + reader.position(at) + "): " + e.what());
    }
  }
  const json& planes = root["planes"];
  for (std::size_t i = 0; i < planes.size(); ++i) {
    std::string where = "planes[" + std::to_string(i) + "]";
    const std::size_t at = reader.plane_offset(i);
    if (!planes[i].is_object()) reader.error_at(where + ": expected an object", at);
    Vec4 q = reader.vec(planes[i], "q", where, at);
    Vec4 u = reader.vec(planes[i], "u", where, at);
    Vec4 v = reader.vec(planes[i], "v", where, at);
    try {
      cfg.planes.emplace_back(std::move(q), std::move(u), std::move(v));
    } catch (const Error& e) {
      fail(ErrorCode::InvariantViolation, where + " (" + reader.position(at) + "): " + e.what());
    }
  }
  if (root.contains("seed") && !root["seed"].is_null()) {
    if (!root["seed"].is_number_unsigned() && !(root["seed"].is_number_integer() && root["seed"].get<std::int64_t>() >= 0))
      reader.error("'seed' must be a non-negative integer or null", "\"seed\"");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("provenance")) {
    const json& prov = root["provenance"];
    if (!prov.is_object()) reader.error("'provenance' must be an object", "\"provenance\"");
    if (prov.contains("generator")) {
      if (!prov["generator"].is_string()) reader.error("'provenance.generator' must be a string", "\"generator\"");
      cfg.provenance.generator = prov["generator"].get<std::string>();
    }
    if (prov.contains("params")) {
      if (!prov["params"].is_object()) reader.error("'provenance.params' must be an object", "\"params\"");
      for (const auto& [k, v] : prov["params"].items())
        cfg.provenance.params.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  cfg.validate();
  return cfg;
}

void save_config(const ConfigurationSet& cfg, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + destination.string() + "' for writing");
  out << serialize_config(cfg);
  if (!out) fail(ErrorCode::IoError, "write to '" + destination.string() + "' failed");
}

ConfigurationSet load_config(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + source.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_digest(const ConfigurationSet& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_config(cfg)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace incid4
