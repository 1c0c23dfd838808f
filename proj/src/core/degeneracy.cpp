#include "degeneracy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace incid4 {

namespace {

template <class Flat>
std::vector<RichFlatRecord> collect(const std::map<Flat, std::set<std::size_t>>& buckets, std::size_t threshold) {
  std::vector<RichFlatRecord> out;
  for (const auto& [flat, members] : buckets) {
    if (members.size() < threshold) continue;
    out.push_back({flat, {members.begin(), members.end()}, members.size()});
  }
  std::sort(out.begin(), out.end(),
            [](const RichFlatRecord& a, const RichFlatRecord& b) { return a.members < b.members; });
  return out;
}

void check_threshold(std::size_t threshold) {
  if (threshold < 2) fail(ErrorCode::InvalidArgument, "richness threshold must be at least 2");
}

}  // namespace

std::vector<RichFlatRecord> detect_rich_flat2(const std::vector<Line4>& lines, std::size_t threshold) {
  check_threshold(threshold);
  std::map<Flat2, std::set<std::size_t>> buckets;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto flat = span_flat2_of_lines(lines[i], lines[j])) {
        auto& b = buckets[*flat];
        b.insert(i);
        b.insert(j);
      }
  auto out = collect(buckets, threshold);
  for (const auto& r : out)
    for (auto i : r.members)
      if (!line_in_flat2(lines[i], std::get<Flat2>(r.flat)))
        fail(ErrorCode::Internal, "rich flat record holds a line outside the flat");
  return out;
}

std::vector<RichFlatRecord> detect_rich_hyperplane(const std::vector<Flat2>& planes, std::size_t threshold) {
  check_threshold(threshold);
  std::map<Hyperplane3, std::set<std::size_t>> buckets;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      if (auto h = span_hyperplane_of_flats(planes[i], planes[j])) {
        auto& b = buckets[*h];
        b.insert(i);
        b.insert(j);
      }
  auto out = collect(buckets, threshold);
  for (const auto& r : out)
    for (auto i : r.members)
      if (!flat2_in_hyperplane(planes[i], std::get<Hyperplane3>(r.flat)))
        fail(ErrorCode::Internal, "rich hyperplane record holds a plane outside the hyperplane");
  return out;
}

std::string to_string(const RichFlatRecord& record) {
  std::string out = std::visit([](const auto& f) { return to_string(f); }, record.flat);
  out += " multiplicity " + std::to_string(record.multiplicity) + " members";
  for (auto i : record.members) out += " " + std::to_string(i);
  return out;
}

}  // namespace incid4
