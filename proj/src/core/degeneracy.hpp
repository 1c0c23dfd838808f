#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "geometry.hpp"

namespace incid4 {

/// A canonical flat together with every input object it contains.
struct RichFlatRecord {
  std::variant<Flat2, Hyperplane3> flat;
  std::vector<std::size_t> members;  // increasing
  std::size_t multiplicity = 0;
};

/// 2-flats holding at least `threshold` of the lines, found by bucketing the
/// span of every coplanar pair. Exact for degree-1 flats. Records are ordered
/// by their first member. Throws InvalidArgument when threshold < 2.
std::vector<RichFlatRecord> detect_rich_flat2(const std::vector<Line4>& lines, std::size_t threshold);

/// Hyperplanes holding at least `threshold` of the planes; any two planes
/// whose affine hull is 3-dimensional (meeting in a line, or parallel inside
/// a hyperplane) vote for that hyperplane.
std::vector<RichFlatRecord> detect_rich_hyperplane(const std::vector<Flat2>& planes, std::size_t threshold);

std::string to_string(const RichFlatRecord& record);

}  // namespace incid4
