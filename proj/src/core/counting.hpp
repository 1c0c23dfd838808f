#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "configuration.hpp"
#include "partition.hpp"

namespace incid4 {

struct IncidenceRecord {
  std::size_t line;
  std::size_t plane;
  Point4 location;
};

struct IncidenceReport {
  std::size_t point_incidences = 0;
  std::size_t containments = 0;
  std::vector<IncidenceRecord> incidence_records;
  // (line, plane) pairs with the line inside the plane; never incidences.
  std::vector<std::pair<std::size_t, std::size_t>> contained_pairs;

  // Filled by classify_by_partition only.
  bool partitioned = false;
  std::map<SignVector, std::size_t> per_cell;
  std::size_t zero_set_count = 0;
  std::vector<SignVector> record_cells;  // parallel to incidence_records
};

/// Exact classification of all L*S pairs.
IncidenceReport count_incidences(const ConfigurationSet& cfg);

/// count_incidences plus attribution of each location to its sign cell or
/// to Z(P). Throws InvariantViolation if the totals fail to reconcile.
IncidenceReport classify_by_partition(const ConfigurationSet& cfg, const PartitionPolynomial& part);
IncidenceReport classify_by_partition(IncidenceReport report, const PartitionPolynomial& part);

std::string format_incidence_report(const IncidenceReport& report);
/// Columns line_idx, plane_idx, x1..x4, cell ("ZERO_SET" on Z(P), empty
/// without a partition).
std::string incidence_csv(const IncidenceReport& report);

class BipartiteIncidenceGraph {
 public:
  BipartiteIncidenceGraph(std::size_t left, std::size_t right);

  std::size_t left_size() const { return m_; }
  std::size_t right_size() const { return n_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Throws InvalidArgument for out-of-range indices; duplicates are ignored.
  void add_edge(std::size_t left, std::size_t right);
  bool has_edge(std::size_t left, std::size_t right) const { return edges_.count({left, right}) != 0; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Edge (i, j) iff line i meets plane j in a single point.
BipartiteIncidenceGraph incidence_graph(const ConfigurationSet& cfg);

struct KstWitness {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct KstCheck {
  bool free = true;
  std::optional<KstWitness> witness;
};

/// Exhaustive over right t-subsets. Throws InvalidArgument unless
/// 1 <= s <= m and 1 <= t <= n.
KstCheck kst_free_check(const BipartiteIncidenceGraph& g, std::size_t s, std::size_t t);

/// Largest edge count of a K_{s,t}-free m x n bipartite graph (s left
/// vertices, t right vertices). Throws TooLarge when m * n > 25.
std::size_t zarankiewicz_bruteforce(std::size_t m, std::size_t n, std::size_t s, std::size_t t);

}  // namespace incid4
