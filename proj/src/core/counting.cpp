#include "counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "errors.hpp"

namespace incid4 {

IncidenceReport count_incidences(const ConfigurationSet& cfg) {
  IncidenceReport r;
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    for (std::size_t j = 0; j < cfg.planes.size(); ++j) {
      IncidenceOutcome o = classify_line_flat2(cfg.lines[i], cfg.planes[j]);
      if (o.kind == IncidenceOutcome::Kind::Point) {
        r.incidence_records.push_back({i, j, *o.location});
      } else if (o.kind == IncidenceOutcome::Kind::Contained) {
        r.contained_pairs.emplace_back(i, j);
      }
    }
  r.point_incidences = r.incidence_records.size();
  r.containments = r.contained_pairs.size();
  return r;
}

IncidenceReport classify_by_partition(IncidenceReport report, const PartitionPolynomial& part) {
  report.partitioned = true;
  report.per_cell.clear();
  report.record_cells.clear();
  report.zero_set_count = 0;
  for (const auto& rec : report.incidence_records) {
    SignVector s = cell_id(rec.location, part);
    if (on_zero_set(s)) {
      ++report.zero_set_count;
    } else {
      ++report.per_cell[s];
    }
    report.record_cells.push_back(std::move(s));
  }
  std::size_t total = report.zero_set_count;
  for (const auto& [cell, n] : report.per_cell) total += n;
  if (total != report.point_incidences)
    fail(ErrorCode::InvariantViolation, "cell attribution lost incidences: " + std::to_string(total) + " of " +
                                            std::to_string(report.point_incidences));
  return report;
}

IncidenceReport classify_by_partition(const ConfigurationSet& cfg, const PartitionPolynomial& part) {
  return classify_by_partition(count_incidences(cfg), part);
}

std::string format_incidence_report(const IncidenceReport& r) {
  std::ostringstream os;
  os << "point_incidences " << r.point_incidences << "\n";
  os << "containments " << r.containments << "\n";
  for (const auto& [i, j] : r.contained_pairs) os << "contained line " << i << " plane " << j << "\n";
  for (std::size_t k = 0; k < r.incidence_records.size(); ++k) {
    const auto& rec = r.incidence_records[k];
    os << "incidence line " << rec.line << " plane " << rec.plane << " at " << to_string(rec.location);
    if (r.partitioned) os << " cell " << (on_zero_set(r.record_cells[k]) ? "ZERO_SET" : to_string(r.record_cells[k]));
    os << "\n";
  }
  if (r.partitioned) {
    os << "zero_set_count " << r.zero_set_count << "\n";
    os << "occupied_cells " << r.per_cell.size() << "\n";
    for (const auto& [cell, n] : r.per_cell) os << "cell " << to_string(cell) << " " << n << "\n";
  }
  return os.str();
}

std::string incidence_csv(const IncidenceReport& r) {
  std::ostringstream os;
  os << "line_idx,plane_idx,x1,x2,x3,x4,cell\n";
  for (std::size_t k = 0; k < r.incidence_records.size(); ++k) {
    const auto& rec = r.incidence_records[k];
    os << rec.line << ',' << rec.plane;
    for (const auto& c : rec.location) os << ',' << to_string(c);
    os << ',';
    if (r.partitioned) os << (on_zero_set(r.record_cells[k]) ? "ZERO_SET" : to_string(r.record_cells[k]));
    os << "\n";
  }
  return os.str();
}

BipartiteIncidenceGraph::BipartiteIncidenceGraph(std::size_t left, std::size_t right) : m_(left), n_(right) {}

void BipartiteIncidenceGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= m_ || right >= n_)
    fail(ErrorCode::InvalidArgument, "edge (" + std::to_string(left) + ", " + std::to_string(right) +
                                         ") outside a " + std::to_string(m_) + " x " + std::to_string(n_) + " graph");
  edges_.emplace(left, right);
}

BipartiteIncidenceGraph incidence_graph(const ConfigurationSet& cfg) {
  BipartiteIncidenceGraph g(cfg.lines.size(), cfg.planes.size());
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    for (std::size_t j = 0; j < cfg.planes.size(); ++j)
      if (classify_line_flat2(cfg.lines[i], cfg.planes[j]).kind == IncidenceOutcome::Kind::Point) g.add_edge(i, j);
  return g;
}

KstCheck kst_free_check(const BipartiteIncidenceGraph& g, std::size_t s, std::size_t t) {
  const std::size_t m = g.left_size(), n = g.right_size();
  if (s < 1 || s > m || t < 1 || t > n)
    fail(ErrorCode::InvalidArgument, "K_{s,t} check needs 1 <= s <= m and 1 <= t <= n");

  // Left neighbourhood of each right vertex.
  std::vector<std::vector<bool>> column(n, std::vector<bool>(m, false));
  for (const auto& [a, b] : g.edges()) column[b][a] = true;

  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> common;
    for (std::size_t a = 0; a < m; ++a) {
      bool all = true;
      for (auto b : pick)
        if (!column[b][a]) {
          all = false;
          break;
        }
      if (all) common.push_back(a);
    }
    if (common.size() >= s) {
      KstWitness w{{common.begin(), common.begin() + static_cast<std::ptrdiff_t>(s)}, pick};
      for (auto a : w.left)
        for (auto b : w.right)
          if (!g.has_edge(a, b)) fail(ErrorCode::Internal, "K_{s,t} witness failed verification");
      return {false, std::move(w)};
    }
    // Next t-subset in lexicographic order.
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < t; ++k) pick[k] = pick[k - 1] + 1;
  }
  return {true, std::nullopt};
}

namespace {

struct ZarankiewiczSearch {
  std::size_t rows;
  unsigned cols;
  std::size_t s;
  std::vector<std::uint32_t> t_subsets;
  std::vector<unsigned> covered;  // rows containing each t-subset, by mask
  std::size_t best = 0;

  void run(std::size_t row, std::uint32_t min_mask, std::size_t edges) {
    if (edges > best) best = edges;
    if (row == rows) return;
    if (edges + (rows - row) * cols <= best) return;
    const std::uint32_t full = (std::uint32_t{1} << cols) - 1;
    for (std::uint32_t mask = min_mask; mask <= full; ++mask) {
      bool ok = true;
      for (auto ts : t_subsets) {
        if ((ts & mask) != ts) continue;
        if (++covered[ts] >= s) ok = false;
      }
      if (ok) run(row + 1, mask, edges + static_cast<std::size_t>(std::popcount(mask)));
      for (auto ts : t_subsets)
        if ((ts & mask) == ts) --covered[ts];
    }
  }
};

}  // namespace

std::size_t zarankiewicz_bruteforce(std::size_t m, std::size_t n, std::size_t s, std::size_t t) {
  if (m * n > 25) fail(ErrorCode::TooLarge, "exhaustive search limited to m * n <= 25");
  if (s < 1 || t < 1) fail(ErrorCode::InvalidArgument, "s and t must be at least 1");
  if (s > m || t > n) return m * n;
  // z(m, n; s, t) = z(n, m; t, s): keep the column side at most 5 wide.
  if (n > m) {
    std::swap(m, n);
    std::swap(s, t);
  }
  ZarankiewiczSearch z{m, static_cast<unsigned>(n), s, {}, std::vector<unsigned>(std::size_t{1} << n, 0)};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == t) z.t_subsets.push_back(mask);
  z.run(0, 0, 0);
  return z.best;
}

}  // namespace incid4
