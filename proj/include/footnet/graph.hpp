#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "footnet/date.hpp"
#include "footnet/ingest.hpp"

namespace footnet {

using Weight = std::int64_t;

// Undirected edge between node indices u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Weight weight = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int node = 0;
  Weight weight = 1;
};

// Immutable weighted undirected snapshot of the match network over a horizon.
// Nodes are kept in lexicographic order, so node indices and adjacency
// matrices are deterministic. Weights count matches.
class FootballGraph {
 public:
  FootballGraph() = default;

  // `nodes` must be strictly increasing; every edge must have u < v, weight
  // >= 1 and appear once. Throws PreconditionError otherwise.
  FootballGraph(std::vector<TeamId> nodes, std::vector<Edge> edges, Horizon horizon);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<TeamId>& nodes() const { return nodes_; }
  const TeamId& name(int node) const { return nodes_[static_cast<std::size_t>(node)]; }
  std::optional<int> index_of(std::string_view name) const;

  // Sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted by neighbor index.
  std::span<const Neighbor> neighbors(int node) const {
    return adjacency_[static_cast<std::size_t>(node)];
  }

  // 0 when the nodes are not adjacent.
  Weight weight(int u, int v) const;
  bool has_edge(int u, int v) const { return weight(u, v) > 0; }
  std::size_t degree(int node) const { return neighbors(node).size(); }
  Weight weighted_degree(int node) const;
  Weight total_weight() const { return total_weight_; }

  const Horizon& horizon() const { return horizon_; }

 private:
  std::vector<TeamId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  Weight total_weight_ = 0;
  Horizon horizon_{kFirstMatchDate, kFirstMatchDate};
};

// Fixed, lexicographically ordered list of every team name in the study.
class NodeUniverse {
 public:
  NodeUniverse() = default;
  explicit NodeUniverse(std::vector<TeamId> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<TeamId>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

 private:
  std::vector<TeamId> names_;
};

// Union of country names and every team appearing in `matches`.
NodeUniverse make_universe(std::span<const CountryRecord> countries,
                           std::span<const MatchRecord> matches);

// Matches whose two sides collapse to the same canonical team are not edges
// and are skipped.
FootballGraph build_graph(std::span<const MatchRecord> matches, const Date& from, const Date& to);

using AdjacencyMatrix = Eigen::Matrix<Weight, Eigen::Dynamic, Eigen::Dynamic>;

// Dense weighted adjacency. With a universe, rows follow universe order and
// absent teams get zero rows.
AdjacencyMatrix adjacency(const FootballGraph& graph);
AdjacencyMatrix adjacency(const FootballGraph& graph, const NodeUniverse& universe);

// One graph per calendar year in [start_year, end_year].
std::vector<FootballGraph> yearly_series(std::span<const MatchRecord> matches, int start_year,
                                         int end_year);

// One graph per ten-year block starting at start_year. The span must be a
// whole number of decades.
std::vector<FootballGraph> decade_series(std::span<const MatchRecord> matches, int start_year,
                                         int end_year);

FootballGraph binarize(const FootballGraph& graph);

}  // namespace footnet
