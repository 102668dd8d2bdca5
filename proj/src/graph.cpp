#include "footnet/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "footnet/error.hpp"

namespace footnet {

FootballGraph::FootballGraph(std::vector<TeamId> nodes, std::vector<Edge> edges, Horizon horizon)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), horizon_(horizon) {
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1] < nodes_[i])) {
      throw PreconditionError("graph nodes must be unique and lexicographically ordered");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  adjacency_.assign(nodes_.size(), {});
  const int n = static_cast<int>(nodes_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n || e.u >= e.v) {
      throw PreconditionError(fmt::format("invalid edge ({}, {})", e.u, e.v));
    }
    if (e.weight < 1) throw PreconditionError("edge weights must be >= 1");
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) {
      throw PreconditionError("duplicate edge");
    }
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
    total_weight_ += e.weight;
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::optional<int> FootballGraph::index_of(std::string_view name) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

Weight FootballGraph::weight(int u, int v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& nb, int target) { return nb.node < target; });
  return (it != list.end() && it->node == v) ? it->weight : 0;
}

Weight FootballGraph::weighted_degree(int node) const {
  Weight k = 0;
  for (const auto& nb : neighbors(node)) k += nb.weight;
  return k;
}

NodeUniverse::NodeUniverse(std::vector<TeamId> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<int> NodeUniverse::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

NodeUniverse make_universe(std::span<const CountryRecord> countries,
                           std::span<const MatchRecord> matches) {
  std::vector<TeamId> names;
  names.reserve(countries.size());
  for (const auto& c : countries) names.push_back(c.name);
  for (const auto& m : matches) {
    names.push_back(m.home);
    names.push_back(m.guest);
  }
  return NodeUniverse(std::move(names));
}

FootballGraph build_graph(std::span<const MatchRecord> matches, const Date& from, const Date& to) {
  if (to < from) {
    throw PreconditionError(fmt::format("horizon start {} is after its end {}", format_date(from),
                                        format_date(to)));
  }
  std::map<std::pair<std::string_view, std::string_view>, Weight> counts;
  std::set<std::string_view> teams;
  for (const auto& m : matches) {
    if (m.date < from || to < m.date || m.home == m.guest) continue;
    std::string_view a = m.home, b = m.guest;
    if (b < a) std::swap(a, b);
    ++counts[{a, b}];
    teams.insert(a);
    teams.insert(b);
  }
  std::vector<TeamId> nodes(teams.begin(), teams.end());
  auto index = [&](std::string_view name) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), name) - nodes.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(counts.size());
  for (const auto& [pair, w] : counts) edges.push_back({index(pair.first), index(pair.second), w});
  return FootballGraph(std::move(nodes), std::move(edges), Horizon{from, to});
}

AdjacencyMatrix adjacency(const FootballGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (const auto& e : graph.edges()) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

AdjacencyMatrix adjacency(const FootballGraph& graph, const NodeUniverse& universe) {
  std::vector<Eigen::Index> map(graph.num_nodes());
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto idx = universe.index_of(graph.nodes()[i]);
    if (!idx) {
      throw PreconditionError(fmt::format("node '{}' is not in the universe", graph.nodes()[i]));
    }
    map[i] = *idx;
  }
  const auto n = static_cast<Eigen::Index>(universe.size());
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (const auto& e : graph.edges()) {
    auto u = map[static_cast<std::size_t>(e.u)], v = map[static_cast<std::size_t>(e.v)];
    a(u, v) = e.weight;
    a(v, u) = e.weight;
  }
  return a;
}

std::vector<FootballGraph> yearly_series(std::span<const MatchRecord> matches, int start_year,
                                         int end_year) {
  if (end_year < start_year) {
    throw PreconditionError(fmt::format("start year {} is after end year {}", start_year, end_year));
  }
  std::vector<std::vector<MatchRecord>> by_year(static_cast<std::size_t>(end_year - start_year + 1));
  for (const auto& m : matches) {
    int y = year_of(m.date);
    if (y >= start_year && y <= end_year) by_year[static_cast<std::size_t>(y - start_year)].push_back(m);
  }
  std::vector<FootballGraph> out;
  out.reserve(by_year.size());
  for (std::size_t i = 0; i < by_year.size(); ++i) {
    Horizon h = year_horizon(start_year + static_cast<int>(i), start_year + static_cast<int>(i));
    out.push_back(build_graph(by_year[i], h.from, h.to));
  }
  return out;
}

std::vector<FootballGraph> decade_series(std::span<const MatchRecord> matches, int start_year,
                                         int end_year) {
  if (end_year < start_year || (end_year - start_year + 1) % 10 != 0) {
    throw PreconditionError(
        fmt::format("year range {}-{} is not a whole number of decades", start_year, end_year));
  }
  std::vector<FootballGraph> out;
  for (int y = start_year; y <= end_year; y += 10) {
    Horizon h = year_horizon(y, y + 9);
    out.push_back(build_graph(matches, h.from, h.to));
  }
  return out;
}

FootballGraph binarize(const FootballGraph& graph) {
  std::vector<Edge> edges = graph.edges();
  for (auto& e : edges) e.weight = 1;
  return FootballGraph(graph.nodes(), std::move(edges), graph.horizon());
}

}  // namespace footnet
