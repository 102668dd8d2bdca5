#include "footnet/weak_ties.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "footnet/error.hpp"

namespace footnet {

std::string_view to_string(TieKey key) {
  return key == TieKey::Strength ? "strength" : "overlap";
}

std::string_view to_string(Side side) { return side == Side::Highest ? "highest" : "lowest"; }

double neighborhood_overlap(const FootballGraph& graph, int u, int v) {
  if (u == v || !graph.has_edge(u, v)) {
    throw PreconditionError(fmt::format("no edge between node {} and node {}", u, v));
  }
  auto a = graph.neighbors(u), b = graph.neighbors(v);
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (b[j].node < a[i].node) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const auto denom = static_cast<double>(a.size() - 1 + b.size() - 1 - common);
  return denom > 0 ? static_cast<double>(common) / denom : 0.0;
}

std::vector<EdgeAnnotation> annotate_edges(const FootballGraph& graph,
                                           std::span<const MatchRecord> matches,
                                           std::span<const CountryRecord> countries) {
  std::map<std::pair<std::string_view, std::string_view>, bool> world_cup;
  for (const auto& m : matches) {
    if (!graph.horizon().contains(m.date) || m.tournament != "World Cup") continue;
    std::string_view a = m.home, b = m.guest;
    if (b < a) std::swap(a, b);
    world_cup[{a, b}] = true;
  }
  ConfederationIndex confeds(countries);
  std::vector<EdgeAnnotation> out;
  out.reserve(graph.num_edges());
  for (const auto& e : graph.edges()) {
    EdgeAnnotation a;
    a.u = graph.name(e.u);
    a.v = graph.name(e.v);
    a.tie_strength = e.weight;
    a.overlap = neighborhood_overlap(graph, e.u, e.v);
    auto cu = confeds.of(a.u), cv = confeds.of(a.v);
    a.cross_confederation = cu && cv && *cu != *cv;
    a.world_cup = world_cup.contains({a.u, a.v});
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::size_t> extreme_order(std::span<const double> keys, Side side) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (side == Side::Highest) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  }
  return order;
}

namespace {

std::vector<double> annotation_keys(std::span<const EdgeAnnotation> annotations, TieKey key) {
  std::vector<double> keys;
  keys.reserve(annotations.size());
  for (const auto& a : annotations) {
    keys.push_back(key == TieKey::Strength ? static_cast<double>(a.tie_strength) : a.overlap);
  }
  return keys;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Size of the merged set.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return size_[a];
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

double boundary_fraction(std::span<const EdgeAnnotation> annotations, TieKey key, std::size_t k,
                         Side side) {
  if (k > annotations.size()) {
    throw PreconditionError(
        fmt::format("k = {} exceeds the number of edges ({})", k, annotations.size()));
  }
  if (k == 0) throw PreconditionError("k must be positive");
  auto keys = annotation_keys(annotations, key);
  auto order = extreme_order(keys, side);
  std::size_t cross = 0;
  for (std::size_t i = 0; i < k; ++i) cross += annotations[order[i]].cross_confederation ? 1 : 0;
  return static_cast<double>(cross) / static_cast<double>(k);
}

std::vector<CurvePoint> giant_component_curve(const FootballGraph& graph, TieKey key, Side side) {
  if (graph.num_edges() == 0) throw PreconditionError("giant component curve needs at least one edge");
  const auto& edges = graph.edges();
  std::vector<double> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) {
    keys.push_back(key == TieKey::Strength ? static_cast<double>(e.weight)
                                           : neighborhood_overlap(graph, e.u, e.v));
  }
  auto order = extreme_order(keys, side);

  // Replay the removals backwards as insertions: after r removals exactly the
  // edges order[r..] remain.
  const std::size_t m = edges.size();
  const double n = static_cast<double>(graph.num_nodes());
  std::vector<CurvePoint> curve(m);
  DisjointSets sets(graph.num_nodes());
  std::size_t giant = 1;
  for (std::size_t r = m; r >= 1; --r) {
    curve[r - 1] = {r, static_cast<double>(giant) / n};
    const Edge& e = edges[order[r - 1]];
    giant = std::max(giant, sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)));
  }
  return curve;
}

double relative_giant_size(const FootballGraph& graph) {
  if (graph.empty()) return 0.0;
  DisjointSets sets(graph.num_nodes());
  std::size_t giant = 1;
  for (const auto& e : graph.edges()) {
    giant = std::max(giant, sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)));
  }
  return static_cast<double>(giant) / static_cast<double>(graph.num_nodes());
}

double largest_step_drop(double initial, std::span<const CurvePoint> curve) {
  double drop = 0.0, previous = initial;
  for (const auto& p : curve) {
    drop = std::max(drop, previous - p.relative_size);
    previous = p.relative_size;
  }
  return drop;
}

}  // namespace footnet
