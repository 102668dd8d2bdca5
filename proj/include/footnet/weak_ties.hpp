#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "footnet/graph.hpp"
#include "footnet/ingest.hpp"

namespace footnet {

enum class TieKey { Strength, Overlap };
enum class Side { Highest, Lowest };

std::string_view to_string(TieKey key);
std::string_view to_string(Side side);

struct EdgeAnnotation {
  TeamId u;  // u < v lexicographically
  TeamId v;
  Weight tie_strength = 1;
  double overlap = 0.0;
  bool cross_confederation = false;  // both confederations known and different
  bool world_cup = false;            // at least one World Cup finals match
};

// |common neighbours| / |union of neighbours, excluding the endpoints|, on the
// binarized graph. Two degree-1 endpoints give 0. Throws PreconditionError if
// the edge does not exist.
double neighborhood_overlap(const FootballGraph& graph, int u, int v);

// One annotation per edge, in the graph's edge order. `matches` supplies the
// tournament labels; only matches inside the graph's horizon are consulted.
std::vector<EdgeAnnotation> annotate_edges(const FootballGraph& graph,
                                           std::span<const MatchRecord> matches,
                                           std::span<const CountryRecord> countries);

// Indices of `keys` from the chosen extreme inward. Ties keep the original
// (lexicographic edge) order.
std::vector<std::size_t> extreme_order(std::span<const double> keys, Side side);

// Fraction of cross-confederation edges among the k most extreme edges.
double boundary_fraction(std::span<const EdgeAnnotation> annotations, TieKey key, std::size_t k,
                         Side side);

struct CurvePoint {
  std::size_t removed = 0;
  double relative_size = 0.0;  // largest component / original node count
};

// Removes edges one at a time from the chosen extreme (same order as
// boundary_fraction) and records the relative giant-component size after each
// removal. Keys are computed once on the intact graph.
std::vector<CurvePoint> giant_component_curve(const FootballGraph& graph, TieKey key, Side side);

// Largest component size / node count for the intact graph.
double relative_giant_size(const FootballGraph& graph);

// Largest decrease between consecutive points, starting from the intact
// graph's relative giant size.
double largest_step_drop(double initial, std::span<const CurvePoint> curve);

}  // namespace footnet
