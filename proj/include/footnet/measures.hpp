#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "footnet/graph.hpp"
#include "footnet/ingest.hpp"

namespace footnet {

// Node-level measures. Degree is the weighted degree (sum of match counts);
// BinaryDegree counts distinct opponents. All others use hop distances on
// the binarized graph.
enum class NodeMeasure { Degree, BinaryDegree, ClusteringCoefficient, Closeness, LocalEfficiency };

std::string_view to_string(NodeMeasure m);
std::optional<NodeMeasure> parse_node_measure(std::string_view text);

struct NodeMeasureVector {
  NodeMeasure measure = NodeMeasure::Degree;
  std::vector<double> values;  // aligned to a NodeUniverse; absent teams are 0
};

// Hop distance from `source` to every node; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const FootballGraph& graph, int source);

// Values in the graph's own node order.
std::vector<double> node_measure_values(const FootballGraph& graph, NodeMeasure measure);

NodeMeasureVector node_measures(const FootballGraph& graph, NodeMeasure measure,
                                const NodeUniverse& universe);

// Mean inverse hop distance over ordered pairs; unreachable pairs contribute 0.
// Already normalized by the complete graph, whose efficiency is 1.
double global_efficiency(const FootballGraph& graph);

struct GraphFeatureVector {
  double num_nodes = 0;
  double num_edges = 0;
  double average_path_length = 0;
  double global_efficiency = 0;
  double diameter = 0;
  double radius = 0;
  double graph_energy = 0;
  double link_density = 0;
  double transitivity = 0;

  static constexpr std::array<std::string_view, 9> kNames = {
      "num_nodes", "num_edges",    "average_path_length", "global_efficiency", "diameter",
      "radius",    "graph_energy", "link_density",        "transitivity"};

  std::array<double, 9> values() const {
    return {num_nodes, num_edges,    average_path_length, global_efficiency, diameter,
            radius,    graph_energy, link_density,        transitivity};
  }
};

GraphFeatureVector graph_features(const FootballGraph& graph);

// Sum of absolute adjacency eigenvalues of the binarized graph.
double graph_energy(const FootballGraph& graph);

double transitivity(const FootballGraph& graph);

// Match counts within and between confederations for one graph. Index 6 is
// the bucket for teams without a country record.
struct ConfedCounts {
  static constexpr std::size_t kUnknown = 6;
  static constexpr std::size_t kBuckets = 7;

  // Symmetric; [a][a] is the within-count of bucket a.
  std::array<std::array<Weight, kBuckets>, kBuckets> counts{};

  Weight within(std::size_t bucket) const { return counts[bucket][bucket]; }
  Weight between(std::size_t a, std::size_t b) const { return counts[a][b]; }
  Weight total() const;
};

inline std::size_t bucket_of(Confederation c) { return static_cast<std::size_t>(c); }
std::string_view bucket_name(std::size_t bucket);

ConfedCounts confed_counts(const FootballGraph& graph, const ConfederationIndex& confeds);

std::vector<ConfedCounts> confed_edge_counts(std::span<const FootballGraph> decades,
                                             std::span<const CountryRecord> countries);

std::vector<double> efficiency_series(std::span<const FootballGraph> decades);

}  // namespace footnet
