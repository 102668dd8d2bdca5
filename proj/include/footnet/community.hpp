#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "footnet/graph.hpp"
#include "footnet/error.hpp"
#include "footnet/ingest.hpp"

namespace footnet {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// Undirected weighted graph used for modularity optimization. Self-loops are
// allowed; a loop of weight w adds 2w to its node's degree and w to the total
// weight m.
class WeightedGraph {
 public:
  struct Arc {
    int node;
    double weight;
  };

  // Parallel edges are merged by summing weights; non-positive weights are
  // dropped.
  WeightedGraph(std::size_t num_nodes, std::span<const WeightedEdge> edges);

  std::size_t num_nodes() const { return arcs_.size(); }
  // Excludes the self-loop.
  std::span<const Arc> arcs(int node) const { return arcs_[static_cast<std::size_t>(node)]; }
  double self_loop(int node) const { return loops_[static_cast<std::size_t>(node)]; }
  double degree(int node) const { return degrees_[static_cast<std::size_t>(node)]; }
  double total_weight() const { return total_; }

 private:
  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> loops_;
  std::vector<double> degrees_;
  double total_ = 0.0;
};

WeightedGraph to_weighted(const FootballGraph& graph);

// Community ids are contiguous from 0, numbered in order of each
// community's smallest node index.
struct Partition {
  std::vector<int> assignment;
  double modularity = 0.0;

  int num_communities() const;
};

// Relabels arbitrary community ids into the canonical contiguous form.
std::vector<int> canonical_labels(std::span<const int> assignment);

// Newman modularity with weighted degrees. Throws PreconditionError when the
// graph has no weight or the assignment does not cover every node.
double modularity(const WeightedGraph& graph, std::span<const int> assignment);

struct LouvainStats {
  int levels = 0;             // aggregation levels that ran a local-move phase
  std::vector<double> trace;  // modularity after every local-move sweep
};

// Two-phase Louvain: seeded random-order local moves, then aggregation of
// communities into super-nodes, until a level improves Q by no more than
// 1e-9. Deterministic for a given seed.
Partition louvain(const WeightedGraph& graph, std::uint64_t seed, LouvainStats* stats = nullptr);

template <typename Matrix>
struct Reordered {
  Matrix matrix;
  std::vector<int> permutation;  // permutation[k] = original index at position k
};

// Groups rows and columns by community id, keeping index order inside each
// community.
std::vector<int> community_order(std::span<const int> assignment);

template <typename Matrix>
Reordered<Matrix> reorder_by_community(const Matrix& m, std::span<const int> assignment) {
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != assignment.size()) {
    throw PreconditionError("partition does not match the matrix dimension");
  }
  Reordered<Matrix> out{Matrix(m.rows(), m.cols()), community_order(assignment)};
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.matrix(r, c) = m(out.permutation[static_cast<std::size_t>(r)],
                           out.permutation[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

// Arithmetic-mean normalized mutual information, 2 I(A;B) / (H(A) + H(B)).
// Two single-label partitions are identical and score 1.
double normalized_mutual_information(std::span<const int> a, std::span<const int> b);

// NMI between the partition and confederation membership, over the graph's
// nodes that have a country record.
double confederation_agreement(const FootballGraph& graph, const Partition& partition,
                               std::span<const CountryRecord> countries);

}  // namespace footnet
