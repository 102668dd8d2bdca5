#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "footnet/community.hpp"
#include "footnet/graph.hpp"
#include "footnet/measures.hpp"

namespace footnet {

// Pairwise similarity over an ordered list of years; symmetric, entries in
// [0, 1], unit diagonal.
struct SimilarityMatrix {
  std::vector<int> years;
  Eigen::MatrixXd values;
};

// Maps a correlation in [-1, 1] to (c + 1) / 2. Values within 1e-12 outside
// the interval are clamped; anything further is a PreconditionError.
double correlation_to_similarity(double c);

// Pearson correlation. A constant vector correlates as 0.
double pearson(std::span<const double> x, std::span<const double> y);

// Similarity of every pair of rows via correlation_to_similarity(pearson).
// The diagonal is 1.
SimilarityMatrix row_similarity(const Eigen::MatrixXd& rows, std::vector<int> years);

// Column-wise z-scores (population standard deviation); constant columns
// become all zeros.
Eigen::MatrixXd z_normalize_columns(const Eigen::MatrixXd& m);

// Years are taken from each graph's horizon start.
std::vector<int> years_of(std::span<const FootballGraph> yearly);

// Rows are universe-aligned node measure vectors, one per year.
Eigen::MatrixXd node_measure_matrix(std::span<const FootballGraph> yearly, NodeMeasure measure,
                                    const NodeUniverse& universe);

SimilarityMatrix node_level_matrix(std::span<const FootballGraph> yearly, NodeMeasure measure,
                                   const NodeUniverse& universe);

// Rows are the nine graph features of each year.
Eigen::MatrixXd graph_feature_matrix(std::span<const FootballGraph> yearly);

SimilarityMatrix graph_level_matrix(std::span<const FootballGraph> yearly);

// Vertex-edge overlap, 2(|E1 n E2| + |V1 n V2|) / (|E1| + |E2| + |V1| + |V2|),
// ignoring weights. Two distinct empty graphs score 0.
double veo_similarity(const FootballGraph& a, const FootballGraph& b);

SimilarityMatrix veo_matrix(std::span<const FootballGraph> yearly);

// Entrywise mean of matrices over the same years.
SimilarityMatrix final_matrix(std::span<const SimilarityMatrix> components);

struct TemporalState {
  int label = 0;
  std::vector<int> years;  // ascending
};

// Louvain on the complete year graph weighted by similarity (diagonal
// dropped). States are ordered by their earliest year.
std::vector<TemporalState> extract_states(const SimilarityMatrix& final, std::uint64_t seed,
                                          Partition* partition = nullptr);

}  // namespace footnet
