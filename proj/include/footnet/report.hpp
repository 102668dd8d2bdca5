#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "footnet/pipeline.hpp"

namespace footnet {

// Fixed text formatting for reals so repeated runs are byte-identical.
std::string format_real(double value);

void write_edge_list(std::ostream& out, const FootballGraph& graph);
nlohmann::json graph_sidecar(const FootballGraph& graph, std::span<const CountryRecord> countries);

void write_node_measure(std::ostream& out, const NodeUniverse& universe, const NodeMeasureVector& v);
nlohmann::json features_json(const GraphFeatureVector& f);

void write_partition(std::ostream& out, std::span<const TeamId> nodes, const Partition& p);
void write_labelled_matrix(std::ostream& out, std::span<const std::string> labels,
                           const AdjacencyMatrix& m);

void write_similarity_csv(std::ostream& out, const SimilarityMatrix& m);
nlohmann::json similarity_json(const SimilarityMatrix& m);
void write_states(std::ostream& out, std::span<const TemporalState> states);

void write_relations(std::ostream& out, std::span<const FrequentRelation> relations);

void write_annotations(std::ostream& out, std::span<const EdgeAnnotation> annotations);
void write_curve(std::ostream& out, std::span<const CurvePoint> curve);

void write_series(std::ostream& out, std::string_view key, std::span<const int> labels,
                  std::span<const double> values);
void write_confed_counts(std::ostream& out, std::span<const int> decades,
                         std::span<const ConfedCounts> counts);

nlohmann::json summary_json(const DatasetSummary& s, std::span<const TeamId> unaffiliated);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

// Collects artifacts written under one output directory and emits the
// manifest that references them.
class ArtifactWriter {
 public:
  ArtifactWriter(std::filesystem::path dir, std::string command, nlohmann::json config,
                 std::uint64_t seed);

  // Opens `name` for writing inside the output directory and records it.
  std::ofstream open(const std::string& name);
  void write_json(const std::string& name, const nlohmann::json& j);

  // Writes manifest.json and returns its path.
  std::filesystem::path finish();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string command_;
  nlohmann::json config_;
  std::uint64_t seed_;
  std::vector<std::string> artifacts_;
};

}  // namespace footnet
