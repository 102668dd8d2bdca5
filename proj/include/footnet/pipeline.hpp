#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "footnet/community.hpp"
#include "footnet/graph.hpp"
#include "footnet/ingest.hpp"
#include "footnet/measures.hpp"
#include "footnet/mining.hpp"
#include "footnet/similarity.hpp"
#include "footnet/weak_ties.hpp"

namespace footnet {

struct DataPaths {
  std::filesystem::path matches;
  std::filesystem::path countries;
  std::optional<std::filesystem::path> aliases;
};

// Canonicalized matches plus the reference tables they are analysed against.
struct Dataset {
  std::vector<MatchRecord> matches;
  std::vector<CountryRecord> countries;
  AliasMap aliases;
  std::vector<TeamId> unaffiliated;
  NodeUniverse universe;
};

// Reads, validates and unifies the input files. Missing or malformed files
// raise InputError.
Dataset load_dataset(const DataPaths& paths);
Dataset make_dataset(std::vector<MatchRecord> matches, std::vector<CountryRecord> countries,
                     AliasMap aliases = {});

struct DatasetSummary {
  std::size_t matches = 0;
  std::size_t countries = 0;
  std::optional<Date> first;
  std::optional<Date> last;
  std::map<int, std::size_t> per_year;
};

DatasetSummary summarize(const Dataset& data);

struct StaticCommunities {
  FootballGraph graph;
  Partition partition;
  LouvainStats stats;
  double agreement = 0.0;  // NMI against confederations
};

StaticCommunities static_communities(const Dataset& data, const Horizon& horizon,
                                     std::uint64_t seed);

struct DecadeDynamics {
  std::vector<FootballGraph> decades;
  std::vector<ConfedCounts> counts;
  std::vector<double> efficiency;
  std::vector<Partition> partitions;
  std::vector<double> agreement;  // NaN where fewer than two labelled nodes
};

DecadeDynamics decade_dynamics(const Dataset& data, int start_year, int end_year,
                               std::uint64_t seed);

struct BoundaryFraction {
  TieKey key;
  Side side;
  std::size_t k;
  double value;
};

struct RemovalCurve {
  TieKey key;
  Side side;
  std::vector<CurvePoint> points;
  double largest_drop;
};

struct WeakTies {
  FootballGraph graph;
  std::vector<EdgeAnnotation> annotations;
  std::vector<BoundaryFraction> fractions;  // strength/overlap x highest/lowest
  std::vector<RemovalCurve> curves;         // same four combinations
  double initial_giant = 0.0;
};

WeakTies weak_ties(const Dataset& data, const Horizon& horizon, std::size_t k);

struct FrequentRelations {
  std::size_t transactions = 0;
  std::vector<FrequentRelation> relations;
};

FrequentRelations frequent_relations(const Dataset& data, int start_year, int end_year,
                                     int min_support);

struct TemporalStatesOptions {
  int start_year = 1901;
  int end_year = 2010;
  bool weighted_degree = true;
  std::uint64_t seed = 42;
};

struct NamedMatrix {
  std::string name;
  SimilarityMatrix matrix;
};

struct TemporalStates {
  std::vector<NamedMatrix> components;  // four node-level, graph-level, VEO
  SimilarityMatrix final;
  std::vector<TemporalState> states;
  Partition partition;
};

// Component matrices and their average, without community detection.
std::vector<NamedMatrix> similarity_components(const Dataset& data,
                                               const TemporalStatesOptions& options);

TemporalStates temporal_states(const Dataset& data, const TemporalStatesOptions& options);

}  // namespace footnet
