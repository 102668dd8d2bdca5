#include "footnet/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "footnet/error.hpp"

namespace footnet {

namespace {

std::ifstream open_input(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {} file '{}'", what, path.string()));
  return in;
}

}  // namespace

Dataset make_dataset(std::vector<MatchRecord> matches, std::vector<CountryRecord> countries,
                     AliasMap aliases) {
  Dataset d;
  d.matches = unify(matches, aliases);
  d.countries = std::move(countries);
  d.aliases = std::move(aliases);
  d.unaffiliated = unaffiliated_teams(d.matches, d.countries);
  d.universe = make_universe(d.countries, d.matches);
  return d;
}

Dataset load_dataset(const DataPaths& paths) {
  auto match_in = open_input(paths.matches, "matches");
  auto country_in = open_input(paths.countries, "countries");
  AliasMap aliases;
  if (paths.aliases) {
    auto alias_in = open_input(*paths.aliases, "aliases");
    aliases = parse_aliases(alias_in);
  }
  auto matches = parse_matches(match_in);
  auto countries = parse_countries(country_in);
  return make_dataset(std::move(matches), std::move(countries), std::move(aliases));
}

DatasetSummary summarize(const Dataset& data) {
  DatasetSummary s;
  s.matches = data.matches.size();
  s.countries = data.countries.size();
  for (const auto& m : data.matches) {
    if (!s.first || m.date < *s.first) s.first = m.date;
    if (!s.last || *s.last < m.date) s.last = m.date;
    ++s.per_year[year_of(m.date)];
  }
  return s;
}

StaticCommunities static_communities(const Dataset& data, const Horizon& horizon,
                                     std::uint64_t seed) {
  StaticCommunities out;
  out.graph = build_graph(data.matches, horizon.from, horizon.to);
  if (out.graph.total_weight() == 0) {
    throw PreconditionError("no matches inside the requested horizon");
  }
  out.partition = louvain(to_weighted(out.graph), seed, &out.stats);
  out.agreement = confederation_agreement(out.graph, out.partition, data.countries);
  return out;
}

DecadeDynamics decade_dynamics(const Dataset& data, int start_year, int end_year,
                               std::uint64_t seed) {
  DecadeDynamics out;
  out.decades = decade_series(data.matches, start_year, end_year);
  out.counts = confed_edge_counts(out.decades, data.countries);
  out.efficiency = efficiency_series(out.decades);
  for (const auto& g : out.decades) {
    if (g.total_weight() == 0) {
      out.partitions.push_back(Partition{std::vector<int>(g.num_nodes(), 0), 0.0});
      out.agreement.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    out.partitions.push_back(louvain(to_weighted(g), seed));
    double nmi = std::numeric_limits<double>::quiet_NaN();
    try {
      nmi = confederation_agreement(g, out.partitions.back(), data.countries);
    } catch (const PreconditionError&) {
      // Too few labelled teams this decade.
    }
    out.agreement.push_back(nmi);
  }
  return out;
}

WeakTies weak_ties(const Dataset& data, const Horizon& horizon, std::size_t k) {
  WeakTies out;
  out.graph = build_graph(data.matches, horizon.from, horizon.to);
  if (out.graph.num_edges() == 0) throw PreconditionError("no matches inside the requested horizon");
  out.annotations = annotate_edges(out.graph, data.matches, data.countries);
  out.initial_giant = relative_giant_size(out.graph);
  for (TieKey key : {TieKey::Strength, TieKey::Overlap}) {
    for (Side side : {Side::Highest, Side::Lowest}) {
      out.fractions.push_back({key, side, k, boundary_fraction(out.annotations, key, k, side)});
      RemovalCurve curve{key, side, giant_component_curve(out.graph, key, side), 0.0};
      curve.largest_drop = largest_step_drop(out.initial_giant, curve.points);
      out.curves.push_back(std::move(curve));
    }
  }
  return out;
}

FrequentRelations frequent_relations(const Dataset& data, int start_year, int end_year,
                                     int min_support) {
  auto yearly = yearly_series(data.matches, start_year, end_year);
  auto transactions = build_transactions(yearly);
  return {transactions.size(), apriori(transactions, min_support)};
}

std::vector<NamedMatrix> similarity_components(const Dataset& data,
                                               const TemporalStatesOptions& options) {
  auto yearly = yearly_series(data.matches, options.start_year, options.end_year);
  if (yearly.size() < 2) throw PreconditionError("temporal analysis needs at least two years");
  std::vector<NamedMatrix> out;
  const NodeMeasure degree = options.weighted_degree ? NodeMeasure::Degree : NodeMeasure::BinaryDegree;
  for (NodeMeasure m : {degree, NodeMeasure::Closeness, NodeMeasure::ClusteringCoefficient,
                        NodeMeasure::LocalEfficiency}) {
    out.push_back({std::string(to_string(m)), node_level_matrix(yearly, m, data.universe)});
  }
  out.push_back({"graph_level", graph_level_matrix(yearly)});
  out.push_back({"veo", veo_matrix(yearly)});
  return out;
}

TemporalStates temporal_states(const Dataset& data, const TemporalStatesOptions& options) {
  TemporalStates out;
  out.components = similarity_components(data, options);
  std::vector<SimilarityMatrix> mats;
  for (const auto& c : out.components) mats.push_back(c.matrix);
  out.final = final_matrix(mats);
  out.states = extract_states(out.final, options.seed, &out.partition);
  return out;
}

}  // namespace footnet
