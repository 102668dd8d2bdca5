#include "footnet/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "footnet/csv.hpp"
#include "footnet/error.hpp"

namespace footnet {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  return fmt::format("{:.12g}", value);
}

void write_edge_list(std::ostream& out, const FootballGraph& graph) {
  out << "u,v,weight\n";
  for (const auto& e : graph.edges()) {
    out << csv_escape(graph.name(e.u)) << ',' << csv_escape(graph.name(e.v)) << ',' << e.weight
        << '\n';
  }
}

nlohmann::json graph_sidecar(const FootballGraph& graph, std::span<const CountryRecord> countries) {
  std::map<std::string_view, const CountryRecord*> by_name;
  for (const auto& c : countries) by_name[c.name] = &c;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& name : graph.nodes()) {
    nlohmann::json node{{"name", name}};
    if (auto it = by_name.find(name); it != by_name.end()) {
      node["latitude"] = it->second->latitude;
      node["longitude"] = it->second->longitude;
      node["confederation"] = std::string(to_string(it->second->confederation));
    } else {
      node["confederation"] = "unaffiliated";
    }
    nodes.push_back(std::move(node));
  }
  return {{"horizon", {{"from", format_date(graph.horizon().from)}, {"to", format_date(graph.horizon().to)}}},
          {"num_nodes", graph.num_nodes()},
          {"num_edges", graph.num_edges()},
          {"total_weight", graph.total_weight()},
          {"nodes", std::move(nodes)}};
}

void write_node_measure(std::ostream& out, const NodeUniverse& universe, const NodeMeasureVector& v) {
  out << "team,value\n";
  for (std::size_t i = 0; i < universe.size(); ++i) {
    out << csv_escape(universe.names()[i]) << ',' << format_real(v.values[i]) << '\n';
  }
}

nlohmann::json features_json(const GraphFeatureVector& f) {
  nlohmann::json j = nlohmann::json::object();
  auto values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) j[std::string(GraphFeatureVector::kNames[i])] = values[i];
  return j;
}

void write_partition(std::ostream& out, std::span<const TeamId> nodes, const Partition& p) {
  out << "node,community\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) out << csv_escape(nodes[i]) << ',' << p.assignment[i] << '\n';
}

void write_labelled_matrix(std::ostream& out, std::span<const std::string> labels,
                           const AdjacencyMatrix& m) {
  out << "team";
  for (const auto& l : labels) out << ',' << csv_escape(l);
  out << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << csv_escape(labels[static_cast<std::size_t>(r)]);
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << ',' << m(r, c);
    out << '\n';
  }
}

void write_similarity_csv(std::ostream& out, const SimilarityMatrix& m) {
  out << "year";
  for (int y : m.years) out << ',' << y;
  out << '\n';
  for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
    out << m.years[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < m.values.cols(); ++c) out << ',' << format_real(m.values(r, c));
    out << '\n';
  }
}

nlohmann::json similarity_json(const SimilarityMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.values.cols(); ++c) row.push_back(m.values(r, c));
    rows.push_back(std::move(row));
  }
  return {{"years", m.years}, {"values", std::move(rows)}};
}

void write_states(std::ostream& out, std::span<const TemporalState> states) {
  out << "state,year\n";
  for (const auto& s : states) {
    for (int y : s.years) out << s.label << ',' << y << '\n';
  }
}

void write_relations(std::ostream& out, std::span<const FrequentRelation> relations) {
  out << "size,teams,occurrence\n";
  for (const auto& r : relations) {
    std::string teams;
    for (std::size_t i = 0; i < r.teams.size(); ++i) {
      if (i) teams += ';';
      teams += r.teams[i];
    }
    out << r.teams.size() << ',' << csv_escape(teams) << ',' << r.occurrence << '\n';
  }
}

void write_annotations(std::ostream& out, std::span<const EdgeAnnotation> annotations) {
  out << "u,v,strength,overlap,cross_confed,world_cup\n";
  for (const auto& a : annotations) {
    out << csv_escape(a.u) << ',' << csv_escape(a.v) << ',' << a.tie_strength << ','
        << format_real(a.overlap) << ',' << (a.cross_confederation ? "true" : "false") << ','
        << (a.world_cup ? "true" : "false") << '\n';
  }
}

void write_curve(std::ostream& out, std::span<const CurvePoint> curve) {
  out << "removed,relative_size\n";
  for (const auto& p : curve) out << p.removed << ',' << format_real(p.relative_size) << '\n';
}

void write_series(std::ostream& out, std::string_view key, std::span<const int> labels,
                  std::span<const double> values) {
  out << key << ",value\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << labels[i] << ',' << format_real(values[i]) << '\n';
}

void write_confed_counts(std::ostream& out, std::span<const int> decades,
                         std::span<const ConfedCounts> counts) {
  out << "decade,confederation_a,confederation_b,count\n";
  for (std::size_t d = 0; d < decades.size(); ++d) {
    for (std::size_t a = 0; a < ConfedCounts::kBuckets; ++a) {
      for (std::size_t b = a; b < ConfedCounts::kBuckets; ++b) {
        out << decades[d] << ',' << bucket_name(a) << ',' << bucket_name(b) << ','
            << counts[d].between(a, b) << '\n';
      }
    }
  }
}

nlohmann::json summary_json(const DatasetSummary& s, std::span<const TeamId> unaffiliated) {
  nlohmann::json per_year = nlohmann::json::object();
  for (const auto& [year, count] : s.per_year) per_year[std::to_string(year)] = count;
  return {{"matches", s.matches},
          {"countries", s.countries},
          {"first", s.first ? nlohmann::json(format_date(*s.first)) : nlohmann::json(nullptr)},
          {"last", s.last ? nlohmann::json(format_date(*s.last)) : nlohmann::json(nullptr)},
          {"per_year", std::move(per_year)},
          {"unaffiliated", std::vector<TeamId>(unaffiliated.begin(), unaffiliated.end())}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

ArtifactWriter::ArtifactWriter(std::filesystem::path dir, std::string command,
                               nlohmann::json config, std::uint64_t seed)
    : dir_(std::move(dir)), command_(std::move(command)), config_(std::move(config)), seed_(seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError(fmt::format("cannot create output directory '{}': {}", dir_.string(), ec.message()));
}

std::ofstream ArtifactWriter::open(const std::string& name) {
  std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", (dir_ / name).string()));
  artifacts_.push_back(name);
  return out;
}

void ArtifactWriter::write_json(const std::string& name, const nlohmann::json& j) {
  auto out = open(name);
  out << j.dump(2) << '\n';
}

std::filesystem::path ArtifactWriter::finish() {
  nlohmann::json manifest{{"command", command_},
                          {"config", config_},
                          {"config_hash", fnv1a_hex(config_.dump())},
                          {"seed", seed_},
                          {"artifacts", artifacts_}};
  auto path = dir_ / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << manifest.dump(2) << '\n';
  if (!out) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
  return path;
}

}  // namespace footnet
