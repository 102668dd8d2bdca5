// footnet: command-line driver for the international football network
// analyses. Every subcommand writes into <out>/<command>/ and finishes with a
// manifest.json listing the artifacts, the effective config and the seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "footnet/csv.hpp"
#include "footnet/error.hpp"
#include "footnet/pipeline.hpp"
#include "footnet/report.hpp"

namespace {

using namespace footnet;
using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string matches;
  std::string countries;
  std::string aliases;
  std::string from;
  std::string to;
  std::uint64_t seed = 42;
  std::string out = "out";
  int start_year = 1901;
  int end_year = 2010;
  int min_support = 11;
  std::size_t k = 1000;
  std::string degree = "weighted";
};

Horizon horizon_or(const Options& o, Horizon fallback) {
  Horizon h = fallback;
  if (!o.from.empty()) h.from = parse_date(o.from);
  if (!o.to.empty()) h.to = parse_date(o.to);
  if (h.to < h.from) throw PreconditionError("--from must not be after --to");
  return h;
}

Dataset load(const Options& o) {
  DataPaths paths{o.matches, o.countries, std::nullopt};
  if (!o.aliases.empty()) paths.aliases = o.aliases;
  return load_dataset(paths);
}

json base_config(const Options& o) {
  return {{"matches", o.matches}, {"countries", o.countries}, {"aliases", o.aliases}};
}

json horizon_json(const Horizon& h) {
  return {{"from", format_date(h.from)}, {"to", format_date(h.to)}};
}

void warn_unaffiliated(const Dataset& d) {
  for (const auto& team : d.unaffiliated) {
    std::cerr << "warning: team '" << team << "' has no country record; treated as unaffiliated\n";
  }
}

std::vector<int> decade_starts(const std::vector<FootballGraph>& decades) {
  std::vector<int> out;
  for (const auto& g : decades) out.push_back(year_of(g.horizon().from));
  return out;
}

int run_stats(const Options& o) {
  Dataset d = load(o);
  auto summary = summarize(d);
  ArtifactWriter w(std::filesystem::path(o.out) / "stats", "stats", base_config(o), o.seed);
  json report = summary_json(summary, d.unaffiliated);
  w.write_json("stats.json", report);
  w.finish();
  std::cout << report.dump(2) << '\n';
  return 0;
}

int run_graph(const Options& o) {
  Dataset d = load(o);
  warn_unaffiliated(d);
  Horizon h = horizon_or(o, Horizon{kFirstMatchDate, make_date(2016, 12, 31)});
  FootballGraph g = build_graph(d.matches, h.from, h.to);
  json config = base_config(o);
  config["horizon"] = horizon_json(h);
  ArtifactWriter w(std::filesystem::path(o.out) / "graph", "graph", config, o.seed);
  {
    auto out = w.open("edges.csv");
    write_edge_list(out, g);
  }
  w.write_json("graph.json", graph_sidecar(g, d.countries));
  w.write_json("features.json", features_json(graph_features(g)));
  for (NodeMeasure m : {NodeMeasure::Degree, NodeMeasure::BinaryDegree, NodeMeasure::ClusteringCoefficient,
                        NodeMeasure::Closeness, NodeMeasure::LocalEfficiency}) {
    auto out = w.open(fmt::format("node_{}.csv", to_string(m)));
    write_node_measure(out, d.universe, node_measures(g, m, d.universe));
  }
  w.finish();
  std::cout << fmt::format("graph: {} nodes, {} edges, {} matches\n", g.num_nodes(), g.num_edges(),
                           g.total_weight());
  return 0;
}

int run_mine(const Options& o) {
  Dataset d = load(o);
  auto result = frequent_relations(d, o.start_year, o.end_year, o.min_support);
  json config = base_config(o);
  config["start_year"] = o.start_year;
  config["end_year"] = o.end_year;
  config["min_support"] = o.min_support;
  ArtifactWriter w(std::filesystem::path(o.out) / "mine", "mine", config, o.seed);
  {
    auto out = w.open("relations.csv");
    write_relations(out, result.relations);
  }
  w.finish();
  std::cout << fmt::format("mine: {} transactions, {} frequent relations\n", result.transactions,
                           result.relations.size());
  return 0;
}

int run_communities(const Options& o) {
  Dataset d = load(o);
  warn_unaffiliated(d);
  Horizon h = horizon_or(o, Horizon{kFirstMatchDate, make_date(2016, 12, 31)});
  auto result = static_communities(d, h, o.seed);
  json config = base_config(o);
  config["horizon"] = horizon_json(h);
  ArtifactWriter w(std::filesystem::path(o.out) / "communities", "communities", config, o.seed);
  {
    auto out = w.open("partition.csv");
    write_partition(out, result.graph.nodes(), result.partition);
  }
  {
    auto reordered = reorder_by_community(adjacency(result.graph), result.partition.assignment);
    std::vector<std::string> labels;
    for (int i : reordered.permutation) labels.push_back(result.graph.name(i));
    auto out = w.open("adjacency_reordered.csv");
    write_labelled_matrix(out, labels, reordered.matrix);
  }
  w.write_json("communities.json", {{"seed", o.seed},
                                    {"passes", result.stats.levels},
                                    {"final_modularity", result.partition.modularity},
                                    {"communities", result.partition.num_communities()},
                                    {"confederation_nmi", result.agreement}});
  w.finish();
  std::cout << fmt::format("communities: {} (Q = {:.4f}, NMI vs confederations = {:.4f})\n",
                           result.partition.num_communities(), result.partition.modularity,
                           result.agreement);
  return 0;
}

int run_weak_ties(const Options& o) {
  Dataset d = load(o);
  warn_unaffiliated(d);
  Horizon h = horizon_or(o, year_horizon(1995, 2015));
  auto result = weak_ties(d, h, o.k);
  json config = base_config(o);
  config["horizon"] = horizon_json(h);
  config["k"] = o.k;
  ArtifactWriter w(std::filesystem::path(o.out) / "weak-ties", "weak-ties", config, o.seed);
  {
    auto out = w.open("annotations.csv");
    write_annotations(out, result.annotations);
  }
  {
    auto out = w.open("fractions.csv");
    out << "key,side,k,cross_fraction\n";
    for (const auto& f : result.fractions) {
      out << to_string(f.key) << ',' << to_string(f.side) << ',' << f.k << ',' << format_real(f.value) << '\n';
    }
  }
  for (const auto& c : result.curves) {
    auto out = w.open(fmt::format("curve_{}_{}.csv", to_string(c.key), to_string(c.side)));
    write_curve(out, c.points);
  }
  w.finish();
  std::cout << fmt::format("weak-ties: {} edges\n", result.annotations.size());
  for (const auto& f : result.fractions) {
    std::cout << fmt::format("  {} {} {}: {:.1f}% cross-confederation\n", to_string(f.side), f.k,
                             to_string(f.key), 100.0 * f.value);
  }
  return 0;
}

int run_dynamics(const Options& o) {
  Dataset d = load(o);
  warn_unaffiliated(d);
  auto result = decade_dynamics(d, o.start_year, o.end_year, o.seed);
  json config = base_config(o);
  config["start_year"] = o.start_year;
  config["end_year"] = o.end_year;
  ArtifactWriter w(std::filesystem::path(o.out) / "dynamics", "dynamics", config, o.seed);
  auto starts = decade_starts(result.decades);
  {
    auto out = w.open("efficiency.csv");
    write_series(out, "decade", starts, result.efficiency);
  }
  {
    auto out = w.open("confed_counts.csv");
    write_confed_counts(out, starts, result.counts);
  }
  {
    auto out = w.open("decade_communities.csv");
    out << "decade,node,community\n";
    for (std::size_t i = 0; i < result.decades.size(); ++i) {
      const auto& g = result.decades[i];
      for (std::size_t n = 0; n < g.num_nodes(); ++n) {
        out << starts[i] << ',' << csv_escape(g.nodes()[n]) << ',' << result.partitions[i].assignment[n] << '\n';
      }
    }
  }
  {
    auto out = w.open("decade_agreement.csv");
    write_series(out, "decade", starts, result.agreement);
  }
  w.finish();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    std::cout << fmt::format("{}-{}: efficiency {:.4f}, {} communities, NMI {}\n", starts[i],
                             starts[i] + 9, result.efficiency[i],
                             result.partitions[i].num_communities(), format_real(result.agreement[i]));
  }
  return 0;
}

TemporalStatesOptions temporal_options(const Options& o) {
  if (o.degree != "weighted" && o.degree != "binary") {
    throw PreconditionError("--degree must be 'weighted' or 'binary'");
  }
  return {o.start_year, o.end_year, o.degree == "weighted", o.seed};
}

void write_matrices(ArtifactWriter& w, const std::vector<NamedMatrix>& components,
                    const SimilarityMatrix& final) {
  for (const auto& c : components) {
    auto out = w.open(fmt::format("similarity_{}.csv", c.name));
    write_similarity_csv(out, c.matrix);
  }
  {
    auto out = w.open("similarity_final.csv");
    write_similarity_csv(out, final);
  }
  w.write_json("similarity_final.json", similarity_json(final));
}

json temporal_config(const Options& o) {
  json config = base_config(o);
  config["start_year"] = o.start_year;
  config["end_year"] = o.end_year;
  config["degree"] = o.degree;
  return config;
}

int run_similarity(const Options& o) {
  Dataset d = load(o);
  auto options = temporal_options(o);
  auto components = similarity_components(d, options);
  std::vector<SimilarityMatrix> mats;
  for (const auto& c : components) mats.push_back(c.matrix);
  ArtifactWriter w(std::filesystem::path(o.out) / "similarity", "similarity", temporal_config(o), o.seed);
  write_matrices(w, components, final_matrix(mats));
  w.finish();
  std::cout << fmt::format("similarity: {} component matrices over {} years\n", components.size(),
                           mats.front().years.size());
  return 0;
}

int run_states(const Options& o) {
  Dataset d = load(o);
  auto result = temporal_states(d, temporal_options(o));
  ArtifactWriter w(std::filesystem::path(o.out) / "states", "states", temporal_config(o), o.seed);
  write_matrices(w, result.components, result.final);
  {
    auto out = w.open("states.csv");
    write_states(out, result.states);
  }
  w.write_json("states.json", {{"seed", o.seed},
                               {"states", result.states.size()},
                               {"final_modularity", result.partition.modularity}});
  w.finish();
  for (const auto& s : result.states) {
    std::string years;
    for (std::size_t i = 0; i < s.years.size(); ++i) {
      // Print contiguous runs compactly, e.g. 1901-1908,1912.
      std::size_t j = i;
      while (j + 1 < s.years.size() && s.years[j + 1] == s.years[j] + 1) ++j;
      if (!years.empty()) years += ',';
      years += j > i ? fmt::format("{}-{}", s.years[i], s.years[j]) : std::to_string(s.years[i]);
      i = j;
    }
    std::cout << fmt::format("state {}: {}\n", s.label, years);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network analysis of international football match records"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional TOML/INI file with option defaults; flags win");

  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--matches", o.matches, "Match records CSV")->required();
    sub->add_option("--countries", o.countries, "Country records CSV")->required();
    sub->add_option("--aliases", o.aliases, "Alias map (alias = \"canonical\" lines)");
    sub->add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();
    sub->add_option("--out", o.out, "Output directory")->capture_default_str();
  };
  auto add_horizon = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "Horizon start, YYYY-MM-DD (inclusive)");
    sub->add_option("--to", o.to, "Horizon end, YYYY-MM-DD (inclusive)");
  };
  auto add_years = [&](CLI::App* sub) {
    sub->add_option("--start-year", o.start_year, "First year of the series")->capture_default_str();
    sub->add_option("--end-year", o.end_year, "Last year of the series")->capture_default_str();
  };

  std::function<int()> action;
  auto command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  command("stats", "Dataset summary", [&] { return run_stats(o); });
  add_horizon(command("graph", "Export the graph of a horizon with node and graph measures",
                      [&] { return run_graph(o); }));
  auto* mine = command("mine", "Frequent football relations (Apriori over yearly cliques)",
                       [&] { return run_mine(o); });
  add_years(mine);
  mine->add_option("--min-support", o.min_support, "Minimum number of supporting years")->capture_default_str();
  add_horizon(command("communities", "Louvain communities of a horizon graph",
                      [&] { return run_communities(o); }));
  auto* weak = command("weak-ties", "Tie strength, overlap and edge-removal experiment",
                       [&] { return run_weak_ties(o); });
  add_horizon(weak);
  weak->add_option("--k", o.k, "Edges taken from each extreme")->capture_default_str();
  add_years(command("dynamics", "Per-decade counts, efficiency and communities",
                    [&] { return run_dynamics(o); }));
  for (auto [name, help, fn] :
       {std::tuple{"similarity", "Yearly similarity matrices", &run_similarity},
        std::tuple{"states", "Temporal states from the averaged similarity matrix", &run_states}}) {
    auto* sub = command(name, help, [&o, fn = fn] { return fn(o); });
    add_years(sub);
    sub->add_option("--degree", o.degree, "Degree vectors: weighted or binary")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
