#include "footnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "footnet/error.hpp"

namespace footnet {

namespace {

constexpr double kMinImprovement = 1e-9;

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_nodes, std::span<const WeightedEdge> edges)
    : arcs_(num_nodes), loops_(num_nodes, 0.0), degrees_(num_nodes, 0.0) {
  std::map<std::pair<int, int>, double> merged;
  const int n = static_cast<int>(num_nodes);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (!(e.weight > 0.0)) continue;
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight;
  }
  for (const auto& [key, w] : merged) {
    auto [u, v] = key;
    total_ += w;
    if (u == v) {
      loops_[static_cast<std::size_t>(u)] += w;
      degrees_[static_cast<std::size_t>(u)] += 2.0 * w;
    } else {
      arcs_[static_cast<std::size_t>(u)].push_back({v, w});
      arcs_[static_cast<std::size_t>(v)].push_back({u, w});
      degrees_[static_cast<std::size_t>(u)] += w;
      degrees_[static_cast<std::size_t>(v)] += w;
    }
  }
  for (auto& list : arcs_) {
    std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) { return a.node < b.node; });
  }
}

WeightedGraph to_weighted(const FootballGraph& graph) {
  std::vector<WeightedEdge> edges;
  edges.reserve(graph.num_edges());
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v, static_cast<double>(e.weight)});
  return WeightedGraph(graph.num_nodes(), edges);
}

int Partition::num_communities() const {
  return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
}

std::vector<int> canonical_labels(std::span<const int> assignment) {
  std::map<int, int> relabel;
  std::vector<int> out(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    auto [it, inserted] = relabel.emplace(assignment[i], static_cast<int>(relabel.size()));
    out[i] = it->second;
  }
  return out;
}

double modularity(const WeightedGraph& graph, std::span<const int> assignment) {
  if (assignment.size() != graph.num_nodes()) {
    throw PreconditionError("partition does not cover every node");
  }
  const double m = graph.total_weight();
  if (!(m > 0.0)) throw PreconditionError("modularity is undefined for a graph without weight");
  std::map<int, std::pair<double, double>> per_comm;  // internal (A_ij summed), total degree
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    const int node = static_cast<int>(i);
    auto& [in, tot] = per_comm[assignment[i]];
    tot += graph.degree(node);
    in += 2.0 * graph.self_loop(node);
    for (const auto& arc : graph.arcs(node)) {
      if (assignment[static_cast<std::size_t>(arc.node)] == assignment[i]) in += arc.weight;
    }
  }
  const double two_m = 2.0 * m;
  double q = 0.0;
  for (const auto& [c, v] : per_comm) q += v.first / two_m - (v.second / two_m) * (v.second / two_m);
  return q;
}

namespace {

// One level of local moves. Returns true if any node changed community.
bool local_moves(const WeightedGraph& g, std::vector<int>& comm, std::mt19937_64& rng,
                 std::vector<double>* trace) {
  const std::size_t n = g.num_nodes();
  const double two_m = 2.0 * g.total_weight();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[static_cast<std::size_t>(comm[i])] += g.degree(static_cast<int>(i));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> link(n, 0.0);
  std::vector<int> touched;
  bool moved_any = false;
  double q = modularity(g, comm);

  while (true) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int node : order) {
      const auto i = static_cast<std::size_t>(node);
      const int own = comm[i];
      const double k = g.degree(node);
      touched.clear();
      for (const auto& arc : g.arcs(node)) {
        const int c = comm[static_cast<std::size_t>(arc.node)];
        if (link[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
        link[static_cast<std::size_t>(c)] += arc.weight;
      }
      tot[static_cast<std::size_t>(own)] -= k;
      auto gain = [&](int c) {
        return link[static_cast<std::size_t>(c)] - tot[static_cast<std::size_t>(c)] * k / two_m;
      };
      // Staying wins ties; otherwise the smallest community id does.
      int best = own;
      double best_gain = gain(own);
      std::sort(touched.begin(), touched.end());
      for (int c : touched) {
        if (c != own && gain(c) > best_gain) {
          best = c;
          best_gain = gain(c);
        }
      }
      tot[static_cast<std::size_t>(best)] += k;
      comm[i] = best;
      if (best != own) moved_any = true;
      for (int c : touched) link[static_cast<std::size_t>(c)] = 0.0;
    }
    const double next = modularity(g, comm);
    if (trace) trace->push_back(next);
    const bool improved = next - q > kMinImprovement;
    q = next;
    if (!improved) break;
  }
  return moved_any;
}

}  // namespace

Partition louvain(const WeightedGraph& graph, std::uint64_t seed, LouvainStats* stats) {
  if (!(graph.total_weight() > 0.0)) {
    throw PreconditionError("louvain needs a graph with positive total weight");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = graph.num_nodes();
  std::vector<int> membership(n);  // original node -> current level node
  std::iota(membership.begin(), membership.end(), 0);

  WeightedGraph level = graph;
  int levels = 0;
  std::vector<double> trace;
  while (true) {
    std::vector<int> comm(level.num_nodes());
    std::iota(comm.begin(), comm.end(), 0);
    const double before = modularity(level, comm);
    const bool moved = local_moves(level, comm, rng, &trace);
    ++levels;
    const double after = modularity(level, comm);
    if (!moved || after - before <= kMinImprovement) break;

    std::vector<int> label = canonical_labels(comm);
    const int k = *std::max_element(label.begin(), label.end()) + 1;
    for (auto& m : membership) m = label[static_cast<std::size_t>(m)];

    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < level.num_nodes(); ++i) {
      const int ci = label[i];
      if (level.self_loop(static_cast<int>(i)) > 0.0) {
        edges.push_back({ci, ci, level.self_loop(static_cast<int>(i))});
      }
      for (const auto& arc : level.arcs(static_cast<int>(i))) {
        if (arc.node < static_cast<int>(i)) continue;
        edges.push_back({ci, label[static_cast<std::size_t>(arc.node)], arc.weight});
      }
    }
    if (static_cast<std::size_t>(k) == level.num_nodes()) break;
    level = WeightedGraph(static_cast<std::size_t>(k), edges);
  }

  Partition out;
  out.assignment = canonical_labels(membership);
  out.modularity = modularity(graph, out.assignment);
  if (stats) {
    stats->levels = levels;
    stats->trace = std::move(trace);
  }
  return out;
}

std::vector<int> community_order(std::span<const int> assignment) {
  std::vector<int> order(assignment.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return assignment[static_cast<std::size_t>(a)] < assignment[static_cast<std::size_t>(b)];
  });
  return order;
}

double normalized_mutual_information(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw PreconditionError("label vectors differ in length");
  if (a.empty()) throw PreconditionError("mutual information of empty labelings");
  const double n = static_cast<double>(a.size());
  std::map<int, double> ca, cb;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    joint[{a[i], b[i]}] += 1;
  }
  auto entropy = [n](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [label, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  const double ha = entropy(ca), hb = entropy(cb);
  if (ha + hb == 0.0) return 1.0;
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    mi += (c / n) * std::log(c * n / (ca[key.first] * cb[key.second]));
  }
  return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

double confederation_agreement(const FootballGraph& graph, const Partition& partition,
                               std::span<const CountryRecord> countries) {
  if (partition.assignment.size() != graph.num_nodes()) {
    throw PreconditionError("partition does not match the graph");
  }
  ConfederationIndex index(countries);
  std::vector<int> comm, confed;
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    if (auto c = index.of(graph.nodes()[i])) {
      comm.push_back(partition.assignment[i]);
      confed.push_back(static_cast<int>(*c));
    }
  }
  if (comm.size() < 2) {
    throw PreconditionError("confederation agreement needs at least two labelled nodes");
  }
  return normalized_mutual_information(comm, confed);
}

}  // namespace footnet
