#include "footnet/mining.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "footnet/error.hpp"

namespace footnet {

TransactionSet::TransactionSet(std::vector<TeamId> items, std::size_t num_transactions)
    : items_(std::move(items)),
      num_transactions_(num_transactions),
      words_((items_.size() + 63) / 64),
      bits_(num_transactions_ * items_.size() * words_, 0) {}

void TransactionSet::add_edge(std::size_t transaction, int a, int b) {
  if (transaction >= num_transactions_ || a == b || a < 0 || b < 0 ||
      static_cast<std::size_t>(a) >= items_.size() || static_cast<std::size_t>(b) >= items_.size()) {
    throw PreconditionError("transaction edge out of range");
  }
  auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  bits_[word(transaction, a) + ub / 64] |= std::uint64_t{1} << (ub % 64);
  bits_[word(transaction, b) + ua / 64] |= std::uint64_t{1} << (ua % 64);
}

bool TransactionSet::adjacent(std::size_t transaction, int a, int b) const {
  auto ub = static_cast<std::size_t>(b);
  return (bits_[word(transaction, a) + ub / 64] >> (ub % 64)) & 1U;
}

bool TransactionSet::present(std::size_t transaction, int item) const {
  auto begin = bits_.begin() + static_cast<std::ptrdiff_t>(word(transaction, item));
  return std::any_of(begin, begin + static_cast<std::ptrdiff_t>(words_),
                     [](std::uint64_t w) { return w != 0; });
}

bool TransactionSet::supports(std::size_t transaction, std::span<const int> itemset) const {
  if (itemset.size() == 1) return present(transaction, itemset[0]);
  for (std::size_t i = 0; i < itemset.size(); ++i) {
    for (std::size_t j = i + 1; j < itemset.size(); ++j) {
      if (!adjacent(transaction, itemset[i], itemset[j])) return false;
    }
  }
  return true;
}

TransactionSet build_transactions(std::span<const FootballGraph> yearly) {
  std::set<TeamId> names;
  for (const auto& g : yearly) names.insert(g.nodes().begin(), g.nodes().end());
  std::vector<TeamId> items(names.begin(), names.end());
  TransactionSet out(items, yearly.size());
  for (std::size_t t = 0; t < yearly.size(); ++t) {
    const auto& g = yearly[t];
    std::vector<int> map(g.num_nodes());
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      map[i] = static_cast<int>(std::lower_bound(items.begin(), items.end(), g.nodes()[i]) -
                                items.begin());
    }
    for (const auto& e : g.edges()) {
      out.add_edge(t, map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
  }
  return out;
}

bool relation_order(const FrequentRelation& a, const FrequentRelation& b) {
  if (a.teams.size() != b.teams.size()) return a.teams.size() < b.teams.size();
  if (a.occurrence != b.occurrence) return a.occurrence > b.occurrence;
  return a.teams < b.teams;
}

namespace {

using TidSet = boost::dynamic_bitset<>;

struct Itemset {
  std::vector<int> items;
  TidSet tids;
};

}  // namespace

std::vector<FrequentRelation> apriori(const TransactionSet& transactions, int min_support) {
  if (min_support < 1) throw PreconditionError("min_support must be >= 1");
  const std::size_t num_tx = transactions.size();
  const int num_items = static_cast<int>(transactions.num_items());
  std::vector<FrequentRelation> out;
  if (num_tx == 0) return out;
  const auto support_ok = [&](const TidSet& t) {
    return static_cast<int>(t.count()) >= min_support;
  };

  // Level 1: items present in enough periods.
  std::vector<int> frequent_items;
  for (int i = 0; i < num_items; ++i) {
    TidSet t(num_tx);
    for (std::size_t tx = 0; tx < num_tx; ++tx) t[tx] = transactions.present(tx, i);
    if (support_ok(t)) frequent_items.push_back(i);
  }

  // Level 2: frequent pairs, indexed for the join step below.
  std::map<std::pair<int, int>, TidSet> pair_tids;
  std::vector<Itemset> level;
  for (std::size_t a = 0; a < frequent_items.size(); ++a) {
    for (std::size_t b = a + 1; b < frequent_items.size(); ++b) {
      TidSet t(num_tx);
      for (std::size_t tx = 0; tx < num_tx; ++tx) {
        t[tx] = transactions.adjacent(tx, frequent_items[a], frequent_items[b]);
      }
      if (!support_ok(t)) continue;
      pair_tids.emplace(std::pair(frequent_items[a], frequent_items[b]), t);
      level.push_back({{frequent_items[a], frequent_items[b]}, std::move(t)});
    }
  }

  auto emit = [&](const std::vector<Itemset>& sets) {
    for (const auto& s : sets) {
      FrequentRelation r;
      for (int i : s.items) r.teams.push_back(transactions.items()[static_cast<std::size_t>(i)]);
      r.occurrence = static_cast<int>(s.tids.count());
      out.push_back(std::move(r));
    }
  };

  while (!level.empty()) {
    emit(level);
    // `level` is lexicographically sorted, so sets sharing a (k-1)-prefix are
    // contiguous.
    std::set<std::vector<int>> frequent;
    for (const auto& s : level) frequent.insert(s.items);
    std::vector<Itemset> next;
    const std::size_t k = level.front().items.size();
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const auto& x = level[i].items;
        const auto& y = level[j].items;
        if (!std::equal(x.begin(), x.end() - 1, y.begin())) break;
        std::vector<int> cand = x;
        cand.push_back(y.back());
        // Every k-subset must itself be frequent.
        bool pruned = false;
        std::vector<int> sub(k);
        for (std::size_t drop = 0; drop + 2 < cand.size() && !pruned; ++drop) {
          std::size_t w = 0;
          for (std::size_t q = 0; q < cand.size(); ++q) {
            if (q != drop) sub[w++] = cand[q];
          }
          pruned = !frequent.contains(sub);
        }
        if (pruned) continue;
        auto edge = pair_tids.find({x.back(), y.back()});
        if (edge == pair_tids.end()) continue;
        // cand is a clique iff x and y are cliques and their last items meet.
        TidSet t = level[i].tids & level[j].tids & edge->second;
        if (support_ok(t)) next.push_back({std::move(cand), std::move(t)});
      }
    }
    level = std::move(next);
  }

  std::sort(out.begin(), out.end(), relation_order);
  return out;
}

}  // namespace footnet
