#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "footnet/graph.hpp"

namespace footnet {

// Co-play transactions over a fixed, sorted item vocabulary of teams. A
// transaction is one period's graph: it supports an itemset iff every pair of
// items in the set played each other in that period (the set is a clique).
class TransactionSet {
 public:
  TransactionSet(std::vector<TeamId> items, std::size_t num_transactions);

  std::size_t num_items() const { return items_.size(); }
  std::size_t size() const { return num_transactions_; }
  const std::vector<TeamId>& items() const { return items_; }

  void add_edge(std::size_t transaction, int a, int b);
  bool adjacent(std::size_t transaction, int a, int b) const;
  // An item is present when it has at least one edge in the transaction.
  bool present(std::size_t transaction, int item) const;
  // Clique support test; `itemset` holds distinct item indices.
  bool supports(std::size_t transaction, std::span<const int> itemset) const;

 private:
  std::size_t word(std::size_t transaction, int a) const {
    return (transaction * items_.size() + static_cast<std::size_t>(a)) * words_;
  }

  std::vector<TeamId> items_;
  std::size_t num_transactions_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct FrequentRelation {
  std::vector<TeamId> teams;  // sorted, size >= 2
  int occurrence = 0;
  friend bool operator==(const FrequentRelation&, const FrequentRelation&) = default;
};

TransactionSet build_transactions(std::span<const FootballGraph> yearly);

// Levelwise Apriori with subset pruning. Returns every itemset of size >= 2
// supported by at least `min_support` transactions, ordered by size
// ascending, occurrence descending, then team names.
std::vector<FrequentRelation> apriori(const TransactionSet& transactions, int min_support);

// The ordering used by apriori's output.
bool relation_order(const FrequentRelation& a, const FrequentRelation& b);

}  // namespace footnet
