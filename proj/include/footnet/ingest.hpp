#pragma once

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "footnet/date.hpp"

namespace footnet {

// Canonical team (country or region) name.
using TeamId = std::string;

struct MatchRecord {
  Date date;
  TeamId home;
  TeamId guest;
  int goals_home = 0;
  int goals_guest = 0;
  std::string tournament;
  std::string venue;
  bool neutral_ground = false;
};

enum class Confederation { UEFA, CONMEBOL, AFC, CAF, CONCACAF, OFC };

inline constexpr std::array<Confederation, 6> kConfederations = {
    Confederation::UEFA, Confederation::CONMEBOL, Confederation::AFC,
    Confederation::CAF,  Confederation::CONCACAF, Confederation::OFC};

std::string_view to_string(Confederation c);
std::optional<Confederation> parse_confederation(std::string_view text);

enum class Continent { Africa, Asia, Europe, NorthAmerica, SouthAmerica, Oceania };

std::string_view to_string(Continent c);
std::optional<Continent> parse_continent(std::string_view text);

struct CountryRecord {
  TeamId name;
  double latitude = 0.0;
  double longitude = 0.0;
  Continent continent = Continent::Europe;
  Confederation confederation = Confederation::UEFA;
};

// Confederation lookup by team name; unaffiliated teams have none.
class ConfederationIndex {
 public:
  explicit ConfederationIndex(std::span<const CountryRecord> countries);
  std::optional<Confederation> of(std::string_view team) const;

 private:
  std::map<std::string, Confederation, std::less<>> by_name_;
};

// The first official international match (Scotland v England).
inline constexpr Date kFirstMatchDate{std::chrono::year{1872}, std::chrono::month{11},
                                      std::chrono::day{30}};

// Maps historical or alternative spellings onto canonical team names.
// Construction rejects chains (an alias whose target is itself remapped), so
// applying the map is idempotent.
class AliasMap {
 public:
  AliasMap() = default;
  explicit AliasMap(std::map<std::string, TeamId> entries);

  // The canonical form of `name`; names without an entry map to themselves.
  const std::string& canonical(const std::string& name) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, TeamId>& entries() const { return entries_; }

 private:
  std::map<std::string, TeamId> entries_;
};

inline constexpr std::string_view kMatchesHeader =
    "Date,Home,Guest,GoalsHome,GoalsGuest,Tournament,Venue,HomeRanking,GuestRanking,RankHome,"
    "RankGuest,ThirdPlace";
inline constexpr std::string_view kCountriesHeader =
    "Name,Latitude,Longitude,Continent,Confederation";

// Row numbers in errors count the header as row 1.
std::vector<MatchRecord> parse_matches(std::istream& in,
                                       std::optional<Date> cutoff = std::nullopt);
std::vector<CountryRecord> parse_countries(std::istream& in);

// `alias = "canonical"` lines; `#` starts a comment; keys may be quoted.
AliasMap parse_aliases(std::istream& in);

std::vector<MatchRecord> unify(std::span<const MatchRecord> matches, const AliasMap& aliases);

// Team names that occur in matches but have no country record, sorted.
std::vector<TeamId> unaffiliated_teams(std::span<const MatchRecord> matches,
                                       std::span<const CountryRecord> countries);

// Records with from <= date <= to, in input order.
std::vector<MatchRecord> filter_horizon(std::span<const MatchRecord> matches, const Date& from,
                                        const Date& to);

}  // namespace footnet
