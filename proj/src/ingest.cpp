#include "footnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <fmt/format.h>

#include "footnet/csv.hpp"
#include "footnet/error.hpp"

namespace footnet {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string join_header(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += trim(fields[i]);
  }
  return out;
}

void expect_header(CsvReader& reader, std::string_view expected, std::string_view what) {
  auto header = reader.next();
  if (!header) throw InputError(fmt::format("{}: missing header row", what));
  if (join_header(*header) != expected) {
    throw InputError(fmt::format("{}: unexpected header '{}', expected '{}'", what,
                                 join_header(*header), expected));
  }
}

int parse_goals(std::string_view text, std::size_t row, const char* field) {
  text = trim(text);
  int value = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw InputError(fmt::format("expected non-negative integer, got '{}'", text), row, field);
  }
  return value;
}

double parse_real(std::string_view text, std::size_t row, const char* field) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(fmt::format("expected a number, got '{}'", text), row, field);
  }
  return value;
}

std::string parse_team(std::string_view text, std::size_t row, const char* field) {
  text = trim(text);
  if (text.empty()) throw InputError("empty team name", row, field);
  return std::string(text);
}

}  // namespace

std::string_view to_string(Confederation c) {
  switch (c) {
    case Confederation::UEFA: return "UEFA";
    case Confederation::CONMEBOL: return "CONMEBOL";
    case Confederation::AFC: return "AFC";
    case Confederation::CAF: return "CAF";
    case Confederation::CONCACAF: return "CONCACAF";
    case Confederation::OFC: return "OFC";
  }
  return "?";
}

std::optional<Confederation> parse_confederation(std::string_view text) {
  text = trim(text);
  for (auto c : kConfederations) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Continent c) {
  switch (c) {
    case Continent::Africa: return "Africa";
    case Continent::Asia: return "Asia";
    case Continent::Europe: return "Europe";
    case Continent::NorthAmerica: return "North America";
    case Continent::SouthAmerica: return "South America";
    case Continent::Oceania: return "Oceania";
  }
  return "?";
}

std::optional<Continent> parse_continent(std::string_view text) {
  text = trim(text);
  if (text == "Africa") return Continent::Africa;
  if (text == "Asia") return Continent::Asia;
  if (text == "Europe") return Continent::Europe;
  if (text == "North America" || text == "NorthAmerica") return Continent::NorthAmerica;
  if (text == "South America" || text == "SouthAmerica") return Continent::SouthAmerica;
  if (text == "Oceania") return Continent::Oceania;
  return std::nullopt;
}

ConfederationIndex::ConfederationIndex(std::span<const CountryRecord> countries) {
  for (const auto& c : countries) by_name_.emplace(c.name, c.confederation);
}

std::optional<Confederation> ConfederationIndex::of(std::string_view team) const {
  auto it = by_name_.find(team);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

AliasMap::AliasMap(std::map<std::string, TeamId> entries) : entries_(std::move(entries)) {
  for (const auto& [alias, target] : entries_) {
    if (target.empty()) throw InputError(fmt::format("alias '{}' has an empty target", alias));
    auto it = entries_.find(target);
    if (it != entries_.end() && it->second != target) {
      throw InputError(fmt::format("alias chain '{}' -> '{}' -> '{}' is not idempotent", alias,
                                   target, it->second));
    }
  }
}

const std::string& AliasMap::canonical(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? name : it->second;
}

std::vector<MatchRecord> parse_matches(std::istream& in, std::optional<Date> cutoff) {
  CsvReader reader(in);
  expect_header(reader, kMatchesHeader, "matches");
  std::vector<MatchRecord> out;
  while (auto fields = reader.next()) {
    const std::size_t row = reader.record_number();
    if (fields->size() != 12) {
      throw InputError(fmt::format("expected 12 fields, found {}", fields->size()), row,
                       "<record>");
    }
    const auto& f = *fields;
    MatchRecord m;
    try {
      m.date = parse_date(trim(f[0]));
    } catch (const InputError& e) {
      throw InputError(e.what(), row, "Date");
    }
    if (m.date < kFirstMatchDate) {
      throw InputError(fmt::format("date {} precedes the first recorded match",
                                   format_date(m.date)),
                       row, "Date");
    }
    if (cutoff && *cutoff < m.date) {
      throw InputError(fmt::format("date {} is after the ingestion cutoff {}",
                                   format_date(m.date), format_date(*cutoff)),
                       row, "Date");
    }
    m.home = parse_team(f[1], row, "Home");
    m.guest = parse_team(f[2], row, "Guest");
    if (m.home == m.guest) throw InputError("team plays itself", row, "Guest");
    m.goals_home = parse_goals(f[3], row, "GoalsHome");
    m.goals_guest = parse_goals(f[4], row, "GoalsGuest");
    m.tournament = std::string(trim(f[5]));
    m.venue = std::string(trim(f[6]));
    auto third = trim(f[11]);
    if (third == "True") {
      m.neutral_ground = true;
    } else if (third == "False") {
      m.neutral_ground = false;
    } else {
      throw InputError(fmt::format("expected True or False, got '{}'", third), row,
                       "ThirdPlace");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CountryRecord> parse_countries(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, kCountriesHeader, "countries");
  std::vector<CountryRecord> out;
  std::set<std::string> seen;
  while (auto fields = reader.next()) {
    const std::size_t row = reader.record_number();
    if (fields->size() != 5) {
      throw InputError(fmt::format("expected 5 fields, found {}", fields->size()), row,
                       "<record>");
    }
    const auto& f = *fields;
    CountryRecord c;
    c.name = parse_team(f[0], row, "Name");
    c.latitude = parse_real(f[1], row, "Latitude");
    if (c.latitude < -90.0 || c.latitude > 90.0) {
      throw InputError(fmt::format("latitude {} outside [-90, 90]", c.latitude), row,
                       "Latitude");
    }
    c.longitude = parse_real(f[2], row, "Longitude");
    if (c.longitude < -180.0 || c.longitude > 180.0) {
      throw InputError(fmt::format("longitude {} outside [-180, 180]", c.longitude), row,
                       "Longitude");
    }
    auto continent = parse_continent(f[3]);
    if (!continent) throw InputError(fmt::format("unknown continent '{}'", f[3]), row, "Continent");
    c.continent = *continent;
    auto confed = parse_confederation(f[4]);
    if (!confed) {
      throw InputError(fmt::format("unknown confederation '{}'", f[4]), row, "Confederation");
    }
    c.confederation = *confed;
    if (!seen.insert(c.name).second) {
      throw InputError(fmt::format("duplicate country '{}'", c.name), row, "Name");
    }
    out.push_back(std::move(c));
  }
  return out;
}

AliasMap parse_aliases(std::istream& in) {
  std::map<std::string, TeamId> entries;
  std::string line;
  std::size_t lineno = 0;
  auto unquote = [&](std::string_view s, const char* field) -> std::string {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    if (s.empty() || s.find('"') != std::string_view::npos) {
      throw InputError("malformed alias entry", lineno, field);
    }
    return std::string(s);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    // Split on the first '=' that is outside quotes.
    bool quoted = false;
    std::size_t eq = std::string_view::npos;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (view[i] == '"') quoted = !quoted;
      if (view[i] == '=' && !quoted) {
        eq = i;
        break;
      }
    }
    if (eq == std::string_view::npos) throw InputError("expected alias = \"canonical\"", lineno, "line");
    std::string alias = unquote(view.substr(0, eq), "alias");
    std::string target = unquote(view.substr(eq + 1), "canonical");
    if (!entries.emplace(alias, target).second) {
      throw InputError(fmt::format("alias '{}' defined twice", alias), lineno, "alias");
    }
  }
  return AliasMap(std::move(entries));
}

std::vector<MatchRecord> unify(std::span<const MatchRecord> matches, const AliasMap& aliases) {
  std::vector<MatchRecord> out(matches.begin(), matches.end());
  if (aliases.empty()) return out;
  for (auto& m : out) {
    m.home = aliases.canonical(m.home);
    m.guest = aliases.canonical(m.guest);
  }
  return out;
}

std::vector<TeamId> unaffiliated_teams(std::span<const MatchRecord> matches,
                                       std::span<const CountryRecord> countries) {
  std::set<std::string_view> known;
  for (const auto& c : countries) known.insert(c.name);
  std::set<TeamId> missing;
  for (const auto& m : matches) {
    if (!known.contains(m.home)) missing.insert(m.home);
    if (!known.contains(m.guest)) missing.insert(m.guest);
  }
  return {missing.begin(), missing.end()};
}

std::vector<MatchRecord> filter_horizon(std::span<const MatchRecord> matches, const Date& from,
                                        const Date& to) {
  if (to < from) {
    throw PreconditionError(fmt::format("horizon start {} is after its end {}", format_date(from),
                                        format_date(to)));
  }
  std::vector<MatchRecord> out;
  std::copy_if(matches.begin(), matches.end(), std::back_inserter(out),
               [&](const MatchRecord& m) { return from <= m.date && m.date <= to; });
  return out;
}

}  // namespace footnet
