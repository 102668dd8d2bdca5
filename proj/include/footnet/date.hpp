#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace footnet {

// Calendar date with no timezone semantics.
using Date = std::chrono::year_month_day;

Date make_date(int year, unsigned month, unsigned day);

// Parses a strict ISO-8601 `YYYY-MM-DD` date. Throws InputError on anything
// else, including calendar-invalid dates such as 2014-02-30.
Date parse_date(std::string_view text);

std::string format_date(const Date& date);

Date next_day(const Date& date);

inline int year_of(const Date& date) { return static_cast<int>(date.year()); }

// Closed interval [from, to].
struct Horizon {
  Date from;
  Date to;

  bool contains(const Date& d) const { return from <= d && d <= to; }
  friend bool operator==(const Horizon&, const Horizon&) = default;
};

Horizon year_horizon(int first_year, int last_year);

}  // namespace footnet
