#include "footnet/date.hpp"

#include <charconv>

#include <fmt/format.h>

#include "footnet/error.hpp"

namespace footnet {

namespace {

bool parse_digits(std::string_view text, int& out) {
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
  return Date{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
}

Date parse_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !parse_digits(text.substr(0, 4), y) || !parse_digits(text.substr(5, 2), m) ||
      !parse_digits(text.substr(8, 2), d)) {
    throw InputError(fmt::format("unrecognized date format '{}', expected YYYY-MM-DD", text));
  }
  Date date = make_date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
  if (!date.ok()) throw InputError(fmt::format("invalid calendar date '{}'", text));
  return date;
}

std::string format_date(const Date& date) {
  return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(date.year()),
                     static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
}

Date next_day(const Date& date) {
  return Date{std::chrono::sys_days{date} + std::chrono::days{1}};
}

Horizon year_horizon(int first_year, int last_year) {
  return Horizon{make_date(first_year, 1, 1), make_date(last_year, 12, 31)};
}

}  // namespace footnet
