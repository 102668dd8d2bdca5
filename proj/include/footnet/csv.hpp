#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace footnet {

// Minimal RFC 4180 reader: comma separated, double-quoted fields may hold
// commas, doubled quotes and line breaks. CRLF and a leading UTF-8 BOM are
// accepted.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next record, or nullopt at end of input. Blank lines are skipped.
  std::optional<std::vector<std::string>> next();

  // 1-based index of the record most recently returned (header = 1).
  std::size_t record_number() const { return record_; }

 private:
  std::istream& in_;
  std::size_t record_ = 0;
  bool first_ = true;
};

// Quotes a field if it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

}  // namespace footnet
