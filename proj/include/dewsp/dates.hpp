#pragma once

#include <compare>
#include <string>

namespace dewsp {

// Calendar date. Months are canonically addressed by a flat month index
// (year * 12 + month - 1) so that adjacent calendar months differ by one.
struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  auto operator<=>(const Date&) const = default;

  int month_index() const { return year * 12 + month - 1; }
};

// Half-open index range [begin, end), used for month windows and splits.
struct IndexRange {
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool contains(int i) const { return i >= begin && i < end; }
  bool operator==(const IndexRange&) const = default;
};

Date parse_date(const std::string& iso);        // "YYYY-MM-DD"
int parse_year_month(const std::string& text);  // "YYYY-MM" -> month index
std::string format_date(const Date& d);
std::string format_year_month(int month_index);

}  // namespace dewsp
