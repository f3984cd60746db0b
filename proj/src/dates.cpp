#include "dewsp/dates.hpp"

#include <cstdio>

#include "dewsp/errors.hpp"

namespace dewsp {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (to > s.size()) return false;
  for (size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

int to_int(const std::string& s, size_t from, size_t to) {
  int v = 0;
  for (size_t i = from; i < to; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

}  // namespace

Date parse_date(const std::string& iso) {
  // Accepts "YYYY-MM-DD"; a trailing time-of-day part after a space is ignored.
  std::string s = iso;
  if (auto pos = s.find(' '); pos != std::string::npos) s = s.substr(0, pos);
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' || !all_digits(s, 0, 4) ||
      !all_digits(s, 5, 7) || !all_digits(s, 8, 10)) {
    fail(ErrorCode::UnparseableRow, "bad date '" + iso + "' (expected YYYY-MM-DD)");
  }
  Date d{to_int(s, 0, 4), to_int(s, 5, 7), to_int(s, 8, 10)};
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
    fail(ErrorCode::UnparseableRow, "date out of range '" + iso + "'");
  }
  return d;
}

int parse_year_month(const std::string& text) {
  if (text.size() != 7 || text[4] != '-' || !all_digits(text, 0, 4) || !all_digits(text, 5, 7)) {
    fail(ErrorCode::ConfigError, "bad month '" + text + "' (expected YYYY-MM)");
  }
  int year = to_int(text, 0, 4);
  int month = to_int(text, 5, 7);
  if (month < 1 || month > 12) fail(ErrorCode::ConfigError, "month out of range '" + text + "'");
  return year * 12 + month - 1;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_year_month(int month_index) {
  char buf[12];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", month_index / 12, month_index % 12 + 1);
  return buf;
}

}  // namespace dewsp
