#include "fundcast/time_util.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace fundcast {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
// Howard Hinnant's days_from_civil.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yr + (m <= 2));
}

bool valid_date(int y, unsigned m, unsigned d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static const unsigned md[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  unsigned limit = md[m - 1];
  if (m == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) limit = 29;
  return d <= limit;
}

}  // namespace

std::optional<Timestamp> parse_rfc3339(const std::string& text) {
  int y, mo, d, h, mi, s;
  int consumed = 0;
  if (std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &y, &mo, &d, &h,
                  &mi, &s, &consumed) != 6)
    return std::nullopt;
  if (!valid_date(y, static_cast<unsigned>(mo), static_cast<unsigned>(d)))
    return std::nullopt;
  if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60)
    return std::nullopt;

  const char* p = text.c_str() + consumed;
  if (*p == '.') {  // fractional seconds: skip digits
    ++p;
    if (!std::isdigit(static_cast<unsigned char>(*p))) return std::nullopt;
    while (std::isdigit(static_cast<unsigned char>(*p))) ++p;
  }

  std::int64_t offset = 0;
  if (*p == 'Z' || *p == 'z') {
    ++p;
  } else if (*p == '+' || *p == '-') {
    int oh, om;
    int n = 0;
    if (std::sscanf(p + 1, "%2d:%2d%n", &oh, &om, &n) != 2 || n != 5)
      return std::nullopt;
    if (oh > 23 || om > 59) return std::nullopt;
    offset = (*p == '+' ? 1 : -1) * (oh * kHour + om * kMinute);
    p += 6;
  } else {
    return std::nullopt;
  }
  if (*p != '\0') return std::nullopt;

  std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo),
                                      static_cast<unsigned>(d));
  return days * kDay + h * kHour + mi * kMinute + s - offset;
}

std::string format_rfc3339(Timestamp t) {
  std::int64_t days = t / kDay;
  std::int64_t rem = t % kDay;
  if (rem < 0) {
    rem += kDay;
    days -= 1;
  }
  int y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, m,
                d, static_cast<long long>(rem / kHour),
                static_cast<long long>((rem / kMinute) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::optional<Duration> parse_duration(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (end == text.c_str() || value < 0) return std::nullopt;
  std::string unit(end);
  if (unit.empty() || unit == "s") return value;
  if (unit == "m") return value * kMinute;
  if (unit == "h") return value * kHour;
  if (unit == "d") return value * kDay;
  return std::nullopt;
}

std::string format_duration(Duration d) {
  char buf[32];
  if (d % kDay == 0)
    std::snprintf(buf, sizeof(buf), "%lldd", static_cast<long long>(d / kDay));
  else if (d % kHour == 0)
    std::snprintf(buf, sizeof(buf), "%lldh", static_cast<long long>(d / kHour));
  else if (d % kMinute == 0)
    std::snprintf(buf, sizeof(buf), "%lldm",
                  static_cast<long long>(d / kMinute));
  else
    std::snprintf(buf, sizeof(buf), "%llds", static_cast<long long>(d));
  return buf;
}

}  // namespace fundcast
