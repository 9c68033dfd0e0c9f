#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fundcast {

// Timestamps are UTC epoch seconds; durations are plain seconds.
// All window arithmetic downstream works on offsets from a campaign's
// start_time, so second resolution is enough.
using Timestamp = std::int64_t;
using Duration = std::int64_t;

constexpr Duration kSecond = 1;
constexpr Duration kMinute = 60;
constexpr Duration kHour = 3600;
constexpr Duration kDay = 86400;
constexpr Duration kCampaignPeriod = 30 * kDay;

// Parses an RFC-3339 timestamp ("2019-03-01T00:04:38Z" or with a
// "+hh:mm" / "-hh:mm" offset). Fractional seconds are truncated.
std::optional<Timestamp> parse_rfc3339(const std::string& text);

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Timestamp t);

// Parses a duration like "90s", "30m", "1h", "3d" or a bare number of
// seconds. Returns nullopt on malformed input.
std::optional<Duration> parse_duration(const std::string& text);

std::string format_duration(Duration d);

}  // namespace fundcast
