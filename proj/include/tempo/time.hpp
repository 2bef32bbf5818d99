#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tempo {

// Time unit used to convert timestamps to integer buckets.
enum class Granularity { minute, hour, day };

std::int64_t unit_seconds(Granularity g);
std::string_view to_string(Granularity g);
Granularity granularity_from_string(std::string_view name);

// floor(epoch_seconds / unit_seconds); monotone non-decreasing in the timestamp.
std::int64_t to_bucket(std::int64_t epoch_seconds, Granularity g);

// Parses a timestamp to UTC epoch seconds. An empty pattern selects ISO-8601:
// "YYYY-MM-DD[T| ]HH:MM[:SS][.frac][Z|+HH:MM|+HHMM]"; a missing zone means UTC.
// Non-empty patterns support the directives %Y %m %d %H %M %S %f %z %%; every
// other pattern character must match the input literally.
std::int64_t parse_timestamp(std::string_view text, std::string_view pattern = {});

// Inverse of the default parse: "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(std::int64_t epoch_seconds);

} // namespace tempo
