#pragma once

#include "tempo/event.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tempo {

// Shape of a synthetic log. Trace lengths are drawn so their mean approaches
// avg_length while staying inside [min_length, max_length]; inter-event gaps
// come from the configured distribution. Case labels are "c<i>", activities
// "a<j>". Generation is deterministic for a given seed.
struct LogProfile {
    std::size_t traces = 1;
    std::size_t alphabet_size = 1;
    std::size_t min_length = 1;
    std::size_t avg_length = 1;
    std::size_t max_length = 1;
    std::int64_t horizon_seconds = 30 * 86400; // trace start times spread over this window
    enum class Gap { uniform, exponential };
    Gap gap = Gap::uniform;
    std::int64_t gap_min_seconds = 60;
    std::int64_t gap_max_seconds = 3600;
    double gap_mean_seconds = 600.0;
    std::uint64_t seed = 1;

    void validate() const; // throws ConfigError
};

EventLog generate(const LogProfile& profile);

// Partitions whole traces into `parts` fragments whose trace counts differ by
// at most one; events keep their original order inside each fragment.
std::vector<EventLog> split_by_traces(const EventLog& log, std::size_t parts);

// Slices events into `parts` equal time windows; an event at time t goes to
// part floor((t - t_min)/window), clamped to parts-1. Traces may fragment.
std::vector<EventLog> split_by_timeframe(const EventLog& log, std::size_t parts);

// Reads "key=value" lines (# comments and blanks allowed). Keys: traces,
// alphabet, min_len, avg_len, max_len, horizon_days, gap, gap_min, gap_max,
// gap_mean, seed.
LogProfile parse_profile(std::istream& source);

} // namespace tempo
