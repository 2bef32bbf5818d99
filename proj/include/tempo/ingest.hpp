#pragma once

#include "tempo/event.hpp"
#include "tempo/time.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace tempo {

enum class LogFormat { csv, xes };

// How lifecycle stages are folded into activity labels before indexing:
//   ignore — leave labels as recorded;
//   suffix — rename to "<label>_<stage>" so each stage is its own activity;
//   filter — keep only completion events (a missing stage counts as complete).
enum class LifecycleMode { ignore, suffix, filter };

struct IngestionConfig {
    LogFormat format = LogFormat::csv;
    std::string case_column = "case";
    std::string activity_column = "activity";
    std::string time_column = "time";
    std::string time_format;                     // empty = ISO-8601
    Granularity granularity = Granularity::minute;
    LifecycleMode lifecycle_mode = LifecycleMode::ignore;
    std::optional<std::string> lifecycle_column; // CSV; unset = use "lifecycle" when present

    void validate() const; // throws ConfigError on duplicate column names
};

// Reads an RFC-4180 CSV with a header row naming the configured columns.
// Rows come back as Events sorted stably by timestamp.
EventLog parse_csv(std::istream& source, const IngestionConfig& cfg);

// Reads an XES XML document: one Event per <event>, case labels from each
// trace's concept:name, lifecycle from lifecycle:transition when present.
EventLog parse_xes(std::istream& source, const IngestionConfig& cfg);

EventLog apply_lifecycle(const EventLog& log, const IngestionConfig& cfg);

// Canonical form: header "case,activity,time,lifecycle" with ISO-8601 UTC
// times. parse_csv on this output reproduces the log exactly.
void write_canonical_csv(const EventLog& log, std::ostream& sink);

IngestionConfig canonical_csv_config();

} // namespace tempo
