#include "tempo/csv.hpp"
#include "tempo/error.hpp"
#include "tempo/ingest.hpp"

#include <algorithm>
#include <ostream>

namespace tempo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw ConfigError("missing column '" + name + "' in CSV header");
    return static_cast<std::size_t>(it - header.begin());
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

} // namespace

void IngestionConfig::validate() const {
    std::vector<std::string> names = {case_column, activity_column, time_column};
    if (lifecycle_column) names.push_back(*lifecycle_column);
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw ConfigError("CSV column name '" + names[i] + "' used twice");
}

EventLog parse_csv(std::istream& source, const IngestionConfig& cfg) {
    cfg.validate();
    CsvReader reader(source);
    CsvReader::Record rec;
    if (!reader.next(rec)) throw ParseError("empty input: expected a CSV header row");

    const auto& header = rec.fields;
    const std::size_t case_col = find_column(header, cfg.case_column);
    const std::size_t act_col = find_column(header, cfg.activity_column);
    const std::size_t time_col = find_column(header, cfg.time_column);
    std::optional<std::size_t> life_col;
    if (cfg.lifecycle_column) {
        life_col = find_column(header, *cfg.lifecycle_column);
    } else {
        auto it = std::find(header.begin(), header.end(), "lifecycle");
        if (it != header.end()) life_col = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<Event> events;
    while (reader.next(rec)) {
        if (rec.fields.size() == 1 && rec.fields[0].empty()) continue; // blank line
        if (rec.fields.size() != header.size())
            throw ParseError("line " + std::to_string(rec.line) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(rec.fields.size()));
        Event e;
        e.case_label = std::string(trim(rec.fields[case_col]));
        e.activity_label = std::string(trim(rec.fields[act_col]));
        if (e.case_label.empty())
            throw ParseError("line " + std::to_string(rec.line) + ": empty case label");
        if (e.activity_label.empty())
            throw ParseError("line " + std::to_string(rec.line) + ": empty activity label");
        try {
            e.timestamp = parse_timestamp(trim(rec.fields[time_col]), cfg.time_format);
        } catch (const ParseError& err) {
            throw ParseError("line " + std::to_string(rec.line) + ": " + err.what());
        }
        if (life_col) e.lifecycle = std::string(trim(rec.fields[*life_col]));
        events.push_back(std::move(e));
    }
    return EventLog::from_events(std::move(events));
}

EventLog apply_lifecycle(const EventLog& log, const IngestionConfig& cfg) {
    if (cfg.lifecycle_mode == LifecycleMode::ignore) return log;
    std::vector<Event> events;
    events.reserve(log.size());
    for (const Event& e : log) {
        if (cfg.lifecycle_mode == LifecycleMode::suffix) {
            Event out = e;
            const std::string stage = e.lifecycle.empty() ? "complete" : e.lifecycle;
            out.activity_label = e.activity_label + "_" + stage;
            events.push_back(std::move(out));
        } else { // filter: keep completion events; a missing stage counts as complete
            if (e.lifecycle.empty() || iequals(e.lifecycle, "complete"))
                events.push_back(e);
        }
    }
    return EventLog::from_events(std::move(events));
}

void write_canonical_csv(const EventLog& log, std::ostream& sink) {
    sink << "case,activity,time,lifecycle\n";
    for (const Event& e : log)
        write_csv_row(sink, {e.case_label, e.activity_label,
                             format_timestamp(e.timestamp), e.lifecycle});
}

IngestionConfig canonical_csv_config() {
    IngestionConfig cfg;
    cfg.format = LogFormat::csv;
    cfg.case_column = "case";
    cfg.activity_column = "activity";
    cfg.time_column = "time";
    cfg.lifecycle_column = "lifecycle";
    return cfg;
}

} // namespace tempo
