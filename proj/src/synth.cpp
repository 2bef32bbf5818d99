#include "tempo/synth.hpp"

#include "tempo/error.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <unordered_map>

namespace tempo {

namespace {

// Drawing through explicit arithmetic (not std::*_distribution) keeps logs
// reproducible across standard library implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    return n ? rng() % n : 0;
}

std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Mean-preserving draw from [min,max] around avg: pick the segment [min,avg]
// with weight (max-avg)/(max-min), else [avg,max], then uniform inside it.
std::size_t draw_length(std::mt19937_64& rng, const LogProfile& p) {
    if (p.min_length == p.max_length) return p.min_length;
    const double w = static_cast<double>(p.max_length - p.avg_length) /
                     static_cast<double>(p.max_length - p.min_length);
    if (draw_unit(rng) < w)
        return static_cast<std::size_t>(draw_range(rng, static_cast<std::int64_t>(p.min_length),
                                                   static_cast<std::int64_t>(p.avg_length)));
    return static_cast<std::size_t>(draw_range(rng, static_cast<std::int64_t>(p.avg_length),
                                               static_cast<std::int64_t>(p.max_length)));
}

std::int64_t draw_gap(std::mt19937_64& rng, const LogProfile& p) {
    if (p.gap == LogProfile::Gap::uniform)
        return draw_range(rng, p.gap_min_seconds, p.gap_max_seconds);
    const double u = std::max(draw_unit(rng), 1e-12);
    return static_cast<std::int64_t>(-p.gap_mean_seconds * std::log(u)) + 1;
}

constexpr std::int64_t kEpochBase = 1577836800; // 2020-01-01T00:00:00Z

} // namespace

void LogProfile::validate() const {
    if (traces == 0) throw ConfigError("profile: traces must be positive");
    if (alphabet_size == 0) throw ConfigError("profile: alphabet must be positive");
    if (min_length == 0) throw ConfigError("profile: min_len must be positive");
    if (!(min_length <= avg_length && avg_length <= max_length))
        throw ConfigError("profile: need min_len <= avg_len <= max_len");
    if (horizon_seconds <= 0) throw ConfigError("profile: horizon must be positive");
    if (gap == Gap::uniform && gap_min_seconds > gap_max_seconds)
        throw ConfigError("profile: gap_min exceeds gap_max");
    if (gap == Gap::exponential && gap_mean_seconds <= 0)
        throw ConfigError("profile: gap_mean must be positive");
}

EventLog generate(const LogProfile& profile) {
    profile.validate();
    std::mt19937_64 rng(profile.seed);
    std::vector<Event> events;
    events.reserve(profile.traces * profile.avg_length);
    for (std::size_t i = 0; i < profile.traces; ++i) {
        const std::string case_label = "c" + std::to_string(i + 1);
        const std::size_t length = draw_length(rng, profile);
        std::int64_t t = kEpochBase +
                         static_cast<std::int64_t>(draw_below(
                             rng, static_cast<std::uint64_t>(profile.horizon_seconds)));
        for (std::size_t j = 0; j < length; ++j) {
            Event e;
            e.case_label = case_label;
            e.activity_label = "a" + std::to_string(draw_below(rng, profile.alphabet_size) + 1);
            e.timestamp = t;
            events.push_back(std::move(e));
            t += draw_gap(rng, profile);
        }
    }
    return EventLog::from_events(std::move(events));
}

std::vector<EventLog> split_by_traces(const EventLog& log, std::size_t parts) {
    if (parts == 0) throw ConfigError("split: parts must be >= 1");
    // Trace ordinals by first appearance, so fragments preserve log order.
    std::unordered_map<std::string, std::size_t> ordinal;
    ordinal.reserve(log.size());
    for (const Event& e : log)
        ordinal.emplace(e.case_label, ordinal.size());
    const std::size_t traces = ordinal.size();

    // First (traces % parts) fragments take one extra trace.
    std::vector<std::size_t> part_of_trace(traces);
    const std::size_t base = parts ? traces / parts : 0;
    const std::size_t extra = parts ? traces % parts : 0;
    std::size_t t = 0;
    for (std::size_t p = 0; p < parts && t < traces; ++p) {
        const std::size_t take = base + (p < extra ? 1 : 0);
        for (std::size_t k = 0; k < take && t < traces; ++k) part_of_trace[t++] = p;
    }

    std::vector<std::vector<Event>> buckets(parts);
    for (const Event& e : log)
        buckets[part_of_trace[ordinal[e.case_label]]].push_back(e);

    std::vector<EventLog> out;
    out.reserve(parts);
    for (auto& b : buckets) out.push_back(EventLog::from_events(std::move(b)));
    return out;
}

std::vector<EventLog> split_by_timeframe(const EventLog& log, std::size_t parts) {
    if (parts == 0) throw ConfigError("split: parts must be >= 1");
    std::vector<std::vector<Event>> buckets(parts);
    if (!log.empty()) {
        const std::int64_t t_min = log.events().front().timestamp;
        const std::int64_t t_max = log.events().back().timestamp;
        const std::int64_t window =
            std::max<std::int64_t>(1, (t_max - t_min) / static_cast<std::int64_t>(parts) + 1);
        for (const Event& e : log) {
            auto p = static_cast<std::size_t>((e.timestamp - t_min) / window);
            buckets[std::min(p, parts - 1)].push_back(e);
        }
    }
    std::vector<EventLog> out;
    out.reserve(parts);
    for (auto& b : buckets) out.push_back(EventLog::from_events(std::move(b)));
    return out;
}

LogProfile parse_profile(std::istream& source) {
    LogProfile p;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("profile line " + std::to_string(line_no) +
                             ": expected key=value");
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        try {
            if (key == "traces") p.traces = std::stoull(value);
            else if (key == "alphabet") p.alphabet_size = std::stoull(value);
            else if (key == "min_len") p.min_length = std::stoull(value);
            else if (key == "avg_len") p.avg_length = std::stoull(value);
            else if (key == "max_len") p.max_length = std::stoull(value);
            else if (key == "horizon_days") p.horizon_seconds = std::stoll(value) * 86400;
            else if (key == "gap")
                p.gap = value == "exponential" ? LogProfile::Gap::exponential
                                               : LogProfile::Gap::uniform;
            else if (key == "gap_min") p.gap_min_seconds = std::stoll(value);
            else if (key == "gap_max") p.gap_max_seconds = std::stoll(value);
            else if (key == "gap_mean") p.gap_mean_seconds = std::stod(value);
            else if (key == "seed") p.seed = std::stoull(value);
            else
                throw ParseError("profile line " + std::to_string(line_no) +
                                 ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ParseError("profile line " + std::to_string(line_no) + ": bad value for '" +
                             key + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("profile line " + std::to_string(line_no) + ": bad value for '" +
                             key + "'");
        }
    }
    p.validate();
    return p;
}

} // namespace tempo
