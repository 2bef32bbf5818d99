#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tempo {

// One activity execution record. `lifecycle` is empty when the log carries no
// stage information for the event.
struct Event {
    std::string case_label;
    std::string activity_label;
    std::int64_t timestamp = 0; // UTC epoch seconds
    std::string lifecycle;

    bool operator==(const Event&) const = default;
};

// Globally timestamp-ordered event sequence. Ordering is stable: events with
// equal timestamps keep their input order, so builds are deterministic.
class EventLog {
public:
    EventLog() = default;

    // Sorts (stably) by timestamp; accepts unordered input.
    static EventLog from_events(std::vector<Event> events);

    const std::vector<Event>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    auto begin() const { return events_.begin(); }
    auto end() const { return events_.end(); }

    bool operator==(const EventLog&) const = default;

private:
    std::vector<Event> events_;
};

} // namespace tempo
