#include "tempo/event.hpp"

#include <algorithm>

namespace tempo {

EventLog EventLog::from_events(std::vector<Event> events) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    EventLog log;
    log.events_ = std::move(events);
    return log;
}

} // namespace tempo
