#include "tempo/time.hpp"

#include "tempo/error.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace tempo {

std::int64_t unit_seconds(Granularity g) {
    switch (g) {
    case Granularity::minute: return 60;
    case Granularity::hour: return 3600;
    case Granularity::day: return 86400;
    }
    return 60;
}

std::string_view to_string(Granularity g) {
    switch (g) {
    case Granularity::minute: return "minute";
    case Granularity::hour: return "hour";
    case Granularity::day: return "day";
    }
    return "minute";
}

Granularity granularity_from_string(std::string_view name) {
    if (name == "minute") return Granularity::minute;
    if (name == "hour") return Granularity::hour;
    if (name == "day") return Granularity::day;
    throw ConfigError("unknown granularity '" + std::string(name) +
                      "' (expected minute, hour, or day)");
}

std::int64_t to_bucket(std::int64_t epoch_seconds, Granularity g) {
    const std::int64_t unit = unit_seconds(g);
    std::int64_t q = epoch_seconds / unit;
    if (epoch_seconds % unit != 0 && epoch_seconds < 0) --q; // floor, not trunc
    return q;
}

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
    static constexpr std::array<unsigned, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                         31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[m - 1];
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad timestamp '" + std::string(text) + "': " + what +
                         " at offset " + std::to_string(pos));
    }

    std::int64_t digits(unsigned min_count, unsigned max_count, const char* what) {
        std::int64_t value = 0;
        unsigned n = 0;
        while (n < max_count && !done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
            ++n;
        }
        if (n < min_count) fail(std::string("expected ") + what);
        return value;
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
};

struct CivilTime {
    std::int64_t year = 1970;
    unsigned month = 1, day = 1;
    std::int64_t hour = 0, minute = 0, second = 0;
    std::int64_t zone_offset_seconds = 0;

    std::int64_t to_epoch() const {
        if (month < 1 || month > 12) throw ParseError("bad timestamp: month out of range");
        if (day < 1 || day > days_in_month(year, month))
            throw ParseError("bad timestamp: day out of range");
        if (hour > 23 || minute > 59 || second > 60)
            throw ParseError("bad timestamp: time of day out of range");
        return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 +
               second - zone_offset_seconds;
    }
};

// Z | +HH:MM | +HHMM | +HH
std::int64_t parse_zone(Cursor& c) {
    if (c.eat('Z') || c.eat('z')) return 0;
    int sign = 0;
    if (c.eat('+')) sign = 1;
    else if (c.eat('-')) sign = -1;
    else c.fail("expected time zone");
    const std::int64_t h = c.digits(2, 2, "zone hours");
    std::int64_t m = 0;
    if (c.eat(':')) m = c.digits(2, 2, "zone minutes");
    else if (std::isdigit(static_cast<unsigned char>(c.peek()))) m = c.digits(2, 2, "zone minutes");
    return sign * (h * 3600 + m * 60);
}

std::int64_t parse_iso8601(std::string_view text) {
    Cursor c{text};
    CivilTime t;
    t.year = c.digits(4, 4, "year");
    if (!c.eat('-')) c.fail("expected '-'");
    t.month = static_cast<unsigned>(c.digits(2, 2, "month"));
    if (!c.eat('-')) c.fail("expected '-'");
    t.day = static_cast<unsigned>(c.digits(2, 2, "day"));
    if (!c.eat('T') && !c.eat('t') && !c.eat(' ')) c.fail("expected date/time separator");
    t.hour = c.digits(2, 2, "hour");
    if (!c.eat(':')) c.fail("expected ':'");
    t.minute = c.digits(2, 2, "minute");
    if (c.eat(':')) t.second = c.digits(2, 2, "second");
    if (c.eat('.') || c.eat(',')) c.digits(1, 9, "fraction"); // truncated to seconds
    if (!c.done()) t.zone_offset_seconds = parse_zone(c);
    if (!c.done()) c.fail("trailing characters");
    return t.to_epoch();
}

std::int64_t parse_with_pattern(std::string_view text, std::string_view pattern) {
    Cursor c{text};
    CivilTime t;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '%') {
            if (!c.eat(pattern[i]))
                c.fail(std::string("expected '") + pattern[i] + "'");
            continue;
        }
        if (++i == pattern.size()) throw ConfigError("time format ends with '%'");
        switch (pattern[i]) {
        case 'Y': t.year = c.digits(4, 4, "year"); break;
        case 'm': t.month = static_cast<unsigned>(c.digits(1, 2, "month")); break;
        case 'd': t.day = static_cast<unsigned>(c.digits(1, 2, "day")); break;
        case 'H': t.hour = c.digits(1, 2, "hour"); break;
        case 'M': t.minute = c.digits(1, 2, "minute"); break;
        case 'S': t.second = c.digits(1, 2, "second"); break;
        case 'f': c.digits(1, 9, "fraction"); break;
        case 'z': t.zone_offset_seconds = parse_zone(c); break;
        case '%':
            if (!c.eat('%')) c.fail("expected '%'");
            break;
        default:
            throw ConfigError(std::string("unsupported time format directive '%") +
                              pattern[i] + "'");
        }
    }
    if (!c.done()) c.fail("trailing characters");
    return t.to_epoch();
}

} // namespace

std::int64_t parse_timestamp(std::string_view text, std::string_view pattern) {
    if (pattern.empty()) return parse_iso8601(text);
    return parse_with_pattern(text, pattern);
}

std::string format_timestamp(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>(rem / 60 % 60), static_cast<long long>(rem % 60));
    return buf;
}

} // namespace tempo
