#include "tempo/error.hpp"
#include "tempo/ingest.hpp"

#include <cctype>
#include <istream>
#include <iterator>

namespace tempo {

namespace {

// Minimal XML reader covering the XES subset we ingest: element tags with
// attributes, self-closing tags, comments, declarations, and the five
// predefined entities. No DTDs, no CDATA, no namespaces beyond literal names.
class XmlScanner {
public:
    explicit XmlScanner(std::istream& in)
        : text_(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()) {}

    struct Tag {
        enum class Kind { open, close, self_closing };
        Kind kind;
        std::string name;
        std::vector<std::pair<std::string, std::string>> attrs;
        std::size_t line;
    };

    // Advances to the next element tag; false at end of document.
    bool next(Tag& out) {
        while (true) {
            skip_text();
            if (pos_ >= text_.size()) return false;
            // text_[pos_] == '<'
            if (starts_with("<!--")) {
                skip_until("-->", "unterminated comment");
                continue;
            }
            if (starts_with("<?")) {
                skip_until("?>", "unterminated processing instruction");
                continue;
            }
            if (starts_with("<!")) {
                skip_until(">", "unterminated declaration");
                continue;
            }
            parse_tag(out);
            return true;
        }
    }

    [[noreturn]] void fail(const std::string& what, std::size_t line) const {
        throw ParseError("XES line " + std::to_string(line) + ": " + what);
    }

private:
    bool starts_with(std::string_view prefix) const {
        return text_.compare(pos_, prefix.size(), prefix) == 0;
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_)
            if (text_[pos_] == '\n') ++line_;
    }

    void skip_text() {
        while (pos_ < text_.size() && text_[pos_] != '<') advance(1);
    }

    void skip_until(std::string_view terminator, const char* err) {
        const std::size_t at = text_.find(terminator, pos_);
        if (at == std::string::npos) fail(err, line_);
        advance(at + terminator.size() - pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance(1);
    }

    std::string read_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '>' || c == '/' ||
                c == '=')
                break;
            advance(1);
        }
        if (pos_ == start) fail("expected a name", line_);
        return text_.substr(start, pos_ - start);
    }

    std::string read_attr_value() {
        if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\''))
            fail("expected a quoted attribute value", line_);
        const char quote = text_[pos_];
        advance(1);
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != quote) {
            if (text_[pos_] == '&') {
                value += read_entity();
            } else {
                value.push_back(text_[pos_]);
                advance(1);
            }
        }
        if (pos_ >= text_.size()) fail("unterminated attribute value", line_);
        advance(1);
        return value;
    }

    std::string read_entity() {
        const std::size_t semi = text_.find(';', pos_);
        if (semi == std::string::npos || semi - pos_ > 10)
            fail("bad entity reference", line_);
        const std::string name = text_.substr(pos_ + 1, semi - pos_ - 1);
        advance(semi + 1 - pos_);
        if (name == "amp") return "&";
        if (name == "lt") return "<";
        if (name == "gt") return ">";
        if (name == "quot") return "\"";
        if (name == "apos") return "'";
        if (!name.empty() && name[0] == '#') {
            const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
            unsigned long cp = 0;
            try {
                cp = std::stoul(name.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
            } catch (...) {
                fail("bad character reference '&" + name + ";'", line_);
            }
            // UTF-8 encode
            std::string out;
            if (cp < 0x80) {
                out.push_back(static_cast<char>(cp));
            } else if (cp < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else if (cp < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            }
            return out;
        }
        fail("unknown entity '&" + name + ";'", line_);
    }

    void parse_tag(Tag& out) {
        out.line = line_;
        out.attrs.clear();
        advance(1); // '<'
        if (pos_ < text_.size() && text_[pos_] == '/') {
            advance(1);
            out.kind = Tag::Kind::close;
            out.name = read_name();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '>')
                fail("malformed closing tag </" + out.name + ">", out.line);
            advance(1);
            return;
        }
        out.kind = Tag::Kind::open;
        out.name = read_name();
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) fail("unterminated tag <" + out.name + ">", out.line);
            if (text_[pos_] == '>') {
                advance(1);
                return;
            }
            if (text_[pos_] == '/') {
                advance(1);
                if (pos_ >= text_.size() || text_[pos_] != '>')
                    fail("malformed self-closing tag", out.line);
                advance(1);
                out.kind = Tag::Kind::self_closing;
                return;
            }
            std::string key = read_name();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '=')
                fail("expected '=' after attribute '" + key + "'", line_);
            advance(1);
            skip_ws();
            out.attrs.emplace_back(std::move(key), read_attr_value());
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

const std::string* attr(const XmlScanner::Tag& tag, std::string_view key) {
    for (const auto& [k, v] : tag.attrs)
        if (k == key) return &v;
    return nullptr;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

EventLog parse_xes(std::istream& source, const IngestionConfig& cfg) {
    XmlScanner scanner(source);
    XmlScanner::Tag tag;

    std::vector<Event> events;
    std::vector<std::string> open_elements;

    std::size_t trace_index = 0;   // 1-based ordinal of the current trace
    bool in_trace = false, in_event = false;
    std::string trace_name;
    bool trace_named = false;
    std::size_t trace_first_event = 0; // index into `events` of this trace's first event

    std::string ev_activity, ev_lifecycle;
    std::optional<std::int64_t> ev_time;
    std::size_t ev_line = 0, event_ordinal = 0;

    while (scanner.next(tag)) {
        const bool is_attr_elem = tag.name == "string" || tag.name == "date" ||
                                  tag.name == "int" || tag.name == "float" ||
                                  tag.name == "boolean" || tag.name == "id";
        switch (tag.kind) {
        case XmlScanner::Tag::Kind::open:
        case XmlScanner::Tag::Kind::self_closing: {
            if (tag.name == "trace") {
                if (in_trace) scanner.fail("nested <trace>", tag.line);
                in_trace = true;
                ++trace_index;
                trace_name.clear();
                trace_named = false;
                trace_first_event = events.size();
                event_ordinal = 0;
            } else if (tag.name == "event") {
                if (!in_trace) scanner.fail("<event> outside a <trace>", tag.line);
                if (in_event) scanner.fail("nested <event>", tag.line);
                in_event = true;
                ++event_ordinal;
                ev_activity.clear();
                ev_lifecycle.clear();
                ev_time.reset();
                ev_line = tag.line;
            } else if (is_attr_elem) {
                const std::string* key = attr(tag, "key");
                const std::string* value = attr(tag, "value");
                if (key && value) {
                    if (in_event) {
                        if (*key == "concept:name") ev_activity = *value;
                        else if (*key == "time:timestamp") {
                            try {
                                ev_time = parse_timestamp(*value);
                            } catch (const ParseError& err) {
                                scanner.fail(err.what(), tag.line);
                            }
                        } else if (*key == "lifecycle:transition")
                            ev_lifecycle = *value;
                    } else if (in_trace && *key == "concept:name") {
                        trace_name = *value;
                        trace_named = true;
                    }
                }
            }
            if (tag.kind == XmlScanner::Tag::Kind::open) open_elements.push_back(tag.name);
            if (tag.kind == XmlScanner::Tag::Kind::self_closing) break;
            break;
        }
        case XmlScanner::Tag::Kind::close: {
            if (open_elements.empty() || open_elements.back() != tag.name)
                scanner.fail("mismatched closing tag </" + tag.name + ">", tag.line);
            open_elements.pop_back();
            if (tag.name == "event") {
                if (!in_event) scanner.fail("stray </event>", tag.line);
                in_event = false;
                if (!ev_time)
                    scanner.fail("trace " + std::to_string(trace_index) + " event " +
                                     std::to_string(event_ordinal) +
                                     ": missing time:timestamp",
                                 ev_line);
                Event e;
                e.activity_label = std::string(trim(ev_activity));
                if (e.activity_label.empty())
                    scanner.fail("trace " + std::to_string(trace_index) + " event " +
                                     std::to_string(event_ordinal) +
                                     ": missing concept:name",
                                 ev_line);
                e.timestamp = *ev_time;
                e.lifecycle = ev_lifecycle;
                events.push_back(std::move(e)); // case label filled at </trace>
            } else if (tag.name == "trace") {
                if (in_event) scanner.fail("unclosed <event>", tag.line);
                in_trace = false;
                const std::string label(trim(trace_name));
                if (!trace_named || label.empty())
                    scanner.fail("trace " + std::to_string(trace_index) +
                                     ": missing concept:name",
                                 tag.line);
                for (std::size_t i = trace_first_event; i < events.size(); ++i)
                    events[i].case_label = label;
            }
            break;
        }
        }
    }
    if (!open_elements.empty())
        throw ParseError("XES: unexpected end of input inside <" + open_elements.back() +
                         ">");
    (void)cfg;
    return EventLog::from_events(std::move(events));
}

} // namespace tempo
