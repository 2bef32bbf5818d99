#include "tempo/csv.hpp"

#include "tempo/error.hpp"

#include <istream>
#include <ostream>

namespace tempo {

bool CsvReader::next(Record& out) {
    int c = in_.get();
    if (c == std::istream::traits_type::eof()) return false;

    out.fields.clear();
    out.line = line_;
    std::string field;
    bool quoted = false;

    auto end_field = [&] {
        out.fields.push_back(std::move(field));
        field.clear();
    };

    while (true) {
        if (c == std::istream::traits_type::eof()) {
            if (quoted)
                throw ParseError("line " + std::to_string(out.line) +
                                 ": unterminated quoted field");
            end_field();
            return true;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
        } else if (ch == '"') {
            if (!field.empty())
                throw ParseError("line " + std::to_string(line_) +
                                 ": quote inside unquoted field");
            quoted = true;
        } else if (ch == ',') {
            end_field();
        } else if (ch == '\r') {
            if (in_.peek() == '\n') in_.get();
            ++line_;
            end_field();
            return true;
        } else if (ch == '\n') {
            ++line_;
            end_field();
            return true;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

std::string csv_quote(std::string_view field) {
    const bool needs_quote =
        field.find_first_of(",\"\r\n") != std::string_view::npos ||
        (!field.empty() && (field.front() == '#' || field.front() == ' ' ||
                            field.back() == ' '));
    if (!needs_quote) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << csv_quote(fields[i]);
    }
    out.put('\n');
}

} // namespace tempo
