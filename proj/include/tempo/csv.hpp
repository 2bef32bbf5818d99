#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tempo {

// Streaming RFC-4180 reader. Quoted fields may contain commas, doubled quotes
// and newlines; records end at LF or CRLF.
class CsvReader {
public:
    struct Record {
        std::vector<std::string> fields;
        std::size_t line = 0; // 1-based line where the record starts
    };

    explicit CsvReader(std::istream& in) : in_(in) {}

    // Returns false at end of input. Throws ParseError on malformed quoting.
    bool next(Record& out);

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

// Quotes a field when needed (comma, quote, CR/LF, leading '#', or surrounding
// whitespace); the rule is fixed so emitted files are byte-deterministic.
std::string csv_quote(std::string_view field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace tempo
