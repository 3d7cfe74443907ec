#include "omega/algebra_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace omega {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
                ++pos;
                continue;
            }
            const std::size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            line.tokens.push_back({raw.substr(start, pos - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(ErrorKind kind, std::size_t line, std::size_t column, const std::string& what) {
    throw Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

    FiniteOmegaGroup parse() {
        RawAlgebra raw;
        const Line& header = expect_keyword("algebra", 2);
        raw.name = header.tokens[1].text;
        const Line& size_line = expect_keyword("size", 2);
        raw.size = parse_count(size_line.tokens[1], size_line.number);
        if (raw.size == 0) fail(ErrorKind::ParseError, size_line.number, size_line.tokens[1].column, "size must be positive");

        const Line& add_line = expect_keyword("add", 1);
        raw.add = parse_rows(raw.size, raw.size, "add", add_line.number);

        std::vector<std::size_t> op_lines;
        std::vector<std::string> op_names;
        while (next_ < lines_.size()) {
            const Line& op_line = expect_keyword("op", 3);
            OperationTable op;
            op.name = op_line.tokens[1].text;
            const std::size_t arity = parse_count(op_line.tokens[2], op_line.number);
            if (arity < 1 || arity > kMaxArity)
                fail(ErrorKind::ArityMismatch, op_line.number, op_line.tokens[2].column,
                     "arity must be between 1 and " + std::to_string(kMaxArity));
            op.arity = static_cast<unsigned>(arity);
            std::size_t rows = 1;
            for (std::size_t i = 1; i < arity; ++i) rows *= raw.size;
            const std::size_t first_row = next_ < lines_.size() ? lines_[next_].number : op_line.number;
            op.table = parse_rows(rows, raw.size, "op " + op.name, op_line.number);
            if (op.table[0] != 0)
                fail(ErrorKind::OmegaZeroViolation, first_row, 1,
                     op.name + "(0,...,0) = " + std::to_string(op.table[0]) + ", expected 0");
            op_names.push_back(op.name);
            op_lines.push_back(op_line.number);
            raw.operations.push_back(std::move(op));
        }

        try {
            return validate_algebra(std::move(raw));
        } catch (const Error& e) {
            // Point at the section the failure concerns: the first operation
            // named in the message, otherwise the add table.
            const std::string message = e.what();
            const std::string body = message.substr(message.find(": ") + 2);
            std::size_t line = add_line.number;
            if (e.kind() != ErrorKind::NotAGroup) {
                for (std::size_t i = 0; i < op_names.size(); ++i) {
                    if (body.find(op_names[i]) != std::string::npos) {
                        line = op_lines[i];
                        break;
                    }
                }
            }
            fail(e.kind(), line, 1, body);
        }
    }

private:
    const Line& expect_keyword(const std::string& keyword, std::size_t tokens) {
        if (next_ >= lines_.size()) {
            const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
            fail(ErrorKind::ParseError, last, 1, "expected '" + keyword + "' section, found end of file");
        }
        const Line& line = lines_[next_];
        if (line.tokens[0].text != keyword)
            fail(ErrorKind::ParseError, line.number, line.tokens[0].column,
                 "expected '" + keyword + "', found '" + line.tokens[0].text + "'");
        if (line.tokens.size() != tokens) {
            const std::size_t column =
                line.tokens.size() > tokens ? line.tokens[tokens].column : line.tokens.back().column + line.tokens.back().text.size();
            fail(ErrorKind::ParseError, line.number, column,
                 "'" + keyword + "' takes " + std::to_string(tokens - 1) + " argument(s)");
        }
        ++next_;
        return line;
    }

    static std::size_t parse_count(const Token& token, std::size_t line) {
        std::size_t value = 0;
        const char* end = token.text.data() + token.text.size();
        const auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
        if (ec != std::errc() || ptr != end)
            fail(ErrorKind::ParseError, line, token.column, "expected a non-negative integer, found '" + token.text + "'");
        return value;
    }

    std::vector<Element> parse_rows(std::size_t rows, std::size_t n, const std::string& section, std::size_t header_line) {
        std::vector<Element> table;
        table.reserve(rows * n);
        for (std::size_t r = 0; r < rows; ++r) {
            if (next_ >= lines_.size() || !std::isdigit(static_cast<unsigned char>(lines_[next_].tokens[0].text[0]))) {
                const std::size_t line = next_ < lines_.size() ? lines_[next_].number
                                                               : (lines_.empty() ? header_line : lines_.back().number + 1);
                fail(ErrorKind::ParseError, line, 1,
                     section + " section has " + std::to_string(r) + " rows, expected " + std::to_string(rows));
            }
            const Line& line = lines_[next_++];
            if (line.tokens.size() != n) {
                const std::size_t column = line.tokens.size() > n ? line.tokens[n].column
                                                                  : line.tokens.back().column + line.tokens.back().text.size();
                fail(ErrorKind::ParseError, line.number, column,
                     section + " row has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(n));
            }
            for (const Token& t : line.tokens) {
                const std::size_t value = parse_count(t, line.number);
                if (value >= n)
                    fail(ErrorKind::MalformedTable, line.number, t.column,
                         "entry " + t.text + " outside carrier [0," + std::to_string(n) + ")");
                table.push_back(static_cast<Element>(value));
            }
        }
        return table;
    }

    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

void write_rows(std::ostringstream& out, const std::vector<Element>& table, std::size_t n) {
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table[i];
        out << ((i + 1) % n == 0 ? '\n' : ' ');
    }
}

}  // namespace

FiniteOmegaGroup parse_algebra_file(const std::string& text) { return Parser(text).parse(); }

FiniteOmegaGroup read_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_file(buffer.str());
}

std::string serialize_algebra(const FiniteOmegaGroup& algebra) {
    std::ostringstream out;
    out << "algebra " << algebra.name() << "\nsize " << algebra.size() << "\nadd\n";
    write_rows(out, algebra.add_table(), algebra.size());
    for (const auto& op : algebra.operations()) {
        out << "op " << op.name << ' ' << op.arity << '\n';
        write_rows(out, op.table, algebra.size());
    }
    return out.str();
}

std::string normalize_algebra_file(const std::string& text) {
    std::string out;
    for (const Line& line : tokenize(text)) {
        for (std::size_t i = 0; i < line.tokens.size(); ++i) {
            if (i) out += ' ';
            out += line.tokens[i].text;
        }
        out += '\n';
    }
    return out;
}

}  // namespace omega
