#include "dlab/csv.hpp"

#include <vector>

#include "dlab/error.hpp"
#include "dlab/rational.hpp"

namespace dlab {

namespace {

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            break;
        }
        cells.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    // Drop trailing blank lines (a final newline is not a row).
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

void check_label_cell(const std::string& label, std::size_t line_no, std::size_t col_no) {
    if (label.empty()) throw ParseError("empty label", line_no, col_no);
}

}  // namespace

EvalMatrix parse_matrix_csv(std::string_view text, const std::optional<Rat>& bound) {
    const auto lines = split_lines(text);
    if (lines.size() < 2) throw ParseError("matrix CSV needs a header row and at least one data row", 1, 0);

    const auto header = split_line(lines[0]);
    if (!header[0].empty()) throw ParseError("header must start with an empty cell", 1, 1);
    if (header.size() < 2) throw ParseError("header has no column labels", 1, 1);

    std::vector<std::string> col_labels(header.begin() + 1, header.end());
    for (std::size_t j = 0; j < col_labels.size(); ++j) check_label_cell(col_labels[j], 1, j + 2);

    std::vector<std::string> row_labels;
    std::vector<std::vector<Rat>> entries;
    Rat max_abs(0);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto cells = split_line(lines[li]);
        if (cells.size() != col_labels.size() + 1)
            throw ParseError("row has " + std::to_string(cells.size() - 1) + " entries, expected " +
                                 std::to_string(col_labels.size()),
                             li + 1, 1);
        check_label_cell(cells[0], li + 1, 1);
        row_labels.push_back(cells[0]);
        std::vector<Rat> row;
        row.reserve(col_labels.size());
        for (std::size_t j = 1; j < cells.size(); ++j) {
            try {
                row.push_back(parse_rational(cells[j]));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad entry: ") + e.what(), li + 1, j + 1);
            }
            const Rat a = rat_abs(row.back());
            if (a > max_abs) max_abs = a;
        }
        entries.push_back(std::move(row));
    }

    Rat b = bound ? *bound : (max_abs > 0 ? max_abs : Rat(1));
    return validate_matrix(row_labels, col_labels, entries, b);
}

std::string write_matrix_csv(const EvalMatrix& m) {
    auto check_label = [](const std::string& label) {
        if (label.find(',') != std::string::npos || label.find('\n') != std::string::npos ||
            label.find('\r') != std::string::npos)
            throw InvalidInput("label '" + label + "' contains a comma or line break");
    };
    std::string out;
    for (const auto& l : m.col_labels) {
        check_label(l);
        out += ',';
        out += l;
    }
    out += '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        check_label(m.row_labels[i]);
        out += m.row_labels[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += ',';
            out += format_rational(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace dlab
