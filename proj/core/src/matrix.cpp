#include "dlab/matrix.hpp"

#include <algorithm>
#include <set>

#include "dlab/error.hpp"

namespace dlab {

ThresholdPair::ThresholdPair(Rat low, Rat high) : s(std::move(low)), r(std::move(high)) {
    if (!(s < r))
        throw InvalidInput("thresholds require s < r, got s=" + format_rational(s) +
                           " r=" + format_rational(r));
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* kind) {
    if (labels.empty()) throw InvalidInput(std::string(kind) + " labels must be non-empty");
    std::set<std::string> seen;
    for (const auto& label : labels) {
        if (label.empty()) throw InvalidInput(std::string(kind) + " label is empty");
        if (!seen.insert(label).second)
            throw InvalidInput(std::string("duplicate ") + kind + " label '" + label + "'");
    }
}

}  // namespace

EvalMatrix validate_matrix(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<std::vector<Rat>> entries,
                           Rat bound) {
    check_labels(row_labels, "row");
    check_labels(col_labels, "col");
    if (bound <= 0) throw InvalidInput("bound must be positive, got " + format_rational(bound));
    if (entries.size() != row_labels.size())
        throw InvalidInput("entry row count " + std::to_string(entries.size()) +
                           " does not match " + std::to_string(row_labels.size()) + " row labels");

    EvalMatrix m;
    m.row_labels = std::move(row_labels);
    m.col_labels = std::move(col_labels);
    m.bound = std::move(bound);
    m.entries.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].size() != m.cols())
            throw InvalidInput("row " + std::to_string(i) + " has " +
                               std::to_string(entries[i].size()) + " entries, expected " +
                               std::to_string(m.cols()));
        for (std::size_t j = 0; j < entries[i].size(); ++j) {
            if (rat_abs(entries[i][j]) > m.bound)
                throw InvalidInput("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + format_rational(entries[i][j]) +
                                   " exceeds bound " + format_rational(m.bound));
            m.entries.push_back(std::move(entries[i][j]));
        }
    }
    return m;
}

EvalMatrix validate_matrix_text(std::vector<std::string> row_labels,
                                std::vector<std::string> col_labels,
                                const std::vector<std::vector<std::string>>& entries,
                                const Rat& bound) {
    std::vector<std::vector<Rat>> parsed(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        parsed[i].reserve(entries[i].size());
        for (std::size_t j = 0; j < entries[i].size(); ++j) {
            try {
                parsed[i].push_back(parse_rational(entries[i][j]));
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 "): " + e.what());
            }
        }
    }
    return validate_matrix(std::move(row_labels), std::move(col_labels), std::move(parsed), bound);
}

EvalMatrix negate(const EvalMatrix& m) {
    EvalMatrix out = m;
    for (auto& e : out.entries) e = -e;
    return out;
}

EvalMatrix transpose(const EvalMatrix& m) {
    EvalMatrix out;
    out.row_labels = m.col_labels;
    out.col_labels = m.row_labels;
    out.bound = m.bound;
    out.entries.resize(m.entries.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.entries[j * m.rows() + i] = m.at(i, j);
    return out;
}

EvalMatrix submatrix(const EvalMatrix& m,
                     const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) {
    std::vector<std::string> rl, cl;
    for (auto i : row_idx) {
        if (i >= m.rows()) throw InvalidInput("submatrix row index out of range");
        rl.push_back(m.row_labels[i]);
    }
    for (auto j : col_idx) {
        if (j >= m.cols()) throw InvalidInput("submatrix col index out of range");
        cl.push_back(m.col_labels[j]);
    }
    std::vector<std::vector<Rat>> entries(row_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a)
        for (auto j : col_idx) entries[a].push_back(m.at(row_idx[a], j));
    return validate_matrix(std::move(rl), std::move(cl), std::move(entries), m.bound);
}

std::vector<Rat> distinct_entry_values(const EvalMatrix& m) {
    std::vector<Rat> values(m.entries.begin(), m.entries.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace dlab
