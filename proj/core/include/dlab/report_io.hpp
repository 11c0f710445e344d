#pragma once

#include <string>
#include <string_view>

#include "dlab/classify.hpp"

namespace dlab::report_io {

// Serializes a classification report to JSON with alphabetically ordered
// keys, rationals as canonical strings, and every embedded witness
// re-verified against the echoed matrix first. Deterministic: equal reports
// serialize to identical bytes.
std::string report_to_json(const classify::Report& r, std::string_view version);

struct ParsedReport {
    classify::Report report;
    std::string version;
};

// Parses what report_to_json wrote (key order irrelevant).
// Errors: ParseError on malformed JSON or schema violations.
ParsedReport report_from_json(const std::string& text);

}  // namespace dlab::report_io
