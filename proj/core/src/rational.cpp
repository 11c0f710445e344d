#include "dlab/rational.hpp"

#include <cctype>

#include "dlab/error.hpp"

namespace dlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("sign without digits in rational literal '" + std::string(text) + "'");

    auto slash = s.find('/');
    Rat result;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        Int d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Int n{std::string(num)};
        result = Rat(n, d);
    } else {
        auto dot = s.find('.');
        if (dot != std::string_view::npos) {
            std::string_view whole = s.substr(0, dot);
            std::string_view frac = s.substr(dot + 1);
            if (whole.empty() && frac.empty())
                throw ParseError("malformed decimal '" + std::string(text) + "'");
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
                throw ParseError("malformed decimal '" + std::string(text) + "'");
            Int scaled = whole.empty() ? Int(0) : Int(std::string(whole));
            Int denom = 1;
            for (char c : frac) {
                scaled = scaled * 10 + (c - '0');
                denom *= 10;
            }
            result = Rat(scaled, denom);
        } else {
            if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
            result = Rat(Int(std::string(s)));
        }
    }
    return negative ? Rat(-result) : result;
}

std::string format_rational(const Rat& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(const Rat& value) {
    Int q = numerator(value) / denominator(value);
    // Integer division truncates toward zero; fix up negatives.
    if (value < 0 && q * denominator(value) != numerator(value)) --q;
    return q;
}

Int rat_ceil(const Rat& value) {
    return -rat_floor(Rat(-value));
}

}  // namespace dlab
