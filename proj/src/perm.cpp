// Cycle-notation printing and parsing for Permutation.
#include "ff/perm.hpp"

#include <cctype>
#include <sstream>

namespace ff {

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation parse_cycles(std::size_t degree, const std::string& text) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<std::size_t> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected point in cycle notation: " + text);
            std::size_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<std::size_t>(text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree)
                throw std::invalid_argument("point out of range in cycle notation: " + text);
            cyc.push_back(v - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size())
            throw std::invalid_argument("unterminated cycle: " + text);
        ++i; // ')'
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            std::size_t from = cyc[k];
            std::size_t to = cyc[(k + 1) % cyc.size()];
            if (used[from])
                throw std::invalid_argument("point repeated across cycles: " + text);
            used[from] = true;
            if (cyc.size() > 1) img[from] = static_cast<Point>(to);
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

} // namespace ff
