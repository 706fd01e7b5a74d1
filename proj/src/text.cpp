#include "symrep/text.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace symrep {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("trailing characters in '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    return join_ints(p.parts(), ",");
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return Partition{};
    try {
        return Partition(parse_int_list(text, ','));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bad partition '" + text + "': " + e.what());
    }
}

std::string format_shape(const SkewShape& shape) {
    if (shape.is_straight()) return format_partition(shape.outer());
    return format_partition(shape.outer()) + "/" + format_partition(shape.inner());
}

SkewShape parse_shape(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)),
                     parse_partition(text.substr(slash + 1)));
}

std::string format_tableau(const StandardTableau& t) {
    std::string out;
    std::vector<std::vector<int>> rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) out += ";";
        out += join_ints(rows[r], ",");
    }
    return out;
}

std::string format_content(const std::vector<int>& entries) {
    return "[" + join_ints(entries, ",") + "]";
}

std::string format_content(const ContentVector& alpha) { return format_content(alpha.entries()); }

std::string format_cycles(const Permutation& g) {
    auto cycles = g.cycles();
    if (cycles.empty()) return "()";
    std::string out;
    for (const auto& cycle : cycles) {
        out += "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += " ";
            out += std::to_string(cycle[i]);
        }
        out += ")";
    }
    return out;
}

Permutation parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        skip_space();
        while (pos < text.size() && text[pos] != ')') {
            std::size_t used = 0;
            int value = std::stoi(text.substr(pos), &used);
            pos += used;
            cycle.push_back(value);
            skip_space();
            if (pos < text.size() && (text[pos] == ',' )) {
                ++pos;
                skip_space();
            }
        }
        if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
        ++pos; // ')'
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_space();
    }
    return Permutation::from_cycles(degree, cycles);
}

Permutation parse_one_line(const std::string& text) {
    return Permutation(parse_int_list(text, ','));
}

std::string format_double17(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

} // namespace symrep
