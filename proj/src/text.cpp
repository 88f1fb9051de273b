#include "wqmc/text.hpp"

#include <charconv>
#include <stdexcept>

namespace wqmc {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::int64_t parse_int(std::string_view token) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed integer: '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    for (std::string_view part : split(text, ',')) {
        out.push_back(parse_int(part));
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (std::string_view part : split(text, ',')) {
        try {
            std::size_t used = 0;
            const std::string token(part);
            const double value = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed number: '" + std::string(part) + "'");
        }
    }
    return out;
}

PointSet parse_node_list_1d(std::string_view text) {
    struct Entry {
        bool rational;
        std::int64_t num, den;
        double value;
    };
    std::vector<Entry> entries;
    bool all_rational = true;
    for (std::string_view part : split(text, ',')) {
        const std::size_t slash = part.find('/');
        if (slash != std::string_view::npos) {
            const std::int64_t num = parse_int(part.substr(0, slash));
            const std::int64_t den = parse_int(part.substr(slash + 1));
            if (den < 1 || num < 0 || num >= den) {
                throw std::invalid_argument("rational node '" + std::string(part) +
                                            "' must satisfy 0 <= num < den");
            }
            entries.push_back({true, num, den, 0.0});
        } else {
            double value = 0.0;
            try {
                value = std::stod(std::string(part));
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed node: '" + std::string(part) + "'");
            }
            if (!(value >= 0.0 && value < 1.0)) {
                throw std::invalid_argument("node '" + std::string(part) +
                                            "' must lie in [0, 1)");
            }
            entries.push_back({false, 0, 1, value});
            all_rational = false;
        }
    }
    if (entries.empty()) throw std::invalid_argument("empty node list");

    if (all_rational) {
        std::vector<RationalNode> nodes;
        nodes.reserve(entries.size());
        for (const Entry& e : entries) {
            nodes.push_back({{e.num}, e.den});
        }
        return PointSet::rational(1, std::move(nodes), {PointSetKind::Explicit, 0});
    }
    std::vector<double> coords;
    coords.reserve(entries.size());
    for (const Entry& e : entries) {
        coords.push_back(e.rational ? static_cast<double>(e.num) / static_cast<double>(e.den)
                                    : e.value);
    }
    return PointSet::real(1, std::move(coords), {PointSetKind::Explicit, 0});
}

std::string format_rational_node(const RationalNode& node) {
    std::string out;
    for (std::size_t j = 0; j < node.numerators.size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(node.numerators[j]);
        out.push_back('/');
        out += std::to_string(node.den);
    }
    return out;
}

} // namespace wqmc
