#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wqmc/pointsets.hpp"

namespace wqmc {

// "1,-2,3" -> {1, -2, 3}; throws on malformed input.
std::vector<std::int64_t> parse_int_list(std::string_view text);

// "0.5,-0.25" -> {0.5, -0.25}; throws on malformed input.
std::vector<double> parse_double_list(std::string_view text);

// Comma-separated univariate node list. Entries of the form "a/b" are exact
// rationals; plain decimals become floating-point coordinates. A list is
// stored exactly iff every entry is rational.
PointSet parse_node_list_1d(std::string_view text);

// Exact "num/den" rendering of one node, coordinates comma-separated.
std::string format_rational_node(const RationalNode& node);

} // namespace wqmc
