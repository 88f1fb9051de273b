#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace wqmc {

// A frequency vector k in Z^d indexing one Fourier mode, d >= 1. The all-zero
// vector is the constant mode.
using FrequencyVector = std::vector<std::int64_t>;

// 1-based indices of the nonzero components.
std::vector<int> support(const FrequencyVector& k);

// max(supp) - min(supp) + 1 over the support, 0 when the support is empty.
int width(const FrequencyVector& k);

// Weight families for the norm sum_k |f^(k)| r(k):
//   Unit  1
//   R0    max(1, log log min_{j in supp} |k_j|)
//   R1    max(1, log min_{j in supp} |k_j|)
//   R2    max(width(supp(k)), log min_{j in supp} |k_j|)
//   R3    prod_j max(1, log |k_j|)        (factor 1 for k_j = 0)
//   R4    prod_j max(1, |k_j|)            (factor 1 for k_j = 0)
// Every family evaluates to exactly 1 at k = 0 and to >= 1 elsewhere.
// Logarithms are natural; log log x is taken as -inf for x <= 1 so the outer
// max makes the R0 value 1 whenever min |k_j| is 1 or 2.
enum class WeightFamily { Unit, R0, R1, R2, R3, R4 };

double weight(WeightFamily family, const FrequencyVector& k);

std::string_view to_string(WeightFamily family);
// Accepts "unit", "r0", ..., "r4" (case-insensitive); throws on anything else.
WeightFamily weight_family_from_string(std::string_view name);

// All k with |k_j| <= radius in lexicographic order, optionally with the zero
// vector. Size (2*radius+1)^d, minus one when zero is excluded.
std::vector<FrequencyVector> frequency_box(int d, int radius, bool include_zero);

} // namespace wqmc
