#include "wqmc/frequency.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wqmc {

std::vector<int> support(const FrequencyVector& k) {
    std::vector<int> indices;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] != 0) indices.push_back(static_cast<int>(j) + 1);
    }
    return indices;
}

int width(const FrequencyVector& k) {
    int lo = 0, hi = 0;
    bool any = false;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0) continue;
        const int idx = static_cast<int>(j) + 1;
        if (!any) {
            lo = hi = idx;
            any = true;
        } else {
            hi = idx;
        }
    }
    return any ? hi - lo + 1 : 0;
}

namespace {

double abs_component(std::int64_t kj) {
    return std::abs(static_cast<double>(kj));
}

// Smallest |k_j| over the support; 0 signals empty support.
double min_abs_support(const FrequencyVector& k) {
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::int64_t kj : k) {
        if (kj == 0) continue;
        any = true;
        best = std::min(best, abs_component(kj));
    }
    return any ? best : 0.0;
}

} // namespace

double weight(WeightFamily family, const FrequencyVector& k) {
    if (k.empty()) {
        throw std::invalid_argument("weight: frequency vector must have d >= 1");
    }
    switch (family) {
        case WeightFamily::Unit:
            return 1.0;
        case WeightFamily::R0: {
            const double v = min_abs_support(k);
            if (v == 0.0) return 1.0;
            const double lv = std::log(v);
            if (lv <= 1.0) return 1.0; // log log v <= 0 here
            return std::max(1.0, std::log(lv));
        }
        case WeightFamily::R1: {
            const double v = min_abs_support(k);
            if (v == 0.0) return 1.0;
            return std::max(1.0, std::log(v));
        }
        case WeightFamily::R2: {
            const double v = min_abs_support(k);
            if (v == 0.0) return 1.0;
            return std::max(static_cast<double>(width(k)), std::log(v));
        }
        case WeightFamily::R3: {
            double prod = 1.0;
            for (std::int64_t kj : k) {
                if (kj == 0) continue;
                prod *= std::max(1.0, std::log(abs_component(kj)));
            }
            return prod;
        }
        case WeightFamily::R4: {
            double prod = 1.0;
            for (std::int64_t kj : k) {
                prod *= std::max(1.0, abs_component(kj));
            }
            return prod;
        }
    }
    throw std::logic_error("weight: unknown family");
}

std::string_view to_string(WeightFamily family) {
    switch (family) {
        case WeightFamily::Unit: return "unit";
        case WeightFamily::R0: return "r0";
        case WeightFamily::R1: return "r1";
        case WeightFamily::R2: return "r2";
        case WeightFamily::R3: return "r3";
        case WeightFamily::R4: return "r4";
    }
    return "?";
}

WeightFamily weight_family_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "unit") return WeightFamily::Unit;
    if (lower == "r0") return WeightFamily::R0;
    if (lower == "r1") return WeightFamily::R1;
    if (lower == "r2") return WeightFamily::R2;
    if (lower == "r3") return WeightFamily::R3;
    if (lower == "r4") return WeightFamily::R4;
    throw std::invalid_argument("unknown weight family: " + lower);
}

std::vector<FrequencyVector> frequency_box(int d, int radius, bool include_zero) {
    if (d < 1) throw std::invalid_argument("frequency_box: d must be >= 1");
    if (radius < 0) throw std::invalid_argument("frequency_box: radius must be >= 0");

    const std::int64_t side = 2 * static_cast<std::int64_t>(radius) + 1;
    std::size_t total = 1;
    for (int j = 0; j < d; ++j) {
        if (total > (std::size_t{1} << 40) / static_cast<std::size_t>(side)) {
            throw std::invalid_argument("frequency_box: box too large to materialize");
        }
        total *= static_cast<std::size_t>(side);
    }

    std::vector<FrequencyVector> box;
    box.reserve(total - (include_zero ? 0 : 1));
    FrequencyVector k(d, -radius);
    for (;;) {
        const bool is_zero = std::all_of(k.begin(), k.end(),
                                         [](std::int64_t v) { return v == 0; });
        if (include_zero || !is_zero) box.push_back(k);
        int j = d - 1;
        while (j >= 0 && k[j] == radius) {
            k[j] = -radius;
            --j;
        }
        if (j < 0) break;
        ++k[j];
    }
    return box;
}

} // namespace wqmc
