#include "wqmc/pointsets.hpp"

#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "wqmc/primes.hpp"

namespace wqmc {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t md) noexcept {
    using u128 = unsigned __int128;
    const u128 prod = static_cast<u128>(a) * static_cast<u128>(b);
    return static_cast<std::int64_t>(prod % static_cast<u128>(md));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t md) noexcept {
    std::int64_t r = a % md;
    if (r < 0) r += md;
    return r;
}

std::int64_t phase_numerator(std::span<const std::int64_t> k, const RationalNode& node) {
    const std::int64_t den = node.den;
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const std::int64_t kr = mod_floor(k[j], den);
        acc = (acc + mulmod(kr, node.numerators[j], den)) % den;
    }
    return acc;
}

void validate(const GeneratingVector& g) {
    if (!is_prime(g.p)) {
        throw std::invalid_argument("GeneratingVector: p must be prime");
    }
    if (g.z.empty()) {
        throw std::invalid_argument("GeneratingVector: z must have d >= 1 components");
    }
    for (std::int64_t zj : g.z) {
        if (zj < 1 || zj > g.p - 1) {
            throw std::invalid_argument("GeneratingVector: components must lie in {1,...,p-1}");
        }
    }
}

PointSet PointSet::rational(int d, std::vector<RationalNode> nodes, Provenance prov) {
    if (d < 1) throw std::invalid_argument("PointSet: d must be >= 1");
    for (const RationalNode& node : nodes) {
        if (static_cast<int>(node.numerators.size()) != d) {
            throw std::invalid_argument("PointSet: node dimension mismatch");
        }
        if (node.den < 1) throw std::invalid_argument("PointSet: denominator must be >= 1");
        for (std::int64_t num : node.numerators) {
            if (num < 0 || num >= node.den) {
                throw std::invalid_argument("PointSet: numerators must lie in [0, den)");
            }
        }
    }
    PointSet ps;
    ps.d_ = d;
    ps.is_rational_ = true;
    ps.rational_ = std::move(nodes);
    ps.prov_ = prov;
    return ps;
}

PointSet PointSet::real(int d, std::vector<double> flat_coords, Provenance prov) {
    if (d < 1) throw std::invalid_argument("PointSet: d must be >= 1");
    if (flat_coords.size() % static_cast<std::size_t>(d) != 0) {
        throw std::invalid_argument("PointSet: coordinate count not a multiple of d");
    }
    for (double x : flat_coords) {
        if (!(x >= 0.0 && x < 1.0)) {
            throw std::invalid_argument("PointSet: coordinates must lie in [0, 1)");
        }
    }
    PointSet ps;
    ps.d_ = d;
    ps.is_rational_ = false;
    ps.real_flat_ = std::move(flat_coords);
    ps.prov_ = prov;
    return ps;
}

double PointSet::coordinate(std::size_t i, int j) const {
    if (is_rational_) {
        const RationalNode& node = rational_[i];
        return static_cast<double>(node.numerators[static_cast<std::size_t>(j)]) /
               static_cast<double>(node.den);
    }
    return real_flat_[i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(j)];
}

namespace {

constexpr std::int64_t kMaxPrime = std::numeric_limits<std::int32_t>::max();

void check_korobov_args(const char* what, int d, std::int64_t p) {
    if (d < 1) throw std::invalid_argument(std::string(what) + ": d must be >= 1");
    if (p > kMaxPrime) {
        throw std::invalid_argument(std::string(what) + ": p exceeds the 2^31 - 1 cap");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument(std::string(what) + ": p must be prime");
    }
    if (p < d) {
        // Construction stays well-defined; only the width/p exponential-sum
        // bound needs p >= d.
        std::cerr << what << ": warning: p = " << p << " < d = " << d
                  << "; exponential-sum bounds assume p >= d\n";
    }
}

} // namespace

PointSet korobov_s(int d, std::int64_t p) {
    check_korobov_args("korobov_s", d, p);
    const std::int64_t den = p * p;
    std::vector<RationalNode> nodes;
    nodes.reserve(static_cast<std::size_t>(den));
    for (std::int64_t h = 0; h < den; ++h) {
        RationalNode node;
        node.den = den;
        node.numerators.resize(static_cast<std::size_t>(d));
        std::int64_t power = h; // h^j mod p^2, starting at j = 1
        for (int j = 0; j < d; ++j) {
            node.numerators[static_cast<std::size_t>(j)] = power;
            if (j + 1 < d) power = mulmod(power, h, den);
        }
        nodes.push_back(std::move(node));
    }
    return PointSet::rational(d, std::move(nodes), {PointSetKind::KorobovS, p});
}

PointSet korobov_t(int d, std::int64_t p) {
    check_korobov_args("korobov_t", d, p);
    std::vector<RationalNode> nodes;
    nodes.reserve(static_cast<std::size_t>(p * p));
    for (std::int64_t h = 0; h < p; ++h) {
        for (std::int64_t l = 0; l < p; ++l) {
            RationalNode node;
            node.den = p;
            node.numerators.resize(static_cast<std::size_t>(d));
            std::int64_t lpow = l; // l^j mod p, starting at j = 1
            for (int j = 0; j < d; ++j) {
                node.numerators[static_cast<std::size_t>(j)] = mulmod(h, lpow, p);
                if (j + 1 < d) lpow = mulmod(lpow, l, p);
            }
            nodes.push_back(std::move(node));
        }
    }
    return PointSet::rational(d, std::move(nodes), {PointSetKind::KorobovT, p});
}

namespace {

PointSet band_union(int d, std::int64_t m, PointSetKind kind) {
    const PrimeBand band = prime_band(m);
    std::vector<RationalNode> nodes;
    for (std::int64_t p : band.primes) {
        PointSet part = (kind == PointSetKind::Union1) ? korobov_s(d, p) : korobov_t(d, p);
        for (std::size_t i = 0; i < part.size(); ++i) {
            nodes.push_back(part.rational_node(i));
        }
    }
    return PointSet::rational(d, std::move(nodes), {kind, m});
}

} // namespace

PointSet union_p1(int d, std::int64_t m) { return band_union(d, m, PointSetKind::Union1); }

PointSet union_p2(int d, std::int64_t m) { return band_union(d, m, PointSetKind::Union2); }

PointSet lattice(int d, const GeneratingVector& g) {
    validate(g);
    if (static_cast<int>(g.z.size()) != d) {
        throw std::invalid_argument("lattice: generating vector dimension mismatch");
    }
    std::vector<RationalNode> nodes;
    nodes.reserve(static_cast<std::size_t>(g.p));
    for (std::int64_t h = 0; h < g.p; ++h) {
        RationalNode node;
        node.den = g.p;
        node.numerators.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            node.numerators[static_cast<std::size_t>(j)] =
                mulmod(h, g.z[static_cast<std::size_t>(j)], g.p);
        }
        nodes.push_back(std::move(node));
    }
    return PointSet::rational(d, std::move(nodes), {PointSetKind::Lattice, g.p, g.z});
}

} // namespace wqmc
