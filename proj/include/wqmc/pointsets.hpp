#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wqmc {

// One node of [0,1)^d with exact rational coordinates numerators[j] / den.
struct RationalNode {
    std::vector<std::int64_t> numerators; // each in [0, den)
    std::int64_t den = 1;
};

enum class PointSetKind { KorobovS, KorobovT, Union1, Union2, Lattice, Explicit };

struct Provenance {
    PointSetKind kind = PointSetKind::Explicit;
    std::int64_t param = 0;         // p for Korobov/lattice sets, m for band unions
    std::vector<std::int64_t> z;    // generating vector, lattice sets only

    Provenance() = default;
    Provenance(PointSetKind k, std::int64_t p) : kind(k), param(p) {}
    Provenance(PointSetKind k, std::int64_t p, std::vector<std::int64_t> zv)
        : kind(k), param(p), z(std::move(zv)) {}
};

// Generating vector z in {1,...,p-1}^d for a p-point rank-1 lattice.
struct GeneratingVector {
    std::int64_t p = 2;
    std::vector<std::int64_t> z;
};
void validate(const GeneratingVector& g);

// An ordered multiset of nodes in [0,1)^d. Constructed sets store exact
// rationals so phases can be reduced in integer arithmetic; uniform random
// sets store double coordinates. Converting to floating point is the only
// lossy step and happens at evaluation time.
class PointSet {
public:
    static PointSet rational(int d, std::vector<RationalNode> nodes, Provenance prov);
    // flat_coords is row-major, size() * d entries in [0, 1).
    static PointSet real(int d, std::vector<double> flat_coords, Provenance prov);

    int dim() const noexcept { return d_; }
    std::size_t size() const noexcept {
        return is_rational_ ? rational_.size()
                            : real_flat_.size() / static_cast<std::size_t>(d_);
    }
    bool is_rational() const noexcept { return is_rational_; }
    const RationalNode& rational_node(std::size_t i) const { return rational_[i]; }
    std::span<const double> real_node(std::size_t i) const {
        const auto d = static_cast<std::size_t>(d_);
        return {real_flat_.data() + i * d, d};
    }
    // Floating-point view of coordinate j (0-based) of node i.
    double coordinate(std::size_t i, int j) const;
    const Provenance& provenance() const noexcept { return prov_; }

private:
    PointSet() = default;
    int d_ = 1;
    bool is_rational_ = true;
    std::vector<RationalNode> rational_;
    std::vector<double> real_flat_;
    Provenance prov_;
};

// Korobov p-set of type S: p^2 nodes, node h = ((h^j mod p^2)/p^2)_{j=1..d}.
// Powers are reduced with 128-bit intermediates; p is capped at 2^31 - 1 so
// p^2 fits in 64 bits. p < d is allowed with a warning on stderr.
PointSet korobov_s(int d, std::int64_t p);

// Korobov p-set of type T: p^2 nodes indexed by pairs (h, l) in lexicographic
// order, node (h, l) = ((h * l^j mod p)/p)_{j=1..d}.
PointSet korobov_t(int d, std::int64_t p);

// Multiset union of korobov_s (resp. korobov_t) over the band P_m, primes
// ascending. Duplicate nodes across primes are kept; the union has
// sum_{p in P_m} p^2 nodes.
PointSet union_p1(int d, std::int64_t m);
PointSet union_p2(int d, std::int64_t m);

// Rank-1 lattice point set: p nodes, node h = ((h * z_j mod p)/p)_{j=1..d}.
PointSet lattice(int d, const GeneratingVector& g);

// a * b mod md with a 128-bit intermediate; a, b in [0, md).
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t md) noexcept;
// Euclidean residue in [0, md) for any signed a.
std::int64_t mod_floor(std::int64_t a, std::int64_t md) noexcept;

// (sum_j k_j * numerators[j]) mod den, reduced exactly in integer arithmetic
// (negative k_j via modular negation). The phase k.x of the node is the
// returned numerator over node.den.
std::int64_t phase_numerator(std::span<const std::int64_t> k, const RationalNode& node);

} // namespace wqmc
