#pragma once

#include "chenruan/cr_ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <string_view>
#include <vector>

namespace chenruan {

using SparseVector = std::vector<std::pair<std::size_t, BigRational>>;

/// All pairwise products of canonical basis elements, stored as sparse
/// coordinate vectors.  Row-major: product(i, j) is basis[i] ∪ basis[j].
class StructureTable {
public:
    StructureTable(const ChenRuanRing& ring, const CanonicalBasis& basis);

    std::size_t size() const { return n_; }
    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    std::size_t nonzero_count() const;

private:
    std::size_t n_;
    std::vector<SparseVector> table_;
};

/// One block of the Poincaré pairing: basis elements of CR degree `degree`
/// against those of the complementary degree.  Entries are sparse
/// (row, column, value) with row/column positions inside the block.
struct GramBlock {
    int degree;
    int dual_degree;
    std::vector<std::size_t> rows;  // basis indices
    std::vector<std::size_t> cols;  // basis indices
    std::vector<std::tuple<std::size_t, std::size_t, BigRational>> entries;

    std::size_t rank() const;
};

/// Blocks for every CR degree d <= 6g-6-d that carries basis elements.
std::vector<GramBlock> gram_blocks(const ChenRuanRing& ring, const CanonicalBasis& basis);

/// Rank over Q of a sparse matrix given as rows of (column, value).
std::size_t sparse_rank(std::vector<std::map<std::size_t, BigRational>> rows);

enum class Suite { Associativity, Frobenius, Graded, PairingRank };

std::string to_string(Suite s);
/// Accepts "assoc", "associativity", "frobenius", "graded", "pairing",
/// "pairing_rank".
Suite parse_suite(std::string_view name);

/// Exhaustive sweeps run over the canonical basis and are limited to
/// g <= kMaxExhaustiveGenus; seeded sampling draws random homogeneous classes.
inline constexpr int kMaxExhaustiveGenus = 3;

struct Sampler {
    enum class Mode { Exhaustive, Seeded };
    Mode mode = Mode::Exhaustive;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;

    static Sampler exhaustive() { return {}; }
    static Sampler seeded(std::size_t samples, std::uint64_t seed) { return {Mode::Seeded, samples, seed}; }
};

struct VerificationReport {
    Suite suite;
    int g;
    Sampler::Mode mode;
    std::size_t checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks a ring axiom:
///  - Associativity: (ab)c == a(bc).
///  - Frobenius: <ab, c> == <a, bc>.
///  - Graded: ab is homogeneous of degree deg a + deg b (or zero), ab == ba,
///    and the unit acts trivially on both sides.
///  - PairingRank: every Gram block between complementary degrees has full
///    rank (always exhaustive; the sampler is ignored).
/// Exhaustive mode requires g <= kMaxExhaustiveGenus (std::invalid_argument).
VerificationReport verify(const ChenRuanRing& ring, Suite suite, const Sampler& sampler);

/// Random homogeneous triples for seeded checks.  The three sectors are
/// drawn from {untwisted, L1, L2, L1⊕L2} for random nontrivial L1, L2 (with
/// pairing one half of the time) so the product cases all occur.  Half of
/// the time the third class is drawn in the degree complementary to the
/// first two, where three-point values can be nonzero.
class TripleSampler {
public:
    TripleSampler(const ChenRuanRing& ring, std::uint64_t seed);

    struct Triple {
        CRClass a, b, c;
    };
    Triple next();
    /// Random homogeneous class on the given sector (untwisted: κ-line).
    CRClass random_homogeneous(const TwoTorsionLabel& label);
    /// Same, in a fixed CR degree; nullopt if the sector has no such degree.
    std::optional<CRClass> random_homogeneous(const TwoTorsionLabel& label, int cr_degree);

private:
    const ChenRuanRing& ring_;
    std::mt19937_64 rng_;
    std::uint64_t uniform(std::uint64_t n);
    BigRational random_coefficient();
};

}  // namespace chenruan
