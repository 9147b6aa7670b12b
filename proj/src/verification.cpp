#include "chenruan/verification.hpp"

#include "chenruan/expression.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chenruan {

namespace {

using DenseAccumulator = std::map<std::size_t, BigRational>;

void accumulate(DenseAccumulator& acc, const SparseVector& v, const BigRational& scale) {
    for (const auto& [i, c] : v) {
        auto& slot = acc[i];
        slot += scale * c;
        if (slot == 0) acc.erase(i);
    }
}

std::string describe(const CRClass& a) { return format_class(a); }

// Coordinates of the pairing against each basis element, restricted to the
// entries that can be nonzero: the same sector, or both on the κ-line.
std::vector<SparseVector> dual_rows(const ChenRuanRing& ring, const CanonicalBasis& basis) {
    const int g = ring.genus();
    std::vector<SparseVector> duals(basis.size());
    std::map<TwoTorsionLabel, std::vector<std::size_t>> by_sector;
    for (std::size_t i = 0; i < basis.size(); ++i) by_sector[basis[i].label].push_back(i);
    for (const auto& [label, members] : by_sector) {
        std::vector<CRClass> classes;
        for (auto i : members) classes.push_back(basis[i].as_class());
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = 0; y < members.size(); ++y) {
                if (basis[members[x]].cr_degree + basis[members[y]].cr_degree != top_cr_degree(g)) continue;
                BigRational p = ring.poincare_pair(classes[x], classes[y]);
                if (p != 0) duals[members[x]].emplace_back(members[y], p);
            }
    }
    return duals;
}

BigRational pair_with_basis(const SparseVector& x, std::size_t k, const std::vector<SparseVector>& duals) {
    BigRational total = 0;
    for (const auto& [i, c] : x)
        for (const auto& [j, p] : duals[i])
            if (j == k) total += c * p;
    return total;
}

VerificationReport exhaustive(const ChenRuanRing& ring, Suite suite) {
    const int g = ring.genus();
    if (g > kMaxExhaustiveGenus)
        throw std::invalid_argument("exhaustive verification is limited to genus <= " +
                                    std::to_string(kMaxExhaustiveGenus));
    VerificationReport report{suite, g, Sampler::Mode::Exhaustive};
    const CanonicalBasis basis(g);
    const StructureTable table(ring, basis);
    const std::size_t n = basis.size();
    auto name = [&](std::size_t i) { return basis[i].name(); };
    auto as_map = [](const SparseVector& v) { return DenseAccumulator(v.begin(), v.end()); };

    switch (suite) {
        case Suite::Associativity:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& ij = table.product(i, j);
                    for (std::size_t k = 0; k < n; ++k) {
                        ++report.checked;
                        const auto& jk = table.product(j, k);
                        if (ij.empty() && jk.empty()) continue;
                        DenseAccumulator left, right;
                        for (const auto& [m, c] : ij) accumulate(left, table.product(m, k), c);
                        for (const auto& [m, c] : jk) accumulate(right, table.product(i, m), c);
                        if (left != right)
                            report.violations.push_back("(" + name(i) + " * " + name(j) + ") * " + name(k) +
                                                        " != " + name(i) + " * (" + name(j) + " * " + name(k) + ")");
                    }
                }
            break;
        case Suite::Frobenius: {
            const auto duals = dual_rows(ring, basis);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& ij = table.product(i, j);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (basis[i].cr_degree + basis[j].cr_degree + basis[k].cr_degree != top_cr_degree(g))
                            continue;
                        ++report.checked;
                        const auto& jk = table.product(j, k);
                        if (ij.empty() && jk.empty()) continue;
                        const BigRational left = pair_with_basis(ij, k, duals);
                        const BigRational right = pair_with_basis(jk, i, duals);
                        if (left != right)
                            report.violations.push_back("<" + name(i) + " * " + name(j) + ", " + name(k) +
                                                        "> = " + to_string(left) + " but <" + name(i) + ", " +
                                                        name(j) + " * " + name(k) + "> = " + to_string(right));
                    }
                }
            break;
        }
        case Suite::Graded:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ++report.checked;
                    const auto& ij = table.product(i, j);
                    const int expected = basis[i].cr_degree + basis[j].cr_degree;
                    for (const auto& [m, c] : ij)
                        if (basis[m].cr_degree != expected)
                            report.violations.push_back(name(i) + " * " + name(j) + " has a term " + name(m) +
                                                        " outside degree " + std::to_string(expected));
                    if (as_map(ij) != as_map(table.product(j, i)))
                        report.violations.push_back(name(i) + " * " + name(j) + " != " + name(j) + " * " + name(i));
                }
            for (std::size_t i = 0; i < n; ++i) {
                ++report.checked;
                const SparseVector self{{i, BigRational(1)}};
                if (table.product(0, i) != self || table.product(i, 0) != self)
                    report.violations.push_back("unit does not fix " + name(i));
            }
            break;
        case Suite::PairingRank: break;
    }
    return report;
}

VerificationReport seeded(const ChenRuanRing& ring, Suite suite, const Sampler& sampler) {
    VerificationReport report{suite, ring.genus(), Sampler::Mode::Seeded};
    TripleSampler draw(ring, sampler.seed);
    const CRClass one = CRClass::unit(ring.genus());
    for (std::size_t s = 0; s < sampler.samples; ++s) {
        const auto [a, b, c] = draw.next();
        ++report.checked;
        const std::string where = "sample " + std::to_string(s) + ": ";
        switch (suite) {
            case Suite::Associativity: {
                const CRClass left = ring.product(ring.product(a, b), c);
                const CRClass right = ring.product(a, ring.product(b, c));
                if (left != right)
                    report.violations.push_back(where + "(ab)c = " + describe(left) + " but a(bc) = " +
                                                describe(right) + " for a = " + describe(a) + ", b = " +
                                                describe(b) + ", c = " + describe(c));
                break;
            }
            case Suite::Frobenius: {
                const BigRational left = ring.poincare_pair(ring.product(a, b), c);
                const BigRational right = ring.poincare_pair(a, ring.product(b, c));
                if (left != right)
                    report.violations.push_back(where + "<ab,c> = " + to_string(left) + " but <a,bc> = " +
                                                to_string(right) + " for a = " + describe(a) + ", b = " +
                                                describe(b) + ", c = " + describe(c));
                break;
            }
            case Suite::Graded: {
                const CRClass ab = ring.product(a, b);
                if (!ab.is_zero() && ab.homogeneous_degree() != *a.homogeneous_degree() + *b.homogeneous_degree())
                    report.violations.push_back(where + "product of " + describe(a) + " and " + describe(b) +
                                                " is not of the summed degree");
                if (ab != ring.product(b, a))
                    report.violations.push_back(where + describe(a) + " and " + describe(b) + " do not commute");
                if (ring.product(one, c) != c || ring.product(c, one) != c)
                    report.violations.push_back(where + "unit does not fix " + describe(c));
                break;
            }
            case Suite::PairingRank: break;
        }
    }
    return report;
}

VerificationReport pairing_rank(const ChenRuanRing& ring, Sampler::Mode mode) {
    VerificationReport report{Suite::PairingRank, ring.genus(), mode};
    const CanonicalBasis basis(ring.genus());
    for (const auto& block : gram_blocks(ring, basis)) {
        ++report.checked;
        const std::size_t r = block.rank();
        if (r != block.rows.size() || r != block.cols.size())
            report.violations.push_back("Gram block of degrees " + std::to_string(block.degree) + "/" +
                                        std::to_string(block.dual_degree) + " has rank " + std::to_string(r) +
                                        " for a " + std::to_string(block.rows.size()) + "x" +
                                        std::to_string(block.cols.size()) + " block");
    }
    return report;
}

}  // namespace

StructureTable::StructureTable(const ChenRuanRing& ring, const CanonicalBasis& basis)
    : n_(basis.size()), table_(n_ * n_) {
    std::vector<CRClass> classes;
    classes.reserve(n_);
    for (const auto& e : basis.elements()) classes.push_back(e.as_class());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = basis.coordinates(ring.product(classes[i], classes[j]));
}

std::size_t StructureTable::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](const SparseVector& v) { return !v.empty(); }));
}

std::size_t sparse_rank(std::vector<std::map<std::size_t, BigRational>> rows) {
    std::size_t rank = 0;
    // Pivot on each row's leading column, eliminating that column from every
    // later row that contains it.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) continue;
        const auto [pivot_col, pivot_val] = *rows[r].begin();
        ++rank;
        for (std::size_t s = r + 1; s < rows.size(); ++s) {
            auto it = rows[s].find(pivot_col);
            if (it == rows[s].end()) continue;
            const BigRational factor = it->second / pivot_val;
            for (const auto& [col, val] : rows[r]) {
                auto& slot = rows[s][col];
                slot -= factor * val;
                if (slot == 0) rows[s].erase(col);
            }
        }
    }
    return rank;
}

std::size_t GramBlock::rank() const {
    std::vector<std::map<std::size_t, BigRational>> m(rows.size());
    for (const auto& [r, c, v] : entries) m[r][c] = v;
    return sparse_rank(std::move(m));
}

std::vector<GramBlock> gram_blocks(const ChenRuanRing& ring, const CanonicalBasis& basis) {
    const int top = top_cr_degree(ring.genus());
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < basis.size(); ++i) by_degree[basis[i].cr_degree].push_back(i);
    const auto duals = dual_rows(ring, basis);

    std::vector<GramBlock> blocks;
    for (const auto& [d, members] : by_degree) {
        if (2 * d > top) break;
        GramBlock block{d, top - d, members, {}, {}};
        if (auto it = by_degree.find(top - d); it != by_degree.end()) block.cols = it->second;
        std::map<std::size_t, std::size_t> col_pos;
        for (std::size_t c = 0; c < block.cols.size(); ++c) col_pos[block.cols[c]] = c;
        for (std::size_t r = 0; r < block.rows.size(); ++r)
            for (const auto& [j, p] : duals[block.rows[r]]) block.entries.emplace_back(r, col_pos.at(j), p);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Associativity: return "associativity";
        case Suite::Frobenius: return "frobenius";
        case Suite::Graded: return "graded";
        case Suite::PairingRank: return "pairing_rank";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    if (name == "assoc" || name == "associativity") return Suite::Associativity;
    if (name == "frobenius") return Suite::Frobenius;
    if (name == "graded") return Suite::Graded;
    if (name == "pairing" || name == "pairing_rank") return Suite::PairingRank;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << to_string(suite) << " g=" << g << " mode=" << (mode == Sampler::Mode::Exhaustive ? "exhaustive" : "seeded")
        << " checked=" << checked << " violations=" << violations.size();
    return out.str();
}

VerificationReport verify(const ChenRuanRing& ring, Suite suite, const Sampler& sampler) {
    if (suite == Suite::PairingRank) return pairing_rank(ring, sampler.mode);
    if (sampler.mode == Sampler::Mode::Exhaustive) return exhaustive(ring, suite);
    return seeded(ring, suite, sampler);
}

// ---------------------------------------------------------------------------

TripleSampler::TripleSampler(const ChenRuanRing& ring, std::uint64_t seed) : ring_(ring), rng_(seed) {}

std::uint64_t TripleSampler::uniform(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
}

BigRational TripleSampler::random_coefficient() {
    const long num = static_cast<long>(uniform(7)) - 3;
    const long den = static_cast<long>(uniform(3)) + 1;
    return make_rational(num == 0 ? 1 : num, den);
}

CRClass TripleSampler::random_homogeneous(const TwoTorsionLabel& label) {
    const int g = ring_.genus();
    const int degree = label.is_trivial() ? 2 * static_cast<int>(uniform(max_kappa_power(g) + 1))
                                          : twisted_cr_degree(g, 2 * static_cast<int>(uniform(g)));
    return *random_homogeneous(label, degree);
}

std::optional<CRClass> TripleSampler::random_homogeneous(const TwoTorsionLabel& label, int cr_degree) {
    const int g = ring_.genus();
    if (cr_degree % 2 != 0) return std::nullopt;
    if (label.is_trivial()) {
        if (cr_degree < 0 || cr_degree > top_cr_degree(g)) return std::nullopt;
        return CRClass::kappa_power(g, cr_degree / 2, random_coefficient());
    }
    const int n = exterior_rank(g);
    const int degree = cr_degree - 2 * (g - 1);
    if (degree < 0 || degree > n) return std::nullopt;
    ExteriorClass alpha(g);
    while (alpha.is_zero()) {
        const int terms = 1 + static_cast<int>(uniform(3));
        for (int t = 0; t < terms; ++t) {
            std::vector<int> gens(n);
            for (int i = 0; i < n; ++i) gens[i] = i;
            std::shuffle(gens.begin(), gens.end(), rng_);
            ExteriorMonomial m{};
            for (int i = 0; i < degree; ++i) m.mask |= 1ULL << gens[i];
            alpha.add_term(m, random_coefficient());
        }
    }
    return CRClass::sector(label, alpha);
}

TripleSampler::Triple TripleSampler::next() {
    const int g = ring_.genus();
    const std::uint64_t count = 1ULL << (2 * g);
    const TwoTorsionLabel l1(g, 1 + uniform(count - 1));
    TwoTorsionLabel l2(g, 1 + uniform(count - 1));
    if (uniform(2) == 0) {
        while (l2 == l1 || weil_pairing(l1, l2) == 0) l2 = TwoTorsionLabel(g, 1 + uniform(count - 1));
    }
    const TwoTorsionLabel choices[] = {TwoTorsionLabel::zero(g), l1, l2, l1 ^ l2};
    auto pick = [&] { return random_homogeneous(choices[uniform(4)]); };
    CRClass a = pick();
    CRClass b = pick();
    if (uniform(2) == 0) {
        const int complement = top_cr_degree(g) - *a.homogeneous_degree() - *b.homogeneous_degree();
        const std::uint64_t first = uniform(4);
        for (std::uint64_t k = 0; k < 4; ++k)
            if (auto c = random_homogeneous(choices[(first + k) % 4], complement))
                return {std::move(a), std::move(b), std::move(*c)};
    }
    CRClass c = pick();
    return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace chenruan
