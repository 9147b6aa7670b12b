#include "chenruan/gamma_group.hpp"

#include <bit>

namespace chenruan {

namespace {

constexpr std::uint64_t kLowBitOfEachPair = 0x5555555555555555ULL;

std::uint64_t label_mask(int g) { return g == 32 ? ~0ULL : (1ULL << (2 * g)) - 1; }

void require_same_genus(const TwoTorsionLabel& x, const TwoTorsionLabel& y) {
    if (x.genus() != y.genus())
        throw GenusMismatch("labels of genus " + std::to_string(x.genus()) + " and " + std::to_string(y.genus()));
}

}  // namespace

void require_genus(int g) {
    if (g < 2 || g > kMaxGenus)
        throw std::invalid_argument("genus must lie in [2, " + std::to_string(kMaxGenus) + "], got " +
                                    std::to_string(g));
}

TwoTorsionLabel::TwoTorsionLabel(int genus, std::uint64_t bits) : genus_(genus), bits_(bits) {
    require_genus(genus);
    if (bits & ~label_mask(genus)) throw std::invalid_argument("label has bits beyond 2g");
}

TwoTorsionLabel TwoTorsionLabel::a(int genus, int i) {
    require_genus(genus);
    if (i < 1 || i > genus) throw std::out_of_range("coordinate index out of range");
    return {genus, 1ULL << (2 * (genus - i) + 1)};
}

TwoTorsionLabel TwoTorsionLabel::b(int genus, int i) {
    require_genus(genus);
    if (i < 1 || i > genus) throw std::out_of_range("coordinate index out of range");
    return {genus, 1ULL << (2 * (genus - i))};
}

TwoTorsionLabel TwoTorsionLabel::parse(std::string_view text, int genus) {
    require_genus(genus);
    if (text == "O") return zero(genus);
    if (text.size() != static_cast<std::size_t>(2 * genus))
        throw std::invalid_argument("label '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                                    ", expected " + std::to_string(2 * genus));
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("label '" + std::string(text) + "' is not a bitstring");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return {genus, bits};
}

std::string TwoTorsionLabel::str() const {
    std::string s(2 * genus_, '0');
    for (int j = 0; j < 2 * genus_; ++j)
        if (bits_ >> (2 * genus_ - 1 - j) & 1ULL) s[j] = '1';
    return s;
}

TwoTorsionLabel operator^(const TwoTorsionLabel& x, const TwoTorsionLabel& y) {
    require_same_genus(x, y);
    return {x.genus_, x.bits_ ^ y.bits_};
}

int weil_pairing(const TwoTorsionLabel& x, const TwoTorsionLabel& y) {
    require_same_genus(x, y);
    // Swap a_i <-> b_i in y, then the form is the dot product mod 2.
    const std::uint64_t v = y.bits();
    const std::uint64_t swapped = ((v & kLowBitOfEachPair) << 1) | ((v >> 1) & kLowBitOfEachPair);
    return std::popcount(x.bits() & swapped) & 1;
}

FixedLocusRelation fixed_locus_relation(const TwoTorsionLabel& x, const TwoTorsionLabel& y) {
    require_same_genus(x, y);
    if (x.is_trivial() || y.is_trivial()) return {LocusRelation::FullSpace};
    if (x == y) return {LocusRelation::SameLocus};
    if (weil_pairing(x, y) == 0) return {LocusRelation::Disjoint};
    return {LocusRelation::FinitePoints, 1ULL << (2 * x.genus() - 2)};
}

std::string to_string(const FixedLocusRelation& r) {
    switch (r.kind) {
        case LocusRelation::FullSpace: return "FullSpace";
        case LocusRelation::SameLocus: return "SameLocus";
        case LocusRelation::Disjoint: return "Disjoint";
        case LocusRelation::FinitePoints: return "FinitePoints(" + std::to_string(r.point_count) + ")";
    }
    return "?";
}

std::vector<TwoTorsionLabel> enumerate_labels(int g, int cap_bits) {
    require_genus(g);
    if (2 * g > cap_bits)
        throw std::length_error("enumerating 2^" + std::to_string(2 * g) + " labels exceeds the cap 2^" +
                                std::to_string(cap_bits));
    std::vector<TwoTorsionLabel> out;
    out.reserve(std::size_t{1} << (2 * g));
    for (std::uint64_t v = 0; v < (1ULL << (2 * g)); ++v) out.emplace_back(g, v);
    return out;
}

}  // namespace chenruan
