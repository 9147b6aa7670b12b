#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chenruan {

/// Largest genus representable: a label needs 2g bits of a 64-bit word.
inline constexpr int kMaxGenus = 32;

struct GenusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Throws std::invalid_argument unless 2 <= g <= kMaxGenus.
void require_genus(int g);

/// An element of the 2-torsion group of the Jacobian, written in coordinates
/// (a1, b1, ..., ag, bg) over F2.  The zero label is the trivial bundle.
///
/// Bits are stored so that the textual form reads as a binary number: the
/// leftmost character (a1) is bit 2g-1 and the rightmost (bg) is bit 0.
class TwoTorsionLabel {
public:
    TwoTorsionLabel(int genus, std::uint64_t bits);

    static TwoTorsionLabel zero(int genus) { return {genus, 0}; }
    /// Label with a single coordinate a_i (or b_i) set, 1 <= i <= g.
    static TwoTorsionLabel a(int genus, int i);
    static TwoTorsionLabel b(int genus, int i);

    /// Accepts a bitstring of length exactly 2g, or "O" for the zero label.
    static TwoTorsionLabel parse(std::string_view text, int genus);

    int genus() const { return genus_; }
    std::uint64_t bits() const { return bits_; }
    bool is_trivial() const { return bits_ == 0; }
    std::string str() const;

    /// Group law (tensor product of line bundles).
    friend TwoTorsionLabel operator^(const TwoTorsionLabel& x, const TwoTorsionLabel& y);
    friend bool operator==(const TwoTorsionLabel&, const TwoTorsionLabel&) = default;
    friend auto operator<=>(const TwoTorsionLabel&, const TwoTorsionLabel&) = default;

private:
    int genus_;
    std::uint64_t bits_;
};

/// Mod-2 intersection form <x,y> = sum_i x_{a_i} y_{b_i} + x_{b_i} y_{a_i}.
int weil_pairing(const TwoTorsionLabel& x, const TwoTorsionLabel& y);

enum class LocusRelation { FullSpace, SameLocus, Disjoint, FinitePoints };

/// How the fixed loci S(L) and S(L') of two labels meet.
struct FixedLocusRelation {
    LocusRelation kind;
    std::uint64_t point_count = 0;  // only for FinitePoints: 2^{2g-2}

    friend bool operator==(const FixedLocusRelation&, const FixedLocusRelation&) = default;
};

FixedLocusRelation fixed_locus_relation(const TwoTorsionLabel& x, const TwoTorsionLabel& y);
std::string to_string(const FixedLocusRelation& r);

/// Default bound on 2g when enumerating the group (2^20 labels, g <= 10).
inline constexpr int kDefaultEnumerationCapBits = 20;

/// All 2^{2g} labels in increasing bit order, zero first.  Throws
/// std::length_error when 2g exceeds cap_bits.
std::vector<TwoTorsionLabel> enumerate_labels(int g, int cap_bits = kDefaultEnumerationCapBits);

}  // namespace chenruan
