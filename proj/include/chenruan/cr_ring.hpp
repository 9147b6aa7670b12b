#pragma once

#include "chenruan/exact_arith.hpp"
#include "chenruan/gamma_group.hpp"
#include "chenruan/invariant_exterior.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chenruan {

/// Raised for classes the computable ring cannot represent: untwisted
/// content outside the κ-line, or odd-degree sector classes.
struct UnsupportedClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// CR degree of the sector piece of internal degree i: i + 2(g-1).
inline int twisted_cr_degree(int g, int internal_degree) { return internal_degree + 2 * (g - 1); }
/// Top CR degree, the real dimension of the moduli space.
inline int top_cr_degree(int g) { return 6 * g - 6; }
/// Largest nonzero power of κ.
inline int max_kappa_power(int g) { return 3 * g - 3; }

/// A Chen–Ruan class: a polynomial in κ on the untwisted sector plus an
/// even-degree exterior class on each twisted sector.
class CRClass {
public:
    using TwistedParts = std::map<TwoTorsionLabel, ExteriorClass>;

    /// The zero class.
    explicit CRClass(int g);

    static CRClass unit(int g) { return kappa_power(g, 0); }
    /// c·κ^m; the zero class once m > 3g-3.
    static CRClass kappa_power(int g, int m, const BigRational& c = 1);
    /// The class alpha supported on the sector of a nontrivial label.
    /// Throws UnsupportedClass for a trivial label or odd-degree terms.
    static CRClass sector(const TwoTorsionLabel& label, const ExteriorClass& alpha);
    /// 1_L, the unit of the sector cohomology of L.
    static CRClass sector_unit(const TwoTorsionLabel& label, const BigRational& c = 1);
    /// Ω_L, the top monomial of the sector of L.
    static CRClass sector_top(const TwoTorsionLabel& label, const BigRational& c = 1);

    int genus() const { return g_; }
    /// Coefficients of κ^0 ... κ^{3g-3}.
    const std::vector<BigRational>& kappa_part() const { return kappa_; }
    const TwistedParts& twisted_parts() const { return twisted_; }
    /// The part on the sector of a nontrivial label (zero if absent).
    ExteriorClass sector_part(const TwoTorsionLabel& label) const;

    bool is_zero() const;
    /// All CR degrees that occur, ascending.
    std::vector<int> degrees() const;
    /// The single CR degree of a nonzero homogeneous class.
    std::optional<int> homogeneous_degree() const;

    void add_kappa(int m, const BigRational& c);
    void add_sector(const TwoTorsionLabel& label, const ExteriorClass& alpha);

    CRClass& operator+=(const CRClass& other);
    CRClass& operator-=(const CRClass& other);
    CRClass& operator*=(const BigRational& s);

    friend CRClass operator+(CRClass a, const CRClass& b) { return a += b; }
    friend CRClass operator-(CRClass a, const CRClass& b) { return a -= b; }
    friend CRClass operator*(const BigRational& s, CRClass a) { return a *= s; }
    friend bool operator==(const CRClass&, const CRClass&) = default;

private:
    int g_;
    std::vector<BigRational> kappa_;
    TwistedParts twisted_;
};

struct IntersectionConstants {
    int g;
    BigRational thaddeus_number;  // ∫ H([X])^{3g-3} over the moduli space
    BigRational v;                // ∫ κ^{3g-3} over the global quotient
};

/// thaddeus_number = (3g-3)!/(2g-2)! · 2^{2g-2} (2^{2g-2} - 2) |B_{2g-2}|,
/// v = thaddeus_number / 2^{2g}.
IntersectionConstants constants(int g);

/// Poincaré polynomial of the untwisted sector,
/// ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
IntPolynomial untwisted_poincare(int g);

/// Σ_i d_g(i) t^i, the Poincaré polynomial of one twisted sector before the
/// degree shift.
IntPolynomial twisted_sector_poincare(int g);

struct CRPoincarePolynomial {
    IntPolynomial polynomial;

    /// Integer Betti numbers b_0 ... b_{6g-6}.
    std::vector<BigInt> betti() const;
    BigInt euler_characteristic() const;
};

/// untwisted_poincare(g) + (2^{2g} - 1) t^{2g-2} twisted_sector_poincare(g)
CRPoincarePolynomial cr_poincare(int g);

/// One element of the canonical basis: κ^m, or an even exterior monomial on a
/// nontrivial sector.
struct BasisElement {
    TwoTorsionLabel label;         // zero for κ powers
    int kappa_power = 0;           // meaningful only on the untwisted sector
    ExteriorMonomial monomial{};   // meaningful only on twisted sectors
    int cr_degree = 0;

    bool is_untwisted() const { return label.is_trivial(); }
    CRClass as_class() const;
    /// Expression-syntax name, e.g. "k^2" or "[0110; e1.f1]".
    std::string name() const;
};

/// The Chen–Ruan ring of one genus, with its constants and the restrictions
/// of κ-powers to the twisted sectors precomputed.  Immutable after
/// construction, so a single instance may be shared across threads.
class ChenRuanRing {
public:
    explicit ChenRuanRing(int g);

    int genus() const { return g_; }
    const IntersectionConstants& intersection_constants() const { return constants_; }

    CRClass product(const CRClass& a, const CRClass& b) const;
    BigRational poincare_pair(const CRClass& a, const CRClass& b) const;
    BigRational three_point(const CRClass& a, const CRClass& b, const CRClass& c) const;

    /// κ^m restricted to a twisted sector, (2Θ̄)^m.
    const ExteriorClass& kappa_restriction(int m) const;

private:
    void require_genus_of(const CRClass& a) const;
    void multiply_sector_pair(const TwoTorsionLabel& l1, const ExteriorClass& a, const TwoTorsionLabel& l2,
                              const ExteriorClass& b, CRClass& out) const;

    int g_;
    IntersectionConstants constants_;
    std::vector<ExteriorClass> kappa_restrictions_;  // m = 0 .. g-1
    ExteriorClass zero_restriction_;
};

/// Largest genus for which the canonical basis is materialized
/// (4095 sectors of 512 monomials at g = 6).
inline constexpr int kMaxBasisGenus = 6;

/// The canonical basis: κ-powers first, then each nontrivial label in
/// increasing order with its even monomials ordered by degree then mask.
class CanonicalBasis {
public:
    /// Throws std::length_error beyond kMaxBasisGenus.
    explicit CanonicalBasis(int g);

    int genus() const { return g_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<BasisElement>& elements() const { return elements_; }
    const BasisElement& operator[](std::size_t i) const { return elements_[i]; }

    std::size_t index_of_kappa(int m) const;
    std::size_t index_of(const TwoTorsionLabel& label, ExteriorMonomial m) const;

    /// Sparse coordinates of a class, ascending by index.
    std::vector<std::pair<std::size_t, BigRational>> coordinates(const CRClass& a) const;
    /// Inverse of coordinates().
    CRClass assemble(const std::vector<std::pair<std::size_t, BigRational>>& coords) const;

private:
    int g_;
    std::size_t monomials_per_sector_;
    std::vector<BasisElement> elements_;
    std::map<std::uint64_t, std::size_t> monomial_position_;  // mask -> position within a sector
};

}  // namespace chenruan
