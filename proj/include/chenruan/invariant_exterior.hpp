#pragma once

#include "chenruan/exact_arith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chenruan {

/// Wedge of distinct generators of W0 = Q^{2(g-1)}, encoded as a bit set in
/// the order e1, f1, e2, f2, ...  (bit 2(i-1) is e_i, bit 2i-1 is f_i).
struct ExteriorMonomial {
    std::uint64_t mask = 0;

    int degree() const;
    friend auto operator<=>(const ExteriorMonomial&, const ExteriorMonomial&) = default;
};

/// Number of generators of W0 for genus g.
inline int exterior_rank(int g) { return 2 * (g - 1); }

/// e1.f1...e_{g-1}.f_{g-1}
ExteriorMonomial top_monomial(int g);

/// All monomials of even degree, ordered by degree then mask.
std::vector<ExteriorMonomial> even_monomials(int g);
std::vector<ExteriorMonomial> monomials_of_degree(int g, int degree);

/// "e1.f1.e2" style text, "1" for the empty monomial.
std::string to_string(const ExteriorMonomial& m);

/// Parses a dot-separated generator list for genus g.  Generators may come in
/// any order; the result is the canonical monomial together with the sign of
/// the reordering, or sign 0 when a generator repeats.  Throws
/// std::invalid_argument on unknown or out-of-range generators.
struct SignedMonomial {
    int sign;
    ExteriorMonomial monomial;
};
SignedMonomial parse_monomial(std::string_view text, int g);

/// Sign of m1 ∧ m2 relative to the canonical monomial m1 | m2 (0 if they share
/// a generator).
int wedge_sign(ExteriorMonomial m1, ExteriorMonomial m2);

/// Element of the exterior algebra on W0 with rational coefficients.
class ExteriorClass {
public:
    using Terms = std::map<ExteriorMonomial, BigRational>;

    explicit ExteriorClass(int g);
    ExteriorClass(int g, ExteriorMonomial m, BigRational coeff = 1);

    static ExteriorClass unit(int g) { return ExteriorClass(g, ExteriorMonomial{}); }

    int genus() const { return g_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRational coeff(ExteriorMonomial m) const;

    /// True if every stored term has even degree.
    bool is_even() const;
    /// The common degree of all terms, or -1 if zero or inhomogeneous.
    int homogeneous_degree() const;
    /// Terms of the given degree only.
    ExteriorClass degree_part(int degree) const;

    void add_term(ExteriorMonomial m, const BigRational& c);

    ExteriorClass& operator+=(const ExteriorClass& other);
    ExteriorClass& operator-=(const ExteriorClass& other);
    ExteriorClass& operator*=(const BigRational& s);

    friend ExteriorClass operator+(ExteriorClass a, const ExteriorClass& b) { return a += b; }
    friend ExteriorClass operator-(ExteriorClass a, const ExteriorClass& b) { return a -= b; }
    friend ExteriorClass operator*(const BigRational& s, ExteriorClass a) { return a *= s; }
    friend bool operator==(const ExteriorClass&, const ExteriorClass&) = default;

private:
    int g_;
    Terms terms_;
};

/// Bilinear extension of signed concatenation.  Throws GenusMismatch.
ExteriorClass wedge(const ExteriorClass& a, const ExteriorClass& b);

/// Θ̄ = Σ e_i ∧ f_i
ExteriorClass theta_bar(int g);

/// Restriction of κ^m to a twisted sector: (2Θ̄)^m.
ExteriorClass kappa_pullback_power(int g, int m);

/// Coefficient of the top monomial, which is normalized to integrate to 1.
BigRational integrate_orb(const ExteriorClass& a);

std::string to_string(const ExteriorClass& a);

}  // namespace chenruan
