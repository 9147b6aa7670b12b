#include "chenruan/cr_ring.hpp"

#include "chenruan/sector_model.hpp"

#include <algorithm>
#include <set>

namespace chenruan {

namespace {

void require_same_genus(const CRClass& a, const CRClass& b) {
    if (a.genus() != b.genus())
        throw GenusMismatch("classes of genus " + std::to_string(a.genus()) + " and " + std::to_string(b.genus()));
}

BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// CRClass

CRClass::CRClass(int g) : g_(g) {
    require_genus(g);
    kappa_.assign(max_kappa_power(g) + 1, BigRational(0));
}

CRClass CRClass::kappa_power(int g, int m, const BigRational& c) {
    CRClass out(g);
    out.add_kappa(m, c);
    return out;
}

CRClass CRClass::sector(const TwoTorsionLabel& label, const ExteriorClass& alpha) {
    CRClass out(label.genus());
    out.add_sector(label, alpha);
    return out;
}

CRClass CRClass::sector_unit(const TwoTorsionLabel& label, const BigRational& c) {
    return sector(label, ExteriorClass(label.genus(), ExteriorMonomial{}, c));
}

CRClass CRClass::sector_top(const TwoTorsionLabel& label, const BigRational& c) {
    return sector(label, ExteriorClass(label.genus(), top_monomial(label.genus()), c));
}

ExteriorClass CRClass::sector_part(const TwoTorsionLabel& label) const {
    auto it = twisted_.find(label);
    return it == twisted_.end() ? ExteriorClass(g_) : it->second;
}

bool CRClass::is_zero() const {
    return twisted_.empty() && std::all_of(kappa_.begin(), kappa_.end(), [](const BigRational& c) { return c == 0; });
}

std::vector<int> CRClass::degrees() const {
    std::set<int> found;
    for (int m = 0; m < static_cast<int>(kappa_.size()); ++m)
        if (kappa_[m] != 0) found.insert(2 * m);
    for (const auto& [label, alpha] : twisted_)
        for (const auto& [mono, c] : alpha.terms()) found.insert(twisted_cr_degree(g_, mono.degree()));
    return {found.begin(), found.end()};
}

std::optional<int> CRClass::homogeneous_degree() const {
    const auto ds = degrees();
    if (ds.size() != 1) return std::nullopt;
    return ds.front();
}

void CRClass::add_kappa(int m, const BigRational& c) {
    if (m < 0) throw std::invalid_argument("negative κ power");
    if (m > max_kappa_power(g_)) return;
    kappa_[m] += c;
}

void CRClass::add_sector(const TwoTorsionLabel& label, const ExteriorClass& alpha) {
    if (label.genus() != g_ || alpha.genus() != g_) throw GenusMismatch("sector class of another genus");
    if (label.is_trivial()) {
        // Only scalars are representable on the untwisted sector this way.
        for (const auto& [m, c] : alpha.terms())
            if (m.mask != 0) throw UnsupportedClass("untwisted classes outside the κ-line are not supported");
        add_kappa(0, alpha.coeff({}));
        return;
    }
    if (!alpha.is_even()) throw UnsupportedClass("sector classes must have even internal degree");
    if (alpha.is_zero()) return;
    auto [it, inserted] = twisted_.try_emplace(label, alpha);
    if (inserted) return;
    it->second += alpha;
    if (it->second.is_zero()) twisted_.erase(it);
}

CRClass& CRClass::operator+=(const CRClass& other) {
    require_same_genus(*this, other);
    for (std::size_t m = 0; m < kappa_.size(); ++m) kappa_[m] += other.kappa_[m];
    for (const auto& [label, alpha] : other.twisted_) add_sector(label, alpha);
    return *this;
}

CRClass& CRClass::operator-=(const CRClass& other) {
    require_same_genus(*this, other);
    for (std::size_t m = 0; m < kappa_.size(); ++m) kappa_[m] -= other.kappa_[m];
    for (const auto& [label, alpha] : other.twisted_) add_sector(label, BigRational(-1) * alpha);
    return *this;
}

CRClass& CRClass::operator*=(const BigRational& s) {
    for (auto& c : kappa_) c *= s;
    if (s == 0) twisted_.clear();
    for (auto& [label, alpha] : twisted_) alpha *= s;
    return *this;
}

// ---------------------------------------------------------------------------
// Constants and Poincaré polynomials

IntersectionConstants constants(int g) {
    require_genus(g);
    const unsigned long n = 2 * g - 2;
    BigRational thaddeus = BigRational(factorial(3 * g - 3)) / BigRational(factorial(n));
    thaddeus *= BigRational(pow2(n) * (pow2(n) - 2));
    thaddeus *= abs(bernoulli(static_cast<unsigned>(n)));
    BigRational v = thaddeus / BigRational(pow2(2 * g));
    return {g, thaddeus, v};
}

IntPolynomial untwisted_poincare(int g) {
    require_genus(g);
    const unsigned n = 2 * g;
    const IntPolynomial one_plus_t3{1, 0, 0, 1};
    const IntPolynomial one_plus_t{1, 1};
    const IntPolynomial num = one_plus_t3.pow(n) - IntPolynomial::monomial(n) * one_plus_t.pow(n);
    const IntPolynomial den = IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, 0, 0, -1};
    return poly_div_exact(num, den);
}

IntPolynomial twisted_sector_poincare(int g) {
    std::vector<BigRational> coeffs;
    for (int i = 0; i <= 2 * g - 2; ++i) coeffs.emplace_back(sector_betti(g, i));
    return IntPolynomial(std::move(coeffs));
}

std::vector<BigInt> CRPoincarePolynomial::betti() const {
    std::vector<BigInt> out;
    for (const auto& c : polynomial.coefficients()) out.push_back(c.get_num());
    return out;
}

BigInt CRPoincarePolynomial::euler_characteristic() const { return polynomial.evaluate(-1).get_num(); }

CRPoincarePolynomial cr_poincare(int g) {
    const BigRational sectors(pow2(2 * g) - 1);
    return {untwisted_poincare(g) + sectors * (IntPolynomial::monomial(2 * g - 2) * twisted_sector_poincare(g))};
}

// ---------------------------------------------------------------------------
// Basis

CRClass BasisElement::as_class() const {
    if (is_untwisted()) return CRClass::kappa_power(label.genus(), kappa_power);
    return CRClass::sector(label, ExteriorClass(label.genus(), monomial));
}

std::string BasisElement::name() const {
    if (is_untwisted()) return kappa_power == 0 ? "1" : kappa_power == 1 ? "k" : "k^" + std::to_string(kappa_power);
    return "[" + label.str() + "; " + to_string(monomial) + "]";
}

CanonicalBasis::CanonicalBasis(int g) : g_(g) {
    require_genus(g);
    if (g > kMaxBasisGenus)
        throw std::length_error("canonical basis is only materialized up to genus " + std::to_string(kMaxBasisGenus));
    const auto monos = even_monomials(g);
    monomials_per_sector_ = monos.size();
    for (std::size_t i = 0; i < monos.size(); ++i) monomial_position_[monos[i].mask] = i;

    const TwoTorsionLabel zero = TwoTorsionLabel::zero(g);
    for (int m = 0; m <= max_kappa_power(g); ++m) elements_.push_back({zero, m, {}, 2 * m});
    for (const auto& label : enumerate_labels(g)) {
        if (label.is_trivial()) continue;
        for (const auto& mono : monos) elements_.push_back({label, 0, mono, twisted_cr_degree(g, mono.degree())});
    }
}

std::size_t CanonicalBasis::index_of_kappa(int m) const {
    if (m < 0 || m > max_kappa_power(g_)) throw std::out_of_range("κ power outside the basis");
    return static_cast<std::size_t>(m);
}

std::size_t CanonicalBasis::index_of(const TwoTorsionLabel& label, ExteriorMonomial m) const {
    if (label.is_trivial()) throw std::out_of_range("twisted index requested for the trivial label");
    auto it = monomial_position_.find(m.mask);
    if (it == monomial_position_.end()) throw std::out_of_range("monomial " + to_string(m) + " is not in the basis");
    return static_cast<std::size_t>(max_kappa_power(g_) + 1) + (label.bits() - 1) * monomials_per_sector_ +
           it->second;
}

std::vector<std::pair<std::size_t, BigRational>> CanonicalBasis::coordinates(const CRClass& a) const {
    if (a.genus() != g_) throw GenusMismatch("class of another genus");
    std::vector<std::pair<std::size_t, BigRational>> out;
    for (int m = 0; m <= max_kappa_power(g_); ++m)
        if (a.kappa_part()[m] != 0) out.emplace_back(index_of_kappa(m), a.kappa_part()[m]);
    for (const auto& [label, alpha] : a.twisted_parts())
        for (const auto& [mono, c] : alpha.terms()) out.emplace_back(index_of(label, mono), c);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

CRClass CanonicalBasis::assemble(const std::vector<std::pair<std::size_t, BigRational>>& coords) const {
    CRClass out(g_);
    for (const auto& [i, c] : coords) {
        const auto& e = elements_.at(i);
        if (e.is_untwisted()) out.add_kappa(e.kappa_power, c);
        else out.add_sector(e.label, ExteriorClass(g_, e.monomial, c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ring operations

ChenRuanRing::ChenRuanRing(int g) : g_(g), constants_(constants(g)), zero_restriction_(g) {
    for (int m = 0; 2 * m <= exterior_rank(g); ++m) kappa_restrictions_.push_back(kappa_pullback_power(g, m));
}

const ExteriorClass& ChenRuanRing::kappa_restriction(int m) const {
    if (m < 0) throw std::invalid_argument("negative κ power");
    if (m >= static_cast<int>(kappa_restrictions_.size())) return zero_restriction_;
    return kappa_restrictions_[m];
}

void ChenRuanRing::require_genus_of(const CRClass& a) const {
    if (a.genus() != g_)
        throw GenusMismatch("class of genus " + std::to_string(a.genus()) + " used in the genus " +
                            std::to_string(g_) + " ring");
}

CRClass ChenRuanRing::product(const CRClass& a, const CRClass& b) const {
    require_genus_of(a);
    require_genus_of(b);
    CRClass out(g_);
    const auto& ka = a.kappa_part();
    const auto& kb = b.kappa_part();

    // Untwisted x untwisted: ordinary cup product on the κ-line.
    for (int m = 0; m <= max_kappa_power(g_); ++m) {
        if (ka[m] == 0) continue;
        for (int n = 0; m + n <= max_kappa_power(g_); ++n)
            if (kb[n] != 0) out.add_kappa(m + n, ka[m] * kb[n]);
    }

    // One untwisted factor: the κ-power restricts to the sector and is wedged in.
    for (int m = 0; m <= max_kappa_power(g_); ++m) {
        if (ka[m] != 0)
            for (const auto& [label, beta] : b.twisted_parts())
                out.add_sector(label, ka[m] * wedge(kappa_restriction(m), beta));
        if (kb[m] != 0)
            for (const auto& [label, alpha] : a.twisted_parts())
                out.add_sector(label, kb[m] * wedge(alpha, kappa_restriction(m)));
    }

    for (const auto& [l1, alpha] : a.twisted_parts())
        for (const auto& [l2, beta] : b.twisted_parts()) multiply_sector_pair(l1, alpha, l2, beta, out);
    return out;
}

void ChenRuanRing::multiply_sector_pair(const TwoTorsionLabel& l1, const ExteriorClass& a, const TwoTorsionLabel& l2,
                                        const ExteriorClass& b, CRClass& out) const {
    if (l1 == l2) {
        // Both factors on the same sector: the product lands on the κ-line,
        // (c/v) κ^{(p+q)/2} with c = ∫ α ∧ β ∧ κ^{m0}|_S and m0 = 3(g-1) - (p+q)/2.
        const ExteriorMonomial top = top_monomial(g_);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                const int s1 = wedge_sign(ma, mb);
                if (s1 == 0) continue;
                const int half_degree = (twisted_cr_degree(g_, ma.degree()) + twisted_cr_degree(g_, mb.degree())) / 2;
                const int m0 = max_kappa_power(g_) - half_degree;
                if (m0 < 0) continue;
                const ExteriorMonomial joined{ma.mask | mb.mask};
                const ExteriorMonomial complement{top.mask & ~joined.mask};
                const BigRational k = kappa_restriction(m0).coeff(complement);
                if (k == 0) continue;
                const int s2 = wedge_sign(joined, complement);
                BigRational c = ca * cb * k / constants_.v;
                if (s1 * s2 < 0) c = -c;
                out.add_kappa(half_degree, c);
            }
        return;
    }
    // Distinct sectors: nonzero only for a pairing-one pair, where the loci
    // meet in points and the degree-zero parts multiply onto the top class of
    // the third sector with weight 1/4.
    if (weil_pairing(l1, l2) == 0) return;
    const BigRational s = a.coeff({}) * b.coeff({});
    if (s == 0) return;
    out.add_sector(l1 ^ l2, ExteriorClass(g_, top_monomial(g_), s / 4));
}

BigRational ChenRuanRing::poincare_pair(const CRClass& a, const CRClass& b) const {
    require_genus_of(a);
    require_genus_of(b);
    BigRational untwisted = 0;
    const int top = max_kappa_power(g_);
    for (int m = 0; m <= top; ++m) untwisted += a.kappa_part()[m] * b.kappa_part()[top - m];
    BigRational total = constants_.v * untwisted;
    // Every label is its own inverse, so each sector pairs with itself.
    for (const auto& [label, alpha] : a.twisted_parts()) {
        auto it = b.twisted_parts().find(label);
        if (it != b.twisted_parts().end()) total += integrate_orb(wedge(alpha, it->second));
    }
    return total;
}

BigRational ChenRuanRing::three_point(const CRClass& a, const CRClass& b, const CRClass& c) const {
    return poincare_pair(product(a, b), c);
}

}  // namespace chenruan
