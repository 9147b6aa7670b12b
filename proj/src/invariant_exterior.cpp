#include "chenruan/invariant_exterior.hpp"

#include "chenruan/gamma_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace chenruan {

namespace {

std::uint64_t rank_mask(int g) {
    const int n = exterior_rank(g);
    return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

void require_same_genus(const ExteriorClass& a, const ExteriorClass& b) {
    if (a.genus() != b.genus())
        throw GenusMismatch("exterior classes of genus " + std::to_string(a.genus()) + " and " +
                            std::to_string(b.genus()));
}

}  // namespace

int ExteriorMonomial::degree() const { return std::popcount(mask); }

ExteriorMonomial top_monomial(int g) { return {rank_mask(g)}; }

std::vector<ExteriorMonomial> monomials_of_degree(int g, int degree) {
    const int n = exterior_rank(g);
    if (n > 20) throw std::length_error("monomial enumeration is limited to genus <= 11");
    std::vector<ExteriorMonomial> out;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m)
        if (std::popcount(m) == degree) out.push_back({m});
    return out;
}

std::vector<ExteriorMonomial> even_monomials(int g) {
    std::vector<ExteriorMonomial> out;
    for (int d = 0; d <= exterior_rank(g); d += 2) {
        auto part = monomials_of_degree(g, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string to_string(const ExteriorMonomial& m) {
    if (m.mask == 0) return "1";
    std::string out;
    for (int bit = 0; bit < 64; ++bit) {
        if (!(m.mask >> bit & 1ULL)) continue;
        if (!out.empty()) out += '.';
        out += (bit % 2 == 0 ? 'e' : 'f');
        out += std::to_string(bit / 2 + 1);
    }
    return out;
}

int wedge_sign(ExteriorMonomial m1, ExteriorMonomial m2) {
    if (m1.mask & m2.mask) return 0;
    // Each generator of m2 must move past every generator of m1 above it.
    int swaps = 0;
    for (std::uint64_t rest = m2.mask; rest; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        const std::uint64_t above = bit == 63 ? 0 : ~((2ULL << bit) - 1);
        swaps += std::popcount(m1.mask & above);
    }
    return swaps % 2 ? -1 : 1;
}

SignedMonomial parse_monomial(std::string_view text, int g) {
    if (text == "1") return {1, {}};
    SignedMonomial acc{1, {}};
    std::size_t pos = 0;
    while (true) {
        const auto dot = text.find('.', pos);
        const auto gen = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        if (gen.size() < 2 || (gen[0] != 'e' && gen[0] != 'f') ||
            !std::all_of(gen.begin() + 1, gen.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed generator '" + std::string(gen) + "'");
        const long index = std::stol(std::string(gen.substr(1)));
        if (index < 1 || index > g - 1)
            throw std::out_of_range("generator index " + std::to_string(index) + " outside [1, " +
                                    std::to_string(g - 1) + "]");
        const ExteriorMonomial single{1ULL << (2 * (index - 1) + (gen[0] == 'f' ? 1 : 0))};
        acc.sign *= wedge_sign(acc.monomial, single);
        acc.monomial.mask |= single.mask;
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return acc;
}

ExteriorClass::ExteriorClass(int g) : g_(g) { require_genus(g); }

ExteriorClass::ExteriorClass(int g, ExteriorMonomial m, BigRational coeff) : ExteriorClass(g) {
    if (m.mask & ~rank_mask(g)) throw std::invalid_argument("monomial uses generators beyond 2(g-1)");
    add_term(m, coeff);
}

BigRational ExteriorClass::coeff(ExteriorMonomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

bool ExteriorClass::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.degree() % 2 == 0; });
}

int ExteriorClass::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return -1;
    return d;
}

ExteriorClass ExteriorClass::degree_part(int degree) const {
    ExteriorClass out(g_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

void ExteriorClass::add_term(ExteriorMonomial m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ExteriorClass& ExteriorClass::operator+=(const ExteriorClass& other) {
    require_same_genus(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

ExteriorClass& ExteriorClass::operator-=(const ExteriorClass& other) {
    require_same_genus(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

ExteriorClass& ExteriorClass::operator*=(const BigRational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

ExteriorClass wedge(const ExteriorClass& a, const ExteriorClass& b) {
    require_same_genus(a, b);
    ExteriorClass out(a.genus());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            BigRational c = ca * cb;
            if (s < 0) c = -c;
            out.add_term({ma.mask | mb.mask}, c);
        }
    return out;
}

ExteriorClass theta_bar(int g) {
    ExteriorClass out(g);
    for (int i = 0; i < g - 1; ++i) out.add_term({3ULL << (2 * i)}, 1);
    return out;
}

ExteriorClass kappa_pullback_power(int g, int m) {
    if (m < 0) throw std::invalid_argument("negative power");
    if (2 * m > exterior_rank(g)) return ExteriorClass(g);
    const ExteriorClass two_theta = BigRational(2) * theta_bar(g);
    ExteriorClass out = ExteriorClass::unit(g);
    for (int k = 0; k < m; ++k) out = wedge(out, two_theta);
    return out;
}

BigRational integrate_orb(const ExteriorClass& a) { return a.coeff(top_monomial(a.genus())); }

std::string to_string(const ExteriorClass& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << '-';
        first = false;
        const BigRational mag = abs(c);
        if (mag != 1) out << mag.get_str() << '*';
        out << to_string(m);
    }
    return out.str();
}

}  // namespace chenruan
