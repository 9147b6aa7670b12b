#include "chenruan/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chenruan {

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        return !s.empty() &&
               std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Akiyama–Tanigawa transform.  It produces B_1 = +1/2, so the sign of that
// single entry is flipped to match the recurrence convention.
BigRational bernoulli(unsigned n) {
    std::vector<BigRational> row(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        row[m] = BigRational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            row[j - 1] = j * (row[j - 1] - row[j]);
        }
    }
    BigRational b = row[0];
    if (n == 1) b = -b;
    return b;
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned k, BigRational c) {
    std::vector<BigRational> v(k + 1);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

BigRational IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

bool IntPolynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

bool IntPolynomial::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

BigRational IntPolynomial::evaluate(const BigRational& t) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigRational& s, const IntPolynomial& a) {
    std::vector<BigRational> v(a.coeffs_);
    for (auto& c : v) c *= s;
    return IntPolynomial(std::move(v));
}

DivisionResult poly_divmod(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<BigRational> rem = num.coefficients();
    const int dd = den.degree();
    const BigRational lead = den.coeff(dd);
    std::vector<BigRational> quot(num.degree() >= dd ? num.degree() - dd + 1 : 0);
    for (int k = num.degree(); k >= dd; --k) {
        BigRational c = rem[k] / lead;
        if (c == 0) continue;
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coeff(j);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) throw NonExactDivision("polynomial division leaves remainder " + to_string(r));
    return q;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        BigRational c = p.coeff(k);
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << '-';
        first = false;
        BigRational a = abs(c);
        if (k == 0 || a != 1) out << a.get_str() << (k ? "*" : "");
        if (k == 1) out << 't';
        else if (k > 1) out << "t^" << k;
    }
    return out.str();
}

}  // namespace chenruan
