#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chenruan {

/// Arbitrary-precision integers and rationals.  mpq_class keeps every value
/// canonical (lowest terms, positive denominator, zero stored as 0/1).
using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms.  mpq_class(num, den) alone does not reduce.
inline BigRational make_rational(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact "p/q" text, or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed input
/// or a zero denominator.
BigRational parse_rational(std::string_view text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// B_n with B_1 = -1/2, B_2 = 1/6, B_4 = -1/30.
BigRational bernoulli(unsigned n);

struct NonExactDivision : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial in t with rational coefficients.  Trailing
/// zeros are never stored, so the zero polynomial has no coefficients and
/// degree() == kZeroDegree.
class IntPolynomial {
public:
    static constexpr int kZeroDegree = -1;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigRational> coeffs);

    /// c * t^k
    static IntPolynomial monomial(unsigned k, BigRational c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^k; zero beyond the degree.
    BigRational coeff(std::size_t k) const;
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    /// True if every coefficient is an integer.
    bool has_integer_coefficients() const;
    bool is_palindromic() const;

    /// Evaluates at an integer point.
    BigRational evaluate(const BigRational& t) const;

    IntPolynomial pow(unsigned e) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigRational& s, const IntPolynomial& a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Euclidean division; throws std::invalid_argument when den is zero.
DivisionResult poly_divmod(const IntPolynomial& num, const IntPolynomial& den);

/// Returns q with num == q * den, throwing NonExactDivision otherwise.
IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den);

std::string to_string(const IntPolynomial& p);

}  // namespace chenruan
