#include "chenruan/expression.hpp"

#include <cctype>
#include <sstream>

namespace chenruan {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column), message_(message) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, int g) : text_(text), g_(g) {}

    CRClass parse() {
        CRClass out(g_);
        skip_ws();
        if (at_end()) fail("empty expression");
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
            skip_ws();
        }
        while (true) {
            CRClass term = parse_term();
            if (negate) out -= term;
            else out += term;
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            get();
            negate = op == '-';
            skip_ws();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(pos + 1, message);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long small_nat(std::size_t start, std::string_view d) const {
        if (d.empty()) fail_at(start, "expected a number");
        if (d.size() > 9) fail_at(start, "number too large");
        return std::stol(std::string(d));
    }

    CRClass parse_term() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigRational coeff = parse_rational_literal();
            skip_ws();
            if (peek() != '*') return CRClass::kappa_power(g_, 0, coeff);
            get();
            skip_ws();
            return coeff * parse_atom();
        }
        return parse_atom();
    }

    BigRational parse_rational_literal() {
        const std::size_t start = pos_;
        const std::string_view num = digits();
        std::string_view den = "1";
        if (peek() == '/') {
            get();
            den = digits();
            if (den.empty()) fail("expected a denominator");
        }
        BigInt d(std::string(den), 10);
        if (d == 0) fail_at(start, "zero denominator");
        BigRational q(BigInt(std::string(num), 10), d);
        q.canonicalize();
        return q;
    }

    CRClass parse_atom() {
        const char c = peek();
        if (c == 'k') {
            get();
            if (peek() != '^') return CRClass::kappa_power(g_, 1);
            get();
            const std::size_t start = pos_;
            return CRClass::kappa_power(g_, static_cast<int>(small_nat(start, digits())));
        }
        if (c == '[') {
            get();
            return parse_sector();
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    CRClass parse_sector() {
        skip_ws();
        const std::size_t label_start = pos_;
        while (!at_end() && (peek() == '0' || peek() == '1' || peek() == 'O')) ++pos_;
        const std::string_view label_text = text_.substr(label_start, pos_ - label_start);
        if (label_text.empty()) fail("expected a sector label");
        if (label_text != "O") {
            if (label_text.find('O') != std::string_view::npos) fail_at(label_start, "malformed sector label");
            if (label_text.size() != static_cast<std::size_t>(2 * g_))
                fail_at(label_start, "label length " + std::to_string(label_text.size()) + " != 2g = " +
                                         std::to_string(2 * g_));
        }
        const TwoTorsionLabel label = TwoTorsionLabel::parse(label_text, g_);

        skip_ws();
        ExteriorClass alpha = ExteriorClass::unit(g_);
        if (peek() == ';') {
            get();
            skip_ws();
            alpha = parse_monomial_here();
        }
        const std::size_t close = pos_;
        expect(']');
        if (label.is_trivial() && !alpha.is_zero() && alpha.terms().begin()->first.mask != 0)
            fail_at(close, "the untwisted sector only supports powers of k");
        return CRClass::sector(label, alpha);
    }

    ExteriorClass parse_monomial_here() {
        const std::size_t start = pos_;
        if (peek() == '1') {
            get();
            return ExteriorClass::unit(g_);
        }
        int sign = 1;
        int length = 0;
        ExteriorMonomial mono{};
        while (true) {
            const std::size_t gen_start = pos_;
            const char kind = peek();
            if (kind != 'e' && kind != 'f') fail("expected a generator e<i> or f<i>");
            get();
            const long index = small_nat(pos_, digits());
            if (index < 1 || index > g_ - 1)
                fail_at(gen_start, "generator index " + std::to_string(index) + " outside [1, " +
                                       std::to_string(g_ - 1) + "]");
            const ExteriorMonomial single{1ULL << (2 * (index - 1) + (kind == 'f' ? 1 : 0))};
            sign *= wedge_sign(mono, single);
            mono.mask |= single.mask;
            ++length;
            if (peek() != '.') break;
            get();
        }
        if (length % 2 != 0) fail_at(start, "sector monomial has odd degree " + std::to_string(length));
        if (sign == 0) return ExteriorClass(g_);
        return ExteriorClass(g_, mono, sign);
    }

    std::string_view text_;
    int g_;
    std::size_t pos_ = 0;
};

void append_term(std::ostringstream& out, bool& first, const BigRational& c, const std::string& atom) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const BigRational mag = abs(c);
    if (atom.empty()) out << mag.get_str();
    else if (mag == 1) out << atom;
    else out << mag.get_str() << '*' << atom;
}

}  // namespace

CRClass parse_class(std::string_view text, int g) {
    require_genus(g);
    return Parser(text, g).parse();
}

std::string format_class(const CRClass& a) {
    std::ostringstream out;
    bool first = true;
    const auto& kappa = a.kappa_part();
    for (std::size_t m = 0; m < kappa.size(); ++m) {
        if (kappa[m] == 0) continue;
        append_term(out, first, kappa[m], m == 0 ? "" : m == 1 ? "k" : "k^" + std::to_string(m));
    }
    for (const auto& [label, alpha] : a.twisted_parts())
        for (const auto& [mono, c] : alpha.terms())
            append_term(out, first, c, "[" + label.str() + "; " + to_string(mono) + "]");
    return first ? "0" : out.str();
}

}  // namespace chenruan
