#pragma once

#include "chenruan/cr_ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chenruan {

/// Syntax or semantic error in a class expression; column() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& message);
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t column_;
    std::string message_;
};

/// Parses a class expression for genus g:
///
///   expr     := term (('+'|'-') term)*
///   term     := rational ('*' atom)? | atom
///   atom     := 'k' ('^' nat)? | '[' label (';' monomial)? ']'
///   label    := 'O' | bitstring of length 2g
///   monomial := '1' | gen ('.' gen)*
///   gen      := ('e'|'f') index,  1 <= index <= g-1
///   rational := int ('/' nat)?
///
/// Whitespace between tokens is ignored and the first term may carry a sign.
/// Generators are reordered canonically with the matching sign; a repeated
/// generator makes the term zero.
CRClass parse_class(std::string_view text, int g);

/// Normalized expression text; parse_class(format_class(x), g) == x.
std::string format_class(const CRClass& a);

}  // namespace chenruan
