#ifndef RADKIT_EXPR_HPP
#define RADKIT_EXPR_HPP

#include "radkit/radical_group.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace radkit {

// Parse or semantic failure; position is a 0-based offset into the input.
class ExprError : public std::runtime_error {
public:
    ExprError(const std::string &what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// One summand of a normalized expression. The unit never has angle 1/2 and is
// never a nonunit rational: half turns and rational magnitudes live in coeff.
struct Term {
    Rat coeff;
    RadicalUnit unit;

    bool operator==(const Term &) const = default;
};

// Canonical: units strictly increasing, coefficients nonzero.
using TermList = std::vector<Term>;

// Grammar:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' '(' RAT ')' | '^' INT)?
//   base   := INT | RAT | 'i' | 'zeta' '(' INT-or-RAT ')'
//           | 'sqrt' '(' signed-RAT ')' | 'root' '(' INT ',' signed-RAT ')'
//           | '(' expr ')'
// Fractional exponents require a prime base. Whitespace insensitive.
TermList parse_expression(const std::string &input);

std::string terms_to_string(const TermList &terms);

// Single-term expression folded into one unit (for generator lists).
RadicalUnit parse_unit(const std::string &input);

// ';'-separated generator list.
std::vector<RadicalUnit> parse_generators(const std::string &input);

bool unit_less(const RadicalUnit &a, const RadicalUnit &b);

} // namespace radkit

#endif
