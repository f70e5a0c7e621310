#ifndef RADKIT_GRADED_ALGEBRA_HPP
#define RADKIT_GRADED_ALGEBRA_HPP

#include "radkit/numeric.hpp"
#include "radkit/radical_group.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace radkit {

// Element of Q<U>: finitely supported map from linearized D-indices to
// rational coefficients relative to the canonical representatives.
struct AlgebraElement {
    std::map<std::size_t, Rat> coeffs; // zero coefficients never stored

    bool is_zero() const { return coeffs.empty(); }
    Rat coeff(std::size_t idx) const {
        auto it = coeffs.find(idx);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    std::vector<std::size_t> support() const;

    bool operator==(const AlgebraElement &) const = default;
};

inline constexpr std::size_t kAlgebraDimCap = 4096;
inline constexpr std::size_t kSubfieldLatticeCap = 256;

// Exact arithmetic in Q<U>. Classes of D are linearized in mixed radix over
// the invariant factors; the cocycle over the canonical section is memoized.
class GradedAlgebra {
public:
    explicit GradedAlgebra(UnitGroup group, std::size_t dim_cap = kAlgebraDimCap);

    const UnitGroup &group() const { return group_; }
    const QuotientPresentation &presentation() const { return group_.presentation(); }
    std::size_t dim() const { return dim_; }

    std::vector<Int> coords_of(std::size_t idx) const;
    std::size_t index_of(const std::vector<Int> &coords) const;
    std::size_t add_classes(std::size_t d, std::size_t e) const;
    std::size_t negate_class(std::size_t d) const;
    Int class_order(std::size_t d) const;

    RadicalUnit representative(std::size_t d) const;

    // x_d * x_e = cocycle(d, e) * x_{d+e}
    Rat cocycle(std::size_t d, std::size_t e) const;

private:
    UnitGroup group_;
    std::vector<unsigned long> radices_;
    std::size_t dim_;
    mutable std::map<std::pair<std::size_t, std::size_t>, Rat> cocycle_memo_;
};

AlgebraElement algebra_from_rational(const Rat &r);
AlgebraElement basis_element(std::size_t idx, const Rat &coeff = Rat(1));
// the class of u with its rational multiplier relative to the canonical
// representative; fails when u is not in U
AlgebraElement embed(const GradedAlgebra &a, const RadicalUnit &u);

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement negate(const AlgebraElement &x);
AlgebraElement sub(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement scalar_mul(const Rat &c, const AlgebraElement &x);
AlgebraElement mul(const GradedAlgebra &a, const AlgebraElement &x, const AlgebraElement &y);

// Least-degree monic annihilator of x, dense rational coefficients with the
// constant term first.
std::vector<Rat> min_poly(const GradedAlgebra &a, const AlgebraElement &x);

std::optional<AlgebraElement> invert(const GradedAlgebra &a, const AlgebraElement &x);

// Pair (u, v) with u, v != 0 and u*v = 0, built from a NotField verdict.
std::pair<AlgebraElement, AlgebraElement>
zero_divisor_witness(const GradedAlgebra &a, const KneserVerdict &verdict);

// e = (u+2)(u^2-2u+2)/8 for u^4 = -4; verified idempotent distinct from 0, 1.
AlgebraElement idempotent_split_check(const GradedAlgebra &a, const RadicalUnit &u);

enum class DegreeMethod { SupportFormula, MinPoly };

struct DegreeResult {
    Int degree;
    DegreeMethod method;
};

DegreeResult degree_of(const GradedAlgebra &a, const AlgebraElement &x);

struct SubgroupInfo {
    Int order;
    std::vector<std::size_t> elements;                // linearized indices, sorted
    std::vector<std::vector<Int>> generator_coords;
};

// All subgroups of the finite abelian grading group D, |D| <= 256.
std::vector<SubgroupInfo> subfield_lattice(const GradedAlgebra &a);

BigComplex complex_eval(const RadicalUnit &u, mpfr_prec_t precision);
BigComplex complex_eval(const GradedAlgebra &a, const AlgebraElement &x,
                        mpfr_prec_t precision);

std::string poly_to_string(const std::vector<Rat> &poly);

} // namespace radkit

#endif
