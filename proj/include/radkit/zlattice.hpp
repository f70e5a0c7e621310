#ifndef RADKIT_ZLATTICE_HPP
#define RADKIT_ZLATTICE_HPP

#include "radkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace radkit {

// Dense integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix &o) const;
    bool operator==(const IntMatrix &o) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int &c);
    void add_col(std::size_t i, std::size_t j, const Int &c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    // exact determinant (square matrices), fraction-free Gauss-Bareiss
    Int det() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

// Row-style Hermite normal form: same row lattice, upper echelon, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped to the bottom.
IntMatrix hnf(const IntMatrix &a);

struct SNFResult {
    IntMatrix s; // diagonal, d1 | d2 | ... | dr, entries >= 0
    IntMatrix u; // rows x rows, |det| = 1
    IntMatrix v; // cols x cols, |det| = 1
};

// U * A * V = S
SNFResult snf(const IntMatrix &a);

struct DiophantineSolution {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel_basis;
};

// Solves A x = b over Z. The kernel basis spans {x : A x = 0}.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix &a,
                                                     const std::vector<Int> &b);

struct GroupStructure {
    Int order;
    std::vector<Int> invariant_factors; // each > 1, each dividing the next
    // per input generator, its coordinates in the invariant-factor basis
    std::vector<std::vector<Int>> coordinates;

    Int exponent() const {
        return invariant_factors.empty() ? Int(1) : invariant_factors.back();
    }
};

// Structure of the subgroup of (Q/Z)^k generated by gens (each a k-vector of
// angles). Denominators are cleared by their global lcm, reducing to SNF of a
// stacked integer matrix.
GroupStructure quotient_structure(const std::vector<std::vector<Angle>> &gens,
                                  std::size_t dimension);

class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Rat det() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

inline constexpr std::size_t kMinorsDimCap = 12;

// gcd_rat over all k x k minors of m, k = 0..min(rows, cols); the empty minor
// counts as 1, so the result always divides 1.
Rat rational_minors_gcd(const RatMatrix &m);

} // namespace radkit

#endif
