#include "radkit/zlattice.hpp"

#include <algorithm>
#include <functional>

namespace radkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int &a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int &c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int &c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix hnf(const IntMatrix &input) {
    IntMatrix a = input;
    std::size_t m = a.rows(), n = a.cols();
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // gcd the column entries below `row` into a single pivot
        while (true) {
            std::size_t best = m;
            for (std::size_t i = row; i < m; ++i)
                if (a.at(i, col) != 0 &&
                    (best == m || abs(a.at(i, col)) < abs(a.at(best, col))))
                    best = i;
            if (best == m) break;
            if (best != row) a.swap_rows(row, best);
            bool clean = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(),
                           a.at(row, col).get_mpz_t());
                a.add_row(i, row, -q);
                if (a.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(row, col) == 0) continue;
        if (a.at(row, col) < 0) a.negate_row(row);
        pivot_col.push_back(col);
        ++row;
    }
    // reduce entries above each pivot into [0, pivot)
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        std::size_t col = pivot_col[r];
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
            if (q != 0) a.add_row(i, r, -q);
        }
    }
    return a;
}

SNFResult snf(const IntMatrix &input) {
    std::size_t m = input.rows(), n = input.cols();
    SNFResult res{input, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix &a = res.s;
    std::size_t r = std::min(m, n);
    for (std::size_t t = 0; t < r; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block to (t,t)
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a.at(i, j) != 0 &&
                        (bi == m || abs(a.at(i, j)) < abs(a.at(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) { t = r; break; }
            if (bi != t) { a.swap_rows(t, bi); res.u.swap_rows(t, bi); }
            if (bj != t) { a.swap_cols(t, bj); res.v.swap_cols(t, bj); }

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                a.add_row(i, t, -q);
                res.u.add_row(i, t, -q);
                if (a.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                a.add_col(j, t, -q);
                res.v.add_col(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // enforce divisibility of the trailing block by the pivot
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row(t, i, 1);
                        res.u.add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= r) break;
        if (a.at(t, t) < 0) { a.negate_row(t); res.u.negate_row(t); }
    }
    return res;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix &a,
                                                     const std::vector<Int> &b) {
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("solve_diophantine: dimension mismatch");
    SNFResult f = snf(a);
    std::vector<Int> c(m, Int(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i] += f.u.at(i, j) * b[j];
    std::size_t rank = 0;
    while (rank < std::min(m, n) && f.s.at(rank, rank) != 0) ++rank;
    std::vector<Int> y(n, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (i < rank) {
            if (c[i] % f.s.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / f.s.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    DiophantineSolution sol;
    sol.particular.assign(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sol.particular[i] += f.v.at(i, j) * y[j];
    for (std::size_t j = rank; j < n; ++j) {
        std::vector<Int> k(n);
        for (std::size_t i = 0; i < n; ++i) k[i] = f.v.at(i, j);
        sol.kernel_basis.push_back(std::move(k));
    }
    return sol;
}

namespace {

// Express target (a row vector of length k) over the rows of the upper
// triangular full-rank matrix h; exact by construction.
std::vector<Int> solve_upper(const IntMatrix &h, const std::vector<Int> &target) {
    std::size_t k = h.cols();
    std::vector<Int> c(k, Int(0));
    for (std::size_t j = 0; j < k; ++j) {
        Int acc = target[j];
        for (std::size_t t = 0; t < j; ++t) acc -= c[t] * h.at(t, j);
        if (acc % h.at(j, j) != 0)
            throw std::logic_error("quotient_structure: lattice membership failed");
        c[j] = acc / h.at(j, j);
    }
    return c;
}

} // namespace

GroupStructure quotient_structure(const std::vector<std::vector<Angle>> &gens,
                                  std::size_t k) {
    GroupStructure g;
    g.order = 1;
    if (k == 0) {
        g.coordinates.assign(gens.size(), {});
        return g;
    }
    Int big_m = 1;
    for (const auto &v : gens) {
        if (v.size() != k)
            throw std::invalid_argument("quotient_structure: generator dimension mismatch");
        for (const auto &ang : v) mpz_lcm(big_m.get_mpz_t(), big_m.get_mpz_t(),
                                          ang.value().get_den().get_mpz_t());
    }
    // row lattice of (M*gens stacked over M*I_k), a full-rank sublattice of Z^k
    IntMatrix stacked(gens.size() + k, k);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat scaled = gens[i][j].value() * Rat(big_m);
            stacked.at(i, j) = scaled.get_num(); // exact: M kills the denominator
        }
    for (std::size_t j = 0; j < k; ++j) stacked.at(gens.size() + j, j) = big_m;
    IntMatrix h = hnf(stacked);
    IntMatrix basis(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) basis.at(i, j) = h.at(i, j);

    // M*Z^k expressed over the lattice basis; the quotient is coker(C)
    IntMatrix cmat(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> target(k, Int(0));
        target[i] = big_m;
        auto c = solve_upper(basis, target);
        for (std::size_t j = 0; j < k; ++j) cmat.at(i, j) = c[j];
    }
    SNFResult f = snf(cmat);
    std::vector<Int> diag(k);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k; ++i) {
        diag[i] = f.s.at(i, i);
        if (diag[i] == 0)
            throw std::logic_error("quotient_structure: infinite quotient");
        if (diag[i] > 1) {
            kept.push_back(i);
            g.invariant_factors.push_back(diag[i]);
            g.order *= diag[i];
        }
    }
    for (const auto &v : gens) {
        std::vector<Int> target(k);
        for (std::size_t j = 0; j < k; ++j) {
            Rat scaled = v[j].value() * Rat(big_m);
            target[j] = scaled.get_num();
        }
        auto c = solve_upper(basis, target);
        // class of c in Z^k / rowspace(C) via x -> x V
        std::vector<Int> coord;
        for (std::size_t idx : kept) {
            Int e = 0;
            for (std::size_t t = 0; t < k; ++t) e += c[t] * f.v.at(t, idx);
            mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), diag[idx].get_mpz_t());
            coord.push_back(e);
        }
        g.coordinates.push_back(std::move(coord));
    }
    return g;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return Rat(1);
    RatMatrix a = *this;
    Rat result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            result = -result;
        }
        result *= a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat factor = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= factor * a.at(k, j);
        }
    }
    return result;
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t> &)> &fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Rat rational_minors_gcd(const RatMatrix &m) {
    if (m.rows() > kMinorsDimCap || m.cols() > kMinorsDimCap)
        throw std::domain_error("rational_minors_gcd: dimension cap exceeded");
    Rat g(1); // the empty minor
    std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        combinations(m.rows(), k, [&](const std::vector<std::size_t> &ri) {
            combinations(m.cols(), k, [&](const std::vector<std::size_t> &ci) {
                RatMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub.at(i, j) = m.at(ri[i], ci[j]);
                g = gcd_rat(g, sub.det());
            });
        });
    }
    return g;
}

} // namespace radkit
