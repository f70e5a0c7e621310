#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radkit/zlattice.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace radkit;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::vector<long> vals) {
    std::vector<Int> e(vals.begin(), vals.end());
    return IntMatrix(r, c, std::move(e));
}

// every row of a lies in the row lattice of b
bool rows_in_lattice(const IntMatrix &a, const IntMatrix &b) {
    // solve x^T * b = row  <=>  b^T x = row^T
    IntMatrix bt(b.cols(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) bt.at(j, i) = b.at(i, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Int> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a.at(i, j);
        if (!solve_diophantine(bt, row)) return false;
    }
    return true;
}

// brute-force closure of the subgroup of (Q/Z)^k generated by gens
std::size_t closure_order(const std::vector<std::vector<Angle>> &gens, std::size_t k) {
    std::set<std::vector<Rat>> seen;
    std::vector<std::vector<Angle>> frontier{std::vector<Angle>(k)};
    auto key = [](const std::vector<Angle> &v) {
        std::vector<Rat> out;
        for (const auto &a : v) out.push_back(a.value());
        return out;
    };
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<std::vector<Angle>> next;
        for (const auto &cur : frontier)
            for (const auto &g : gens) {
                std::vector<Angle> s(k);
                for (std::size_t i = 0; i < k; ++i) s[i] = cur[i] + g[i];
                if (seen.insert(key(s)).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

bool is_diagonal(const IntMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

void check_snf(const IntMatrix &a) {
    SNFResult r = snf(a);
    CHECK(is_diagonal(r.s));
    CHECK(abs(r.u.det()) == 1);
    CHECK(abs(r.v.det()) == 1);
    CHECK(r.u * a * r.v == r.s);
    std::size_t n = std::min(r.s.rows(), r.s.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        CHECK(r.s.at(i, i) >= 0);
        if (r.s.at(i, i) != 0) CHECK(r.s.at(i + 1, i + 1) % r.s.at(i, i) == 0);
        if (r.s.at(i, i) == 0) CHECK(r.s.at(i + 1, i + 1) == 0);
    }
}

} // namespace

TEST_CASE("hnf examples") {
    CHECK(hnf(make(2, 2, {6, 3, 4, 6})) == make(2, 2, {2, 9, 0, 12}));
    CHECK(hnf(IntMatrix::identity(2)) == IntMatrix::identity(2));
    CHECK(hnf(IntMatrix(2, 2)) == IntMatrix(2, 2));
}

TEST_CASE("hnf preserves the row lattice and determinant") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = 2 + rng() % 3;
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = d(rng);
        IntMatrix h = hnf(a);
        CHECK(rows_in_lattice(a, h));
        CHECK(rows_in_lattice(h, a));
        CHECK(abs(h.det()) == abs(a.det()));
        // echelon with positive pivots, above-pivot entries reduced
        std::size_t last_pivot = 0;
        bool seen_zero_row = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = 0;
            while (j < n && h.at(i, j) == 0) ++j;
            if (j == n) {
                seen_zero_row = true;
                continue;
            }
            CHECK_FALSE(seen_zero_row);
            if (i > 0) CHECK(j > last_pivot);
            last_pivot = j;
            CHECK(h.at(i, j) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.at(k, j) >= 0);
                CHECK(h.at(k, j) < h.at(i, j));
            }
        }
        // idempotence: hnf of the normal form is itself
        CHECK(hnf(h) == h);
    }
}

TEST_CASE("snf examples") {
    SNFResult d23 = snf(make(2, 2, {2, 0, 0, 3}));
    CHECK(d23.s == make(2, 2, {1, 0, 0, 6}));
    CHECK(snf(IntMatrix(2, 2)).s == IntMatrix(2, 2));
    SNFResult m = snf(make(2, 2, {2, 4, 6, 8}));
    CHECK(m.s == make(2, 2, {2, 0, 0, 4}));
    check_snf(make(2, 2, {2, 4, 6, 8}));
}

TEST_CASE("snf transforms are unimodular on random matrices") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int round = 0; round < 60; ++round) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = d(rng);
        check_snf(a);
    }
}

TEST_CASE("solve_diophantine examples") {
    auto s1 = solve_diophantine(make(1, 1, {2}), {Int(4)});
    REQUIRE(s1);
    CHECK(s1->particular == std::vector<Int>{Int(2)});
    CHECK(s1->kernel_basis.empty());

    CHECK_FALSE(solve_diophantine(make(1, 1, {2}), {Int(3)}));

    auto s3 = solve_diophantine(make(1, 2, {1, 1}), {Int(5)});
    REQUIRE(s3);
    CHECK(s3->particular[0] + s3->particular[1] == 5);
    REQUIRE(s3->kernel_basis.size() == 1);
    CHECK(s3->kernel_basis[0][0] + s3->kernel_basis[0][1] == 0);
    CHECK(s3->kernel_basis[0][0] != 0);
}

TEST_CASE("solve_diophantine exactness and unsolvability cross-check") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int round = 0; round < 120; ++round) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = d(rng);
        std::vector<Int> b(r);
        for (auto &x : b) x = d(rng);
        auto sol = solve_diophantine(a, b);
        // SNF divisibility criterion as an independent solvability oracle
        SNFResult s = snf(a);
        std::vector<Int> ub(r, Int(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) ub[i] += s.u.at(i, j) * b[j];
        bool solvable = true;
        for (std::size_t i = 0; i < r; ++i) {
            Int di = i < c ? s.s.at(i, i) : Int(0);
            if (di == 0 ? ub[i] != 0 : ub[i] % di != 0) solvable = false;
        }
        CHECK(sol.has_value() == solvable);
        if (!sol) continue;
        auto apply = [&](const std::vector<Int> &x) {
            std::vector<Int> y(r, Int(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) y[i] += a.at(i, j) * x[j];
            return y;
        };
        CHECK(apply(sol->particular) == b);
        for (const auto &k : sol->kernel_basis)
            CHECK(apply(k) == std::vector<Int>(r, Int(0)));
    }
}

TEST_CASE("quotient_structure examples") {
    auto g1 = quotient_structure(
        {{Angle(Rat(1, 2)), Angle(Rat(1, 4))}, {Angle(Rat(1, 3)), Angle(Rat(1, 2))}}, 2);
    CHECK(g1.order == 12);
    CHECK(g1.invariant_factors == std::vector<Int>{Int(12)});
    CHECK(closure_order({{Angle(Rat(1, 2)), Angle(Rat(1, 4))},
                         {Angle(Rat(1, 3)), Angle(Rat(1, 2))}},
                        2) == 12);

    auto g2 = quotient_structure(
        {{Angle(Rat(1, 2)), Angle()}, {Angle(), Angle(Rat(1, 2))}}, 2);
    CHECK(g2.order == 4);
    CHECK(g2.invariant_factors == std::vector<Int>{Int(2), Int(2)});

    auto g3 = quotient_structure({{Angle(Rat(1, 3))}}, 1);
    CHECK(g3.order == 3);
    CHECK(g3.invariant_factors == std::vector<Int>{Int(3)});
}

TEST_CASE("quotient_structure order matches closure enumeration") {
    std::mt19937_64 rng(24);
    std::vector<int> dens = {1, 2, 3, 4, 5, 6, 10, 12, 15, 30};
    for (int round = 0; round < 80; ++round) {
        std::size_t k = 1 + rng() % 3;
        std::size_t m = 1 + rng() % 3;
        std::vector<std::vector<Angle>> gens(m, std::vector<Angle>(k));
        for (auto &g : gens)
            for (auto &a : g) {
                int d = dens[rng() % dens.size()];
                a = Angle(make_rat(Int(static_cast<long>(rng() % d)), Int(d)));
            }
        auto gs = quotient_structure(gens, k);
        CHECK(gs.order == Int(static_cast<unsigned long>(closure_order(gens, k))));
        Int prod(1);
        for (const auto &f : gs.invariant_factors) {
            CHECK(f > 1);
            prod *= f;
        }
        CHECK(prod == gs.order);
        // coordinates map each generator into range
        REQUIRE(gs.coordinates.size() == m);
        for (const auto &co : gs.coordinates) {
            REQUIRE(co.size() == gs.invariant_factors.size());
            for (std::size_t i = 0; i < co.size(); ++i) {
                CHECK(co[i] >= 0);
                CHECK(co[i] < gs.invariant_factors[i]);
            }
        }
    }
}

TEST_CASE("rational_minors_gcd examples") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(1, 0) = Rat(1, 4);
    m.at(1, 1) = Rat(1, 2);
    CHECK(rational_minors_gcd(m) == Rat(1, 12));

    RatMatrix one(1, 1);
    one.at(0, 0) = Rat(1);
    CHECK(rational_minors_gcd(one) == Rat(1));

    RatMatrix half(1, 1);
    half.at(0, 0) = Rat(1, 2);
    CHECK(rational_minors_gcd(half) == Rat(1, 2));
}

TEST_CASE("minor formula equals subgroup order on random column tuples") {
    std::mt19937_64 rng(25);
    int done = 0;
    while (done < 60) {
        std::size_t rows = 1 + rng() % 3;   // primes
        std::size_t cols = 1 + rng() % 3;   // elements of (Q/Z)^rows
        RatMatrix m(rows, cols);
        std::vector<std::vector<Angle>> colvecs(cols, std::vector<Angle>(rows));
        std::set<std::vector<Rat>> distinct;
        bool ok = true;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rat> key;
            bool nonzero = false;
            for (std::size_t i = 0; i < rows; ++i) {
                int d = 1 + static_cast<int>(rng() % 12);
                Rat v = make_rat(Int(static_cast<long>(rng() % d)), Int(d));
                m.at(i, j) = v;
                colvecs[j][i] = Angle(v);
                key.push_back(colvecs[j][i].value());
                nonzero = nonzero || !colvecs[j][i].is_zero();
            }
            if (!nonzero || !distinct.insert(key).second) ok = false;
        }
        if (!ok) continue;
        ++done;
        Rat g = rational_minors_gcd(m);
        auto gs = quotient_structure(colvecs, rows);
        CHECK(Rat(1) / g == Rat(gs.order));
        CHECK(gs.order == Int(static_cast<unsigned long>(closure_order(colvecs, rows))));
    }
}
