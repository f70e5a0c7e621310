#ifndef RADKIT_FINITE_FIELDS_HPP
#define RADKIT_FINITE_FIELDS_HPP

#include "radkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace radkit::ff {

// configurable sweep caps
struct SweepCaps {
    std::uint64_t q_max = 31;
    unsigned n_max = 8;
    std::uint64_t order_max = 10'000'000; // q^n
};

// Dense polynomial over F_p, coefficients in [0, p), degree = coeffs.size()-1.
struct FFPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> coeffs; // constant first; empty = zero polynomial

    static FFPoly zero(std::uint64_t p) { return {p, {}}; }
    static FFPoly constant(std::uint64_t p, std::uint64_t c);
    static FFPoly x(std::uint64_t p) { return {p, {0, 1}}; }
    // X^n - a
    static FFPoly binomial(std::uint64_t p, unsigned n, std::uint64_t a);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void trim();

    bool operator==(const FFPoly &) const = default;
};

FFPoly ffp_add(const FFPoly &a, const FFPoly &b);
FFPoly ffp_sub(const FFPoly &a, const FFPoly &b);
FFPoly ffp_mul(const FFPoly &a, const FFPoly &b);
FFPoly ffp_mod(const FFPoly &a, const FFPoly &m);
FFPoly ffp_gcd(FFPoly a, FFPoly b);
FFPoly ffp_powmod(const FFPoly &base, std::uint64_t e, const FFPoly &m);

// Rabin irreducibility test over F_p.
bool irreducible_test(const FFPoly &f);

// The field F_{p^k} as F_p[X]/(modulus); elements are polynomial residues.
class FiniteField {
public:
    // modulus = first irreducible monic of degree k in ascending
    // coefficient order
    FiniteField(std::uint64_t p, unsigned k);
    FiniteField(std::uint64_t p, FFPoly modulus);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return order_; }
    const FFPoly &modulus() const { return modulus_; }

    using Elem = std::vector<std::uint64_t>; // k coefficients, constant first

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    Elem from_scalar(std::uint64_t c) const;
    Elem gen() const; // the class of X

    Elem add(const Elem &a, const Elem &b) const;
    Elem sub(const Elem &a, const Elem &b) const;
    Elem mul(const Elem &a, const Elem &b) const;
    Elem pow(const Elem &a, std::uint64_t e) const;
    Elem inv(const Elem &a) const;
    Elem frobenius(const Elem &a, std::uint64_t q) const { return pow(a, q); }

    bool is_zero(const Elem &a) const;

    // index of an element in the ascending-coefficient enumeration
    std::uint64_t encode(const Elem &a) const;
    Elem decode(std::uint64_t idx) const;

    std::uint64_t elem_order(const Elem &a) const;
    // smallest multiplicative generator in ascending element order
    Elem multiplicative_generator() const;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t order_;
    FFPoly modulus_;
};

// The paper's finite-field laboratory: all questions concern L|K with
// K = F_q (q prime) and L = F_{q^n}.

// q = 1 mod ered(n)
bool grading_exists(std::uint64_t q, unsigned n);

struct GradingWitness {
    std::uint64_t q;
    unsigned n;
    std::uint64_t a;   // X^n - a irreducible over F_q
    FiniteField field; // F_q[X]/(X^n - a); components L_k = F_q * x^k
};

// deterministic ascending scan over a in F_q^x
std::optional<GradingWitness> construct_grading(std::uint64_t q, unsigned n);

struct KummerGrading {
    std::uint64_t q;
    unsigned n;
    FiniteField field;                              // F_{q^n}
    std::vector<std::uint64_t> eigenvalues;         // mu_n(F_q), ascending
    std::vector<FiniteField::Elem> eigenvectors;    // spanning line per eigenvalue
};

// Frobenius eigenspace grading of F_{q^n} over F_q; requires n | q-1.
KummerGrading kummer_eigenspaces(std::uint64_t q, unsigned n);

// norm of every zeta in mu_n(L) equals 1
bool norm_one_check(std::uint64_t q, unsigned n);

// |ker(Norm)/im(sigma/id)| on mu_n(L), by enumeration
std::uint64_t h1_cyclic(std::uint64_t q, unsigned n);

// (|H^0|, |H^1|) on mu_n(L)
std::pair<std::uint64_t, std::uint64_t> herbrand_check(std::uint64_t q, unsigned n);

struct KneserSubgroupReport {
    bool hypotheses_hold;        // |mu_n(L)| = n and q = 1 mod ered(n)
    std::uint64_t uprime_index;  // |U'/K^x|
    std::uint64_t mu_n_L;
    std::uint64_t mu_n_K;
    std::uint64_t h1;
    bool sequence_multiplies;    // |U'/K^x| = |mu_n(L)/mu_n(K)| * h1
    bool equals_galois_order;    // |U'/K^x| = n
};

KneserSubgroupReport kneser_subgroup(std::uint64_t q, unsigned n);

// |(L^{x n} cap K^x)/K^{x n}| equals h1_cyclic(q, n)
bool h1_classical_check(std::uint64_t q, unsigned n);

struct SweepRecord {
    std::uint64_t q;
    unsigned n;
    std::uint64_t ered;
    bool grading_exists;
    std::optional<std::uint64_t> witness_a;
    std::uint64_t mu_n_L;
    std::uint64_t mu_n_K;
    std::uint64_t h1;
    std::uint64_t h0;
    std::optional<std::uint64_t> uprime_index;
};

SweepRecord sweep_cell(std::uint64_t q, unsigned n);
std::vector<SweepRecord> sweep(const SweepCaps &caps = {});

} // namespace radkit::ff

#endif
