#include "radkit/finite_fields.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace radkit::ff {

namespace {

std::uint64_t ered_u64(unsigned n) {
    return mpz_get_ui(radkit::ered(Int(n)).get_mpz_t());
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto &[p, m] : radkit::factorize(Int(static_cast<unsigned long>(n))).factors)
        out.push_back(mpz_get_ui(p.get_mpz_t()));
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

FFPoly FFPoly::constant(std::uint64_t p, std::uint64_t c) {
    FFPoly f{p, {c % p}};
    f.trim();
    return f;
}

FFPoly FFPoly::binomial(std::uint64_t p, unsigned n, std::uint64_t a) {
    FFPoly f{p, std::vector<std::uint64_t>(n + 1, 0)};
    f.coeffs[0] = (p - a % p) % p;
    f.coeffs[n] = 1;
    f.trim();
    return f;
}

void FFPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

FFPoly ffp_add(const FFPoly &a, const FFPoly &b) {
    FFPoly r{a.p, std::vector<std::uint64_t>(std::max(a.coeffs.size(), b.coeffs.size()), 0)};
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t s = (i < a.coeffs.size() ? a.coeffs[i] : 0) +
                          (i < b.coeffs.size() ? b.coeffs[i] : 0);
        r.coeffs[i] = s % a.p;
    }
    r.trim();
    return r;
}

FFPoly ffp_sub(const FFPoly &a, const FFPoly &b) {
    FFPoly r{a.p, std::vector<std::uint64_t>(std::max(a.coeffs.size(), b.coeffs.size()), 0)};
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        r.coeffs[i] = (x + a.p - y) % a.p;
    }
    r.trim();
    return r;
}

FFPoly ffp_mul(const FFPoly &a, const FFPoly &b) {
    if (a.is_zero() || b.is_zero()) return FFPoly::zero(a.p);
    FFPoly r{a.p, std::vector<std::uint64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = (r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j]) % a.p;
    }
    r.trim();
    return r;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime; Fermat
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

FFPoly ffp_mod(const FFPoly &a, const FFPoly &m) {
    if (m.is_zero()) throw std::domain_error("ffp_mod: zero modulus");
    FFPoly r = a;
    std::uint64_t lead_inv = inv_mod(m.coeffs.back(), m.p);
    while (r.degree() >= m.degree()) {
        std::uint64_t f = r.coeffs.back() * lead_inv % m.p;
        std::size_t shift = r.coeffs.size() - m.coeffs.size();
        for (std::size_t i = 0; i < m.coeffs.size(); ++i)
            r.coeffs[shift + i] = (r.coeffs[shift + i] + m.p * m.p - f * m.coeffs[i] % m.p) % m.p;
        r.trim();
        if (r.is_zero()) break;
    }
    return r;
}

FFPoly ffp_gcd(FFPoly a, FFPoly b) {
    while (!b.is_zero()) {
        FFPoly r = ffp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        // monic normalization
        std::uint64_t li = inv_mod(a.coeffs.back(), a.p);
        for (auto &c : a.coeffs) c = c * li % a.p;
    }
    return a;
}

FFPoly ffp_powmod(const FFPoly &base, std::uint64_t e, const FFPoly &m) {
    FFPoly r = FFPoly::constant(base.p, 1);
    FFPoly b = ffp_mod(base, m);
    while (e) {
        if (e & 1) r = ffp_mod(ffp_mul(r, b), m);
        b = ffp_mod(ffp_mul(b, b), m);
        e >>= 1;
    }
    return r;
}

bool irreducible_test(const FFPoly &f) {
    if (f.degree() < 1) throw std::domain_error("irreducible_test: degree must be >= 1");
    unsigned n = static_cast<unsigned>(f.degree());
    std::uint64_t p = f.p;
    const FFPoly x = FFPoly::x(p);
    // X^{p^n} == X mod f
    FFPoly t = ffp_mod(x, f);
    for (unsigned i = 0; i < n; ++i) t = ffp_powmod(t, p, f);
    if (!(t == ffp_mod(x, f))) return false;
    // gcd(X^{p^{n/l}} - X, f) = 1 for prime divisors l of n
    for (std::uint64_t l : prime_factors_u64(n)) {
        unsigned k = n / static_cast<unsigned>(l);
        FFPoly s = ffp_mod(x, f);
        for (unsigned i = 0; i < k; ++i) s = ffp_powmod(s, p, f);
        FFPoly g = ffp_gcd(ffp_sub(s, ffp_mod(x, f)), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!radkit::is_prime(Int(static_cast<unsigned long>(p))))
        throw std::domain_error("FiniteField: characteristic must be prime");
    if (k == 0) throw std::domain_error("FiniteField: degree must be >= 1");
    order_ = ipow(p, k);
    for (std::uint64_t idx = 0;; ++idx) {
        FFPoly f{p, std::vector<std::uint64_t>(k + 1, 0)};
        std::uint64_t t = idx;
        for (unsigned j = 0; j < k; ++j) {
            f.coeffs[j] = t % p;
            t /= p;
        }
        f.coeffs[k] = 1;
        if (irreducible_test(f)) {
            modulus_ = f;
            break;
        }
    }
}

FiniteField::FiniteField(std::uint64_t p, FFPoly modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.degree())), modulus_(std::move(modulus)) {
    if (!irreducible_test(modulus_))
        throw std::domain_error("FiniteField: modulus is reducible");
    order_ = ipow(p, k_);
}

FiniteField::Elem FiniteField::one() const {
    Elem e(k_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elem FiniteField::from_scalar(std::uint64_t c) const {
    Elem e(k_, 0);
    e[0] = c % p_;
    return e;
}

FiniteField::Elem FiniteField::gen() const {
    if (k_ == 1) {
        // class of X in F_p[X]/(X + c) is -c
        Elem e(1, 0);
        e[0] = (p_ - modulus_.coeffs[0] % p_) % p_;
        return e;
    }
    Elem e(k_, 0);
    e[1] = 1;
    return e;
}

FiniteField::Elem FiniteField::add(const Elem &a, const Elem &b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FiniteField::Elem FiniteField::sub(const Elem &a, const Elem &b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

FiniteField::Elem FiniteField::mul(const Elem &a, const Elem &b) const {
    FFPoly fa{p_, a}, fb{p_, b};
    fa.trim();
    fb.trim();
    FFPoly prod = ffp_mod(ffp_mul(fa, fb), modulus_);
    Elem r(k_, 0);
    for (std::size_t i = 0; i < prod.coeffs.size(); ++i) r[i] = prod.coeffs[i];
    return r;
}

FiniteField::Elem FiniteField::pow(const Elem &a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(const Elem &a) const {
    if (is_zero(a)) throw std::domain_error("FiniteField: inverting zero");
    return pow(a, order_ - 2);
}

bool FiniteField::is_zero(const Elem &a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

std::uint64_t FiniteField::encode(const Elem &a) const {
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

FiniteField::Elem FiniteField::decode(std::uint64_t idx) const {
    Elem e(k_);
    for (unsigned i = 0; i < k_; ++i) {
        e[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::uint64_t FiniteField::elem_order(const Elem &a) const {
    if (is_zero(a)) throw std::domain_error("elem_order: zero element");
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t l : prime_factors_u64(order_ - 1))
        while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    return ord;
}

FiniteField::Elem FiniteField::multiplicative_generator() const {
    for (std::uint64_t idx = 1; idx < order_; ++idx) {
        Elem e = decode(idx);
        if (elem_order(e) == order_ - 1) return e;
    }
    throw std::logic_error("multiplicative_generator: none found");
}

bool grading_exists(std::uint64_t q, unsigned n) {
    if (!radkit::is_prime(Int(static_cast<unsigned long>(q))))
        throw std::domain_error("grading_exists: q must be prime");
    if (n < 1) throw std::domain_error("grading_exists: n must be >= 1");
    return (q - 1) % ered_u64(n) == 0;
}

std::optional<GradingWitness> construct_grading(std::uint64_t q, unsigned n) {
    if (!radkit::is_prime(Int(static_cast<unsigned long>(q))))
        throw std::domain_error("construct_grading: q must be prime");
    for (std::uint64_t a = 1; a < q; ++a) {
        FFPoly f = FFPoly::binomial(q, n, a);
        if (irreducible_test(f))
            return GradingWitness{q, n, a, FiniteField(q, f)};
    }
    return std::nullopt;
}

KummerGrading kummer_eigenspaces(std::uint64_t q, unsigned n) {
    if ((q - 1) % n != 0)
        throw std::domain_error("kummer_eigenspaces: n must divide q-1");
    KummerGrading kg{q, n, FiniteField(q, n), {}, {}};
    const FiniteField &L = kg.field;
    for (std::uint64_t c = 1; c < q; ++c) {
        std::uint64_t t = 1;
        for (unsigned i = 0; i < n; ++i) t = t * c % q;
        if (t == 1) kg.eigenvalues.push_back(c);
    }
    // Frobenius as an F_q-linear map in the power basis
    std::vector<FiniteField::Elem> frob_cols;
    for (unsigned j = 0; j < n; ++j) {
        FiniteField::Elem basis = L.zero();
        basis[j] = 1;
        frob_cols.push_back(L.frobenius(basis, q));
    }
    for (std::uint64_t zeta : kg.eigenvalues) {
        // kernel of (F - zeta I) by elimination mod q
        std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                m[i][j] = (frob_cols[j][i] + (i == j ? q - zeta % q : 0)) % q;
        std::vector<int> pivot_col(n, -1);
        unsigned rank = 0;
        for (unsigned col = 0; col < n && rank < n; ++col) {
            unsigned piv = rank;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[rank], m[piv]);
            std::uint64_t li = inv_mod(m[rank][col], q);
            for (unsigned j = 0; j < n; ++j) m[rank][j] = m[rank][j] * li % q;
            for (unsigned i = 0; i < n; ++i) {
                if (i == rank || m[i][col] == 0) continue;
                std::uint64_t f = m[i][col];
                for (unsigned j = 0; j < n; ++j)
                    m[i][j] = (m[i][j] + (q - f) * m[rank][j]) % q;
            }
            pivot_col[rank] = static_cast<int>(col);
            ++rank;
        }
        if (rank != n - 1)
            throw std::logic_error("kummer_eigenspaces: eigenspace is not a line");
        // back-substitute with the free variable set to 1
        unsigned free_col = 0;
        std::vector<bool> is_pivot(n, false);
        for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
        for (unsigned j = 0; j < n; ++j)
            if (!is_pivot[j]) free_col = j;
        FiniteField::Elem v(n, 0);
        v[free_col] = 1;
        for (unsigned r = 0; r < rank; ++r)
            v[pivot_col[r]] = (q - m[r][free_col] % q) % q;
        kg.eigenvectors.push_back(v);
    }
    return kg;
}

namespace {

struct CyclicLab {
    FiniteField L;
    FiniteField::Elem g; // generator of L^x
    std::uint64_t q;
    unsigned n;
    std::uint64_t mu_L; // |mu_n(L)| = gcd(n, q^n - 1)
    std::uint64_t norm_exp;

    std::vector<FiniteField::Elem> mu_n() const {
        std::vector<FiniteField::Elem> out;
        FiniteField::Elem zeta = L.pow(g, (L.order() - 1) / mu_L);
        FiniteField::Elem cur = L.one();
        for (std::uint64_t i = 0; i < mu_L; ++i) {
            out.push_back(cur);
            cur = L.mul(cur, zeta);
        }
        return out;
    }
};

CyclicLab make_lab(std::uint64_t q, unsigned n) {
    CyclicLab lab{FiniteField(q, n), {}, q, n, 0, 0};
    lab.g = lab.L.multiplicative_generator();
    lab.mu_L = std::gcd(static_cast<std::uint64_t>(n), lab.L.order() - 1);
    lab.norm_exp = (lab.L.order() - 1) / (q - 1);
    return lab;
}

} // namespace

bool norm_one_check(std::uint64_t q, unsigned n) {
    CyclicLab lab = make_lab(q, n);
    for (const auto &zeta : lab.mu_n())
        if (!(lab.L.pow(zeta, lab.norm_exp) == lab.L.one())) return false;
    return true;
}

std::uint64_t h1_cyclic(std::uint64_t q, unsigned n) {
    CyclicLab lab = make_lab(q, n);
    std::set<std::uint64_t> ker, im;
    for (const auto &x : lab.mu_n()) {
        if (lab.L.pow(x, lab.norm_exp) == lab.L.one()) ker.insert(lab.L.encode(x));
        im.insert(lab.L.encode(lab.L.pow(x, q - 1))); // sigma(x)/x = x^{q-1}
    }
    return ker.size() / im.size();
}

std::pair<std::uint64_t, std::uint64_t> herbrand_check(std::uint64_t q, unsigned n) {
    CyclicLab lab = make_lab(q, n);
    std::set<std::uint64_t> fixed, norm_im, ker, sigma_im;
    for (const auto &x : lab.mu_n()) {
        std::uint64_t ex = lab.L.encode(x);
        if (lab.L.frobenius(x, q) == x) fixed.insert(ex);
        norm_im.insert(lab.L.encode(lab.L.pow(x, lab.norm_exp)));
        if (lab.L.pow(x, lab.norm_exp) == lab.L.one()) ker.insert(ex);
        sigma_im.insert(lab.L.encode(lab.L.pow(x, q - 1)));
    }
    return {fixed.size() / norm_im.size(), ker.size() / sigma_im.size()};
}

KneserSubgroupReport kneser_subgroup(std::uint64_t q, unsigned n) {
    CyclicLab lab = make_lab(q, n);
    KneserSubgroupReport rep{};
    rep.mu_n_L = lab.mu_L;
    rep.mu_n_K = std::gcd(static_cast<std::uint64_t>(n), q - 1);
    rep.h1 = h1_cyclic(q, n);
    rep.hypotheses_hold = (lab.mu_L == n) && ((q - 1) % ered_u64(n) == 0);

    // U' = {x : x^{q-1} in mu_n(L)} = {x : x^{n(q-1)} = 1}
    std::uint64_t u = std::gcd(static_cast<std::uint64_t>(n) * (q - 1), lab.L.order() - 1);
    FiniteField::Elem h = lab.L.pow(lab.g, (lab.L.order() - 1) / u);
    FiniteField::Elem cur = lab.L.one();
    for (std::uint64_t i = 0; i < u; ++i) {
        FiniteField::Elem t = lab.L.pow(cur, q - 1);
        if (!(lab.L.pow(t, static_cast<std::uint64_t>(n)) == lab.L.one()))
            throw std::logic_error("kneser_subgroup: U' enumeration failed");
        cur = lab.L.mul(cur, h);
    }
    rep.uprime_index = u / (q - 1);
    rep.sequence_multiplies = rep.uprime_index == (rep.mu_n_L / rep.mu_n_K) * rep.h1;
    rep.equals_galois_order = rep.uprime_index == n;
    return rep;
}

bool h1_classical_check(std::uint64_t q, unsigned n) {
    CyclicLab lab = make_lab(q, n);
    std::uint64_t d = std::gcd(static_cast<std::uint64_t>(n), lab.L.order() - 1);
    std::uint64_t power_test = (lab.L.order() - 1) / d; // x in L^{x n} iff x^{this} = 1
    FiniteField::Elem kgen = lab.L.pow(lab.g, lab.norm_exp); // generator of K^x inside L
    FiniteField::Elem cur = lab.L.one();
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        if (lab.L.pow(cur, power_test) == lab.L.one()) ++count;
        cur = lab.L.mul(cur, kgen);
    }
    std::uint64_t kxn = (q - 1) / std::gcd(static_cast<std::uint64_t>(n), q - 1);
    return count / kxn == h1_cyclic(q, n);
}

SweepRecord sweep_cell(std::uint64_t q, unsigned n) {
    SweepRecord rec{};
    rec.q = q;
    rec.n = n;
    rec.ered = ered_u64(n);
    rec.grading_exists = grading_exists(q, n);
    if (auto w = construct_grading(q, n)) rec.witness_a = w->a;
    CyclicLab lab = make_lab(q, n);
    rec.mu_n_L = lab.mu_L;
    rec.mu_n_K = std::gcd(static_cast<std::uint64_t>(n), q - 1);
    rec.h1 = h1_cyclic(q, n);
    rec.h0 = herbrand_check(q, n).first;
    auto ks = kneser_subgroup(q, n);
    if (ks.hypotheses_hold) rec.uprime_index = ks.uprime_index;
    return rec;
}

std::vector<SweepRecord> sweep(const SweepCaps &caps) {
    std::vector<SweepRecord> out;
    for (std::uint64_t q = 2; q <= caps.q_max; ++q) {
        if (!radkit::is_prime(Int(static_cast<unsigned long>(q)))) continue;
        for (unsigned n = 1; n <= caps.n_max; ++n) {
            std::uint64_t order = 1;
            bool fits = true;
            for (unsigned i = 0; i < n; ++i) {
                order *= q;
                if (order > caps.order_max) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            out.push_back(sweep_cell(q, n));
        }
    }
    return out;
}

} // namespace radkit::ff
