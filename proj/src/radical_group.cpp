#include "radkit/radical_group.hpp"

#include <algorithm>
#include <map>

namespace radkit {

RadicalUnit RadicalUnit::from_rational(const Rat &r) {
    if (r == 0) throw std::domain_error("RadicalUnit: zero is not a unit");
    RadicalUnit u;
    if (r < 0) u.angle = Angle(Int(1), Int(2));
    std::map<Int, Rat> acc;
    Int n = abs(r.get_num());
    if (n != 1)
        for (const auto &[p, m] : factorize(n).factors) acc[p] += Rat(m);
    if (r.get_den() != 1)
        for (const auto &[p, m] : factorize(r.get_den()).factors) acc[p] -= Rat(m);
    for (auto &[p, e] : acc)
        if (e != 0) u.exps.emplace_back(p, e);
    return u;
}

RadicalUnit RadicalUnit::root_of_unity(const Angle &t) {
    RadicalUnit u;
    u.angle = t;
    return u;
}

RadicalUnit RadicalUnit::prime_power(const Int &p, const Rat &e) {
    if (!is_prime(p)) throw std::domain_error("RadicalUnit: base must be prime");
    RadicalUnit u;
    if (e != 0) u.exps.emplace_back(p, e);
    return u;
}

Rat RadicalUnit::exponent_of(const Int &p) const {
    for (const auto &[q, e] : exps)
        if (q == p) return e;
    return Rat(0);
}

bool RadicalUnit::is_rational() const {
    if (!angle.is_zero() && !angle.is_half()) return false;
    for (const auto &[p, e] : exps)
        if (!is_integer(e)) return false;
    return true;
}

Rat RadicalUnit::rational_value() const {
    if (!is_rational()) throw std::domain_error("RadicalUnit: not rational");
    Rat v = angle.is_half() ? Rat(-1) : Rat(1);
    for (const auto &[p, e] : exps) {
        Int pm, ea = abs(e.get_num());
        mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), mpz_get_ui(ea.get_mpz_t()));
        if (e > 0)
            v *= Rat(pm);
        else
            v /= Rat(pm);
    }
    return v;
}

std::string RadicalUnit::to_string() const {
    std::string out;
    bool need_star = false;
    if (angle.is_half()) {
        out += "-";
    } else if (!angle.is_zero()) {
        out += "zeta(" + angle.to_string() + ")";
        need_star = true;
    }
    for (const auto &[p, e] : exps) {
        if (need_star) out += "*";
        out += p.get_str();
        out += is_integer(e) ? "^" + e.get_num().get_str() : "^(" + rat_to_string(e) + ")";
        need_star = true;
    }
    if (!need_star) out += "1"; // "1" or "-1"
    return out;
}

RadicalUnit unit_mul(const RadicalUnit &a, const RadicalUnit &b) {
    RadicalUnit r;
    r.angle = a.angle + b.angle;
    auto ia = a.exps.begin(), ib = b.exps.begin();
    while (ia != a.exps.end() || ib != b.exps.end()) {
        if (ib == b.exps.end() || (ia != a.exps.end() && ia->first < ib->first)) {
            r.exps.push_back(*ia++);
        } else if (ia == a.exps.end() || ib->first < ia->first) {
            r.exps.push_back(*ib++);
        } else {
            Rat e = ia->second + ib->second;
            if (e != 0) r.exps.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    return r;
}

RadicalUnit unit_pow(const RadicalUnit &a, const Int &n) {
    RadicalUnit r;
    r.angle = a.angle * n;
    for (const auto &[p, e] : a.exps) {
        Rat en = e * Rat(n);
        if (en != 0) r.exps.emplace_back(p, en);
    }
    return r;
}

RadicalUnit unit_inv(const RadicalUnit &a) { return unit_pow(a, Int(-1)); }

RadicalUnit QuotientPresentation::section(const std::vector<Int> &coords) const {
    if (coords.size() != basis_units.size())
        throw std::invalid_argument("section: coordinate arity mismatch");
    RadicalUnit r = RadicalUnit::one();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Int k;
        mpz_fdiv_r(k.get_mpz_t(), coords[i].get_mpz_t(),
                   structure.invariant_factors[i].get_mpz_t());
        r = unit_mul(r, unit_pow(basis_units[i], k));
    }
    return r;
}

namespace {

// lexicographic comparison of exponent vectors over a common prime support
bool unit_less(const RadicalUnit &a, const RadicalUnit &b,
               const std::vector<Int> &support) {
    if (a.angle != b.angle) return a.angle < b.angle;
    for (const auto &p : support) {
        Rat ea = a.exponent_of(p), eb = b.exponent_of(p);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::vector<Int> collect_support(const std::vector<RadicalUnit> &units) {
    std::vector<Int> support;
    for (const auto &u : units)
        for (const auto &[p, e] : u.exps) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

// class vector of u in (Q/Z)^{1+|support|}: doubled angle, then the exponents
std::vector<Angle> class_vector(const RadicalUnit &u, const std::vector<Int> &support) {
    std::vector<Angle> v;
    v.reserve(1 + support.size());
    v.push_back(Angle(u.angle.value() * 2));
    for (const auto &p : support) v.push_back(Angle(u.exponent_of(p)));
    return v;
}

} // namespace

UnitGroup::UnitGroup(std::vector<RadicalUnit> generators) : gens_(std::move(generators)) {
    support_ = collect_support(gens_);
    std::sort(gens_.begin(), gens_.end(), [&](const RadicalUnit &a, const RadicalUnit &b) {
        return unit_less(a, b, support_);
    });
    build_presentation();
}

void UnitGroup::build_presentation() {
    std::size_t dim = 1 + support_.size();
    std::vector<std::vector<Angle>> vectors;
    vectors.reserve(gens_.size());
    for (const auto &g : gens_) vectors.push_back(class_vector(g, support_));
    pres_.structure = quotient_structure(vectors, dim);

    // basis units: integer combinations of the generators hitting each
    // invariant-factor basis vector
    std::size_t t = pres_.structure.invariant_factors.size();
    std::size_t s = gens_.size();
    for (std::size_t i = 0; i < t; ++i) {
        IntMatrix a(t, s + t);
        for (std::size_t r = 0; r < t; ++r) {
            for (std::size_t j = 0; j < s; ++j)
                a.at(r, j) = pres_.structure.coordinates[j][r];
            a.at(r, s + r) = pres_.structure.invariant_factors[r];
        }
        std::vector<Int> b(t, Int(0));
        b[i] = 1;
        auto sol = solve_diophantine(a, b);
        if (!sol)
            throw std::logic_error("presentation: generators fail to span D");
        RadicalUnit u = RadicalUnit::one();
        for (std::size_t j = 0; j < s; ++j)
            u = unit_mul(u, unit_pow(gens_[j], sol->particular[j]));
        pres_.basis_units.push_back(std::move(u));
    }
}

bool UnitGroup::is_real() const {
    for (const auto &g : gens_)
        if (!g.angle.is_zero() && !g.angle.is_half()) return false;
    return true;
}

namespace {

struct PowerSystem {
    IntMatrix a;
    std::vector<Int> b;
    std::size_t num_gens;
    std::size_t z_offset; // then c at z_offset + primes, w last
    std::vector<Int> primes;
};

// Equations for u^n = target with u = (-1)^c * prod p^{z_p} * prod g_j^{x_j}:
// one row per prime (z_p absorbs integrality), one row for the angle with a
// half-turn column c and a wrap column w.
PowerSystem build_power_system(const std::vector<RadicalUnit> &gens,
                               const std::vector<Int> &gen_support,
                               const RadicalUnit &target, const Int &n) {
    PowerSystem sys;
    sys.primes = gen_support;
    for (const auto &[p, e] : target.exps)
        if (std::find(sys.primes.begin(), sys.primes.end(), p) == sys.primes.end())
            sys.primes.push_back(p);
    std::sort(sys.primes.begin(), sys.primes.end());

    Int m = 2;
    auto absorb = [&m](const Rat &r) {
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), r.get_den().get_mpz_t());
    };
    for (const auto &g : gens) {
        absorb(g.angle.value());
        for (const auto &[p, e] : g.exps) absorb(e);
    }
    absorb(target.angle.value());
    for (const auto &[p, e] : target.exps) absorb(e);

    std::size_t s = gens.size(), np = sys.primes.size();
    sys.num_gens = s;
    sys.z_offset = s;
    std::size_t cols = s + np + 2; // x_j, z_p, c, w
    sys.a = IntMatrix(np + 1, cols);
    sys.b.assign(np + 1, Int(0));
    for (std::size_t r = 0; r < np; ++r) {
        const Int &p = sys.primes[r];
        for (std::size_t j = 0; j < s; ++j) {
            Rat scaled = gens[j].exponent_of(p) * Rat(m) * Rat(n);
            sys.a.at(r, j) = scaled.get_num();
        }
        sys.a.at(r, s + r) = m * n;
        Rat rhs = target.exponent_of(p) * Rat(m);
        sys.b[r] = rhs.get_num();
    }
    std::size_t ar = np; // angle row
    for (std::size_t j = 0; j < s; ++j) {
        Rat scaled = gens[j].angle.value() * Rat(m) * Rat(n);
        sys.a.at(ar, j) = scaled.get_num();
    }
    sys.a.at(ar, s + np) = m / 2 * n; // c
    sys.a.at(ar, s + np + 1) = m;     // w
    Rat rhs = target.angle.value() * Rat(m);
    sys.b[ar] = rhs.get_num();
    return sys;
}

} // namespace

std::optional<MembershipCertificate> UnitGroup::contains(const RadicalUnit &x) const {
    if (x.is_rational())
        return MembershipCertificate{std::vector<Int>(gens_.size(), Int(0)),
                                     x.rational_value()};
    auto sys = build_power_system(gens_, support_, x, Int(1));
    auto sol = solve_diophantine(sys.a, sys.b);
    if (!sol) return std::nullopt;
    MembershipCertificate cert;
    cert.exponents.assign(sol->particular.begin(),
                          sol->particular.begin() + sys.num_gens);
    RadicalUnit residual = x;
    for (std::size_t j = 0; j < gens_.size(); ++j)
        residual = unit_mul(residual, unit_pow(gens_[j], -cert.exponents[j]));
    cert.rational_part = residual.rational_value();
    return cert;
}

std::optional<RadicalUnit> UnitGroup::is_nth_power(const RadicalUnit &target,
                                                   const Int &n) const {
    if (n < 1) throw std::domain_error("is_nth_power: n must be positive");
    auto sys = build_power_system(gens_, support_, target, n);
    auto sol = solve_diophantine(sys.a, sys.b);
    if (!sol) return std::nullopt;
    RadicalUnit u = RadicalUnit::one();
    for (std::size_t j = 0; j < sys.num_gens; ++j)
        u = unit_mul(u, unit_pow(gens_[j], sol->particular[j]));
    for (std::size_t r = 0; r < sys.primes.size(); ++r) {
        const Int &z = sol->particular[sys.z_offset + r];
        if (z != 0)
            u = unit_mul(u, RadicalUnit::prime_power(sys.primes[r], Rat(z)));
    }
    Int c = sol->particular[sys.z_offset + sys.primes.size()];
    if (c % 2 != 0) u = unit_mul(u, RadicalUnit::from_rational(Rat(-1)));
    if (!(unit_pow(u, n) == target))
        throw std::logic_error("is_nth_power: witness reconstruction failed");
    return u;
}

Int UnitGroup::torsion_order() const {
    if (torsion_cache_) return *torsion_cache_;
    // kernel of the exponent map: x in Z^s with sum x_j e_p(g_j) integral
    std::size_t s = gens_.size(), np = support_.size();
    Int m = 1;
    for (const auto &g : gens_)
        for (const auto &[p, e] : g.exps)
            mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), e.get_den().get_mpz_t());
    IntMatrix a(np, s + np);
    for (std::size_t r = 0; r < np; ++r) {
        for (std::size_t j = 0; j < s; ++j) {
            Rat scaled = gens_[j].exponent_of(support_[r]) * Rat(m);
            a.at(r, j) = scaled.get_num();
        }
        a.at(r, s + r) = m;
    }
    auto sol = solve_diophantine(a, std::vector<Int>(np, Int(0)));
    std::vector<Rat> angles;
    angles.emplace_back(1, 2); // -1 is always in U
    for (const auto &v : sol->kernel_basis) {
        Rat alpha(0);
        for (std::size_t j = 0; j < s; ++j) alpha += Rat(v[j]) * gens_[j].angle.value();
        angles.push_back(Angle(alpha).value());
    }
    Rat g = gcd_rat(angles);
    torsion_cache_ = g.get_den();
    return *torsion_cache_;
}

std::optional<EssentialObstruction> UnitGroup::essential_obstruction() const {
    Int m = torsion_order();
    while (m % 2 == 0) m /= 2;
    if (m == 1) return std::nullopt; // torsion is a 2-power: essential over Q
    Int p = factorize(m).factors.front().first;
    RadicalUnit zeta = RadicalUnit::root_of_unity(Angle(Int(1), p));
    auto cert = contains(zeta);
    if (!cert)
        throw std::logic_error("essential_obstruction: torsion witness not in U");
    return EssentialObstruction{p, *cert};
}

KneserVerdict UnitGroup::kneser_decide() const {
    KneserVerdict v;
    if (auto obs = essential_obstruction()) {
        v.kind = KneserVerdict::Kind::OddRootOfUnity;
        v.odd_prime = obs->odd_prime;
        v.root_cert = obs->root_cert;
        return v;
    }
    // the exceptional case: U contains an element of order 4 (i.e. +-i)
    if (torsion_order() % 4 == 0) {
        RadicalUnit minus_four = RadicalUnit::from_rational(Rat(-4));
        if (auto u = is_nth_power(minus_four, Int(4))) {
            v.kind = KneserVerdict::Kind::MinusFourIsFourthPower;
            v.fourth_root = *u;
            v.fourth_root_cert = *contains(*u);
            return v;
        }
    }
    v.kind = KneserVerdict::Kind::Field;
    return v;
}

TernaryVerdict UnitGroup::cogalois_decide() const {
    auto kv = kneser_decide();
    if (!kv.is_field()) return {Ternary::No, "Q<U> is not a field"};
    const Int exp_d = pres_.structure.exponent();
    if (exp_d % 4 == 0 && torsion_order() % 4 == 0)
        return {Ternary::No, "i lies in U and D has an element of order 4, but i is not rational"};
    if (is_real()) return {Ternary::Yes, "U is real, so Q<U> embeds into R"};
    // order-p roots of unity in L for odd p dividing |D|
    for (const auto &[p, mult] : factorize(pres_.structure.order).factors) {
        if (p == 2) continue;
        if (pres_.structure.order % (p - 1) == 0)
            return {Ternary::Unknown,
                    "cannot decide whether zeta_" + p.get_str() + " lies in Q<U>"};
        // (p-1) does not divide |D| = [L:Q], so zeta_p is not in L
    }
    if (exp_d % 4 == 0)
        return {Ternary::Unknown, "D has an element of order 4; cannot decide i in Q<U>"};
    return {Ternary::Yes, "criterion conditions certified"};
}

TernaryVerdict UnitGroup::abs_cogalois_decide() const {
    auto cg = cogalois_decide();
    if (cg.value == Ternary::No) return {Ternary::No, "not co-Galois: " + cg.reason};
    if (is_real())
        return {Ternary::Yes, "U is real: contained in the largest real co-Galois extension"};
    if (torsion_order() % 4 == 0)
        return {Ternary::No, "i lies in U but not in Q"};
    RadicalUnit minus_three = RadicalUnit::from_rational(Rat(-3));
    if (is_nth_power(minus_three, Int(2)))
        return {Ternary::No, "sqrt(-3) lies in U, so zeta_3 lies in Q<U> but not in Q"};
    return {Ternary::Unknown, "no decidable sub-criterion applies"};
}

std::optional<std::vector<Int>> UnitGroup::class_of(const RadicalUnit &x) const {
    auto cert = contains(x);
    if (!cert) return std::nullopt;
    std::size_t t = pres_.structure.invariant_factors.size();
    std::vector<Int> coord(t, Int(0));
    for (std::size_t j = 0; j < gens_.size(); ++j)
        for (std::size_t r = 0; r < t; ++r)
            coord[r] += cert->exponents[j] * pres_.structure.coordinates[j][r];
    for (std::size_t r = 0; r < t; ++r)
        mpz_fdiv_r(coord[r].get_mpz_t(), coord[r].get_mpz_t(),
                   pres_.structure.invariant_factors[r].get_mpz_t());
    return coord;
}

} // namespace radkit
