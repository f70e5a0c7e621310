#include "radkit/graded_algebra.hpp"

#include <algorithm>
#include <set>

namespace radkit {

std::vector<std::size_t> AlgebraElement::support() const {
    std::vector<std::size_t> s;
    s.reserve(coeffs.size());
    for (const auto &[idx, c] : coeffs) s.push_back(idx);
    return s;
}

GradedAlgebra::GradedAlgebra(UnitGroup group, std::size_t dim_cap)
    : group_(std::move(group)) {
    const auto &factors = group_.presentation().structure.invariant_factors;
    Int order = group_.presentation().structure.order;
    if (order > static_cast<long>(dim_cap))
        throw std::domain_error("GradedAlgebra: dimension cap exceeded");
    dim_ = 1;
    for (const auto &m : factors) {
        radices_.push_back(mpz_get_ui(m.get_mpz_t()));
        dim_ *= radices_.back();
    }
}

std::vector<Int> GradedAlgebra::coords_of(std::size_t idx) const {
    std::vector<Int> c(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
        c[i] = Int(static_cast<unsigned long>(idx % radices_[i]));
        idx /= radices_[i];
    }
    return c;
}

std::size_t GradedAlgebra::index_of(const std::vector<Int> &coords) const {
    if (coords.size() != radices_.size())
        throw std::invalid_argument("index_of: coordinate arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), coords[i].get_mpz_t(), radices_[i]);
        idx = idx * radices_[i] + mpz_get_ui(r.get_mpz_t());
    }
    return idx;
}

std::size_t GradedAlgebra::add_classes(std::size_t d, std::size_t e) const {
    auto cd = coords_of(d), ce = coords_of(e);
    for (std::size_t i = 0; i < cd.size(); ++i) cd[i] += ce[i];
    return index_of(cd);
}

std::size_t GradedAlgebra::negate_class(std::size_t d) const {
    auto c = coords_of(d);
    for (auto &x : c) x = -x;
    return index_of(c);
}

Int GradedAlgebra::class_order(std::size_t d) const {
    auto c = coords_of(d);
    Int ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int m(static_cast<unsigned long>(radices_[i]));
        Int g;
        mpz_gcd(g.get_mpz_t(), c[i].get_mpz_t(), m.get_mpz_t());
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), Int(m / g).get_mpz_t());
    }
    return ord;
}

RadicalUnit GradedAlgebra::representative(std::size_t d) const {
    return group_.presentation().section(coords_of(d));
}

Rat GradedAlgebra::cocycle(std::size_t d, std::size_t e) const {
    auto key = std::make_pair(std::min(d, e), std::max(d, e));
    auto it = cocycle_memo_.find(key);
    if (it != cocycle_memo_.end()) return it->second;
    RadicalUnit prod = unit_mul(representative(d), representative(e));
    RadicalUnit canon = representative(add_classes(d, e));
    Rat a = unit_mul(prod, unit_inv(canon)).rational_value();
    cocycle_memo_.emplace(key, a);
    return a;
}

AlgebraElement algebra_from_rational(const Rat &r) {
    AlgebraElement x;
    if (r != 0) x.coeffs[0] = r;
    return x;
}

AlgebraElement basis_element(std::size_t idx, const Rat &coeff) {
    AlgebraElement x;
    if (coeff != 0) x.coeffs[idx] = coeff;
    return x;
}

AlgebraElement embed(const GradedAlgebra &a, const RadicalUnit &u) {
    auto cls = a.group().class_of(u);
    if (!cls) throw std::domain_error("embed: unit is not in U");
    std::size_t idx = a.index_of(*cls);
    Rat c = unit_mul(u, unit_inv(a.representative(idx))).rational_value();
    return basis_element(idx, c);
}

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y) {
    AlgebraElement r = x;
    for (const auto &[idx, c] : y.coeffs) {
        Rat s = r.coeff(idx) + c;
        if (s == 0)
            r.coeffs.erase(idx);
        else
            r.coeffs[idx] = s;
    }
    return r;
}

AlgebraElement negate(const AlgebraElement &x) {
    AlgebraElement r;
    for (const auto &[idx, c] : x.coeffs) r.coeffs[idx] = -c;
    return r;
}

AlgebraElement sub(const AlgebraElement &x, const AlgebraElement &y) {
    return add(x, negate(y));
}

AlgebraElement scalar_mul(const Rat &c, const AlgebraElement &x) {
    AlgebraElement r;
    if (c == 0) return r;
    for (const auto &[idx, v] : x.coeffs) r.coeffs[idx] = c * v;
    return r;
}

AlgebraElement mul(const GradedAlgebra &a, const AlgebraElement &x, const AlgebraElement &y) {
    AlgebraElement r;
    for (const auto &[d, cd] : x.coeffs)
        for (const auto &[e, ce] : y.coeffs) {
            std::size_t f = a.add_classes(d, e);
            Rat v = r.coeff(f) + cd * ce * a.cocycle(d, e);
            if (v == 0)
                r.coeffs.erase(f);
            else
                r.coeffs[f] = v;
        }
    return r;
}

std::vector<Rat> min_poly(const GradedAlgebra &a, const AlgebraElement &x) {
    std::size_t n = a.dim();
    // reduced rows of the power sequence with their polynomial records
    struct Row {
        std::vector<Rat> vec;
        std::vector<Rat> poly;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    AlgebraElement power = algebra_from_rational(Rat(1));
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rat> v(n, Rat(0));
        for (const auto &[idx, c] : power.coeffs) v[idx] = c;
        std::vector<Rat> poly(k + 1, Rat(0));
        poly[k] = 1;
        for (const auto &row : rows) {
            if (v[row.pivot] == 0) continue;
            Rat f = v[row.pivot];
            for (std::size_t j = 0; j < n; ++j) v[j] -= f * row.vec[j];
            for (std::size_t j = 0; j < row.poly.size(); ++j) poly[j] -= f * row.poly[j];
        }
        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == n) return poly; // first dependence: monic by construction
        Rat inv = Rat(1) / v[pivot];
        for (auto &c : v) c *= inv;
        for (auto &c : poly) c *= inv;
        rows.push_back({std::move(v), std::move(poly), pivot});
        power = mul(a, power, x);
    }
    throw std::logic_error("min_poly: no dependence within dim+1 powers");
}

std::optional<AlgebraElement> invert(const GradedAlgebra &a, const AlgebraElement &x) {
    if (x.is_zero()) throw std::domain_error("invert: zero element");
    auto mp = min_poly(a, x);
    if (mp[0] == 0) return std::nullopt; // x divides zero in a finite-dimensional algebra
    // x * (-1/c0) * (mp[1] + mp[2] x + ... ) = 1
    AlgebraElement acc;
    AlgebraElement power = algebra_from_rational(Rat(1));
    for (std::size_t k = 1; k < mp.size(); ++k) {
        acc = add(acc, scalar_mul(mp[k], power));
        if (k + 1 < mp.size()) power = mul(a, power, x);
    }
    return scalar_mul(-Rat(1) / mp[0], acc);
}

std::pair<AlgebraElement, AlgebraElement>
zero_divisor_witness(const GradedAlgebra &a, const KneserVerdict &verdict) {
    if (verdict.kind == KneserVerdict::Kind::OddRootOfUnity) {
        RadicalUnit zeta_p = RadicalUnit::root_of_unity(Angle(Int(1), verdict.odd_prime));
        AlgebraElement z = embed(a, zeta_p);
        AlgebraElement one = algebra_from_rational(Rat(1));
        AlgebraElement u = sub(one, z);
        AlgebraElement v;
        AlgebraElement power = one;
        for (Int k = 0; k < verdict.odd_prime; ++k) {
            v = add(v, power);
            power = mul(a, power, z);
        }
        return {u, v};
    }
    if (verdict.kind == KneserVerdict::Kind::MinusFourIsFourthPower) {
        AlgebraElement u = embed(a, verdict.fourth_root);
        AlgebraElement u2 = mul(a, u, u);
        AlgebraElement two_u = scalar_mul(Rat(2), u);
        AlgebraElement two = algebra_from_rational(Rat(2));
        return {add(sub(u2, two_u), two), add(add(u2, two_u), two)};
    }
    throw std::domain_error("zero_divisor_witness: verdict is Field");
}

AlgebraElement idempotent_split_check(const GradedAlgebra &a, const RadicalUnit &u) {
    if (!(unit_pow(u, Int(4)) == RadicalUnit::from_rational(Rat(-4))))
        throw std::domain_error("idempotent_split_check: u^4 != -4");
    AlgebraElement x = embed(a, u);
    AlgebraElement x2 = mul(a, x, x);
    AlgebraElement two = algebra_from_rational(Rat(2));
    AlgebraElement f = add(sub(x2, scalar_mul(Rat(2), x)), two); // x^2 - 2x + 2
    AlgebraElement e = scalar_mul(make_rat(Int(1), Int(8)), mul(a, add(x, two), f));
    if (!(mul(a, e, e) == e) || e.is_zero() || e == algebra_from_rational(Rat(1)))
        throw std::logic_error("idempotent_split_check: split element is not a proper idempotent");
    return e;
}

DegreeResult degree_of(const GradedAlgebra &a, const AlgebraElement &x) {
    if (a.group().cogalois_decide().value == Ternary::Yes) {
        const auto &factors = a.presentation().structure.invariant_factors;
        std::vector<std::vector<Angle>> gens;
        for (const auto &[idx, c] : x.coeffs) {
            auto coords = a.coords_of(idx);
            std::vector<Angle> v;
            for (std::size_t i = 0; i < coords.size(); ++i)
                v.push_back(Angle(coords[i], factors[i]));
            gens.push_back(std::move(v));
        }
        auto st = quotient_structure(gens, factors.size());
        return {st.order, DegreeMethod::SupportFormula};
    }
    auto mp = min_poly(a, x);
    return {Int(static_cast<unsigned long>(mp.size() - 1)), DegreeMethod::MinPoly};
}

std::vector<SubgroupInfo> subfield_lattice(const GradedAlgebra &a) {
    if (a.dim() > kSubfieldLatticeCap)
        throw std::domain_error("subfield_lattice: dimension cap exceeded");
    std::size_t n = a.dim();

    auto closure = [&](std::vector<std::size_t> gens) {
        std::set<std::size_t> elems{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> snapshot(elems.begin(), elems.end());
            for (std::size_t e : snapshot)
                for (std::size_t g : gens)
                    if (elems.insert(a.add_classes(e, g)).second) grew = true;
        }
        return std::vector<std::size_t>(elems.begin(), elems.end());
    };

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> found; // elements -> gens
    std::vector<std::vector<std::size_t>> queue;
    found[{0}] = {};
    queue.push_back({});
    while (!queue.empty()) {
        auto gens = queue.back();
        queue.pop_back();
        auto base = closure(gens);
        std::set<std::size_t> in(base.begin(), base.end());
        for (std::size_t g = 1; g < n; ++g) {
            if (in.count(g)) continue;
            auto extended = gens;
            extended.push_back(g);
            auto elems = closure(extended);
            if (found.emplace(elems, extended).second) queue.push_back(extended);
        }
    }
    std::vector<SubgroupInfo> out;
    for (const auto &[elems, gens] : found) {
        SubgroupInfo info;
        info.order = Int(static_cast<unsigned long>(elems.size()));
        info.elements = elems;
        for (std::size_t g : gens) info.generator_coords.push_back(a.coords_of(g));
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupInfo &x, const SubgroupInfo &y) {
        return x.order < y.order || (x.order == y.order && x.elements < y.elements);
    });
    return out;
}

BigComplex complex_eval(const RadicalUnit &u, mpfr_prec_t precision) {
    return eval_magnitude_angle(u.exps, u.angle.value(), precision);
}

BigComplex complex_eval(const GradedAlgebra &a, const AlgebraElement &x,
                        mpfr_prec_t precision) {
    BigComplex acc{BigFloat(precision), BigFloat(precision)};
    for (const auto &[idx, c] : x.coeffs) {
        BigComplex term = complex_eval(a.representative(idx), precision);
        BigFloat cf = BigFloat::from_rat(c, precision);
        acc.re = acc.re + term.re * cf;
        acc.im = acc.im + term.im * cf;
    }
    return acc;
}

std::string poly_to_string(const std::vector<Rat> &poly) {
    std::string out = "[";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(poly[i]);
    }
    return out + "]";
}

} // namespace radkit
