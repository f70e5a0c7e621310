#ifndef RADKIT_RADICAL_GROUP_HPP
#define RADKIT_RADICAL_GROUP_HPP

#include "radkit/rational.hpp"
#include "radkit/zlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radkit {

// An element of C^x of the form e^{2 pi i t} * prod p^{e_p}: a torsion angle
// together with a finitely supported rational exponent vector on the primes.
struct RadicalUnit {
    Angle angle;
    std::vector<std::pair<Int, Rat>> exps; // primes strictly increasing, exponents nonzero

    static RadicalUnit one() { return {}; }
    static RadicalUnit from_rational(const Rat &r);
    static RadicalUnit root_of_unity(const Angle &t);
    static RadicalUnit prime_power(const Int &p, const Rat &e);

    Rat exponent_of(const Int &p) const;
    bool is_one() const { return angle.is_zero() && exps.empty(); }
    // rational iff angle in {0, 1/2} and all exponents integral
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    // interchange form: zeta(<k>/<n>)*p^(<a>/<b>)*..., "-" for angle 1/2
    std::string to_string() const;

    bool operator==(const RadicalUnit &) const = default;
};

RadicalUnit unit_mul(const RadicalUnit &a, const RadicalUnit &b);
RadicalUnit unit_pow(const RadicalUnit &a, const Int &n);
RadicalUnit unit_inv(const RadicalUnit &a);
inline RadicalUnit operator*(const RadicalUnit &a, const RadicalUnit &b) {
    return unit_mul(a, b);
}

// x = rational_part * prod generators[j]^exponents[j], exactly.
struct MembershipCertificate {
    std::vector<Int> exponents;
    Rat rational_part;
};

struct EssentialObstruction {
    Int odd_prime; // zeta_p in U, p odd
    MembershipCertificate root_cert;
};

struct KneserVerdict {
    enum class Kind { Field, OddRootOfUnity, MinusFourIsFourthPower };
    Kind kind = Kind::Field;
    // OddRootOfUnity
    Int odd_prime;
    MembershipCertificate root_cert;
    // MinusFourIsFourthPower: fourth_root^4 = -4, fourth_root in U
    RadicalUnit fourth_root;
    MembershipCertificate fourth_root_cert;

    bool is_field() const { return kind == Kind::Field; }
};

enum class Ternary { Yes, No, Unknown };

struct TernaryVerdict {
    Ternary value;
    std::string reason;
};

// Invariant-factor presentation of D = U/Q^x with a canonical section.
struct QuotientPresentation {
    GroupStructure structure;
    // basis_units[i] has class of exact order structure.invariant_factors[i]
    std::vector<RadicalUnit> basis_units;

    std::size_t rank() const { return structure.invariant_factors.size(); }
    Int order() const { return structure.order; }

    // canonical representative of the coordinate tuple (0 <= k_i < m_i)
    RadicalUnit section(const std::vector<Int> &coords) const;
};

// A finitely generated extension Q^x -> U inside C^x, stored by generators.
// The presentation of D = U/Q^x is computed at construction and cached;
// the object is immutable afterwards.
class UnitGroup {
public:
    explicit UnitGroup(std::vector<RadicalUnit> generators);

    const std::vector<RadicalUnit> &generators() const { return gens_; }
    const QuotientPresentation &presentation() const { return pres_; }

    // all generator angles in {0, 1/2}, i.e. U subset of R^x
    bool is_real() const;

    std::optional<MembershipCertificate> contains(const RadicalUnit &x) const;

    // witness u in U with u^n = target, if any
    std::optional<RadicalUnit> is_nth_power(const RadicalUnit &target, const Int &n) const;

    // m with U intersect mu_infinity = mu_m
    Int torsion_order() const;

    bool is_essential() const { return !essential_obstruction().has_value(); }
    std::optional<EssentialObstruction> essential_obstruction() const;

    KneserVerdict kneser_decide() const;

    TernaryVerdict cogalois_decide() const;
    TernaryVerdict abs_cogalois_decide() const;

    // coordinates of the class of x in the invariant-factor basis
    std::optional<std::vector<Int>> class_of(const RadicalUnit &x) const;

private:
    std::vector<RadicalUnit> gens_;
    std::vector<Int> support_; // primes appearing in any generator
    QuotientPresentation pres_;

    mutable std::optional<Int> torsion_cache_;

    void build_presentation();
};

} // namespace radkit

#endif
