#ifndef RADKIT_RATIONAL_HPP
#define RADKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radkit {

using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat &r) { return r.get_num(); }
inline Int den(const Rat &r) { return r.get_den(); }

Rat make_rat(const Int &n, const Int &d);

// Parses "a/b" or "a" (no decimals). Throws std::invalid_argument on junk.
Rat parse_rat(const std::string &s);
std::string rat_to_string(const Rat &r);

bool is_integer(const Rat &r);

// Positive generator of the additive subgroup of Q generated by xs.
// Empty list (and all-zero lists) give 0.
Rat gcd_rat(const std::vector<Rat> &xs);
Rat gcd_rat(const Rat &a, const Rat &b);

// An element of Q/Z, stored reduced in [0, 1).
class Angle {
public:
    Angle() : value_(0) {}
    explicit Angle(const Rat &r) { set(r); }
    Angle(const Int &k, const Int &n) { set(make_rat(k, n)); }

    const Rat &value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_half() const;

    // order of the class in Q/Z = reduced denominator
    Int order() const { return value_.get_den(); }

    Angle operator+(const Angle &o) const;
    Angle operator-(const Angle &o) const;
    Angle operator-() const;
    Angle operator*(const Int &n) const;

    bool operator==(const Angle &o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Angle &o) const;

    std::string to_string() const { return rat_to_string(value_); }

private:
    void set(Rat r);
    Rat value_;
};

struct PrimeFactorization {
    // primes strictly increasing, multiplicities positive
    std::vector<std::pair<Int, unsigned>> factors;
    Int value() const;
};

// Trial-division bound: inputs with |n| >= 2^64 after stripping found
// factors are rejected.
inline constexpr unsigned kFactorBitCap = 64;

bool is_prime(const Int &n);

// Exact factorization of |n|, n != 0. Throws std::domain_error beyond the cap.
PrimeFactorization factorize(const Int &n);

// Product of the distinct prime factors of n >= 1.
Int red(const Int &n);
// red(n), doubled when 4 | n.
Int ered(const Int &n);

// true iff n = 2^a * 3^b with b <= 1 (the cyclotomic fields Q[zeta_n]
// admitting a unitary grading).
bool cyclotomic_has_unitary_grading(const Int &n);

} // namespace radkit

#endif
