#include "radkit/rational.hpp"

namespace radkit {

Rat make_rat(const Int &n, const Int &d) {
    if (d == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rat(n, d);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat &r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat &r) { return r.get_den() == 1; }

Rat gcd_rat(const Rat &a, const Rat &b) {
    // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s), then reduce
    Int n, d;
    mpz_gcd(n.get_mpz_t(), Int(a.get_num() * b.get_den()).get_mpz_t(),
            Int(b.get_num() * a.get_den()).get_mpz_t());
    d = a.get_den() * b.get_den();
    return make_rat(n, d);
}

Rat gcd_rat(const std::vector<Rat> &xs) {
    Rat g(0);
    for (const auto &x : xs) g = gcd_rat(g, x);
    return g;
}

void Angle::set(Rat r) {
    r.canonicalize();
    Int q, rem;
    mpz_fdiv_r(rem.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    value_ = make_rat(rem, r.get_den());
}

bool Angle::is_half() const { return value_.get_num() == 1 && value_.get_den() == 2; }

Angle Angle::operator+(const Angle &o) const { return Angle(value_ + o.value_); }
Angle Angle::operator-(const Angle &o) const { return Angle(value_ - o.value_); }
Angle Angle::operator-() const { return Angle(-value_); }
Angle Angle::operator*(const Int &n) const { return Angle(value_ * Rat(n)); }

std::strong_ordering Angle::operator<=>(const Angle &o) const {
    int c = cmp(value_, o.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int PrimeFactorization::value() const {
    Int v = 1;
    for (const auto &[p, m] : factors) {
        Int pm;
        mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), m);
        v *= pm;
    }
    return v;
}

bool is_prime(const Int &n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PrimeFactorization factorize(const Int &n) {
    if (n == 0) throw std::domain_error("factorize: zero");
    Int m = abs(n);
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > kFactorBitCap)
        throw std::domain_error("factorize: input exceeds trial-division cap");
    PrimeFactorization f;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        f.factors.emplace_back(p, mult);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

Int red(const Int &n) {
    if (n < 1) throw std::domain_error("red: n must be positive");
    Int r = 1;
    for (const auto &[p, m] : factorize(n).factors) r *= p;
    return r;
}

Int ered(const Int &n) {
    Int r = red(n);
    if (n % 4 == 0) r *= 2;
    return r;
}

bool cyclotomic_has_unitary_grading(const Int &n) {
    if (n < 1) throw std::domain_error("cyclotomic_has_unitary_grading: n must be positive");
    Int m = n;
    while (m % 2 == 0) m /= 2;
    if (m % 3 == 0) m /= 3;
    return m == 1;
}

} // namespace radkit
