#ifndef RADKIT_NUMERIC_HPP
#define RADKIT_NUMERIC_HPP

#include "radkit/rational.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace radkit {

// Thin RAII wrapper over mpfr_t at a fixed working precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) : prec_(prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat &o) : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat &&o) noexcept : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_swap(v_, o.v_); }
    BigFloat &operator=(BigFloat o) { std::swap(prec_, o.prec_); mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rat(const Rat &r, mpfr_prec_t prec);
    static BigFloat from_int(long n, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat operator+(const BigFloat &o) const;
    BigFloat operator-(const BigFloat &o) const;
    BigFloat operator*(const BigFloat &o) const;
    BigFloat operator/(const BigFloat &o) const;
    BigFloat operator-() const;

    BigFloat sqrt() const;
    BigFloat abs() const;

    int cmp(const BigFloat &o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat &o) const { return cmp(o) < 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(std::size_t digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    BigComplex operator+(const BigComplex &o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex &o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigFloat norm() const { return re * re + im * im; }
    BigFloat abs() const { return norm().sqrt(); }
};

// prod p^{e_p} as exp(sum e_p ln p), rotated by e^{2 pi i t}
BigComplex eval_magnitude_angle(const std::vector<std::pair<Int, Rat>> &exps,
                                const Rat &turns, mpfr_prec_t prec);

// Singular values of a real matrix by one-sided Jacobi, descending order.
std::vector<BigFloat> jacobi_singular_values(std::vector<std::vector<BigFloat>> m,
                                             mpfr_prec_t prec);

} // namespace radkit

#endif
