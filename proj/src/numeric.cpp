#include "radkit/numeric.hpp"

#include <algorithm>

namespace radkit {

BigFloat BigFloat::from_rat(const Rat &r, mpfr_prec_t prec) {
    BigFloat f(prec);
    mpfr_set_q(f.v_, r.get_mpq_t(), MPFR_RNDN);
    return f;
}

BigFloat BigFloat::from_int(long n, mpfr_prec_t prec) {
    BigFloat f(prec);
    mpfr_set_si(f.v_, n, MPFR_RNDN);
    return f;
}

BigFloat BigFloat::operator+(const BigFloat &o) const {
    BigFloat r(std::max(prec_, o.prec_));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat &o) const {
    BigFloat r(std::max(prec_, o.prec_));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat &o) const {
    BigFloat r(std::max(prec_, o.prec_));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat &o) const {
    BigFloat r(std::max(prec_, o.prec_));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(std::size_t digits) const {
    char *s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigComplex eval_magnitude_angle(const std::vector<std::pair<Int, Rat>> &exps,
                                const Rat &turns, mpfr_prec_t prec) {
    // guard bits for the ln/exp chain
    mpfr_prec_t wp = prec + 32;
    mpfr_t acc, t, mag;
    mpfr_inits2(wp, acc, t, mag, nullptr);
    mpfr_set_zero(acc, 1);
    for (const auto &[p, e] : exps) {
        mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
        mpfr_log(t, t, MPFR_RNDN);
        mpfr_t ef;
        mpfr_init2(ef, wp);
        mpfr_set_q(ef, e.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(t, t, ef, MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
        mpfr_clear(ef);
    }
    mpfr_exp(mag, acc, MPFR_RNDN);

    mpfr_t theta, c, s;
    mpfr_inits2(wp, theta, c, s, nullptr);
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_ui(theta, theta, 2, MPFR_RNDN);
    mpfr_set_q(t, turns.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(theta, theta, t, MPFR_RNDN);
    mpfr_sin_cos(s, c, theta, MPFR_RNDN);

    BigComplex z{BigFloat(prec), BigFloat(prec)};
    mpfr_mul(c, c, mag, MPFR_RNDN);
    mpfr_mul(s, s, mag, MPFR_RNDN);
    mpfr_set(z.re.raw(), c, MPFR_RNDN);
    mpfr_set(z.im.raw(), s, MPFR_RNDN);
    mpfr_clears(acc, t, mag, theta, c, s, nullptr);
    return z;
}

std::vector<BigFloat> jacobi_singular_values(std::vector<std::vector<BigFloat>> m,
                                             mpfr_prec_t prec) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    auto col_dot = [&](std::size_t i, std::size_t j) {
        BigFloat acc(prec);
        for (std::size_t r = 0; r < rows; ++r) acc = acc + m[r][i] * m[r][j];
        return acc;
    };
    // convergence threshold ~ 2^-(prec-8) relative
    BigFloat eps = BigFloat::from_int(1, prec);
    for (mpfr_prec_t k = 0; k + 8 < prec; ++k)
        eps = eps / BigFloat::from_int(2, prec);

    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < cols; ++i)
            for (std::size_t j = i + 1; j < cols; ++j) {
                BigFloat a = col_dot(i, i), b = col_dot(j, j), c = col_dot(i, j);
                BigFloat bound = (a * b).sqrt() * eps;
                if (!(bound < c.abs())) continue;
                rotated = true;
                BigFloat two = BigFloat::from_int(2, prec);
                BigFloat zeta = (b - a) / (two * c);
                BigFloat one = BigFloat::from_int(1, prec);
                BigFloat t = one / (zeta.abs() + (one + zeta * zeta).sqrt());
                if (zeta < BigFloat(prec)) t = -t;
                BigFloat cs = one / (one + t * t).sqrt();
                BigFloat sn = cs * t;
                for (std::size_t r = 0; r < rows; ++r) {
                    BigFloat mi = m[r][i], mj = m[r][j];
                    m[r][i] = cs * mi - sn * mj;
                    m[r][j] = sn * mi + cs * mj;
                }
            }
        if (!rotated) break;
    }
    std::vector<BigFloat> sv;
    for (std::size_t j = 0; j < cols; ++j) sv.push_back(col_dot(j, j).sqrt());
    std::sort(sv.begin(), sv.end(), [](const BigFloat &x, const BigFloat &y) { return y < x; });
    return sv;
}

} // namespace radkit
