#include "radkit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace radkit {

namespace {

Rat rat_pow(const Rat &base, const Int &e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw std::domain_error("rat_pow: zero to a negative power");
    }
    Int a = abs(e);
    if (!a.fits_ulong_p()) throw std::domain_error("rat_pow: exponent too large");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num(base).get_mpz_t(), a.get_ui());
    mpz_pow_ui(d.get_mpz_t(), den(base).get_mpz_t(), a.get_ui());
    return e > 0 ? make_rat(n, d) : make_rat(d, n);
}

// Canonical split: half turns and integral prime powers migrate into the
// coefficient, so units carry only genuinely irrational content.
Term normalize_term(Rat c, RadicalUnit u) {
    if (u.angle.is_half()) {
        c = -c;
        u.angle = Angle();
    }
    std::vector<std::pair<Int, Rat>> kept;
    for (const auto &[p, e] : u.exps) {
        if (is_integer(e))
            c *= rat_pow(Rat(p), num(e));
        else
            kept.push_back({p, e});
    }
    u.exps = std::move(kept);
    return {c, u};
}

void append_normalized(TermList &out, const Rat &c, const RadicalUnit &u) {
    Term t = normalize_term(c, u);
    if (t.coeff != 0) out.push_back(std::move(t));
}

TermList canonicalize(TermList terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term &a, const Term &b) { return unit_less(a.unit, b.unit); });
    TermList out;
    for (auto &t : terms) {
        if (!out.empty() && out.back().unit == t.unit)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term &t) { return t.coeff == 0; }),
              out.end());
    return out;
}

TermList list_mul(const TermList &a, const TermList &b) {
    TermList out;
    for (const auto &x : a)
        for (const auto &y : b)
            append_normalized(out, x.coeff * y.coeff, unit_mul(x.unit, y.unit));
    return canonicalize(std::move(out));
}

// sign * prod p^{e_p/k} with the k-th real root of |r|
RadicalUnit real_root_unit(const Rat &r, const Int &k) {
    RadicalUnit u;
    if (r < 0) u.angle = Angle(Rat(1, 2));
    std::vector<std::pair<Int, Rat>> exps;
    for (const auto &[p, m] : factorize(num(r)).factors)
        exps.push_back({p, make_rat(Int(m), k)});
    for (const auto &[p, m] : factorize(den(r)).factors)
        exps.push_back({p, make_rat(-Int(m), k)});
    std::sort(exps.begin(), exps.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    u.exps = std::move(exps);
    return u;
}

class Parser {
public:
    explicit Parser(const std::string &s) : s_(s) {}

    TermList run() {
        TermList r = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    struct Value {
        TermList terms;
        std::optional<Int> prime_literal; // set when the base was a bare prime
    };

    const std::string &s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw ExprError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    // INT ('/' INT)?
    Rat parse_rational() {
        Int n = parse_int();
        if (accept('/')) {
            Int d = parse_int();
            if (d == 0) fail("zero denominator");
            return make_rat(n, d);
        }
        return Rat(n);
    }

    Rat parse_signed_rational() {
        bool neg = accept('-');
        Rat r = parse_rational();
        return neg ? -r : r;
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    TermList parse_expr() {
        bool neg = accept('-');
        TermList acc = parse_term();
        if (neg)
            for (auto &t : acc) t.coeff = -t.coeff;
        for (;;) {
            if (accept('+')) {
                TermList t = parse_term();
                acc.insert(acc.end(), t.begin(), t.end());
            } else if (accept('-')) {
                for (auto &t : parse_term()) acc.push_back({-t.coeff, t.unit});
            } else {
                break;
            }
            acc = canonicalize(std::move(acc));
        }
        return canonicalize(std::move(acc));
    }

    TermList parse_term() {
        TermList acc = parse_factor().terms;
        while (accept('*')) acc = list_mul(acc, parse_factor().terms);
        return acc;
    }

    Value parse_factor() {
        Value base = parse_base();
        if (!accept('^')) return base;
        if (accept('(')) {
            std::size_t at = pos_;
            Rat e = parse_signed_rational();
            expect(')');
            if (is_integer(e)) return {pow_terms(base.terms, num(e), at), {}};
            if (!base.prime_literal)
                throw ExprError("fractional exponents require a prime base", at);
            TermList out;
            append_normalized(out, Rat(1), RadicalUnit::prime_power(*base.prime_literal, e));
            return {canonicalize(std::move(out)), {}};
        }
        std::size_t at = pos_;
        bool neg = accept('-');
        Int e = parse_int();
        if (neg) e = -e;
        return {pow_terms(base.terms, e, at), {}};
    }

    TermList pow_terms(const TermList &base, const Int &e, std::size_t at) {
        if (base.empty()) {
            if (e > 0) return {};
            throw ExprError("zero raised to a nonpositive power", at);
        }
        if (base.size() == 1) {
            TermList out;
            append_normalized(out, rat_pow(base[0].coeff, e), unit_pow(base[0].unit, e));
            return canonicalize(std::move(out));
        }
        if (e < 0) throw ExprError("negative exponent on a sum", at);
        if (e > 64) throw ExprError("sum exponent exceeds the cap of 64", at);
        TermList acc;
        append_normalized(acc, Rat(1), RadicalUnit::one());
        for (Int i = 0; i < e; ++i) acc = list_mul(acc, base);
        return acc;
    }

    Value parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept('(')) {
            TermList inner = parse_expr();
            expect(')');
            return {inner, {}};
        }
        if (peek_digit()) {
            Int n = parse_int();
            std::optional<Int> prime;
            Rat value(n);
            if (accept('/')) {
                Int d = parse_int();
                if (d == 0) fail("zero denominator");
                value = make_rat(n, d);
            } else if (is_prime(n)) {
                prime = n;
            }
            TermList out;
            append_normalized(out, value, RadicalUnit::one());
            return {out, prime};
        }
        std::size_t at = pos_;
        std::string id = parse_ident();
        if (id == "i") {
            TermList out;
            append_normalized(out, Rat(1), RadicalUnit::root_of_unity(Angle(Rat(1, 4))));
            return {out, {}};
        }
        if (id == "zeta") {
            expect('(');
            Int n = parse_int();
            Rat turns;
            if (accept('/')) {
                Int d = parse_int();
                if (d == 0) fail("zero denominator");
                turns = make_rat(n, d);
            } else {
                if (n == 0) fail("zeta(0) is undefined");
                turns = make_rat(Int(1), n);
            }
            expect(')');
            TermList out;
            append_normalized(out, Rat(1), RadicalUnit::root_of_unity(Angle(turns)));
            return {out, {}};
        }
        if (id == "sqrt") {
            expect('(');
            Rat r = parse_signed_rational();
            expect(')');
            TermList out;
            if (r != 0) {
                RadicalUnit u = real_root_unit(r < 0 ? -r : r, Int(2));
                if (r < 0) u = unit_mul(u, RadicalUnit::root_of_unity(Angle(Rat(1, 4))));
                append_normalized(out, Rat(1), u);
            }
            return {out, {}};
        }
        if (id == "root") {
            expect('(');
            std::size_t at_k = pos_;
            Int k = parse_int();
            if (k < 1) throw ExprError("root index must be positive", at_k);
            expect(',');
            std::size_t at_r = pos_;
            Rat r = parse_signed_rational();
            expect(')');
            if (r < 0 && k % 2 == 0)
                throw ExprError("even root of a negative rational", at_r);
            TermList out;
            if (r != 0) append_normalized(out, Rat(1), real_root_unit(r, k));
            return {out, {}};
        }
        pos_ = at;
        fail("unexpected token");
    }
};

} // namespace

bool unit_less(const RadicalUnit &a, const RadicalUnit &b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    return std::lexicographical_compare(
        a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end(),
        [](const auto &x, const auto &y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

TermList parse_expression(const std::string &input) {
    return Parser(input).run();
}

std::string terms_to_string(const TermList &terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term &t = terms[i];
        Rat mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (i == 0)
            out += t.coeff < 0 ? "-" : "";
        else
            out += t.coeff < 0 ? " - " : " + ";
        if (t.unit.is_one()) {
            out += rat_to_string(mag);
        } else {
            if (mag != 1) out += rat_to_string(mag) + "*";
            out += t.unit.to_string();
        }
    }
    return out;
}

RadicalUnit parse_unit(const std::string &input) {
    TermList terms = parse_expression(input);
    if (terms.size() != 1)
        throw ExprError("a generator must be a single product term", 0);
    return unit_mul(RadicalUnit::from_rational(terms[0].coeff), terms[0].unit);
}

std::vector<RadicalUnit> parse_generators(const std::string &input) {
    std::vector<RadicalUnit> out;
    std::size_t start = 0;
    while (start <= input.size()) {
        std::size_t end = input.find(';', start);
        if (end == std::string::npos) end = input.size();
        std::string piece = input.substr(start, end - start);
        std::size_t a = piece.find_first_not_of(" \t");
        if (a != std::string::npos) {
            std::size_t b = piece.find_last_not_of(" \t");
            out.push_back(parse_unit(piece.substr(a, b - a + 1)));
        }
        start = end + 1;
    }
    if (out.empty()) throw ExprError("empty generator list", 0);
    return out;
}

} // namespace radkit
