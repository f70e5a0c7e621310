#include "radkit/expr.hpp"
#include "radkit/finite_fields.hpp"
#include "radkit/graded_algebra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstring>
#include <iostream>
#include <random>
#include <string>

using nlohmann::json;
using namespace radkit;

namespace {

struct Output {
    bool as_json = false;
    json j;

    explicit Output(const std::string &command) { j["command"] = command; }

    int ok(const std::string &human) {
        j["status"] = "ok";
        emit(human);
        return 0;
    }
    int unknown(const std::string &human) {
        j["status"] = "unknown";
        emit(human);
        return 3;
    }
    void emit(const std::string &human) {
        if (as_json)
            std::cout << j.dump() << "\n";
        else
            std::cout << human << "\n";
    }
};

std::string elem_str(const GradedAlgebra &a, const AlgebraElement &x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[idx, c] : x.coeffs) {
        if (!first) out += " + ";
        first = false;
        RadicalUnit rep = a.representative(idx);
        if (rep.is_one())
            out += rat_to_string(c);
        else if (c == 1)
            out += rep.to_string();
        else
            out += rat_to_string(c) + "*" + rep.to_string();
    }
    return out;
}

json cert_json(const MembershipCertificate &c) {
    json j;
    j["rational_part"] = rat_to_string(c.rational_part);
    j["exponents"] = json::array();
    for (const auto &e : c.exponents) j["exponents"].push_back(e.get_str());
    return j;
}

UnitGroup group_from(const std::string &gens_text) {
    return UnitGroup(parse_generators(gens_text));
}

struct ExprAlgebra {
    GradedAlgebra alg;
    AlgebraElement elem;
};

ExprAlgebra algebra_from_expr(const std::string &text) {
    TermList terms = parse_expression(text);
    std::vector<RadicalUnit> gens;
    for (const auto &t : terms)
        if (!t.unit.is_one()) gens.push_back(t.unit);
    if (gens.empty()) gens.push_back(RadicalUnit::one());
    GradedAlgebra alg{UnitGroup(std::move(gens))};
    AlgebraElement x;
    for (const auto &t : terms)
        x = add(x, scalar_mul(t.coeff, embed(alg, t.unit)));
    return {std::move(alg), std::move(x)};
}

std::string factors_str(const GroupStructure &s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.invariant_factors.size(); ++i)
        out += (i ? "," : "") + s.invariant_factors[i].get_str();
    return out + "]";
}

// seeded inversion smoke run for a certified field
void inversion_smoke(const GradedAlgebra &a, std::uint64_t seed, int rounds) {
    if (a.dim() > 256) return;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> cls(0, a.dim() - 1);
    for (int r = 0; r < rounds; ++r) {
        AlgebraElement x;
        for (int t = 0; t < 3; ++t) {
            int c = coeff(rng);
            if (c) x = add(x, basis_element(cls(rng), Rat(c)));
        }
        if (x.is_zero()) continue;
        auto y = invert(a, x);
        if (!y) throw std::logic_error("inversion failed in a certified field");
        if (!(mul(a, x, *y) == algebra_from_rational(Rat(1))))
            throw std::logic_error("inverse verification failed");
    }
}

int run(int argc, char **argv) {
    CLI::App app{"Exact computation in universal unitarily graded algebras over Q"};
    app.require_subcommand(1);
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for sampled smoke checks");

    std::string expr_text, gens_text;
    unsigned long long q_arg = 0, n_arg = 0;
    std::uint64_t qmax = 31;
    unsigned nmax = 8;
    unsigned prec = 128;

    auto *c_degree = app.add_subcommand("degree", "degree of an algebraic expression over Q");
    c_degree->add_option("expr", expr_text)->required();
    auto *c_minpoly = app.add_subcommand("minpoly", "minimal polynomial over Q");
    c_minpoly->add_option("expr", expr_text)->required();
    auto *c_isfield = app.add_subcommand("is-field", "Kneser field criterion for Q<U>");
    c_isfield->add_option("--gens", gens_text)->required();
    auto *c_essential = app.add_subcommand("essential", "is Q^x -> U essential");
    c_essential->add_option("--gens", gens_text)->required();
    auto *c_cogalois = app.add_subcommand("cogalois", "co-Galois verdict");
    c_cogalois->add_option("--gens", gens_text)->required();
    auto *c_abscg = app.add_subcommand("abs-cogalois", "absolutely co-Galois verdict");
    c_abscg->add_option("--gens", gens_text)->required();
    auto *c_subfields = app.add_subcommand("subfields", "subgroup lattice of the grading group");
    c_subfields->add_option("--gens", gens_text)->required();
    auto *c_member = app.add_subcommand("member", "membership x in U with certificate");
    c_member->add_option("--gens", gens_text)->required();
    c_member->add_option("expr", expr_text)->required();
    auto *c_sweep = app.add_subcommand("ff-sweep", "finite-field verification sweep");
    c_sweep->add_option("--qmax", qmax);
    c_sweep->add_option("--nmax", nmax);
    auto *c_ffg = app.add_subcommand("ff-grading", "unitary grading of F_{q^n} over F_q");
    c_ffg->add_option("q", q_arg)->required();
    c_ffg->add_option("n", n_arg)->required();
    auto *c_cyc = app.add_subcommand("cyclotomic", "does Q[zeta_n] admit a unitary grading");
    c_cyc->add_option("n", n_arg)->required();
    auto *c_eval = app.add_subcommand("eval", "numeric evaluation of an expression");
    c_eval->add_option("expr", expr_text)->required();
    c_eval->add_option("--prec", prec);

    CLI11_PARSE(app, argc, argv);
    CLI::App *sub = app.get_subcommands().front();
    Output out(sub->get_name());
    out.as_json = as_json;

    if (sub == c_degree) {
        ExprAlgebra ea = algebra_from_expr(expr_text);
        DegreeResult r = degree_of(ea.alg, ea.elem);
        std::string method = r.method == DegreeMethod::SupportFormula ? "SupportFormula" : "MinPoly";
        out.j["result"] = r.degree.get_str();
        out.j["method"] = method;
        std::string human = "degree " + r.degree.get_str() + " (method: " + method + ")";
        if (r.method == DegreeMethod::MinPoly)
            human += "\nnote: unit group not certified co-Galois; degree taken from the minimal polynomial";
        return out.ok(human);
    }
    if (sub == c_minpoly) {
        ExprAlgebra ea = algebra_from_expr(expr_text);
        std::vector<Rat> mp = min_poly(ea.alg, ea.elem);
        json coeffs = json::array();
        for (const auto &c : mp) coeffs.push_back(rat_to_string(c));
        out.j["result"] = coeffs;
        return out.ok("minpoly " + poly_to_string(mp));
    }
    if (sub == c_isfield) {
        UnitGroup u = group_from(gens_text);
        KneserVerdict v = u.kneser_decide();
        if (v.is_field()) {
            out.j["result"] = "field";
            GradedAlgebra a(u);
            inversion_smoke(a, seed, 5);
            return out.ok("Q<U> is a field (|D| = " + a.presentation().order().get_str() + ")");
        }
        GradedAlgebra a(u);
        auto [za, zb] = zero_divisor_witness(a, v);
        json w;
        std::string human;
        if (v.kind == KneserVerdict::Kind::OddRootOfUnity) {
            w["reason"] = "odd root of unity";
            w["prime"] = v.odd_prime.get_str();
            w["certificate"] = cert_json(v.root_cert);
            human = "not a field: zeta_" + v.odd_prime.get_str() + " lies in U";
        } else {
            w["reason"] = "-4 is a fourth power in U";
            w["fourth_root"] = v.fourth_root.to_string();
            w["certificate"] = cert_json(v.fourth_root_cert);
            human = "not a field: u = " + v.fourth_root.to_string() + " satisfies u^4 = -4";
        }
        w["zero_divisors"] = {elem_str(a, za), elem_str(a, zb)};
        out.j["result"] = "not-a-field";
        out.j["witness"] = w;
        human += "\nzero divisors: (" + elem_str(a, za) + ") * (" + elem_str(a, zb) + ") = 0";
        return out.ok(human);
    }
    if (sub == c_essential) {
        UnitGroup u = group_from(gens_text);
        auto obs = u.essential_obstruction();
        if (!obs) {
            out.j["result"] = true;
            return out.ok("essential (torsion order " + u.torsion_order().get_str() + ")");
        }
        out.j["result"] = false;
        out.j["witness"] = {{"odd_prime", obs->odd_prime.get_str()},
                            {"certificate", cert_json(obs->root_cert)}};
        return out.ok("not essential: zeta_" + obs->odd_prime.get_str() + " lies in U");
    }
    if (sub == c_cogalois || sub == c_abscg) {
        UnitGroup u = group_from(gens_text);
        TernaryVerdict v = sub == c_cogalois ? u.cogalois_decide() : u.abs_cogalois_decide();
        out.j["result"] = v.value == Ternary::Yes ? "yes" : v.value == Ternary::No ? "no" : "unknown";
        out.j["witness"] = {{"reason", v.reason}};
        std::string human = std::string(out.j["result"].get<std::string>()) + " (" + v.reason + ")";
        return v.value == Ternary::Unknown ? out.unknown(human) : out.ok(human);
    }
    if (sub == c_subfields) {
        GradedAlgebra a{group_from(gens_text)};
        auto subs = subfield_lattice(a);
        json list = json::array();
        std::string human = std::to_string(subs.size()) + " subgroups of D (factors " +
                            factors_str(a.presentation().structure) + "):";
        for (const auto &s : subs) {
            json gens = json::array();
            std::string gstr;
            for (const auto &g : s.generator_coords) {
                std::string one = "(";
                for (std::size_t i = 0; i < g.size(); ++i) one += (i ? "," : "") + g[i].get_str();
                one += ")";
                gens.push_back(one);
                gstr += (gstr.empty() ? "" : " ") + one;
            }
            list.push_back({{"order", s.order.get_str()}, {"generators", gens}});
            human += "\n  order " + s.order.get_str() + (gstr.empty() ? "" : ": " + gstr);
        }
        out.j["result"] = list;
        return out.ok(human);
    }
    if (sub == c_member) {
        UnitGroup u = group_from(gens_text);
        RadicalUnit x = parse_unit(expr_text);
        auto cert = u.contains(x);
        if (!cert) {
            out.j["result"] = false;
            return out.ok("not a member of U");
        }
        out.j["result"] = true;
        out.j["witness"] = cert_json(*cert);
        json glist = json::array();
        std::string human = "member: x = " + rat_to_string(cert->rational_part);
        for (std::size_t i = 0; i < cert->exponents.size(); ++i) {
            glist.push_back(u.generators()[i].to_string());
            human += " * (" + u.generators()[i].to_string() + ")^" + cert->exponents[i].get_str();
        }
        out.j["witness"]["generators"] = glist;
        return out.ok(human);
    }
    if (sub == c_sweep) {
        ff::SweepCaps caps;
        caps.q_max = qmax;
        caps.n_max = nmax;
        auto records = ff::sweep(caps);
        json list = json::array();
        std::string human;
        for (const auto &r : records) {
            json rec = {{"q", r.q},         {"n", r.n},       {"ered", r.ered},
                        {"grading_exists", r.grading_exists}, {"mu_n_L", r.mu_n_L},
                        {"mu_n_K", r.mu_n_K}, {"h1", r.h1},   {"h0", r.h0}};
            rec["witness_a"] = r.witness_a ? json(*r.witness_a) : json(nullptr);
            rec["uprime_index"] = r.uprime_index ? json(*r.uprime_index) : json(nullptr);
            list.push_back(rec);
            human += "q=" + std::to_string(r.q) + " n=" + std::to_string(r.n) +
                     " ered=" + std::to_string(r.ered) +
                     " grading=" + (r.grading_exists ? "yes" : "no") +
                     (r.witness_a ? " a=" + std::to_string(*r.witness_a) : "") +
                     " |mu_n(L)|=" + std::to_string(r.mu_n_L) +
                     " |mu_n(K)|=" + std::to_string(r.mu_n_K) + " h1=" + std::to_string(r.h1) +
                     " h0=" + std::to_string(r.h0) +
                     (r.uprime_index ? " [U':K^x]=" + std::to_string(*r.uprime_index) : "") + "\n";
        }
        if (!human.empty()) human.pop_back();
        out.j["result"] = list;
        return out.ok(human);
    }
    if (sub == c_ffg) {
        std::uint64_t q = q_arg;
        unsigned n = static_cast<unsigned>(n_arg);
        bool exists = ff::grading_exists(q, n);
        auto w = ff::construct_grading(q, n);
        if (exists != w.has_value())
            throw std::logic_error("grading criterion disagrees with the constructive scan");
        out.j["result"] = exists;
        if (w) {
            out.j["witness"] = {{"a", w->a}};
            return out.ok("grading exists: X^" + std::to_string(n) + " - " + std::to_string(w->a) +
                          " is irreducible over F_" + std::to_string(q));
        }
        return out.ok("no unitary grading: q != 1 mod ered(n) = " +
                      std::to_string(ered(Int(n)).get_ui()));
    }
    if (sub == c_cyc) {
        bool r = cyclotomic_has_unitary_grading(Int(static_cast<unsigned long>(n_arg)));
        out.j["result"] = r;
        return out.ok(std::string("Q[zeta_n] ") + (r ? "admits" : "does not admit") +
                      " a unitary grading");
    }
    if (sub == c_eval) {
        TermList terms = parse_expression(expr_text);
        BigComplex acc{BigFloat(prec), BigFloat(prec)};
        for (const auto &t : terms) {
            BigComplex z = complex_eval(t.unit, prec);
            BigFloat c = BigFloat::from_rat(t.coeff, prec);
            acc = acc + BigComplex{z.re * c, z.im * c};
        }
        out.j["result"] = {{"re", acc.re.to_string(40)}, {"im", acc.im.to_string(40)}};
        return out.ok(acc.re.to_string(40) + " + " + acc.im.to_string(40) + "i");
    }
    return 2;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const ExprError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error &e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 5;
    } catch (const std::exception &e) {
        bool cap = std::strstr(e.what(), "cap") != nullptr;
        std::cerr << (cap ? "cap exceeded: " : "error: ") << e.what() << "\n";
        return cap ? 4 : 2;
    }
}
