#include "dedcrit/cli.hpp"

#include "dedcrit/criterion.hpp"
#include "dedcrit/eisenstein.hpp"
#include "dedcrit/fppoly.hpp"
#include "dedcrit/json_io.hpp"
#include "dedcrit/purepower.hpp"
#include "dedcrit/quadratic.hpp"
#include "dedcrit/zpoly.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dedcrit::cli {

namespace {

struct Options {
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool json = false;
    bool verbose = false;
};

Int parse_int(const std::string& text, const std::string& what)
{
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("invalid integer for " + what + ": '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("invalid integer for " + what + ": '" + text + "' at position " +
                                        std::to_string(j + 1));
    return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

unsigned parse_small(const std::string& text, const std::string& what)
{
    const Int v = parse_int(text, what);
    if (v < 0 || v > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument(what + " out of range: " + text);
    return static_cast<unsigned>(v.get_ui());
}

Int parse_prime(const std::string& text)
{
    Int p = parse_int(text, "p");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(text + " is not prime");
    return p;
}

int verdict_code(Verdict v)
{
    switch (v) {
    case Verdict::maximal: return kMaximal;
    case Verdict::not_maximal: return kNotMaximal;
    case Verdict::unknown: return kUnknown;
    }
    return kUnknown;
}

int bool_code(bool b) { return b ? kMaximal : kNotMaximal; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_local_text(std::ostream& out, const LocalReport& r, bool verbose)
{
    out << "p = " << r.p << ": " << (r.locally_maximal ? "p-maximal" : "not p-maximal") << '\n';
    if (!verbose) return;
    for (const auto& ev : r.factors) {
        out << "  phi = " << ev.phi_bar.to_string() << ", l = " << ev.multiplicity
            << ", remainder = " << ev.remainder.to_string() << ", v_p(remainder) = ";
        if (ev.remainder_valuation)
            out << *ev.remainder_valuation;
        else
            out << "-";
        out << (ev.satisfied ? " [ok]" : " [fails]") << '\n';
    }
}

int emit_certificate(std::ostream& out, const Certificate& cert, const Options& opt)
{
    if (opt.json) {
        print_json(out, to_json(cert));
    } else {
        out << "f = " << cert.f.to_string() << '\n';
        out << "disc = " << cert.disc << '\n';
        out << "irreducibility: " << to_string(cert.irreducibility) << '\n';
        if (!cert.disc_factorization.complete)
            out << "warning: discriminant factorization incomplete, cofactor " << cert.disc_factorization.cofactor << '\n';
        for (const auto& r : cert.checked_primes) print_local_text(out, r, opt.verbose);
        out << "verdict: " << to_string(cert.verdict) << '\n';
    }
    return verdict_code(cert.verdict);
}

int cmd_check(const std::string& poly, const Options& opt, std::ostream& out)
{
    return emit_certificate(out, is_maximal_global(parse_poly(poly), opt.seed), opt);
}

int cmd_cyclotomic(const std::string& p_text, const std::string& r_text, const Options& opt, std::ostream& out)
{
    const Int p = parse_prime(p_text);
    const unsigned r = parse_small(r_text, "r");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    return emit_certificate(out, is_maximal_global(cyclotomic_prime_power(p, r), opt.seed), opt);
}

int cmd_local(const std::string& poly, const std::string& p_text, const Options& opt, std::ostream& out)
{
    const IntPoly f = parse_poly(poly);
    const LocalReport r = local_maximality(f, parse_prime(p_text), opt.seed);
    if (opt.json) {
        Json j;
        j["f"] = to_json(f);
        j["report"] = to_json(r);
        print_json(out, j);
    } else {
        print_local_text(out, r, opt.verbose);
    }
    return bool_code(r.locally_maximal);
}

int cmd_oracle(const std::string& poly, const std::string& p_text, const Options& opt, std::ostream& out)
{
    const IntPoly f = parse_poly(poly);
    const Int p = parse_prime(p_text);
    const bool ok = classical_dedekind_oracle(f, p, opt.seed);
    if (opt.json) {
        Json j;
        j["f"] = to_json(f);
        j["p"] = p.get_str();
        j["locally_maximal"] = ok;
        print_json(out, j);
    } else {
        out << "p = " << p << ": " << (ok ? "p-maximal" : "not p-maximal") << " (classical criterion)\n";
    }
    return bool_code(ok);
}

int cmd_purepower(const std::string& n_text, const std::string& u_text, const Options& opt, std::ostream& out)
{
    const PurePowerVerdict v = cor5_exact(parse_small(n_text, "n"), parse_int(u_text, "u"));
    if (opt.json) {
        print_json(out, to_json(v));
    } else {
        out << "f = " << pure_power_poly(v.n, v.u).to_string() << '\n';
        if (v.failing_prime)
            out << "fails at p = " << *v.failing_prime << " (" << to_string(*v.reason) << ")\n";
        out << "verdict: " << to_string(v.verdict) << '\n';
    }
    return verdict_code(v.verdict);
}

int cmd_thm3(const std::string& n_text, const std::string& a_text, const Options& opt, std::ostream& out)
{
    const unsigned n = parse_small(n_text, "n");
    const Int a = parse_int(a_text, "a");
    const bool ok = thm3_sufficient(n, a);
    if (opt.json) {
        Json j;
        j["n"] = std::to_string(n);
        j["a"] = a.get_str();
        j["sufficient"] = ok;
        print_json(out, j);
    } else {
        out << "f = " << pure_power_poly(n, a).to_string() << '\n';
        out << (ok ? "sufficient condition holds: maximal\n" : "sufficient condition does not hold\n");
    }
    return bool_code(ok);
}

int cmd_quadratic(const std::vector<std::string>& a, const Options& opt, std::ostream& out)
{
    const QuadField field(parse_int(a[0], "d"));
    const unsigned n = parse_small(a[1], "n");
    const QuadInt u(field, parse_int(a[2], "a"), parse_int(a[3], "b"));
    const QuadPurePowerVerdict v = thm4_check(field, n, u);
    if (opt.json) {
        print_json(out, to_json(v));
    } else {
        out << "K = Q(sqrt(" << field.d() << ")), u = " << u.to_string() << ", n = " << n << '\n';
        if (opt.verbose) {
            for (const auto& c : v.checks) {
                out << "  " << c.prime.to_string() << ": v(u) = " << c.nu_u;
                if (c.nu_frobenius) out << ", v(u^q - u) " << (c.nu_frobenius_lower_bound ? ">= " : "= ") << *c.nu_frobenius;
                out << (c.ok ? " [ok]" : " [fails]") << '\n';
            }
        }
        if (v.failing_prime)
            out << "fails at " << v.failing_prime->to_string() << " (" << to_string(*v.reason) << ")\n";
        out << "verdict: " << to_string(v.verdict) << '\n';
    }
    return verdict_code(v.verdict);
}

int cmd_factor_mod_p(const std::string& poly, const std::string& p_text, const Options& opt, std::ostream& out)
{
    const Int p = parse_prime(p_text);
    const FactorizationModP fac = factor_mod_p(reduce_mod_p(parse_poly(poly), p), opt.seed);
    if (opt.json) {
        print_json(out, to_json(fac));
    } else {
        out << fac.unit;
        for (const auto& [g, l] : fac.factors) {
            out << " * (" << g.to_string() << ")";
            if (l > 1) out << "^" << l;
        }
        out << " mod " << p << '\n';
    }
    return kMaximal;
}

int cmd_eisenstein(const std::string& poly, const std::string& p_text, const std::string& phi_text,
                   const Options& opt, std::ostream& out)
{
    const IntPoly f = parse_poly(poly);
    const Int p = parse_prime(p_text);
    const bool with_phi = !phi_text.empty();
    const bool ok = with_phi ? is_phi_eisenstein(f, parse_poly(phi_text), p) : is_eisenstein_at(f, p);
    if (opt.json) {
        Json j;
        j["f"] = to_json(f);
        j["p"] = p.get_str();
        j["phi"] = with_phi ? to_json(parse_poly(phi_text)) : Json();
        j["eisenstein"] = ok;
        print_json(out, j);
    } else {
        out << (ok ? "Eisenstein" : "not Eisenstein") << " at p = " << p;
        if (with_phi) out << " with phi = " << parse_poly(phi_text).to_string();
        out << '\n';
    }
    return bool_code(ok);
}

int cmd_theta(const std::string& n_text, const std::string& m_text, const std::string& p_text, const Options& opt,
              std::ostream& out)
{
    const ThetaDescriptor t =
        power_basis_generator(parse_small(n_text, "n"), parse_small(m_text, "m"), parse_int(p_text, "p"));
    if (opt.json)
        print_json(out, to_json(t));
    else
        out << t.description() << " (m*s - n*t = " << t.theta_power_valuation() << ")\n";
    return kMaximal;
}

std::optional<std::uint64_t> seed_from_env(std::ostream& err)
{
    const char* env = std::getenv("DEDCRIT_SEED");
    if (env == nullptr || *env == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used, 10);
        if (used == std::string(env).size() && env[0] != '-') return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    err << "warning: ignoring malformed DEDCRIT_SEED '" << env << "'\n";
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximality of Z[alpha] via a Dedekind-type criterion", "dedcrit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized internals (default: $DEDCRIT_SEED or 0)");
    app.add_flag("--json", opt.json, "print machine-readable JSON");
    app.add_flag("--verbose", opt.verbose, "print per-factor evidence");

    std::string poly, phi, p, n, u, m, r;
    std::vector<std::string> quad(4);

    auto* check = app.add_subcommand("check", "global maximality certificate for a monic polynomial");
    check->add_option("poly", poly, "polynomial, e.g. \"x^3-2\" or '[\"-2\",\"0\",\"0\",\"1\"]'")->required();

    auto* local = app.add_subcommand("local", "local criterion at a single prime");
    local->add_option("poly", poly)->required();
    local->add_option("p", p)->required();

    auto* oracle = app.add_subcommand("oracle", "classical Dedekind criterion at a single prime");
    oracle->add_option("poly", poly)->required();
    oracle->add_option("p", p)->required();

    auto* purepower = app.add_subcommand("purepower", "exact test for x^n - u");
    purepower->add_option("n", n)->required();
    purepower->add_option("u", u)->required();

    auto* thm3 = app.add_subcommand("thm3", "sufficient condition for x^n - a: a squarefree, rad(n) | a");
    thm3->add_option("n", n)->required();
    thm3->add_option("a", u)->required();

    auto* quadratic = app.add_subcommand("quadratic", "x^n - u over Q(sqrt(d)), u = a + b*w");
    quadratic->add_option("d", quad[0])->required();
    quadratic->add_option("n", quad[1])->required();
    quadratic->add_option("a", quad[2])->required();
    quadratic->add_option("b", quad[3])->required();

    auto* cyclotomic = app.add_subcommand("cyclotomic", "check the cyclotomic polynomial of p^r");
    cyclotomic->add_option("p", p)->required();
    cyclotomic->add_option("r", r)->required();

    auto* factor = app.add_subcommand("factor-mod-p", "factor a polynomial over F_p");
    factor->add_option("poly", poly)->required();
    factor->add_option("p", p)->required();

    auto* eisenstein = app.add_subcommand("eisenstein", "Eisenstein test at p, or (phi, p)-Eisenstein with --phi");
    eisenstein->add_option("poly", poly)->required();
    eisenstein->add_option("p", p)->required();
    eisenstein->add_option("--phi", phi, "monic polynomial phi");

    auto* theta = app.add_subcommand("theta", "power basis generator alpha^s / p^t for x^n + a, v_p(a) = m");
    theta->add_option("n", n)->required();
    theta->add_option("m", m)->required();
    theta->add_option("p", p)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    if (app.count("--seed") == 0) {
        if (auto s = seed_from_env(err)) opt.seed = *s;
    }

    try {
        if (check->parsed()) return cmd_check(poly, opt, out);
        if (local->parsed()) return cmd_local(poly, p, opt, out);
        if (oracle->parsed()) return cmd_oracle(poly, p, opt, out);
        if (purepower->parsed()) return cmd_purepower(n, u, opt, out);
        if (thm3->parsed()) return cmd_thm3(n, u, opt, out);
        if (quadratic->parsed()) return cmd_quadratic(quad, opt, out);
        if (cyclotomic->parsed()) return cmd_cyclotomic(p, r, opt, out);
        if (factor->parsed()) return cmd_factor_mod_p(poly, p, opt, out);
        if (eisenstein->parsed()) return cmd_eisenstein(poly, p, phi, opt, out);
        if (theta->parsed()) return cmd_theta(n, m, p, opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace dedcrit::cli
