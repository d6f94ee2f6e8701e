#include "dedcrit/json_io.hpp"

namespace dedcrit {

namespace {

std::string dec(const Int& v) { return v.get_str(); }
std::string dec(unsigned long v) { return std::to_string(v); }
std::string dec(long v) { return std::to_string(v); }

}  // namespace

Json to_json(const IntPoly& f)
{
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(dec(c));
    return arr;
}

Json to_json(const FpPoly& f) { return to_json(f.lift()); }

Json to_json(const PrimeFactorization& fac)
{
    Json pairs = Json::array();
    for (const auto& [p, e] : fac.factors) pairs.push_back(Json::array({dec(p), dec(static_cast<unsigned long>(e))}));
    Json out;
    out["sign"] = dec(static_cast<long>(fac.sign));
    out["factors"] = std::move(pairs);
    out["complete"] = fac.complete;
    out["cofactor"] = dec(fac.cofactor);
    return out;
}

Json to_json(const FactorizationModP& fac)
{
    Json factors = Json::array();
    for (const auto& [g, l] : fac.factors) {
        Json item;
        item["factor"] = to_json(g);
        item["multiplicity"] = dec(static_cast<unsigned long>(l));
        factors.push_back(std::move(item));
    }
    Json out;
    out["p"] = dec(fac.p);
    out["unit"] = dec(fac.unit);
    out["factors"] = std::move(factors);
    return out;
}

Json to_json(const LocalReport& report)
{
    Json factors = Json::array();
    for (const auto& ev : report.factors) {
        Json item;
        item["phi_bar"] = to_json(ev.phi_bar);
        item["l"] = dec(static_cast<unsigned long>(ev.multiplicity));
        item["lift"] = to_json(ev.lift);
        item["remainder"] = to_json(ev.remainder);
        item["remainder_val"] = ev.remainder_valuation ? Json(dec(static_cast<unsigned long>(*ev.remainder_valuation))) : Json();
        item["ok"] = ev.satisfied;
        factors.push_back(std::move(item));
    }
    Json out;
    out["p"] = dec(report.p);
    out["locally_maximal"] = report.locally_maximal;
    out["factors"] = std::move(factors);
    return out;
}

Json to_json(const Certificate& cert)
{
    Json primes = Json::array();
    for (const auto& r : cert.checked_primes) primes.push_back(to_json(r));
    Json out;
    out["f"] = to_json(cert.f);
    out["disc"] = dec(cert.disc);
    out["disc_factors"] = to_json(cert.disc_factorization);
    out["primes"] = std::move(primes);
    out["verdict"] = std::string(to_string(cert.verdict));
    out["irreducibility_status"] = std::string(to_string(cert.irreducibility));
    return out;
}

Json to_json(const PurePowerVerdict& v)
{
    Json out;
    out["n"] = dec(static_cast<unsigned long>(v.n));
    out["u"] = dec(v.u);
    out["verdict"] = std::string(to_string(v.verdict));
    out["failing_prime"] = v.failing_prime ? Json(dec(*v.failing_prime)) : Json();
    out["reason"] = v.reason ? Json(std::string(to_string(*v.reason))) : Json();
    return out;
}

Json to_json(const QuadInt& u) { return Json::array({dec(u.field().d()), dec(u.a()), dec(u.b())}); }

Json to_json(const QuadPrime& P)
{
    Json out;
    out["p"] = dec(P.p);
    out["kind"] = std::string(to_string(P.kind));
    out["e"] = dec(static_cast<unsigned long>(P.e));
    out["f"] = dec(static_cast<unsigned long>(P.f));
    out["hensel_root"] = P.hensel_root ? Json(dec(*P.hensel_root)) : Json();
    out["precision"] = dec(static_cast<unsigned long>(P.precision));
    return out;
}

Json to_json(const QuadPurePowerVerdict& v)
{
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json item;
        item["prime"] = to_json(c.prime);
        item["nu_u"] = dec(static_cast<unsigned long>(c.nu_u));
        item["nu_frobenius"] = c.nu_frobenius ? Json(dec(static_cast<unsigned long>(*c.nu_frobenius))) : Json();
        item["nu_frobenius_lower_bound"] = c.nu_frobenius_lower_bound;
        item["ok"] = c.ok;
        checks.push_back(std::move(item));
    }
    Json out;
    out["d"] = dec(v.field.d());
    out["n"] = dec(static_cast<unsigned long>(v.n));
    out["u"] = to_json(v.u);
    out["verdict"] = std::string(to_string(v.verdict));
    out["failing_prime"] = v.failing_prime ? to_json(*v.failing_prime) : Json();
    out["reason"] = v.reason ? Json(std::string(to_string(*v.reason))) : Json();
    out["checks"] = std::move(checks);
    out["irreducibility"] = "heuristic-screen";
    return out;
}

Json to_json(const ThetaDescriptor& theta)
{
    Json out;
    out["n"] = dec(static_cast<unsigned long>(theta.n));
    out["m"] = dec(static_cast<unsigned long>(theta.m));
    out["s"] = dec(theta.s);
    out["t"] = dec(theta.t);
    out["p"] = dec(theta.p);
    out["theta_power_valuation"] = dec(theta.theta_power_valuation());
    out["description"] = theta.description();
    return out;
}

}  // namespace dedcrit
