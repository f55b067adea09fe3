#include "commands.hpp"

#include "nh/bottklw.hpp"
#include "nh/deform.hpp"
#include "nh/nestcore.hpp"
#include "nh/srcomplex.hpp"

#include <chrono>
#include <functional>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>

namespace nhtool {

using nlohmann::json;

namespace {

enum class Outcome { Pass, Fail, Budget };

struct Context {
    const RunConfig& cfg;
    std::istream& in;
    json values = json::object();
    json witnesses = json::array();
    json params = json::object();

    int n(int fallback)
    {
        int v = cfg.n > 0 ? cfg.n : fallback;
        params["n"] = v;
        return v;
    }
    nh::Budget budget() const { return {cfg.budget_pairs, cfg.budget_degree}; }
};

json strings(const std::vector<nh::Polynomial>& v)
{
    json a = json::array();
    for (const auto& f : v)
        a.push_back(nh::to_string(f));
    return a;
}

json monomials(const std::vector<nh::Monomial>& v, const nh::Ring& ring)
{
    json a = json::array();
    for (const auto& m : v)
        a.push_back(nh::to_string(m, ring));
    return a;
}

nh::Field parse_field(const std::string& text, unsigned long fallback_p)
{
    if (text.empty())
        return fallback_p ? nh::Field::prime(fallback_p) : nh::Field::rationals();
    if (text == "Q" || text == "QQ" || text == "0")
        return nh::Field::rationals();
    try {
        std::size_t used = 0;
        unsigned long p = std::stoul(text, &used);
        if (used != text.size())
            throw UsageError("bad --field: " + text);
        return nh::Field::prime(p);
    } catch (const std::logic_error&) {
        throw UsageError("bad --field: " + text);
    }
}

json read_payload(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw UsageError("expected a JSON payload on stdin");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON payload: ") + e.what());
    }
}

std::vector<nh::Polynomial> ideal_from(const json& payload, const char* key, const nh::RingPtr& ring)
{
    if (!payload.contains(key) || !payload[key].is_array())
        throw UsageError(std::string("payload needs an array \"") + key + "\"");
    std::vector<nh::Polynomial> out;
    for (const auto& s : payload[key]) {
        if (!s.is_string())
            throw UsageError(std::string("entries of \"") + key + "\" must be strings");
        out.push_back(nh::parse_polynomial(ring, s.get<std::string>()));
    }
    return out;
}

Outcome status_of(nh::Status s, bool ok)
{
    if (s == nh::Status::BudgetExceeded)
        return Outcome::Budget;
    return ok ? Outcome::Pass : Outcome::Fail;
}

// ---------------------------------------------------------------- commands

Outcome cmd_ideal(Context& c)
{
    const int n = c.n(2);
    const std::string route = c.cfg.args.empty() ? "division" : c.cfg.args[0];
    c.params["route"] = route;
    auto s = nh::build_setup(n);
    if (route == "L") {
        auto L = nh::ideal_L(s);
        c.values["g"] = strings(L.g);
        c.values["G"] = strings(L.G);
        return Outcome::Pass;
    }
    if (route != "division" && route != "closed-form")
        throw UsageError("route must be division, closed-form or L");
    auto div = nh::ideal_I_division(s);
    auto closed = nh::ideal_I_closed_form(s);
    const auto& pick = route == "division" ? div : closed;
    c.values["f"] = strings(pick.f);
    c.values["F"] = strings(pick.F);
    bool agree = div.f == closed.f && div.F == closed.F;
    c.values["routes_agree"] = agree;
    if (!agree)
        c.witnesses.push_back("division and closed-form generators differ");
    return agree ? Outcome::Pass : Outcome::Fail;
}

Outcome cmd_verify_gb(Context& c)
{
    const int n = c.n(4);
    auto s = nh::build_setup(n);
    auto rep = nh::claimed_gb(s, nh::ideal_I_closed_form(s), c.budget());
    c.values["basis_size"] = rep.basis.size();
    c.values["pairs_checked"] = rep.check.pairs_checked;
    c.values["is_basis"] = rep.check.is_basis;
    c.values["lm_generate_K"] = rep.lm_generate_K;
    if (rep.check.status == nh::Status::Ok && !rep.check.is_basis)
        c.witnesses.push_back("S-pair (" + std::to_string(rep.check.i) + "," + std::to_string(rep.check.j) +
                              ") remainder " + nh::to_string(rep.check.remainder));
    if (!rep.lm_generate_K)
        c.witnesses.push_back("leading monomials do not generate K");
    return status_of(rep.check.status, rep.ok());
}

Outcome cmd_verify_initial(Context& c)
{
    const int n = c.n(2);
    auto s = nh::build_setup(n);
    auto rep = nh::initial_equals_K(s, nh::ideal_I_closed_form(s), c.budget());
    c.values["equal"] = rep.equal;
    c.values["gb_size"] = rep.gb_size;
    c.values["initial"] = monomials(rep.initial, *s.A);
    if (rep.status == nh::Status::Ok && !rep.equal)
        c.witnesses.push_back("in(J) differs from K");
    return status_of(rep.status, rep.equal);
}

Outcome cmd_verify_intermediate(Context& c)
{
    const int n = c.n(2);
    std::vector<int> js;
    for (const auto& a : c.cfg.args)
        js.push_back(std::stoi(a));
    if (js.empty())
        js = {1, 2, 3, 4};
    auto s = nh::build_setup(n);
    auto L = nh::ideal_L(s);
    Outcome out = Outcome::Pass;
    json per = json::object();
    for (int j : js) {
        if (j < 1 || j > 4)
            throw UsageError("j must lie in 1..4");
        auto rep = nh::intermediate_initial_check(s, L, j, c.budget());
        per[std::to_string(j)] = {{"equal", rep.equal}, {"gb_size", rep.gb_size}};
        if (rep.status == nh::Status::BudgetExceeded)
            out = Outcome::Budget;
        else if (!rep.equal) {
            c.witnesses.push_back("j=" + std::to_string(j) + ": in(L^(j)) differs from K");
            if (out == Outcome::Pass)
                out = Outcome::Fail;
        }
    }
    c.values["j"] = per;
    return out;
}

Outcome cmd_fiber_check(Context& c)
{
    const int n = c.n(4);
    nh::Field F = parse_field(c.cfg.field, 32003);
    if (F.is_rational())
        throw UsageError("fiber-check needs a prime field");
    const unsigned long p = F.characteristic();
    c.params["field"] = p;
    c.params["samples"] = c.cfg.samples;
    c.params["seed"] = c.cfg.seed;
    auto rnd = nh::oracle_random(n, p, c.cfg.samples, c.cfg.seed, c.cfg.threads);
    json v = {{"random", {{"samples", rnd.samples}, {"members", rnd.members}, {"mismatches", rnd.mismatches}}}};
    std::size_t mismatches = rnd.mismatches;
    if (!rnd.ok())
        c.witnesses.push_back(rnd.witness);
    if (n <= 5) {
        auto f2 = nh::oracle_jordan_f2(n);
        auto jr = nh::oracle_jordan_random(n, p, 4, c.cfg.seed);
        v["jordan_f2"] = {{"samples", f2.samples}, {"members", f2.members}, {"mismatches", f2.mismatches}};
        v["jordan_random"] = {{"samples", jr.samples}, {"members", jr.members}, {"mismatches", jr.mismatches}};
        mismatches += f2.mismatches + jr.mismatches;
        for (const auto* r : {&f2, &jr})
            if (!r->ok())
                c.witnesses.push_back(r->witness);
    }
    c.values = v;
    c.values["mismatches"] = mismatches;
    return mismatches == 0 ? Outcome::Pass : Outcome::Fail;
}

Outcome cmd_tangent(Context& c)
{
    auto payload = read_payload(c.in);
    auto R = nh::ring_xy();
    nh::PairPoint pt{ideal_from(payload, "I1", R), ideal_from(payload, "I2", R)};
    auto rep = nh::tangent_space(pt);
    c.values = {{"dim", rep.dim},
                {"colength1", rep.colength1},
                {"colength2", rep.colength2},
                {"hom1", rep.hom1},
                {"hom2", rep.hom2}};
    return Outcome::Pass;
}

Outcome cmd_complex_facets(Context& c)
{
    const int n = c.n(5);
    auto rep = nh::verify_counts(n);
    c.values = {{"total", rep.total},
                {"expected_total", rep.expected_total},
                {"last_column", rep.last_column},
                {"expected_last_column", rep.expected_last_column},
                {"all_size_four", rep.all_size_four}};
    if (!rep.ok)
        c.witnesses.push_back(rep.witness);
    return rep.ok ? Outcome::Pass : Outcome::Fail;
}

Outcome cmd_complex_homology(Context& c)
{
    const int n = c.n(2);
    nh::Coefficients coeffs;
    const std::string& f = c.cfg.field;
    if (f == "Z")
        coeffs = nh::Coefficients::integers();
    else {
        nh::Field F = parse_field(f, 0);
        coeffs = F.is_rational() ? nh::Coefficients::rationals() : nh::Coefficients::prime(F.characteristic());
    }
    c.params["field"] = coeffs.describe();
    auto K = nh::delta_complex(n);
    auto hom = nh::reduced_homology(K, coeffs);
    auto rei = nh::reisner_check(K, coeffs);
    json betti = json::object();
    for (const auto& [d, b] : hom.betti)
        betti[std::to_string(d)] = b;
    c.values["betti"] = betti;
    c.values["f_vector"] = hom.f_vector;
    c.values["cohen_macaulay"] = rei.cohen_macaulay;
    c.values["faces_checked"] = rei.faces_checked;
    if (!hom.torsion.empty()) {
        json tors = json::object();
        for (const auto& [d, ts] : hom.torsion) {
            json a = json::array();
            for (const auto& t : ts)
                a.push_back(t.get_str());
            tors[std::to_string(d)] = a;
        }
        c.values["torsion"] = tors;
    }
    if (coeffs.kind != nh::CoeffKind::Rational) {
        // No theorem covers positive characteristic; the run is reported only.
        c.values["claim"] = "none";
        return Outcome::Pass;
    }
    c.values["claim"] = "cohen-macaulay";
    if (!rei.cohen_macaulay)
        c.witnesses.push_back(rei.witness);
    return rei.cohen_macaulay ? Outcome::Pass : Outcome::Fail;
}

Outcome cmd_bott_table(Context& c)
{
    const int n = c.n(4);
    auto t = nh::cohomology_tables(n);
    json entries = json::array();
    for (const auto& [pq, e] : t.entries) {
        if (e.dim == 0 && e.tag == nh::EntryTag::Certified)
            continue;
        json row = {{"p", pq.first}, {"q", pq.second}, {"dim", e.dim.get_str()}};
        row["tag"] = e.tag == nh::EntryTag::CancellingPair ? "cancelling-pair" : "certified";
        if (e.tag == nh::EntryTag::CancellingPair)
            row["pair_bound"] = e.pair_bound.get_str();
        entries.push_back(row);
    }
    std::string witness;
    bool match = nh::table_matches_expected(t, &witness);
    c.values["entries"] = entries;
    c.values["bott_unique"] = t.bott_unique;
    c.values["matches_expected"] = match;
    if (!match)
        c.witnesses.push_back(witness);
    return match && t.bott_unique ? Outcome::Pass : Outcome::Fail;
}

Outcome cmd_bott_degree(Context& c)
{
    const int n = c.n(4);
    mpq_class deg = nh::klw_degree(n);
    mpz_class formula = nh::degree_formula(n);
    c.values["degree"] = deg.get_str();
    c.values["formula"] = formula.get_str();
    bool ok = deg == mpq_class(formula);
    if (!ok)
        c.witnesses.push_back("degree " + deg.get_str() + " differs from formula " + formula.get_str());
    return ok ? Outcome::Pass : Outcome::Fail;
}

json family_json(const nh::FamilyReport& r)
{
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"t", s.t}, {"colength", s.colength}, {"intersection_identity", s.intersection_identity}});
    return {{"description", r.family.description},
            {"generators", strings(r.family.gens)},
            {"special_fiber_ok", r.special_fiber_ok},
            {"colength_constant", r.colength_constant},
            {"intersection_ok", r.intersection_ok},
            {"samples", samples}};
}

Outcome cmd_deform_cleave(Context& c)
{
    auto payload = read_payload(c.in);
    auto R = nh::ring_xy();
    auto I = ideal_from(payload, "I", R);
    try {
        if (payload.contains("J")) {
            auto pr = nh::cleave_pair(I, ideal_from(payload, "J", R));
            c.values["case"] = pr.case_label;
            c.values["trace"] = pr.trace;
            c.values["I_family"] = family_json(pr.I_family);
            c.values["J_family"] = family_json(pr.J_family);
            c.values["inclusion_ok"] = pr.inclusion_ok;
            if (!pr.ok())
                c.witnesses.push_back("family check failed in case " + pr.case_label);
            return pr.ok() ? Outcome::Pass : Outcome::Fail;
        }
        if (!payload.contains("f") || !payload.contains("l"))
            throw UsageError("payload needs \"J\", or both \"f\" and \"l\"");
        auto f = nh::parse_polynomial(R, payload["f"].get<std::string>());
        auto l = nh::parse_polynomial(R, payload["l"].get<std::string>());
        auto fam = nh::cleave_family(I, f, l);
        c.values["family"] = family_json(fam);
        if (!fam.ok())
            c.witnesses.push_back("family check failed");
        return fam.ok() ? Outcome::Pass : Outcome::Fail;
    } catch (const nh::DeformError& e) {
        c.witnesses.push_back(e.what());
        return Outcome::Fail;
    }
}

Outcome cmd_deform_gin(Context& c)
{
    auto payload = read_payload(c.in);
    auto R = nh::ring_xy();
    c.params["seed"] = c.cfg.seed;
    try {
        if (payload.contains("B")) {
            std::vector<nh::Monomial> B;
            for (const auto& f : ideal_from(payload, "B", R)) {
                if (!f.is_monomial())
                    throw UsageError("\"B\" must list monomials");
                B.push_back(f.terms().front().m);
            }
            auto r = nh::add_point_initial(B, c.cfg.seed);
            c.values["predicted"] = monomials(r.predicted, *R);
            c.values["verified_monomial"] = r.verified_monomial;
            c.values["verified_generic"] = r.verified_generic;
            bool ok = r.verified_monomial && r.verified_generic;
            if (!ok)
                c.witnesses.push_back("in(I cap I_Q) differs from the prediction");
            return ok ? Outcome::Pass : Outcome::Fail;
        }
        auto g = nh::gin(ideal_from(payload, "I", R), c.cfg.seed);
        c.values["gin"] = monomials(g.gens, *R);
        c.values["draws"] = g.draws;
        c.values["borel_fixed"] = nh::is_borel_fixed(g.gens);
        return Outcome::Pass;
    } catch (const nh::DeformError& e) {
        c.witnesses.push_back(e.what());
        return Outcome::Fail;
    }
}

Outcome cmd_search_reducible(Context& c)
{
    const int d = c.n(5);
    if (d < 5)
        throw UsageError("search-reducible needs --n >= 5");
    auto r = nh::reducible_search(d);
    c.values = {{"d", r.d},
                {"r", r.r},
                {"lambda", r.lambda},
                {"dim_G", r.dim_G},
                {"bound", r.bound},
                {"f_dr", r.f_dr.get_str()}};
    return Outcome::Pass;
}

using Handler = Outcome (*)(Context&);

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h = {
        {"ideal", cmd_ideal},
        {"verify-gb", cmd_verify_gb},
        {"verify-initial", cmd_verify_initial},
        {"verify-intermediate", cmd_verify_intermediate},
        {"fiber-check", cmd_fiber_check},
        {"tangent", cmd_tangent},
        {"complex-facets", cmd_complex_facets},
        {"complex-homology", cmd_complex_homology},
        {"bott-table", cmd_bott_table},
        {"bott-degree", cmd_bott_degree},
        {"deform-cleave", cmd_deform_cleave},
        {"deform-gin", cmd_deform_gin},
        {"search-reducible", cmd_search_reducible},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, h] : handlers())
            v.push_back(k);
        return v;
    }();
    return names;
}

int run(const RunConfig& cfg, std::istream& payload, json& report)
{
    auto it = handlers().find(cfg.command);
    if (it == handlers().end())
        throw UsageError("unknown subcommand: " + cfg.command);
    Context ctx{cfg, payload};
    ctx.params["budget_pairs"] = cfg.budget_pairs;
    ctx.params["budget_degree"] = cfg.budget_degree;
    const auto start = std::chrono::steady_clock::now();
    Outcome out = it->second(ctx);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    static const char* names[] = {"pass", "fail", "budget-exceeded"};
    if (out == Outcome::Fail && ctx.witnesses.empty())
        ctx.witnesses.push_back("no witness recorded");
    report = {{"schema", "1"},
              {"command", cfg.command},
              {"params", ctx.params},
              {"status", names[static_cast<int>(out)]},
              {"values", ctx.values},
              {"witnesses", ctx.witnesses},
              {"timing_ms", ms.count()}};
    return static_cast<int>(out);
}

std::string summarize(const json& r)
{
    std::ostringstream os;
    os << r.at("command").get<std::string>() << ": " << r.at("status").get<std::string>();
    const auto& v = r.at("values");
    const std::string cmd = r.at("command");
    if (cmd == "bott-degree")
        os << ", degree " << v.at("degree").get<std::string>() << " (formula " << v.at("formula").get<std::string>()
           << ")";
    else if (cmd == "complex-facets")
        os << ", total " << v.at("total") << ", last column " << v.at("last_column");
    else if (cmd == "tangent")
        os << ", dim " << v.at("dim");
    else if (cmd == "search-reducible")
        os << ", r = " << v.at("r") << ", dim G = " << v.at("dim_G") << " vs " << v.at("bound");
    else if (cmd == "fiber-check")
        os << ", mismatches " << v.at("mismatches");
    else if (cmd == "deform-gin" && v.contains("gin"))
        os << ", gin " << v.at("gin").dump();
    if (!r.at("witnesses").empty())
        os << "; witness: " << r.at("witnesses").at(0).get<std::string>();
    return os.str();
}

}  // namespace nhtool
