#include "darboux/io.hpp"

#include <json.hpp>

namespace darboux {

namespace {

using Json = nlohmann::ordered_json;

void expect_keys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
    for (const char* k : required)
        if (!j.contains(k))
            throw ParseError(std::string("missing field '") + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : required)
            if (it.key() == k) known = true;
        for (const char* k : optional)
            if (it.key() == k) known = true;
        if (!known)
            throw ParseError("unknown field '" + it.key() + "'");
    }
}

Rational parse_rat(const Json& j) {
    if (!j.is_string()) throw ParseError("rationals must be strings");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
        throw ParseError("bad rational literal: " + j.get<std::string>());
    q.canonicalize();
    return Rational(q);
}

Json rat_json(const Rational& r) { return rational_str(r); }

Json scalar_json(const Scalar& s) {
    if (!s.is_rational())
        throw ParseError("non-rational scalar in serialized output: " + s.str());
    return rational_str(s.to_rational());
}

Json poly_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(scalar_json(c));
    return Json{{"var", p.var()}, {"coeffs", arr}};
}

UniPoly poly_from(const Json& j) {
    expect_keys(j, {"var", "coeffs"});
    std::vector<Scalar> c;
    for (const auto& e : j.at("coeffs")) c.emplace_back(parse_rat(e));
    return UniPoly(j.at("var").get<std::string>(), std::move(c));
}

Json ratfun_json(const RatFun& f) {
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(scalar_json(c));
    for (const auto& c : f.den().coeffs()) den.push_back(scalar_json(c));
    return Json::array({num, den});
}

RatFun ratfun_from(const Json& j, const std::string& var) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("coefficient must be a [num, den] pair");
    std::vector<Scalar> num, den;
    for (const auto& e : j[0]) num.emplace_back(parse_rat(e));
    for (const auto& e : j[1]) den.emplace_back(parse_rat(e));
    return RatFun(UniPoly(var, std::move(num)), UniPoly(var, std::move(den)));
}

Json diffop_json(const DiffOp& op) {
    Json arr = Json::array();
    for (const auto& c : op.coeffs()) arr.push_back(ratfun_json(c));
    return Json{{"var", op.var()}, {"coeffs", arr}};
}

DiffOp diffop_from(const Json& j) {
    expect_keys(j, {"var", "coeffs"});
    std::string var = j.at("var").get<std::string>();
    std::vector<RatFun> c;
    for (const auto& e : j.at("coeffs")) c.push_back(ratfun_from(e, var));
    return DiffOp(var, std::move(c));
}

Json conditions_json_body(const ConditionSet& cs) {
    Json j;
    j["schema"] = "darboux-conditions-1";
    if (cs.family() == ConditionSet::Family::Bessel) {
        j["family"] = "bessel";
        j["N"] = cs.n();
        Json beta = Json::array();
        for (const auto& b : cs.bessel().beta()) beta.push_back(rat_json(b));
        j["beta"] = beta;
    } else {
        j["family"] = "airy";
        j["N"] = cs.n();
        j["alpha0"] = rat_json(cs.airy().alpha0());
        Json tail = Json::array();
        for (const auto& a : cs.airy().tail()) tail.push_back(rat_json(a));
        j["alpha"] = tail;
    }
    Json conds = Json::array();
    for (const auto& c : cs.conditions()) {
        Json cj;
        if (c.support == Condition::Support::Zero) {
            cj["support"] = "zero";
            Json terms = Json::array();
            for (const auto& t : c.terms)
                terms.push_back(Json{{"i", t.i},
                                     {"k", t.k},
                                     {"j", t.j},
                                     {"b", scalar_json(t.b)}});
            cj["terms"] = terms;
        } else {
            cj["support"] = "point";
            cj["lambda"] = rat_json(c.lambda);
            Json coeffs = Json::array();
            for (const auto& a : c.coeffs) coeffs.push_back(scalar_json(a));
            cj["coeffs"] = coeffs;
        }
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    return j;
}

ConditionSet conditions_from(const Json& j) {
    expect_keys(j, {"family", "N", "conditions"},
                {"schema", "beta", "alpha0", "alpha", "derived"});
    std::string family = j.at("family").get<std::string>();
    unsigned n = j.at("N").get<unsigned>();
    std::vector<Condition> conds;
    for (const auto& cj : j.at("conditions")) {
        Condition c;
        std::string support = cj.at("support").get<std::string>();
        if (support == "zero") {
            expect_keys(cj, {"support", "terms"});
            c.support = Condition::Support::Zero;
            for (const auto& tj : cj.at("terms")) {
                expect_keys(tj, {"i", "k", "j", "b"});
                ZeroTerm t;
                t.i = tj.at("i").get<unsigned>();
                t.k = tj.at("k").get<unsigned>();
                t.j = tj.at("j").get<unsigned>();
                t.b = Scalar(parse_rat(tj.at("b")));
                c.terms.push_back(t);
            }
        } else if (support == "point") {
            expect_keys(cj, {"support", "lambda", "coeffs"});
            c.support = Condition::Support::Point;
            c.lambda = parse_rat(cj.at("lambda"));
            for (const auto& aj : cj.at("coeffs"))
                c.coeffs.emplace_back(parse_rat(aj));
        } else {
            throw ParseError("unknown support kind: " + support);
        }
        conds.push_back(std::move(c));
    }
    if (family == "bessel") {
        std::vector<Rational> beta;
        for (const auto& b : j.at("beta")) beta.push_back(parse_rat(b));
        return ConditionSet(BesselParam(n, std::move(beta)), std::move(conds));
    }
    if (family == "airy") {
        std::vector<Rational> tail;
        if (j.contains("alpha"))
            for (const auto& a : j.at("alpha")) tail.push_back(parse_rat(a));
        return ConditionSet(AiryParam(n, parse_rat(j.at("alpha0")), tail),
                            std::move(conds));
    }
    throw ParseError("unknown family: " + family);
}

}  // namespace

std::string conditions_to_json(const ConditionSet& cs) {
    return conditions_json_body(cs).dump(2);
}

ConditionSet conditions_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return conditions_from(j);
}

std::string diffop_to_json(const DiffOp& op) { return diffop_json(op).dump(2); }

DiffOp diffop_from_json(const std::string& text) {
    return diffop_from(Json::parse(text));
}

std::string pair_to_json(const BispectralPair& pair) {
    Json j;
    j["schema"] = "darboux-pair-1";
    Json fam = conditions_json_body(
        pair.plane.conditions
            ? *pair.plane.conditions
            : (pair.plane.family == ConditionSet::Family::Bessel
                   ? ConditionSet(*pair.plane.bessel, {})
                   : ConditionSet(*pair.plane.airy, {})));
    fam.erase("schema");
    j["plane"] = fam;
    j["P"] = diffop_json(pair.p);
    j["Q"] = diffop_json(pair.q);
    j["g"] = poly_json(pair.g);
    j["f"] = poly_json(pair.f);
    j["hhat"] = poly_json(pair.hhat);
    j["P_b"] = diffop_json(pair.p_b);
    j["Q_b"] = diffop_json(pair.q_b);
    j["g_b"] = poly_json(pair.g_b);
    j["f_b"] = poly_json(pair.f_b);
    j["L"] = diffop_json(pair.l);
    j["Lambda"] = diffop_json(pair.lambda_op);
    j["Theta"] = poly_json(pair.theta);
    j["Theta_hat"] = poly_json(pair.theta_hat);
    return j.dump(2);
}

BispectralPair pair_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    expect_keys(j, {"schema", "plane", "P", "Q", "g", "f", "hhat", "P_b",
                    "Q_b", "g_b", "f_b", "L", "Lambda", "Theta", "Theta_hat"});
    if (j.at("schema").get<std::string>() != "darboux-pair-1")
        throw ParseError("unsupported schema");
    ConditionSet cs = conditions_from(j.at("plane"));
    BispectralPair pair;
    pair.plane.family = cs.family();
    if (cs.family() == ConditionSet::Family::Bessel)
        pair.plane.bessel = cs.bessel();
    else
        pair.plane.airy = cs.airy();
    pair.plane.conditions = std::make_shared<const ConditionSet>(std::move(cs));
    pair.p = diffop_from(j.at("P"));
    pair.plane.p = pair.p;
    pair.g = poly_from(j.at("g"));
    pair.plane.g = pair.g;
    pair.q = diffop_from(j.at("Q"));
    pair.f = poly_from(j.at("f"));
    pair.hhat = poly_from(j.at("hhat"));
    pair.p_b = diffop_from(j.at("P_b"));
    pair.q_b = diffop_from(j.at("Q_b"));
    pair.g_b = poly_from(j.at("g_b"));
    pair.f_b = poly_from(j.at("f_b"));
    pair.l = diffop_from(j.at("L"));
    pair.lambda_op = diffop_from(j.at("Lambda"));
    pair.theta = poly_from(j.at("Theta"));
    pair.theta_hat = poly_from(j.at("Theta_hat"));
    return pair;
}

std::string plane_to_json(const DarbouxPlane& pl) {
    Json j;
    j["schema"] = "darboux-plane-1";
    Json fam = conditions_json_body(
        pl.conditions ? *pl.conditions
                      : (pl.family == ConditionSet::Family::Bessel
                             ? ConditionSet(*pl.bessel, {})
                             : ConditionSet(*pl.airy, {})));
    fam.erase("schema");
    if (!pl.conditions) {
        fam.erase("conditions");
        fam["derived"] = true;
    }
    j["plane"] = fam;
    j["P"] = diffop_json(pl.p);
    j["g"] = poly_json(pl.g);
    return j.dump(2);
}

namespace {

std::string rat_latex(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    std::string sign = r < 0 ? "-" : "";
    mpq_class m(r < 0 ? Rational(-r) : r);
    return sign + "\\tfrac{" + m.get_num().get_str() + "}{" +
           m.get_den().get_str() + "}";
}

std::string poly_latex_var(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        const Scalar& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        Rational r = c.to_rational();
        Rational mag = r < 0 ? Rational(-r) : r;
        bool one = mag == 1 && i > 0;
        if (out.empty())
            out += (r < 0 ? "-" : "");
        else
            out += (r < 0 ? " - " : " + ");
        if (!one) out += rat_latex(mag);
        if (i == 1) out += var;
        if (i > 1) out += var + "^{" + std::to_string(i) + "}";
    }
    return out.empty() ? "0" : out;
}

std::string ratfun_latex(const RatFun& f, const std::string& var) {
    if (f.is_polynomial()) return poly_latex_var(f.num(), var);
    return "\\frac{" + poly_latex_var(f.num(), var) + "}{" +
           poly_latex_var(f.den(), var) + "}";
}

}  // namespace

std::string poly_to_latex(const UniPoly& p) {
    return poly_latex_var(p, p.var());
}

std::string diffop_to_latex(const DiffOp& op, const std::string& symbol) {
    std::string out = symbol + " = ";
    if (op.is_zero()) return out + "0";
    bool first = true;
    for (size_t k = op.coeffs().size(); k-- > 0;) {
        const RatFun& c = op.coeffs()[k];
        if (c.is_zero()) continue;
        std::string dpow;
        if (k == 1) dpow = "\\partial_" + op.var();
        if (k > 1)
            dpow = "\\partial_" + op.var() + "^{" + std::to_string(k) + "}";
        bool is_one = c == RatFun::constant(op.var(), Scalar(1));
        std::string term;
        if (is_one && k > 0)
            term = dpow;
        else
            term = "\\left(" + ratfun_latex(c, op.var()) + "\\right)" +
                   (k > 0 ? " " + dpow : "");
        out += (first ? "" : " + ") + term;
        first = false;
    }
    return out;
}

std::string pair_to_latex(const BispectralPair& pair) {
    std::string out;
    out += diffop_to_latex(pair.p, "P") + "\n";
    out += diffop_to_latex(pair.q, "Q") + "\n";
    out += "g(z) = " + poly_to_latex(pair.g) + "\n";
    out += "f(z) = " + poly_to_latex(pair.f) + "\n";
    out += diffop_to_latex(pair.l, "L") + "\n";
    out += diffop_to_latex(pair.lambda_op, "\\Lambda") + "\n";
    out += "\\Theta(x) = " + poly_to_latex(pair.theta) + "\n";
    return out;
}

VerifyReport run_verification(const BispectralPair& pair, unsigned depth,
                              unsigned max_order) {
    VerifyReport rep;
    try {
        auto sym = check_bispectral_symbolic(pair);
        rep.x_identity = sym.x_identity;
        rep.z_identity = sym.z_identity;
        rep.seconds = sym.seconds;
    } catch (const IdentityFailed& e) {
        rep.failure = e.what();
        return rep;
    }
    if (pair.plane.family == ConditionSet::Family::Bessel) {
        rep.series_applicable = true;
        try {
            WaveSeries ws = wave_series(pair.plane, depth);
            rep.margin = ws.margin;
            rep.wave_shape = true;
            check_wave_decay(ws, depth);
            rep.wave_decay = true;
        } catch (const DomainError& e) {
            rep.failure = e.what();
            return rep;
        }
    }
    auto entries = spectral_algebra(pair.plane, max_order);
    for (const auto& e : entries) rep.orders.push_back(e.order);
    if (!rep.orders.empty()) {
        rep.rank = rank_of(rep.orders);
        rep.rank_matches = rep.rank == pair.plane.n();
    }
    return rep;
}

std::string report_to_json(const VerifyReport& rep) {
    Json j;
    j["schema"] = "darboux-verify-1";
    j["x_identity"] = rep.x_identity;
    j["z_identity"] = rep.z_identity;
    j["series_applicable"] = rep.series_applicable;
    j["wave_shape"] = rep.wave_shape;
    j["wave_decay"] = rep.wave_decay;
    j["margin"] = rep.margin;
    j["orders"] = rep.orders;
    j["rank"] = rep.rank;
    j["rank_matches"] = rep.rank_matches;
    j["seconds"] = rep.seconds;
    j["ok"] = rep.ok();
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    return j.dump(2);
}

}  // namespace darboux
