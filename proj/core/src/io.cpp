#include "toricstab/io.hpp"

#include <sstream>

#include "json.hpp"
#include "toricstab/bary.hpp"
#include "toricstab/corpus.hpp"
#include "toricstab/threshold.hpp"
#include "toricstab/zariski.hpp"

namespace toric {

namespace {

using Json = nlohmann::ordered_json;

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail_validation("ParseError", "expected an integer or a \"p/q\" string");
}

Json rat_to_json(const Rat& r) {
    Json out;
    out["exact"] = rat_string(r);
    out["decimal"] = decimal_string(r);
    return out;
}

Json scalar_to_json(const Scalar& s) {
    Json out;
    if (s.exact()) {
        out["exactness"] = "rational";
        out["exact"] = rat_string(s.rat());
        out["decimal"] = decimal_string(s.rat());
    } else {
        out["exactness"] = s.describe(); // interval[lo,hi]
        out["lower"] = rat_string(s.lower());
        out["upper"] = rat_string(s.upper());
    }
    return out;
}

IVec ivec_from_json(const Json& j) {
    IVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            fail_validation("ParseError", "lattice vectors must have integer entries");
        v.emplace_back((long)x.get<long long>());
    }
    return v;
}

// canonical inputs keep numeric entries (the fan schema); report payloads use
// decimal integer strings, which never overflow
Json ivec_to_json(const IVec& v) {
    Json out = Json::array();
    for (const Int& x : v) {
        if (!x.fits_slong_p())
            fail_validation("TooLarge", "vector entry exceeds the numeric JSON range");
        out.push_back(x.get_si());
    }
    return out;
}

Json ivec_to_json_strings(const IVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

Json qvec_to_json(const QVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_string(x));
    return out;
}

std::shared_ptr<const Fan> fan_from_json(const Json& j) {
    if (!j.contains("rank") || !j.contains("rays") || !j.contains("cones"))
        fail_validation("ParseError", "fan needs rank, rays and cones");
    Fan f;
    f.rank = j.at("rank").get<int>();
    for (const auto& r : j.at("rays")) f.rays.push_back(ivec_from_json(r));
    for (const auto& c : j.at("cones")) {
        std::vector<int> cone;
        for (const auto& i : c) cone.push_back(i.get<int>());
        f.max_cones.push_back(cone);
    }
    return std::make_shared<const Fan>(validate_fan(std::move(f)));
}

QVec coeffs_from_json(const Json& j, size_t expect) {
    if (!j.is_array() || j.size() != expect)
        fail_validation("ParseError", "expected one coefficient per ray");
    QVec out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

ToricDivisor divisor_from_json(std::shared_ptr<const Fan> fan, const Json& j) {
    if (!j.contains("coefficients"))
        fail_validation("ParseError", "divisor needs coefficients");
    return make_divisor(fan, coeffs_from_json(j.at("coefficients"), fan->rays.size()));
}

BoundaryData boundary_from_json(std::shared_ptr<const Fan> fan, const Json& j) {
    if (j.is_null()) return make_boundary(fan, QVec(fan->rays.size(), Rat(0)));
    if (!j.contains("coefficients"))
        fail_validation("ParseError", "boundary needs coefficients");
    return make_boundary(fan, coeffs_from_json(j.at("coefficients"), fan->rays.size()));
}

std::vector<IVec> flag_vectors_from_json(const Json& j) {
    if (!j.contains("vectors")) fail_validation("ParseError", "flag needs vectors");
    std::vector<IVec> out;
    for (const auto& v : j.at("vectors")) out.push_back(ivec_from_json(v));
    return out;
}

CoupledProblem problem_from_json(const Json& j) {
    if (!j.contains("fan")) fail_validation("ParseError", "problem needs a fan");
    auto fan = fan_from_json(j.at("fan"));
    BoundaryData boundary =
        boundary_from_json(fan, j.contains("boundary") ? j.at("boundary") : Json());
    if (!j.contains("terms")) fail_validation("ParseError", "problem needs terms");
    std::vector<std::pair<Rat, ToricDivisor>> terms;
    for (const auto& t : j.at("terms")) {
        Rat w = t.contains("weight") ? rat_from_json(t.at("weight")) : Rat(1);
        terms.emplace_back(w, divisor_from_json(fan, t));
    }
    std::vector<IVec> candidates;
    if (j.contains("candidates"))
        for (const auto& v : j.at("candidates")) candidates.push_back(ivec_from_json(v));
    std::vector<std::vector<IVec>> flags;
    if (j.contains("flags"))
        for (const auto& f : j.at("flags")) flags.push_back(flag_vectors_from_json(f));
    return make_problem(fan, boundary, terms, candidates, flags);
}

SliceProfile piecewise_from_json(const Json& j) {
    SliceProfile g;
    if (!j.contains("breakpoints") || !j.contains("pieces"))
        fail_validation("ParseError", "g needs breakpoints and pieces");
    for (const auto& b : j.at("breakpoints")) g.breakpoints.push_back(rat_from_json(b));
    for (const auto& p : j.at("pieces")) {
        Poly poly;
        for (const auto& c : p) poly.coef.push_back(rat_from_json(c));
        if (poly.coef.empty()) poly.coef.push_back(Rat(0));
        g.pieces.push_back(poly);
    }
    if (g.breakpoints.size() != g.pieces.size() + 1 || g.breakpoints.size() < 2)
        fail_validation("ParseError", "need one piece per breakpoint interval");
    for (size_t i = 0; i + 1 < g.breakpoints.size(); ++i)
        if (!(g.breakpoints[i] < g.breakpoints[i + 1]))
            fail_validation("ParseError", "breakpoints must increase");
    g.t0 = g.breakpoints.front();
    g.t1 = g.breakpoints.back();
    g.volume = g.integrate(g.t0, g.t1);
    g.barycenter_coordinate =
        g.volume > 0 ? g.integrate_moment(g.t0, g.t1) / g.volume : Rat(0);
    return g;
}

BaryProfile profile_from_json(const Json& j) {
    for (const char* k : {"n", "t0", "t1", "V", "g", "e", "v"})
        if (!j.contains(k))
            fail_validation("ParseError", std::string("profile needs field ") + k);
    return make_profile(j.at("n").get<int>(), rat_from_json(j.at("t0")),
                        rat_from_json(j.at("t1")), rat_from_json(j.at("V")),
                        piecewise_from_json(j.at("g")), rat_from_json(j.at("e")),
                        rat_from_json(j.at("v")));
}

Json report_to_json(const ThresholdReport& rep) {
    Json out;
    out["delta_upper"] = rat_to_json(rep.delta_upper);
    out["alpha_upper"] = rat_to_json(rep.alpha_upper);
    out["certified"] = rep.certified;
    out["candidates"] = Json::array();
    for (const auto& row : rep.candidates) {
        Json r;
        r["vector"] = ivec_to_json_strings(row.v);
        r["log_discrepancy"] = rat_string(row.log_discrepancy);
        r["S"] = qvec_to_json(row.s_values);
        r["T"] = qvec_to_json(row.t_values);
        r["delta_ratio"] = rat_string(row.delta_ratio);
        r["alpha_ratio"] = rat_string(row.alpha_ratio);
        out["candidates"].push_back(r);
    }
    out["flag_bounds"] = Json::array();
    for (size_t f = 0; f < rep.flag_bounds.size(); ++f) {
        Json fb;
        fb["chain"] = qvec_to_json(rep.flag_chain_ratios[f]);
        fb["bound"] = rat_string(rep.flag_bounds[f]);
        out["flag_bounds"].push_back(fb);
    }
    return out;
}

Json linfn_to_json(const LinFn& f) {
    Json out;
    out["slope"] = rat_string(f.a);
    out["constant"] = rat_string(f.b);
    return out;
}

Json cmd_okounkov_body(const Json& in) {
    auto fan = fan_from_json(in.at("fan"));
    ToricDivisor d = divisor_from_json(fan, in.at("divisor"));
    FlagChain fl = build_flag_chain(*fan, flag_vectors_from_json(in.at("flag")));
    OkounkovBody body = okounkov_body(d, fl);
    MassData md = volume_and_barycenter(body.body);
    Json out;
    out["vertices"] = Json::array();
    for (const auto& v : body.body.vertices) out["vertices"].push_back(qvec_to_json(v));
    out["halfspaces"] = Json::array();
    for (const auto& h : body.body.halfspaces) {
        Json jh;
        jh["normal"] = qvec_to_json(h.normal);
        jh["offset"] = rat_string(h.offset);
        out["halfspaces"].push_back(jh);
    }
    out["volume"] = rat_to_json(md.volume);
    out["barycenter"] = qvec_to_json(*md.barycenter);
    out["transform"] = Json::array();
    for (const auto& row : body.transform) out["transform"].push_back(qvec_to_json(row));
    return out;
}

Json cmd_s_invariant(const Json& in) {
    auto fan = fan_from_json(in.at("fan"));
    ToricDivisor d = divisor_from_json(fan, in.at("divisor"));
    IVec v = ivec_from_json(in.at("vector"));
    STPair st = s_t_invariants(d, primitive_part(v));
    Json out;
    out["S"] = rat_to_json(st.s);
    out["T"] = rat_to_json(st.t);
    return out;
}

Json cmd_flag_s(const Json& in) {
    auto fan = fan_from_json(in.at("fan"));
    ToricDivisor d = divisor_from_json(fan, in.at("divisor"));
    FlagChain fl = build_flag_chain(*fan, flag_vectors_from_json(in.at("flag")));
    Json out;
    out["values"] = Json::array();
    for (int j = 1; j <= fl.ambient_rank; ++j) {
        Json level;
        level["level"] = j;
        level["S"] = rat_to_json(flag_s_invariant(d, fl, j));
        out["values"].push_back(level);
    }
    return out;
}

Json cmd_log_discrepancy(const Json& in) {
    auto fan = fan_from_json(in.at("fan"));
    BoundaryData b =
        boundary_from_json(fan, in.contains("boundary") ? in.at("boundary") : Json());
    Json out;
    if (in.contains("vector")) {
        IVec v = ivec_from_json(in.at("vector"));
        out["A"] = rat_to_json(log_discrepancy(b, v));
    } else if (in.contains("flag")) {
        FlagChain fl = build_flag_chain(*fan, flag_vectors_from_json(in.at("flag")));
        out["values"] = Json::array();
        for (int j = 1; j <= fl.ambient_rank; ++j) {
            Json level;
            level["level"] = j;
            level["A"] = rat_to_json(flag_log_discrepancy(b, fl, j));
            out["values"].push_back(level);
        }
    } else {
        fail_validation("ParseError", "log-discrepancy needs a vector or a flag");
    }
    return out;
}

Json cmd_thresholds(const Json& in) {
    CoupledProblem p = problem_from_json(in);
    return report_to_json(coupled_thresholds(p));
}

Json cmd_az_bound(const Json& in) {
    CoupledProblem p = problem_from_json(in.at("problem"));
    FlagChain fl = build_flag_chain(*p.fan, flag_vectors_from_json(in.at("flag")));
    Json out;
    Json levels = Json::array();
    for (int j = 1; j <= fl.ambient_rank; ++j) {
        Rat a = flag_log_discrepancy(p.boundary, fl, j);
        Rat s(0);
        for (const auto& [c, l] : p.terms) s += c * flag_s_invariant(l, fl, j);
        Json level;
        level["level"] = j;
        level["A"] = rat_string(a);
        level["weighted_S"] = rat_string(s);
        level["ratio"] = rat_string(a / s);
        levels.push_back(level);
    }
    out["levels"] = levels;
    out["bound"] = rat_to_json(az_flag_bound(p, fl));
    return out;
}

Json cmd_zariski_surface(const Json& in) {
    auto fan = fan_from_json(in.at("fan"));
    ToricDivisor d = divisor_from_json(fan, in.at("divisor"));
    Json out;
    ZariskiPair z = zariski_surface(d);
    out["negative"] = qvec_to_json(z.negative_part.coeffs);
    out["positive"] = qvec_to_json(z.nef_part.coeffs);
    if (in.contains("flag")) {
        FlagChain fl = build_flag_chain(*fan, flag_vectors_from_json(in.at("flag")));
        ZariskiPath path = s_via_surface_zariski(d, fl);
        Json p;
        p["u1"] = rat_string(path.u1);
        p["t1"] = rat_string(path.t1);
        p["S1"] = rat_to_json(path.s1);
        p["S2"] = rat_to_json(path.s2);
        p["intervals"] = Json::array();
        for (const auto& iv : path.intervals) {
            Json jiv;
            jiv["from"] = rat_string(iv.lo);
            jiv["to"] = rat_string(iv.hi);
            jiv["degree"] = linfn_to_json(iv.degree);
            jiv["order_at_y2"] = linfn_to_json(iv.order_at_y2);
            Json neg = Json::array(), pos = Json::array();
            for (size_t r = 0; r < iv.negative_coeffs.size(); ++r) {
                neg.push_back(linfn_to_json(iv.negative_coeffs[r]));
                pos.push_back(linfn_to_json(iv.positive_coeffs[r]));
            }
            jiv["negative"] = neg;
            jiv["positive"] = pos;
            p["intervals"].push_back(jiv);
        }
        out["path"] = p;
    }
    return out;
}

Json cmd_product_check(const Json& in) {
    CoupledProblem p1 = problem_from_json(in.at("first"));
    CoupledProblem p2 = problem_from_json(in.at("second"));
    ProductCheck pc = product_check(p1, p2);
    Json out;
    out["lhs"] = rat_to_json(pc.lhs);
    out["rhs"] = rat_to_json(pc.rhs);
    out["equal"] = pc.equal;
    return out;
}

Json cmd_hirzebruch(const Json& in) {
    long m = in.at("m").get<long>();
    std::vector<HirzebruchTerm> terms;
    for (const auto& t : in.at("terms")) {
        HirzebruchTerm term;
        term.weight = t.contains("weight") ? rat_from_json(t.at("weight")) : Rat(1);
        term.a = rat_from_json(t.at("a"));
        term.b = rat_from_json(t.at("b"));
        terms.push_back(term);
    }
    HirzebruchResult r = hirzebruch_oracle(m, terms);
    Json out;
    out["p"] = qvec_to_json(r.p_values);
    out["q"] = qvec_to_json(r.q_values);
    out["delta"] = rat_to_json(r.delta);
    return out;
}

Polytope polytope_from_json(const Json& j) {
    if (!j.contains("halfspaces"))
        fail_validation("ParseError", "polytope needs halfspaces");
    std::vector<HalfSpace> hs;
    int dim = -1;
    for (const auto& h : j.at("halfspaces")) {
        HalfSpace half;
        for (const auto& c : h.at("normal")) half.normal.push_back(rat_from_json(c));
        half.offset = rat_from_json(h.at("offset"));
        if (dim < 0) dim = (int)half.normal.size();
        hs.push_back(half);
    }
    if (dim <= 0) fail_validation("ParseError", "polytope needs at least one halfspace");
    return vertices_from_halfspaces(dim, hs);
}

Json cmd_bary_bounds(const Json& in, unsigned precision) {
    BaryProfile profile;
    if (in.contains("profile")) {
        profile = profile_from_json(in.at("profile"));
    } else if (in.contains("polytope")) {
        // slice a full-dimensional body directly
        Polytope p = polytope_from_json(in.at("polytope"));
        int axis = in.contains("axis") ? in.at("axis").get<int>() : 0;
        if (!in.contains("e")) fail_validation("ParseError", "polytope input needs e");
        bool right = !in.contains("side") || in.at("side").get<std::string>() != "left";
        profile = profile_from_polytope(p, axis, rat_from_json(in.at("e")), right);
    } else {
        fail_validation("ParseError", "bary-bounds needs a profile or a polytope");
    }
    BaryOptions opts;
    opts.precision = precision;
    Json out;
    EnvelopeBound s0 = lower_bound_s0(profile, opts);
    out["s0"] = scalar_to_json(s0.threshold);
    out["lower_bound_s0"] = scalar_to_json(s0.bound);
    Rat t = in.contains("t") ? rat_from_json(in.at("t")) : profile.t1;
    EnvelopeBound h1 = lower_bound_h1(profile, t, opts);
    out["t"] = rat_string(t);
    out["s1"] = scalar_to_json(h1.threshold);
    out["lower_bound_h1"] = scalar_to_json(h1.bound);
    Rat u = in.contains("u") ? rat_from_json(in.at("u")) : profile.t1;
    Rat w = in.contains("w") ? rat_from_json(in.at("w"))
                             : admissible_h2_weight(profile, u, opts);
    out["u"] = rat_string(u);
    out["w"] = rat_string(w);
    out["upper_bound_h2"] = scalar_to_json(upper_bound_h2(profile, u, w, opts));
    return out;
}

Json cmd_curve_delta(const Json& in) {
    Rat b = in.contains("b") ? rat_from_json(in.at("b")) : Rat(0);
    std::vector<std::pair<Rat, Rat>> terms;
    for (const auto& t : in.at("terms")) {
        Rat w = t.contains("weight") ? rat_from_json(t.at("weight")) : Rat(1);
        terms.emplace_back(w, rat_from_json(t.at("degree")));
    }
    Json out;
    out["delta"] = rat_to_json(curve_delta(b, terms));
    return out;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

Json fan_to_json(const Fan& f) {
    Json out;
    out["rank"] = f.rank;
    out["rays"] = Json::array();
    for (const auto& r : f.rays) out["rays"].push_back(ivec_to_json(r));
    out["cones"] = Json::array();
    for (const auto& c : f.max_cones) out["cones"].push_back(c);
    return out;
}

Json coeffs_to_json(const QVec& coeffs) {
    Json out = Json::array();
    for (const Rat& c : coeffs) out.push_back(rat_string(c));
    return out;
}

Json problem_to_json(const CoupledProblem& p) {
    Json out;
    out["fan"] = fan_to_json(*p.fan);
    Json boundary;
    boundary["coefficients"] = coeffs_to_json(p.boundary.coeffs);
    out["boundary"] = boundary;
    out["terms"] = Json::array();
    for (const auto& [w, l] : p.terms) {
        Json t;
        t["weight"] = rat_string(w);
        t["coefficients"] = coeffs_to_json(l.coeffs);
        out["terms"].push_back(t);
    }
    out["candidates"] = Json::array();
    for (const auto& v : p.candidates) out["candidates"].push_back(ivec_to_json(v));
    out["flags"] = Json::array();
    for (const auto& fl : p.flags) {
        Json f;
        f["vectors"] = Json::array();
        for (const auto& v : fl.level_vectors) f["vectors"].push_back(ivec_to_json(v));
        out["flags"].push_back(f);
    }
    return out;
}

} // namespace

std::string canonicalize_input(const std::string& kind, const std::string& input_json) {
    Json in;
    try {
        in = Json::parse(input_json);
    } catch (const nlohmann::json::exception& e) {
        fail_validation("ParseError", e.what());
    }
    try {
        if (kind == "fan") return finish(fan_to_json(*fan_from_json(in)));
        if (kind == "divisor") {
            auto fan = fan_from_json(in.at("fan"));
            ToricDivisor d = divisor_from_json(fan, in.at("divisor"));
            Json out;
            out["fan"] = fan_to_json(*fan);
            Json dv;
            dv["coefficients"] = coeffs_to_json(d.coeffs);
            out["divisor"] = dv;
            return finish(out);
        }
        if (kind == "flag") {
            auto fan = fan_from_json(in.at("fan"));
            FlagChain fl = build_flag_chain(*fan, flag_vectors_from_json(in.at("flag")));
            Json out;
            out["fan"] = fan_to_json(*fan);
            Json f;
            f["vectors"] = Json::array();
            for (const auto& v : fl.level_vectors) f["vectors"].push_back(ivec_to_json(v));
            out["flag"] = f;
            return finish(out);
        }
        if (kind == "problem") return finish(problem_to_json(problem_from_json(in)));
    } catch (const nlohmann::json::exception& e) {
        fail_validation("ParseError", e.what());
    }
    fail_validation("ParseError", "unknown input kind '" + kind + "'");
}

JobResult run_job(const std::string& command, const std::string& input_json,
                  unsigned precision_bits) {
    Json in;
    try {
        in = Json::parse(input_json);
    } catch (const nlohmann::json::exception& e) {
        Json err;
        err["error"] = "ParseError";
        err["message"] = e.what();
        return {2, finish(err)};
    }
    try {
        Json out;
        if (command == "okounkov-body") out = cmd_okounkov_body(in);
        else if (command == "s-invariant") out = cmd_s_invariant(in);
        else if (command == "flag-s") out = cmd_flag_s(in);
        else if (command == "log-discrepancy") out = cmd_log_discrepancy(in);
        else if (command == "delta" || command == "alpha") out = cmd_thresholds(in);
        else if (command == "az-bound") out = cmd_az_bound(in);
        else if (command == "zariski-surface") out = cmd_zariski_surface(in);
        else if (command == "product-check") out = cmd_product_check(in);
        else if (command == "hirzebruch") out = cmd_hirzebruch(in);
        else if (command == "bary-bounds") out = cmd_bary_bounds(in, precision_bits);
        else if (command == "curve-delta") out = cmd_curve_delta(in);
        else {
            Json err;
            err["error"] = "UnknownCommand";
            err["message"] = "unknown command '" + command + "'";
            return {2, finish(err)};
        }
        return {0, finish(out)};
    } catch (const Error& e) {
        Json err;
        err["error"] = e.kind();
        err["message"] = e.message();
        return {e.error_class() == ErrorClass::Validation ? 2 : 3, finish(err)};
    } catch (const nlohmann::json::exception& e) {
        Json err;
        err["error"] = "ParseError";
        err["message"] = e.what();
        return {2, finish(err)};
    }
}

namespace {

struct CorpusCheck {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<CorpusCheck> corpus_checks() {
    std::vector<CorpusCheck> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, detail});
    };
    auto iv3 = [](long a, long b, long c) { return IVec{Int(a), Int(b), Int(c)}; };

    auto fan = corpus::p1_times_f1();
    ToricDivisor d = make_divisor(fan, QVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(2), Rat(1)});
    FlagChain fl =
        build_flag_chain(*fan, {iv3(1, 3, -1), iv3(1, 0, 0), iv3(0, 0, -1)});
    add("threefold multiplicity m_{3,3}", fl.m[3][3] == 3, "expected 3");
    add("threefold c' diagonal",
        fl.cprime[1][1] == 3 && fl.cprime[2][2] == 1 && fl.cprime[3][3] == Rat(1, 3),
        "expected 3, 1, 1/3");
    OkounkovBody body = okounkov_body(d, fl);
    add("threefold body has 8 vertices", body.body.vertices.size() == 8, "vertex count");
    add("threefold body volume equals the moment volume",
        volume_and_barycenter(body.body).volume ==
            volume_and_barycenter(moment_polytope(d)).volume,
        "volume identity");
    add("threefold ray S-values",
        s_t_invariants(d, iv3(0, 1, 0)).s == Rat(7, 9) &&
            s_t_invariants(d, iv3(1, 0, 0)).s == Rat(1, 2) &&
            s_t_invariants(d, iv3(0, 0, -1)).s == Rat(4, 9),
        "expected 7/9, 1/2, 4/9");
    add("threefold flag S-values",
        flag_s_invariant(d, fl, 1) == Rat(59, 18) && flag_s_invariant(d, fl, 2) == Rat(1, 2) &&
            flag_s_invariant(d, fl, 3) == Rat(4, 27),
        "expected 59/18, 1/2, 4/27");
    BoundaryData b0 = make_boundary(fan, QVec(6, Rat(0)));
    add("threefold flag A-values",
        flag_log_discrepancy(b0, fl, 1) == 5 && flag_log_discrepancy(b0, fl, 2) == 1 &&
            flag_log_discrepancy(b0, fl, 3) == Rat(1, 3),
        "expected 5, 1, 1/3");

    auto f1 = corpus::hirzebruch(1);
    BoundaryData f1b0 = make_boundary(f1, QVec(4, Rat(0)));
    ToricDivisor antican = make_divisor(f1, QVec{Rat(0), Rat(0), Rat(1), Rat(2)});
    std::vector<std::vector<IVec>> flags;
    for (const auto& mc : f1->max_cones) {
        flags.push_back({f1->rays[mc[0]], f1->rays[mc[1]]});
        flags.push_back({f1->rays[mc[1]], f1->rays[mc[0]]});
    }
    ThresholdReport rep = coupled_thresholds(
        make_problem(f1, f1b0, {{Rat(1), antican}}, {}, flags));
    add("anticanonical delta on the first Hirzebruch surface",
        rep.delta_upper == Rat(6, 7) && rep.certified, "expected 6/7 certified");
    HirzebruchResult hz = hirzebruch_oracle(1, {{Rat(1), Rat(2), Rat(3)}});
    add("Hirzebruch closed form", hz.delta == Rat(6, 7) && hz.p_values[0] == Rat(7, 6) &&
                                      hz.q_values[0] == Rat(13, 12),
        "expected 6/7, 7/6, 13/12");

    FlagChain sfl = build_flag_chain(*f1, {IVec{Int(0), Int(1)}, IVec{Int(-1), Int(1)}});
    ZariskiPath path = s_via_surface_zariski(antican, sfl);
    add("surface S-integrals", path.s1 == Rat(7, 6) && path.s2 == Rat(13, 12),
        "expected 7/6 and 13/12");

    ToricDivisor steep = make_divisor(f1, QVec{Rat(0), Rat(0), Rat(-1), Rat(3)});
    ZariskiPair z = zariski_surface(steep);
    add("Zariski negative part",
        z.negative_part.coeffs == QVec{Rat(0), Rat(1), Rat(0), Rat(0)},
        "expected one copy of the (-1)-curve");

    add("curve delta", curve_delta(Rat(1, 2), {{Rat(1), Rat(2)}}) == Rat(1, 2),
        "expected 1/2");

    auto p1 = corpus::projective_line();
    BoundaryData p1b0 = make_boundary(p1, QVec(2, Rat(0)));
    CoupledProblem cp = make_problem(
        p1, p1b0,
        {{Rat(1), make_divisor(p1, QVec{Rat(0), Rat(1)})},
         {Rat(1), make_divisor(p1, QVec{Rat(0), Rat(1)})}},
        {}, {});
    ProductCheck pc = product_check(cp, cp);
    add("product formula", pc.equal && pc.lhs == 1, "expected delta 1 on both sides");

    // unit square barycenter bounds are exact at e = 1/2
    std::vector<HalfSpace> sq = {{{Rat(1), Rat(0)}, Rat(0)},
                                 {{Rat(0), Rat(1)}, Rat(0)},
                                 {{Rat(-1), Rat(0)}, Rat(-1)},
                                 {{Rat(0), Rat(-1)}, Rat(-1)}};
    BaryProfile prof =
        profile_from_polytope(vertices_from_halfspaces(2, sq), 0, Rat(1, 2), true);
    EnvelopeBound s0 = lower_bound_s0(prof);
    Scalar up = upper_bound_h2(prof, Rat(1), Rat(1));
    add("square barycenter sandwich is tight",
        s0.bound.exact() && s0.bound.rat() == Rat(1, 2) && up.exact() &&
            up.rat() == Rat(1, 2),
        "expected exactly 1/2");

    add("line bound closed form (d = n)",
        [&] {
            Scalar v = line_s_lower_bound(2, 2, Rat(4), Rat(2), Rat(2));
            return v.exact() && v.rat() == 1;
        }(),
        "expected 1");
    return out;
}

} // namespace

JobResult run_corpus() {
    std::ostringstream os;
    bool all_ok = true;
    std::vector<CorpusCheck> checks;
    try {
        checks = corpus_checks();
    } catch (const Error& e) {
        os << "FAIL corpus aborted: " << e.what() << "\n";
        return {1, os.str()};
    }
    for (const auto& c : checks) {
        all_ok = all_ok && c.ok;
        os << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.ok) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << (all_ok ? "corpus: all checks passed\n" : "corpus: FAILURES\n");
    return {all_ok ? 0 : 1, os.str()};
}

} // namespace toric
