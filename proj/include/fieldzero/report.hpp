#pragma once

/*
 * Pipeline orchestration and the machine-readable analysis report.
 *
 * The report is deterministic: keys are emitted in sorted order, every
 * exact quantity is a "p/q" string, and decimal approximations are
 * supplementary fixed-format strings. Quantities tied to charge positions
 * are stated in the normalized frame; the applied shift is recorded and
 * certified boxes are also echoed in the input frame.
 */

#include "fieldzero/config.hpp"
#include "fieldzero/directions.hpp"
#include "fieldzero/sign_product.hpp"
#include "fieldzero/verification.hpp"
#include "fieldzero/zero_finder.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <string>

namespace fieldzero {

namespace detail {

inline nlohmann::json json_rational(const Rational& q) { return q.get_str(); }

inline nlohmann::json json_poly(const UniPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).get_str());
    return a;
}

inline nlohmann::json json_box(const Box& b) {
    return nlohmann::json::array(
        {b.x.lo.get_str(), b.x.hi.get_str(), b.y.lo.get_str(), b.y.hi.get_str()});
}

inline nlohmann::json json_direction(const AlgebraicDirection& d) {
    nlohmann::json j;
    switch (d.domain) {
        case DirectionDomain::type1: j["domain"] = "type-I"; break;
        case DirectionDomain::type2: j["domain"] = "type-II"; break;
        case DirectionDomain::axis: j["domain"] = "axis"; break;
    }
    j["defining_poly"] = json_poly(d.defining_poly);
    j["interval"] = nlohmann::json::array({d.root_interval.lo.get_str(), d.root_interval.hi.get_str()});
    j["slope"] = d.slope_decimal(6);
    return j;
}

inline nlohmann::json json_suite(const SuiteReport& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["ok"] = s.ok;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& c : s.checks)
        if (!c.ok) fails.push_back({{"L", c.L}, {"detail", c.detail}});
    j["failures"] = fails;
    j["levels_checked"] = s.checks.size();
    return j;
}

inline long env_precision_default() {
    if (const char* e = std::getenv("FIELDZERO_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v >= 64) return v;
    }
    return 128;
}

}  // namespace detail

struct PipelineOptions {
    long verification_lmax = 12;
    size_t expansion_limit = 4;
    size_t resultant_limit = 2;
    Rational tolerance = pow2(-40);
    long precision_bits = 128;
};

inline PipelineOptions resolve_options(const RunConfig& cfg) {
    PipelineOptions o;
    o.precision_bits = cfg.precision_bits ? *cfg.precision_bits : detail::env_precision_default();
    if (cfg.tolerance) o.tolerance = *cfg.tolerance;
    if (cfg.lmax) o.verification_lmax = *cfg.lmax;
    if (cfg.expansion_limit) o.expansion_limit = *cfg.expansion_limit;
    return o;
}

// The full analysis: moments, directions, verification suites, certified
// zeros with diagnostics, polynomialization and bound checks.
inline nlohmann::json run_pipeline(const RunConfig& cfg) {
    PipelineOptions opt = resolve_options(cfg);
    auto [sys, shift] = cfg.normalized_system();

    nlohmann::json rep;

    // system echo
    {
        nlohmann::json charges = nlohmann::json::array();
        for (size_t j = 0; j < sys.count(); ++j)
            charges.push_back({{"position", sys.position(j).get_str()},
                               {"amplitude", sys.amplitude(j).get_str()}});
        rep["system"] = {{"charges", charges},
                         {"normalization_shift", shift.get_str()},
                         {"count", sys.count()},
                         {"precision_bits", opt.precision_bits}};
    }

    // moments and critical index
    auto mv = moments(sys);
    auto ci = critical_index(sys);
    {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : mv.values) values.push_back(v.get_str());
        rep["moments"] = {{"values", values},
                          {"critical_index", ci.L},
                          {"mu_critical", ci.mu_L.get_str()}};
    }

    // asymptotic directions
    auto dir = asymptote_directions(sys);
    {
        nlohmann::json dx = nlohmann::json::array(), dy = nlohmann::json::array();
        for (const auto& d : dir.directions_X) dx.push_back(detail::json_direction(d));
        for (const auto& d : dir.directions_Y) dy.push_back(detail::json_direction(d));
        rep["directions"] = {{"X", dx},
                             {"Y", dy},
                             {"verdict", to_string(dir.verdict)},
                             {"diagonal_boundary_hit", dir.diagonal_boundary_hit}};
    }

    // verification suites
    {
        long lmax = opt.verification_lmax;
        long inv_lmax = std::min<long>(lmax, 10);
        auto interlace = verify_interlacing(lmax);
        auto f17 = verify_identity_f17(lmax);
        auto inv = verify_inversion(inv_lmax);
        auto cd = verify_no_common_cd_root(inv_lmax);
        rep["verification"] = {{"interlacing", detail::json_suite(interlace)},
                               {"derivative_shift_identity", detail::json_suite(f17)},
                               {"inversion_identity", detail::json_suite(inv)},
                               {"cd_common_roots", detail::json_suite(cd)},
                               {"all_ok", interlace.ok && f17.ok && inv.ok && cd.ok}};
    }

    // zero set
    FindZerosOptions fz;
    fz.tolerance = opt.tolerance;
    fz.expansion_limit = opt.expansion_limit;
    fz.resultant_limit = opt.resultant_limit;
    fz.off_axis.precision = opt.precision_bits;
    if (cfg.search_box) {
        Box b = *cfg.search_box;  // input frame -> normalized frame
        fz.search_box = Box(b.x.lo + shift, b.x.hi + shift, b.y.lo, b.y.hi);
    }
    auto zr = find_zeros(sys, fz);
    auto diags = orthogonality_diagnostics(sys, zr.zeros, opt.precision_bits);
    {
        nlohmann::json zeros = nlohmann::json::array();
        for (size_t i = 0; i < zr.zeros.size(); ++i) {
            const auto& z = zr.zeros[i];
            nlohmann::json jz;
            jz["kind"] = z.kind == ZeroKind::axis ? "axis" : "off-axis";
            jz["unique"] = z.unique;
            jz["box"] = detail::json_box(z.box);
            Box input_frame(z.box.x.lo - shift, z.box.x.hi - shift, z.box.y.lo, z.box.y.hi);
            jz["box_input_frame"] = detail::json_box(input_frame);
            jz["width"] = decimal_string(z.box.max_width(), 6);
            const auto& d = diags[i];
            nlohmann::json jd;
            jd["classification"] = d.classification;
            if (d.slope_X) jd["slope_X"] = *d.slope_X;
            if (d.slope_Y) jd["slope_Y"] = *d.slope_Y;
            if (d.slope_product) jd["slope_product"] = *d.slope_product;
            if (d.inverse_cube_sum) jd["inverse_cube_sum"] = *d.inverse_cube_sum;
            if (d.error) jd["error"] = *d.error;
            jz["diagnostics"] = jd;
            zeros.push_back(jz);
        }
        nlohmann::json undecided = nlohmann::json::array();
        for (const auto& u : zr.undecided) undecided.push_back(detail::json_box(u));
        rep["zeros"] = {{"list", zeros},
                        {"count", zr.zeros.size()},
                        {"undecided", undecided},
                        {"search_box", detail::json_box(zr.search_box)},
                        {"completeness", zr.completeness == Completeness::certified_within_box
                                             ? "certified-within-box"
                                             : "heuristic-box"}};
        if (zr.search_note) rep["zeros"]["note"] = *zr.search_note;
        rep["obstruction"] =
            zr.obstruction ? nlohmann::json(zr.obstruction->text) : nlohmann::json(nullptr);
    }

    // bound checks and polynomialization
    {
        nlohmann::json bounds;
        bounds["count"] = zr.zeros.size();
        bounds["count_bound"] = zr.count_bound.get_str();
        bounds["count_ok"] = count_bound_check(zr);
        if (sys.count() <= opt.expansion_limit) {
            auto poly = build_joint_polynomial(sys, opt.expansion_limit);
            Integer paper_bound = Integer(3) * Integer(static_cast<long>(sys.count()));
            Integer two_m;
            mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(sys.count()));
            paper_bound *= two_m;
            bounds["polynomial_degree"] = poly.degree;
            bounds["polynomial_degree_reduced"] = poly.reduced.total_degree();
            bounds["degree_bound"] = paper_bound.get_str();
            bounds["degree_ok"] = Integer(poly.degree) <= paper_bound;
            bounds["degree_reduced_ok"] = Integer(poly.reduced.total_degree()) <= paper_bound;
            std::vector<Box> boxes;
            for (const auto& z : zr.zeros) boxes.push_back(z.box);
            bounds["containment_ok"] = containment_check(poly, boxes).ok;
        } else {
            bounds["polynomialization"] = "skipped: system size exceeds the expansion limit";
        }
        rep["bounds"] = bounds;
    }

    return rep;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline void save_report(const nlohmann::json& rep, const std::string& path) {
    write_text_file(path, rep.dump(2) + "\n");
}

}  // namespace fieldzero
