#include "heckelab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numeric>

#include "core/errors.hpp"
#include "hecke/dirichlet.hpp"
#include "hecke/euler.hpp"
#include "hecke/spherical.hpp"
#include "lifts/families.hpp"
#include "lifts/ikeda.hpp"
#include "motives/gamma.hpp"
#include "motives/hodge.hpp"
#include "motives/padic.hpp"
#include "rankin/newton.hpp"
#include "rankin/pipeline.hpp"
#include "rankin/reconstruct.hpp"
#include "report.hpp"

using namespace heckelab;
using nlohmann::ordered_json;

namespace {

thread_local std::string g_last_error;

hl_status map_code(errc c) {
    switch (c) {
        case errc::none: return HL_OK;
        case errc::verification_failed: return HL_VERIFICATION_FAILED;
        case errc::invalid_input: return HL_INVALID_INPUT;
        case errc::parse_error: return HL_PARSE_ERROR;
        case errc::not_divisible: return HL_NOT_DIVISIBLE;
        case errc::not_a_unit: return HL_NOT_A_UNIT;
        case errc::inconsistent: return HL_INCONSISTENT;
        case errc::underdetermined: return HL_UNDERDETERMINED;
        case errc::not_in_image: return HL_NOT_IN_IMAGE;
        case errc::unsupported_genus: return HL_UNSUPPORTED_GENUS;
        case errc::weight_too_small: return HL_WEIGHT_TOO_SMALL;
        case errc::non_invertible_parameter: return HL_NON_INVERTIBLE_PARAMETER;
        case errc::pole: return HL_POLE;
        case errc::negative_order: return HL_NEGATIVE_ORDER;
        case errc::zero_input: return HL_ZERO_INPUT;
        case errc::congruence_hypothesis_fails: return HL_CONGRUENCE_HYPOTHESIS_FAILS;
        case errc::empty_input: return HL_EMPTY_INPUT;
    }
    return HL_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hl_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return HL_PARSE_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HL_INTERNAL;
    }
}

hl_status finish_report(RunReport& rep, char** out) {
    if (!out) {
        g_last_error = "null report out-parameter";
        return HL_INVALID_INPUT;
    }
    *out = dup_string(rep.dump());
    if (rep.status == RunReport::Status::pass) return HL_OK;
    g_last_error = "one or more checks failed; see the report details";
    return HL_VERIFICATION_FAILED;
}

ordered_json check_json(bool pass, const std::string& detail) {
    ordered_json j = ordered_json::object();
    j["pass"] = pass;
    j["detail"] = detail;
    return j;
}

// ---- rankin ----

ordered_json laurent_element_json(const rankin::LaurentElement& e) {
    ordered_json j = ordered_json::object();
    j["element"] = hecke_element_to_json(e.poly, true);
    j["p_denominator_exponent"] = e.p_exp;
    return j;
}

ordered_json reconstruction_series_json(const std::vector<rankin::LaurentElement>& v) {
    ordered_json j = ordered_json::object();
    for (size_t d = 0; d < v.size(); ++d) {
        if (v[d].is_zero()) continue;
        j[std::to_string(d)] = laurent_element_json(v[d]);
    }
    return j;
}

ordered_json newton_bundle_json(const NewtonPolygon& np) {
    ordered_json j = np.to_json();
    j["csv"] = np.to_csv();
    j["svg"] = np.to_svg();
    return j;
}

hl_status run_rankin_impl(int genus, int reconstruct, int check_feq, int series_order,
                          char** report) {
    if (genus != 1 && genus != 2) {
        g_last_error = "genus must be 1 or 2";
        return HL_INVALID_INPUT;
    }
    if (series_order <= 0) series_order = 8;
    if (series_order < 4) series_order = 4;
    if (series_order > 12) series_order = 12;

    RunReport rep;
    rep.command = "rankin";

    auto terms = rankin::tensor_partial_fractions(genus);
    rep.details["partial_fraction_count"] = terms.size();

    rankin::Decomposition d = rankin::combine_and_extract(genus);
    ordered_json dens = ordered_json::array();
    for (const auto& f : d.denominator_factors) dens.push_back(f.to_json());
    rep.details["denominator_factors"] = dens;
    rep.details["quadratic_factor"] = d.quadratic_factor.to_json();
    ordered_json rj = ordered_json::object();
    rj["numerator"] = d.r_num.to_json();
    rj["p_denominator_exponent"] = d.r_p_exp;
    rj["degree"] = d.r_num.degree(Var::X);
    ordered_json degs = ordered_json::array();
    auto r_cs = d.r_num.coefficients_in(Var::X);
    for (size_t k = 0; k < r_cs.size(); ++k)
        if (!r_cs[k].is_zero()) degs.push_back(k);
    rj["degrees_present"] = degs;
    rep.details["r"] = rj;
    rep.details["s"] = d.s.to_json();
    rep.details["s_degree"] = d.s.degree(Var::X);

    rankin::SeriesCheck sc = rankin::series_oracle_check(d, series_order - 2);
    rep.details["series_oracle"] = check_json(sc.pass, sc.detail);
    rep.merge_check(sc.pass);

    if (genus == 1) {
        rankin::OperatorFormCheck op = rankin::genus1_operator_form_check();
        rep.details["operator_form"] = check_json(op.pass, op.detail);
        rep.merge_check(op.pass);
    }

    if (reconstruct || check_feq) {
        rankin::Reconstruction rec = rankin::reconstruct_decomposition(d);
        ordered_json recj = ordered_json::object();
        recj["R"] = reconstruction_series_json(rec.r);
        recj["S"] = reconstruction_series_json(rec.s);
        recj["quadratic"] = reconstruction_series_json(rec.quad);
        recj["coefficients_integral"] = rec.all_integral();
        recj["max_p_denominator"] = rec.max_p_denominator();
        rep.merge_check(rec.all_integral());
        if (genus == 2) {
            bool r1 = rec.r[1].is_zero(), r11 = rec.r[11].is_zero();
            recj["r1_zero"] = r1;
            recj["r11_zero"] = r11;
            rep.merge_check(r1 && r11);
        }
        rep.details["reconstruction"] = recj;

        std::vector<MultiPoly> rc, sc2;
        for (const auto& e : rec.r) rc.push_back(e.poly);
        for (const auto& e : rec.s) sc2.push_back(e.poly);
        ordered_json nj = ordered_json::object();
        NewtonPolygon npr = newton_from_coefficients(rc);
        NewtonPolygon nps = newton_from_coefficients(sc2);
        nj["R"] = newton_bundle_json(npr);
        nj["S"] = newton_bundle_json(nps);
        nj["slopes_integral"] = npr.slopes_integral() && nps.slopes_integral();
        // informational comparison against the reported heights
        nj["expected_heights_informational"] = {34, 48};
        nj["heights_match_report"] =
            npr.height == Rational(34) && nps.height == Rational(48);
        rep.merge_check(npr.slopes_integral() && nps.slopes_integral());
        rep.details["newton"] = nj;

        if (check_feq) {
            auto fe = rankin::check_s_functional_equation(rec);
            rep.details["functional_equation"] = check_json(fe.pass, fe.detail);
            rep.merge_check(fe.pass);
        }
    }
    return finish_report(rep, report);
}

// ---- euler ----

hl_status run_euler_impl(const char* type, int genus, long weight, int eisenstein,
                         long specialize_p, char** report) {
    if (!type) {
        g_last_error = "missing factor type";
        return HL_INVALID_INPUT;
    }
    std::string t = type;
    RunReport rep;
    rep.command = "euler";
    rep.details["type"] = t;
    auto maybe_specialize = [&](const MultiPoly& f) {
        if (specialize_p < 2) return f;
        if (f.degree(Var::u) > 0)
            fail(errc::invalid_input, "cannot specialize p under half-integral powers");
        return f.substitute(Var::p, MultiPoly(specialize_p));
    };
    if (specialize_p >= 2) rep.details["specialized_p"] = specialize_p;

    if (t == "triple") {
        std::array<std::pair<MultiPoly, MultiPoly>, 3> pairs{
            {{MultiPoly::variable(Var::x1), MultiPoly::variable(Var::y1)},
             {MultiPoly::variable(Var::x2), MultiPoly::variable(Var::y2)},
             {MultiPoly::variable(Var::x3), MultiPoly::variable(Var::y3)}}};
        MultiPoly f = maybe_specialize(triple_factor(pairs));
        rep.details["factor"] = f.to_json();
        rep.details["degree"] = f.degree(Var::X);
        rep.merge_check(f.degree(Var::X) == 8);
        rep.merge_check(f.coefficients_in(Var::X)[0].is_one());
        return finish_report(rep, report);
    }

    SatakeParams sp = eisenstein ? SatakeParams::eisenstein(genus, weight)
                                 : SatakeParams::symbolic(genus,
                                                          weight > 0 ? std::optional<long>(weight)
                                                                     : std::nullopt);
    if (t == "spinor") {
        MultiPoly f = maybe_specialize(spinor_factor(sp));
        rep.details["factor"] = f.to_json();
        rep.details["degree"] = f.degree(Var::X);
        rep.merge_check(f.degree(Var::X) == (1 << genus));
        rep.merge_check(f.coefficients_in(Var::X)[0].is_one());
    } else if (t == "standard") {
        ClearedFactor f = standard_factor(sp);
        f.cleared = maybe_specialize(f.cleared);
        f.multiplier = maybe_specialize(f.multiplier);
        rep.details["cleared"] = f.cleared.to_json();
        rep.details["multiplier"] = f.multiplier.to_json();
        rep.details["degree"] = f.cleared.degree(Var::X);
        rep.merge_check(f.cleared.degree(Var::X) == 2 * genus + 1);
        // constant term of cleared/multiplier is 1
        rep.merge_check(f.cleared.coefficients_in(Var::X)[0] == f.multiplier);
    } else {
        g_last_error = "unknown factor type '" + t + "'";
        return HL_INVALID_INPUT;
    }
    if (eisenstein) {
        CheckReport n = check_normalization(sp);
        rep.details["normalization"] = check_json(n.pass, n.detail);
        rep.merge_check(n.pass);
    }
    return finish_report(rep, report);
}

// ---- hodge ----

hl_status run_hodge_impl(int genus, long weight, long tensor_weight, int check_lift_m,
                         char** report) {
    RunReport rep;
    rep.command = "hodge";
    HodgeType spin = hodge_spin(genus, weight);
    rep.details["spin"] = spin.to_json();
    rep.details["standard"] = hodge_standard(genus, weight).to_json();
    if (tensor_weight >= 0) {
        HodgeType t = hodge_tensor(spin, hodge_spin(genus, tensor_weight));
        rep.details["tensor"] = t.to_json();
    }
    if (check_lift_m > 0) {
        LiftHodgeReport r = check_lift_hodge(check_lift_m, weight);
        ordered_json lj = check_json(r.pass, r.detail);
        lj["rank"] = r.rank;
        rep.details["lift_check"] = lj;
        rep.merge_check(r.pass);
    }
    return finish_report(rep, report);
}

// ---- gamma ----

hl_status run_gamma_impl(const char* kind, const long* weights, size_t weight_count,
                         int numeric_checks, char** report) {
    if (!kind) {
        g_last_error = "missing gamma kind";
        return HL_INVALID_INPUT;
    }
    std::string k = kind;
    GammaKind gk;
    if (k == "spin3") gk = GammaKind::spin_n3;
    else if (k == "spin4") gk = GammaKind::spin_n4;
    else if (k == "tensor-g2") gk = GammaKind::tensor_g2;
    else if (k == "triple") gk = GammaKind::triple;
    else {
        g_last_error = "unknown gamma kind '" + k + "'";
        return HL_INVALID_INPUT;
    }
    std::vector<long> w(weights, weights + weight_count);
    RunReport rep;
    rep.command = "gamma";
    GammaData g = gamma_data(gk, w);
    rep.details["gamma"] = g.to_json();
    rep.details["critical_values"] = critical_values(g);
    if (numeric_checks) {
        GammaNumericReport dup = check_duplication(100, 1e-10);
        ordered_json numeric = ordered_json::object();
        numeric["duplication"] = check_json(dup.pass, dup.detail);
        const double pi = std::acos(-1.0);
        double special = std::abs(gamma_C({1.0, 0.0}) - std::complex<double>(1.0 / pi, 0.0));
        bool special_ok = special <= 1e-12 / pi;
        numeric["gamma_C_at_1"] = check_json(special_ok, "absolute error vs 1/pi: " +
                                                             std::to_string(special));
        rep.details["numeric"] = numeric;
        rep.merge_check(dup.pass && special_ok);
    }
    return finish_report(rep, report);
}

// ---- lift ----

hl_status run_lift_impl(const char* check, int n, long weight, char** report) {
    if (!check) {
        g_last_error = "missing lift check";
        return HL_INVALID_INPUT;
    }
    std::string c = check;
    RunReport rep;
    rep.command = "lift";
    rep.details["check"] = c;
    if (c == "ikeda-standard" || c == "ikeda-miyawaki") {
        IkedaParams ik = ikeda_satake(n, weight);
        rep.details["parameters"] = ik.params.to_json();
        if (!ik.warning.empty()) rep.details["warning"] = ik.warning;
        LiftCheck inv = check_lift_invariants(ik.params);
        rep.details["invariants"] = check_json(inv.pass, inv.detail);
        LiftCheck std_check = verify_ikeda_standard(n, weight, c == "ikeda-miyawaki");
        rep.details["standard_factorization"] = check_json(std_check.pass, std_check.detail);
        LiftParams fam = ikeda_family_satake(n, weight);
        rep.details["family_parameters"] = fam.to_json();
        rep.merge_check(inv.pass && std_check.pass);
    } else if (c == "eisenstein") {
        LiftCheck e = eisenstein_lift_evidence(n, weight);
        rep.details["evidence"] = check_json(e.pass, e.detail);
        rep.merge_check(e.pass);
    } else if (c == "quadratic") {
        LiftCheck q = hecke_quadratic_check(weight);
        rep.details["quadratic"] = check_json(q.pass, q.detail);
        rep.merge_check(q.pass);
    } else {
        g_last_error = "unknown lift check '" + c + "'";
        return HL_INVALID_INPUT;
    }
    return finish_report(rep, report);
}

// ---- family ----

hl_status run_family_impl(long p, const long* weights, size_t weight_count, long bound,
                          long kummer_m, char** report) {
    if (!weights || weight_count == 0) {
        g_last_error = "at least one weight is required";
        return HL_INVALID_INPUT;
    }
    RunReport rep;
    rep.command = "family";
    rep.details["p"] = p;
    rep.details["bound"] = bound;
    std::vector<FamilyPoint> points;
    ordered_json slopes = ordered_json::object();
    for (size_t i = 0; i < weight_count; ++i) {
        points.push_back(eisenstein_family_point(weights[i], p, bound));
        slopes[std::to_string(weights[i])] = points.back().slope.str();
    }
    rep.details["slopes"] = slopes;
    ordered_json adm = ordered_json::object();
    for (const auto& fp : points)
        adm[std::to_string(fp.weight)] = padic_admissibility(fp.slope).to_json();
    rep.details["admissibility"] = adm;
    rep.details["table_csv"] = family_table_csv(points);
    if (kummer_m > 0) {
        ordered_json kj = ordered_json::array();
        for (size_t i = 0; i + 1 < weight_count; ++i) {
            KummerReport kr = kummer_check(bound, weights[i], weights[i + 1], p, kummer_m);
            ordered_json e = check_json(kr.pass, kr.detail);
            e["weights"] = {weights[i], weights[i + 1]};
            kj.push_back(e);
            rep.merge_check(kr.pass);
        }
        rep.details["kummer"] = kj;
    }
    // every Eisenstein slope is 0
    for (const auto& fp : points) rep.merge_check(fp.slope.is_zero());
    return finish_report(rep, report);
}

// ---- dirichlet ----

hl_status run_dirichlet_impl(const char* factors_json, long bound, char** report) {
    if (!factors_json) {
        g_last_error = "missing factors";
        return HL_INVALID_INPUT;
    }
    ordered_json fj = ordered_json::parse(factors_json);
    if (!fj.is_object()) {
        g_last_error = "factors JSON must be an object keyed by primes";
        return HL_PARSE_ERROR;
    }
    std::map<long, MultiPoly> factors;
    for (const auto& [key, val] : fj.items()) factors[std::stol(key)] = MultiPoly::from_json(val);

    RunReport rep;
    rep.command = "dirichlet";
    DirichletCoefficients d = dirichlet_from_euler(factors, bound);
    ordered_json cj = ordered_json::object();
    for (const auto& [h, c] : d.coeff) cj[std::to_string(h)] = c.to_json();
    rep.details["coefficients"] = cj;
    rep.merge_check(d.at(1).is_one());
    bool multiplicative = true;
    for (long h1 = 2; h1 * h1 <= bound && multiplicative; ++h1)
        for (long h2 = h1 + 1; h1 * h2 <= bound; ++h2) {
            if (std::gcd(h1, h2) != 1) continue;
            if (!(d.at(h1 * h2) == d.at(h1) * d.at(h2))) {
                multiplicative = false;
                break;
            }
        }
    rep.details["multiplicative"] = multiplicative;
    rep.merge_check(multiplicative);
    return finish_report(rep, report);
}

// ---- newton ----

hl_status run_newton_impl(const char* input_json, char** report, char** csv, char** svg) {
    if (!input_json) {
        g_last_error = "missing input";
        return HL_INVALID_INPUT;
    }
    ordered_json in = ordered_json::parse(input_json);
    NewtonPolygon np;
    if (in.contains("points")) {
        long maxdeg = -1;
        for (const auto& pt : in["points"]) maxdeg = std::max(maxdeg, pt.at(0).get<long>());
        if (maxdeg < 0) {
            g_last_error = "empty point list";
            return HL_EMPTY_INPUT;
        }
        std::vector<std::optional<Rational>> vals(maxdeg + 1);
        for (const auto& pt : in["points"]) {
            long deg = pt.at(0).get<long>();
            const auto& v = pt.at(1);
            vals[deg] = v.is_string() ? Rational::parse(v.get<std::string>())
                                      : Rational(v.get<long>());
        }
        np = newton_polygon(vals);
    } else if (in.contains("coefficients")) {
        std::vector<MultiPoly> coeffs;
        for (const auto& cj : in["coefficients"]) coeffs.push_back(MultiPoly::from_json(cj));
        std::map<Var, long> weights;
        if (in.contains("weights")) {
            for (const auto& [name, w] : in["weights"].items()) {
                auto v = var_from_name(name);
                if (!v) {
                    g_last_error = "unknown variable in weights: " + name;
                    return HL_PARSE_ERROR;
                }
                weights[*v] = w.get<long>();
            }
        }
        np = newton_from_coefficients(coeffs, weights);
    } else {
        g_last_error = "input needs \"points\" or \"coefficients\"";
        return HL_PARSE_ERROR;
    }
    RunReport rep;
    rep.command = "newton";
    rep.details["polygon"] = np.to_json();
    if (csv) *csv = dup_string(np.to_csv());
    if (svg) *svg = dup_string(np.to_svg());
    return finish_report(rep, report);
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "heckelab 0.1.0"; }

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { std::free(s); }

struct hl_poly {
    MultiPoly value;
};

hl_status hl_poly_from_json(const char* json, hl_poly** out) {
    return guarded([&]() -> hl_status {
        if (!json || !out) {
            g_last_error = "null argument";
            return HL_INVALID_INPUT;
        }
        MultiPoly p = MultiPoly::from_json(ordered_json::parse(json));
        *out = new hl_poly{std::move(p)};
        return HL_OK;
    });
}

hl_status hl_poly_to_json(const hl_poly* poly, char** json_out) {
    return guarded([&]() -> hl_status {
        if (!poly || !json_out) {
            g_last_error = "null argument";
            return HL_INVALID_INPUT;
        }
        *json_out = dup_string(poly->value.to_json().dump());
        return HL_OK;
    });
}

hl_status hl_poly_binop(const hl_poly* a, const hl_poly* b, char op, hl_poly** out) {
    return guarded([&]() -> hl_status {
        if (!a || !b || !out) {
            g_last_error = "null argument";
            return HL_INVALID_INPUT;
        }
        MultiPoly r;
        switch (op) {
            case '+': r = a->value + b->value; break;
            case '-': r = a->value - b->value; break;
            case '*': r = a->value * b->value; break;
            default:
                g_last_error = std::string("unknown operation '") + op + "'";
                return HL_INVALID_INPUT;
        }
        *out = new hl_poly{std::move(r)};
        return HL_OK;
    });
}

hl_status hl_poly_exact_divide(const hl_poly* num, const hl_poly* den, hl_poly** out) {
    return guarded([&]() -> hl_status {
        if (!num || !den || !out) {
            g_last_error = "null argument";
            return HL_INVALID_INPUT;
        }
        *out = new hl_poly{exact_divide(num->value, den->value)};
        return HL_OK;
    });
}

int hl_poly_equal(const hl_poly* a, const hl_poly* b) {
    if (!a || !b) return -1;
    return a->value == b->value ? 1 : 0;
}

void hl_poly_free(hl_poly* poly) { delete poly; }

hl_status hl_run_rankin(int genus, int reconstruct, int check_feq, int series_order,
                        char** report) {
    return guarded([&] { return run_rankin_impl(genus, reconstruct, check_feq, series_order, report); });
}

hl_status hl_run_euler(const char* type, int genus, long weight, int eisenstein,
                       long specialize_p, char** report) {
    return guarded(
        [&] { return run_euler_impl(type, genus, weight, eisenstein, specialize_p, report); });
}

hl_status hl_run_hodge(int genus, long weight, long tensor_weight, int check_lift_m,
                       char** report) {
    return guarded([&] { return run_hodge_impl(genus, weight, tensor_weight, check_lift_m, report); });
}

hl_status hl_run_gamma(const char* kind, const long* weights, size_t weight_count,
                       int numeric_checks, char** report) {
    return guarded([&] { return run_gamma_impl(kind, weights, weight_count, numeric_checks, report); });
}

hl_status hl_run_lift(const char* check, int n, long weight, char** report) {
    return guarded([&] { return run_lift_impl(check, n, weight, report); });
}

hl_status hl_run_family(long p, const long* weights, size_t weight_count, long bound,
                        long kummer_m, char** report) {
    return guarded([&] { return run_family_impl(p, weights, weight_count, bound, kummer_m, report); });
}

hl_status hl_run_dirichlet(const char* factors_json, long bound, char** report) {
    return guarded([&] { return run_dirichlet_impl(factors_json, bound, report); });
}

hl_status hl_run_newton(const char* input_json, char** report, char** csv, char** svg) {
    return guarded([&] { return run_newton_impl(input_json, report, csv, svg); });
}

}  // extern "C"
