#include "rankin/reconstruct.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace heckelab {

namespace rankin {

namespace {

struct Candidate {
    int l0, l1, l2;  // exponents of T, T1, [p]
};

// candidates with l0 + 2 l1 + 2 l2 = d (l1 unused at genus 1)
std::vector<Candidate> graded_candidates(int genus, int d) {
    std::vector<Candidate> out;
    for (int l2 = 0; 2 * l2 <= d; ++l2) {
        if (genus == 1) {
            out.push_back({d - 2 * l2, 0, l2});
            continue;
        }
        for (int l1 = 0; 2 * (l1 + l2) <= d; ++l1) out.push_back({d - 2 * l1 - 2 * l2, l1, l2});
    }
    return out;
}

Monomial candidate_monomial(int genus, const Candidate& c, bool right) {
    Monomial m = Monomial::var(right ? Var::Ty : Var::Tx, c.l0);
    if (genus >= 2) m = m.times(Monomial::var(right ? Var::T1y : Var::T1x, c.l1));
    m = m.times(Monomial::var(right ? Var::Py : Var::Px, c.l2));
    return m;
}

// Image of one side candidate; cached per (genus, side, l0, l1, l2).
const PPoly& side_image(int genus, const Candidate& c, bool right) {
    static std::map<std::tuple<int, bool, int, int, int>, PPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(genus, right, c.l0, c.l1, c.l2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MultiPoly mono = MultiPoly::term(candidate_monomial(genus, c, right), Rational(1));
    PPoly img = spherical_image_ppoly(mono, genus, SphericalNorm::polynomial);
    return cache.emplace(key, std::move(img)).first->second;
}

// Reads the candidate exponents off the leading (x1, x2) exponents of an
// image within grade d; nullopt when the pattern leaves the grading.
std::optional<Candidate> candidate_from_lead(int genus, int d, int a1, int a2) {
    if (genus == 1) {
        // lead x1^{l0 + l2}, d = l0 + 2 l2
        int l2 = d - a1;
        int l0 = 2 * a1 - d;
        if (l0 < 0 || l2 < 0) return std::nullopt;
        return Candidate{l0, 0, l2};
    }
    // lead x1^{l0+l1+l2} x2^{l0+2l1+l2}, d = l0 + 2 l1 + 2 l2
    int l1 = a2 - a1;
    int l2 = d - a2;
    int l0 = a1 - l1 - l2;
    if (l0 < 0 || l1 < 0 || l2 < 0) return std::nullopt;
    if (l0 + 2 * l1 + 2 * l2 != d) return std::nullopt;
    return Candidate{l0, l1, l2};
}

struct LeadSlice {
    // exponents of (x1, x2, y1, y2) for the leading monomial, p-slice
    // collected as a Laurent coefficient
    int a1, a2, b1, b2;
    PPoly coefficient;
};

constexpr int iP = var_index(Var::p);

// leading (non-p) slice of a PPoly target
LeadSlice leading_slice(const PPoly& t) {
    const auto& terms = t.num.terms();
    auto top = terms.rbegin();
    LeadSlice s;
    s.a1 = top->first.exp(Var::x1);
    s.a2 = top->first.exp(Var::x2);
    s.b1 = top->first.exp(Var::y1);
    s.b2 = top->first.exp(Var::y2);
    Monomial pattern = top->first;
    pattern.e[iP] = 0;
    MultiPoly coeff;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Monomial m = it->first;
        m.e[iP] = 0;
        if (m != pattern) break;
        coeff += MultiPoly::term(Monomial::var(Var::p, it->first.exp(Var::p)), it->second);
    }
    s.coefficient = PPoly{std::move(coeff), t.p_exp};
    s.coefficient.normalize();
    return s;
}

void check_grading(const PPoly& target, int d) {
    for (const auto& [m, c] : target.num.terms()) {
        if (m.exp(Var::x0) != d || m.exp(Var::y0) != d)
            fail(errc::not_in_image,
                 "coefficient is not x0^d y0^d-graded at degree " + std::to_string(d));
    }
}

}  // namespace

bool LaurentElement::coefficients_integral() const {
    for (const auto& [m, c] : poly.terms())
        if (!c.is_integer()) return false;
    return true;
}

LaurentElement reconstruct_preimage(const PPoly& target, int d, int genus) {
    if (genus != 1 && genus != 2) fail(errc::unsupported_genus, "reconstruction needs genus 1 or 2");
    check_grading(target, d);

    PPoly rest = target;
    rest.normalize();
    PPoly acc{MultiPoly(), 0};  // accumulated element, Laurent in p

    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000) fail(errc::not_in_image, "reduction does not terminate");
        LeadSlice lead = leading_slice(rest);
        auto left = candidate_from_lead(genus, d, lead.a1, lead.a2);
        auto right = candidate_from_lead(genus, d, lead.b1, lead.b2);
        if (!left || !right)
            fail(errc::not_in_image, "leading monomial x1^" + std::to_string(lead.a1) + " x2^" +
                                         std::to_string(lead.a2) + " y1^" + std::to_string(lead.b1) +
                                         " y2^" + std::to_string(lead.b2) +
                                         " is outside the graded candidate set");
        const PPoly& li = side_image(genus, *left, false);
        const PPoly& ri = side_image(genus, *right, true);

        // leading p-coefficients of the images are p-monomials
        PPoly li_lead = leading_slice(li).coefficient;
        PPoly ri_lead = leading_slice(ri).coefficient;
        if (!li_lead.num.is_monomial() || !ri_lead.num.is_monomial())
            fail(errc::not_in_image, "image leading coefficient is not a p-monomial");

        // K = lead.coefficient / (li_lead * ri_lead)
        PPoly img_lead = li_lead * ri_lead;
        const auto& [ilm, ilc] = img_lead.num.leading();
        PPoly k{MultiPoly(), 0};
        k.num = lead.coefficient.num;
        k.num.scale(Rational(1) / ilc);
        k.num.mul_term(Monomial::var(Var::p, img_lead.p_exp), Rational(1));
        k.p_exp = lead.coefficient.p_exp + ilm.exp(Var::p);
        k.normalize();

        // move K * candidate into the accumulator
        Monomial cmono = candidate_monomial(genus, *left, false)
                             .times(candidate_monomial(genus, *right, true));
        PPoly contribution{MultiPoly(), 0};
        contribution.num = k.num;
        contribution.num.mul_term(cmono, Rational(1));
        contribution.p_exp = k.p_exp;
        acc += contribution;

        // subtract K * image(candidate) from the remainder; the images carry
        // their own x0^d y0^d factors
        PPoly delta = li * ri;
        delta = delta * k;
        delta.num = -delta.num;
        rest += delta;
    }

    LaurentElement out{std::move(acc.num), acc.p_exp};
    if (!hecke_support_ok(out.poly, genus, true))
        fail(errc::not_in_image, "reconstructed element leaves the tensor algebra");
    return out;
}

bool reconstruction_roundtrip_ok(const LaurentElement& e, const PPoly& target, int genus) {
    PPoly img = spherical_image_ppoly(e.poly, genus, SphericalNorm::polynomial);
    img.p_exp += e.p_exp;
    img.normalize();
    return img == target;
}

Reconstruction reconstruct_decomposition(const Decomposition& d) {
    Reconstruction rec;
    rec.genus = d.genus;
    auto quad_cs = d.quadratic_factor.coefficients_in(Var::X);
    auto s_cs = d.s.coefficients_in(Var::X);
    rec.quad.resize(quad_cs.size());
    rec.s.resize(s_cs.size());
    rec.r.resize(d.r_num.degree(Var::X) + 1);

    struct Task {
        const MultiPoly* coeff;
        int p_exp;
        int degree;
        LaurentElement* slot;
    };
    std::vector<Task> tasks;
    for (size_t k = 0; k < quad_cs.size(); ++k)
        tasks.push_back({&quad_cs[k], 0, static_cast<int>(k), &rec.quad[k]});
    for (size_t k = 0; k < s_cs.size(); ++k)
        tasks.push_back({&s_cs[k], 0, static_cast<int>(k), &rec.s[k]});
    auto r_cs = d.r_num.coefficients_in(Var::X);
    for (size_t k = 0; k < r_cs.size(); ++k)
        tasks.push_back({&r_cs[k], d.r_p_exp, static_cast<int>(k), &rec.r[k]});
    // keep the coefficient storage alive across threads
    parallel_for_index(tasks.size(), [&](size_t i) {
        PPoly target{*tasks[i].coeff, tasks[i].p_exp};
        target.normalize();
        if (target.is_zero()) {
            *tasks[i].slot = LaurentElement{};
            return;
        }
        LaurentElement e = reconstruct_preimage(target, tasks[i].degree, rec.genus);
        if (!reconstruction_roundtrip_ok(e, target, rec.genus))
            fail(errc::not_in_image, "round trip failed at X^" + std::to_string(tasks[i].degree));
        *tasks[i].slot = std::move(e);
    });
    return rec;
}

bool Reconstruction::all_integral() const {
    for (const auto* v : {&quad, &r, &s})
        for (const auto& e : *v)
            if (!e.coefficients_integral()) return false;
    return true;
}

int Reconstruction::max_p_denominator() const {
    int m = 0;
    for (const auto* v : {&quad, &r, &s})
        for (const auto& e : *v) m = std::max(m, e.p_exp);
    return m;
}

FunctionalEquationCheck check_s_functional_equation(const Reconstruction& rec) {
    const int degree = static_cast<int>(rec.s.size()) - 1;
    const int half = degree / 2;
    MultiPoly multiplier = p_power(rec.genus == 2 ? 6 : 2) * MultiPoly::variable(Var::Px) *
                           MultiPoly::variable(Var::Py);
    for (int i = 0; i <= half; ++i) {
        const LaurentElement& lo = rec.s[i];
        const LaurentElement& hi = rec.s[degree - i];
        MultiPoly rhs = lo.poly * multiplier.pow(half - i);
        // hi.poly / p^{hi.p_exp} == rhs / p^{lo.p_exp}
        if (hi.poly * p_power(lo.p_exp) != rhs * p_power(hi.p_exp))
            return {false, "functional equation fails at i = " + std::to_string(i)};
    }
    return {true, "s_(D-i) = (p^w [p](x)[p])^(D/2-i) s_i for all i"};
}

}  // namespace rankin

}  // namespace heckelab
