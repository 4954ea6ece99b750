#include "rankin/newton.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace heckelab {

namespace {

// cross product orientation for the lower hull
Rational cross(const std::pair<long, Rational>& o, const std::pair<long, Rational>& a,
               const std::pair<long, Rational>& b) {
    Rational ax = Rational(a.first - o.first), ay = a.second - o.second;
    Rational bx = Rational(b.first - o.first), by = b.second - o.second;
    return ax * by - ay * bx;
}

std::string fixed2(const Rational& v) {
    // deterministic two-decimal rendering via exact rounding toward -inf
    mpz_class scaled_num = v.num() * 100;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v.den().get_mpz_t());
    mpz_class whole, frac;
    mpz_fdiv_qr_ui(whole.get_mpz_t(), frac.get_mpz_t(), q.get_mpz_t(), 100);
    std::string f = frac.get_str();
    if (f.size() < 2) f = std::string(2 - f.size(), '0') + f;
    return whole.get_str() + "." + f;
}

}  // namespace

bool NewtonPolygon::slopes_integral() const {
    for (const auto& s : slopes)
        if (!s.slope.is_integer()) return false;
    return true;
}

NewtonPolygon newton_polygon(const std::vector<std::optional<Rational>>& valuations) {
    NewtonPolygon np;
    for (size_t i = 0; i < valuations.size(); ++i)
        if (valuations[i]) np.points.emplace_back(static_cast<long>(i), *valuations[i]);
    if (np.points.empty()) fail(errc::empty_input, "no points for a Newton polygon");

    // monotone chain, lower hull only (points already sorted by degree)
    for (const auto& pt : np.points) {
        auto& h = np.vertices;
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt).sign() <= 0) h.pop_back();
        h.push_back(pt);
    }
    for (size_t i = 1; i < np.vertices.size(); ++i) {
        long run = np.vertices[i].first - np.vertices[i - 1].first;
        Rational rise = np.vertices[i].second - np.vertices[i - 1].second;
        np.slopes.push_back({rise / Rational(run), run});
    }
    np.height = np.points.back().second - np.points.front().second;
    return np;
}

Rational coefficient_valuation(const MultiPoly& c, const std::map<Var, long>& weights) {
    if (c.is_zero()) fail(errc::invalid_input, "valuation of the zero polynomial");
    bool first = true;
    Rational best;
    for (const auto& [m, coef] : c.terms()) {
        Rational v = Rational(m.exp(Var::p)) + Rational(m.exp(Var::u), 2);
        for (const auto& [gv, w] : weights) v += Rational(m.exp(gv) * w);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

NewtonPolygon newton_from_coefficients(const std::vector<MultiPoly>& coeffs,
                                       const std::map<Var, long>& weights) {
    std::vector<std::optional<Rational>> vals;
    for (const auto& c : coeffs) {
        if (c.is_zero())
            vals.push_back(std::nullopt);
        else
            vals.push_back(coefficient_valuation(c, weights));
    }
    bool any = false;
    for (const auto& v : vals) any = any || v.has_value();
    if (!any) fail(errc::empty_input, "all coefficients are zero");
    return newton_polygon(vals);
}

nlohmann::ordered_json NewtonPolygon::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    auto pts = nlohmann::ordered_json::array();
    for (const auto& [d, v] : points) pts.push_back({d, v.str()});
    j["points"] = pts;
    auto hull = nlohmann::ordered_json::array();
    for (const auto& [d, v] : vertices) hull.push_back({d, v.str()});
    j["vertices"] = hull;
    auto sl = nlohmann::ordered_json::array();
    for (const auto& s : slopes) sl.push_back({{"slope", s.slope.str()}, {"multiplicity", s.multiplicity}});
    j["slopes"] = sl;
    j["slopes_integral"] = slopes_integral();
    j["height"] = height.str();
    return j;
}

std::string NewtonPolygon::to_csv() const {
    std::ostringstream os;
    os << "degree,valuation\n";
    for (const auto& [d, v] : points) {
        os << d << ',';
        if (v.is_integer())
            os << v.num().get_str();
        else
            os << v.str();
        os << '\n';
    }
    return os.str();
}

std::string NewtonPolygon::to_svg() const {
    // integer lattice, 40 px per unit, vertical axis flipped
    const long px = 40;
    Rational max_v = points.front().second;
    for (const auto& [d, v] : points)
        if (max_v < v) max_v = v;
    long max_d = points.back().first;
    auto ypix = [&](const Rational& v) { return fixed2((max_v - v) * Rational(px)); };

    std::ostringstream os;
    long width = max_d * px + 2 * px;
    mpz_class height_px_z = ((max_v * Rational(px)).num() / (max_v * Rational(px)).den());
    long height_px = height_px_z.get_si() + 2 * px;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height_px << "\" viewBox=\"" << -px << " " << -px << " " << width << " " << height_px
       << "\">\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [d, v] : vertices) {
        if (!first) os << ' ';
        first = false;
        os << d * px << ',' << ypix(v);
    }
    os << "\"/>\n";
    for (const auto& [d, v] : points)
        os << "  <circle cx=\"" << d * px << "\" cy=\"" << ypix(v) << "\" r=\"3\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace heckelab
