#include "core/multipoly.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace heckelab {

MultiPoly MultiPoly::variable(Var v, int exp) {
    MultiPoly r;
    if (exp < 0) fail(errc::invalid_input, "negative exponent");
    r.terms_[Monomial::var(v, exp)] = Rational(1);
    return r;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
    MultiPoly r;
    if (!c.is_zero()) r.terms_[m] = c;
    return r;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
    if (terms_.empty()) fail(errc::invalid_input, "leading term of zero polynomial");
    return *terms_.rbegin();
}

int MultiPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
}

int MultiPoly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = INT16_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.exp(v));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

void MultiPoly::add_scaled(const Monomial& m, const Rational& c, const MultiPoly& o) {
    if (c.is_zero()) return;
    for (const auto& [om, oc] : o.terms_) add_term(om.times(m), oc * c);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    // iterate over the smaller factor
    const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [m, c] : outer.terms()) r.add_scaled(m, c, inner);
    return r;
}

MultiPoly& MultiPoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::mul_term(const Monomial& m, const Rational& c) {
    MultiPoly r;
    r.add_scaled(m, c, *this);
    *this = std::move(r);
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1);
    MultiPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    std::vector<MultiPoly> powers{MultiPoly(1)};
    MultiPoly r;
    const int iv = var_index(v);
    for (const auto& [m, c] : terms_) {
        int k = m.e[iv];
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest.e[iv] = 0;
        MultiPoly contrib = powers[k];
        contrib.mul_term(rest, c);
        r += contrib;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    std::vector<MultiPoly> out;
    const int iv = var_index(v);
    for (const auto& [m, c] : terms_) {
        int k = m.e[iv];
        if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
        Monomial rest = m;
        rest.e[iv] = 0;
        out[k].add_term(rest, c);
    }
    if (out.empty()) out.resize(1);
    return out;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return Monomial::unit();
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kVarCount; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    return g;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        bool unit_mono = it->first.is_unit();
        if (!a.is_one() || unit_mono) {
            if (a.is_integer())
                os << a.num().get_str();
            else
                os << a.str();
            if (!unit_mono) os << '*';
        }
        if (!unit_mono) os << it->first.str();
    }
    return os.str();
}

nlohmann::ordered_json MultiPoly::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [m, c] : terms_) j[m.str()] = c.str();
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) fail(errc::parse_error, "polynomial JSON must be an object");
    MultiPoly r;
    for (const auto& [key, val] : j.items()) {
        auto m = Monomial::parse(key);
        if (!m) fail(errc::parse_error, "bad monomial key: '" + key + "'");
        if (!val.is_string()) fail(errc::parse_error, "coefficient must be a string: " + key);
        r.add_term(*m, Rational::parse(val.get<std::string>()));
    }
    return r;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
    MultiPoly q;
    MultiPoly rem(num);
    const auto& dlt = den.leading();
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading();
        auto qm = rlt.first.divided_by(dlt.first);
        if (!qm)
            fail(errc::not_divisible,
                 "not divisible: leading term " + rlt.first.str() + " vs divisor leading " +
                     dlt.first.str());
        Rational qc = rlt.second / dlt.second;
        q.add_scaled(*qm, qc, MultiPoly(1));
        rem.add_scaled(*qm, -qc, den);
    }
    return q;
}

MultiPoly p_power(int e) { return MultiPoly::variable(Var::p, e); }

MultiPoly one_minus(const MultiPoly& m) { return MultiPoly(1) - m; }

}  // namespace heckelab
