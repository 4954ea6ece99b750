#include "core/rational_function.hpp"

#include "core/errors.hpp"

namespace heckelab {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::invalid_input, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    // strip shared monomial content
    Monomial gn = num_.monomial_content();
    Monomial gd = den_.monomial_content();
    Monomial g;
    for (int i = 0; i < kVarCount; ++i) g.e[i] = std::min(gn.e[i], gd.e[i]);
    if (!g.is_unit()) {
        num_ = exact_divide(num_, MultiPoly::term(g, Rational(1)));
        den_ = exact_divide(den_, MultiPoly::term(g, Rational(1)));
    }
    // unit leading coefficient on the denominator
    Rational lc = den_.leading().second;
    if (!lc.is_one()) {
        Rational inv = Rational(1) / lc;
        num_.scale(inv);
        den_.scale(inv);
    }
    if (num_ == den_) {
        num_ = MultiPoly(1);
        den_ = MultiPoly(1);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool RationalFunction::equals(const RationalFunction& f) const {
    return num_ * f.den_ == f.num_ * den_;
}

RationalFunction RationalFunction::reduce_by_factor(const MultiPoly& f) const {
    return RationalFunction(exact_divide(num_, f), exact_divide(den_, f));
}

nlohmann::ordered_json RationalFunction::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["numerator"] = num_.to_json();
    j["denominator"] = den_.to_json();
    return j;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace heckelab
