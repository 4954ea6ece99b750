#include "hecke/element.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace heckelab {

namespace {

void check_genus(int genus) {
    if (genus < 1 || genus > 3) fail(errc::unsupported_genus, "genus must be 1, 2 or 3");
}

const char* display_name(Var v) {
    switch (v) {
        case Var::Tx:
        case Var::Ty:
            return "T";
        case Var::T1x:
        case Var::T1y:
            return "T1";
        case Var::T2x:
        case Var::T2y:
            return "T2";
        case Var::Px:
        case Var::Py:
            return "[p]";
        default:
            return var_name(v);
    }
}

std::string side_key(const Monomial& m, bool right) {
    std::ostringstream os;
    bool first = true;
    for (Var v : hecke_generator_vars(3, right)) {
        int e = m.exp(v);
        if (e == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << display_name(v);
        if (e > 1) os << '^' << e;
    }
    return first ? "1" : os.str();
}

}  // namespace

std::vector<Var> hecke_generator_vars(int genus, bool right_side) {
    check_genus(genus);
    if (right_side) {
        if (genus == 1) return {Var::Ty, Var::Py};
        if (genus == 2) return {Var::Ty, Var::T1y, Var::Py};
        return {Var::Ty, Var::T1y, Var::T2y, Var::Py};
    }
    if (genus == 1) return {Var::Tx, Var::Px};
    if (genus == 2) return {Var::Tx, Var::T1x, Var::Px};
    return {Var::Tx, Var::T1x, Var::T2x, Var::Px};
}

bool hecke_support_ok(const MultiPoly& poly, int genus, bool tensor) {
    check_genus(genus);
    std::array<bool, kVarCount> allowed{};
    allowed[var_index(Var::p)] = true;
    allowed[var_index(Var::X)] = true;
    for (Var v : hecke_generator_vars(genus, false)) allowed[var_index(v)] = true;
    if (tensor)
        for (Var v : hecke_generator_vars(genus, true)) allowed[var_index(v)] = true;
    for (const auto& [m, c] : poly.terms())
        for (int i = 0; i < kVarCount; ++i)
            if (m.e[i] != 0 && !allowed[i]) return false;
    return true;
}

HeckeElement HeckeElement::make(int genus, MultiPoly poly) {
    if (!hecke_support_ok(poly, genus, false))
        fail(errc::invalid_input, "element uses symbols outside the genus-" +
                                      std::to_string(genus) + " Hecke algebra");
    return HeckeElement{genus, std::move(poly)};
}

TensorHeckeElement TensorHeckeElement::make(int genus, MultiPoly poly) {
    if (!hecke_support_ok(poly, genus, true))
        fail(errc::invalid_input, "tensor element uses symbols outside the genus-" +
                                      std::to_string(genus) + " tensor Hecke algebra");
    return TensorHeckeElement{genus, std::move(poly)};
}

nlohmann::ordered_json hecke_element_to_json(const MultiPoly& poly, bool tensor) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    // group by generator monomial, canonical order inherited from the terms
    std::map<Monomial, MultiPoly, MonomialLess> groups;
    for (const auto& [m, c] : poly.terms()) {
        if (m.exp(Var::X) != 0)
            fail(errc::invalid_input, "X inside a Hecke coefficient; serialize per degree");
        Monomial gens = m;
        Monomial rest;
        rest.e[var_index(Var::p)] = m.e[var_index(Var::p)];
        gens.e[var_index(Var::p)] = 0;
        groups[gens] += MultiPoly::term(rest, c);
    }
    for (const auto& [gens, coefficient] : groups) {
        std::string key = side_key(gens, false);
        if (tensor) key += " (x) " + side_key(gens, true);
        j[key] = coefficient.to_json();
    }
    return j;
}

MultiPoly hecke_element_from_json(const nlohmann::ordered_json& j, int genus, bool tensor) {
    if (!j.is_object()) fail(errc::parse_error, "Hecke element JSON must be an object");
    MultiPoly out;
    for (const auto& [key, payload] : j.items()) {
        std::string left = key, right;
        if (tensor) {
            auto sep = key.find(" (x) ");
            if (sep == std::string::npos) fail(errc::parse_error, "missing tensor separator: " + key);
            left = key.substr(0, sep);
            right = key.substr(sep + 5);
        }
        Monomial gens;
        auto parse_side = [&](const std::string& text, bool right_side) {
            std::istringstream is(text);
            std::string tok;
            while (is >> tok) {
                if (tok == "1") continue;
                std::string name = tok;
                int exp = 1;
                auto caret = tok.find('^');
                if (caret != std::string::npos) {
                    name = tok.substr(0, caret);
                    exp = std::stoi(tok.substr(caret + 1));
                }
                Var v;
                if (name == "T") v = right_side ? Var::Ty : Var::Tx;
                else if (name == "T1") v = right_side ? Var::T1y : Var::T1x;
                else if (name == "T2") v = right_side ? Var::T2y : Var::T2x;
                else if (name == "[p]") v = right_side ? Var::Py : Var::Px;
                else fail(errc::parse_error, "unknown generator '" + name + "'");
                gens = gens.times(Monomial::var(v, exp));
            }
        };
        parse_side(left, false);
        if (tensor) parse_side(right, true);
        MultiPoly coefficient = MultiPoly::from_json(payload);
        out += coefficient * MultiPoly::term(gens, Rational(1));
    }
    if (!hecke_support_ok(out, genus, tensor)) fail(errc::parse_error, "generators exceed genus");
    return out;
}

}  // namespace heckelab
