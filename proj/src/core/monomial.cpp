#include "core/monomial.hpp"

#include <cassert>
#include <sstream>

#include "core/errors.hpp"

namespace heckelab {

namespace {
constexpr int kP = var_index(Var::p);
constexpr int kU = var_index(Var::u);
}  // namespace

Monomial Monomial::var(Var v, int exp) {
    if (exp < 0) fail(errc::invalid_input, "negative exponent in monomial");
    Monomial m;
    m.e[var_index(v)] = static_cast<int16_t>(exp);
    if (v == Var::u) {
        m.e[kP] = static_cast<int16_t>(exp / 2);
        m.e[kU] = static_cast<int16_t>(exp % 2);
    }
    return m;
}

bool Monomial::is_unit() const {
    for (int i = 0; i < kVarCount; ++i)
        if (e[i] != 0) return false;
    return true;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int i = 0; i < kVarCount; ++i) d += e[i];
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) {
        int s = int(e[i]) + int(o.e[i]);
        assert(s <= INT16_MAX);
        r.e[i] = static_cast<int16_t>(s);
    }
    // u^2 -> p
    if (r.e[kU] >= 2) {
        r.e[kP] = static_cast<int16_t>(r.e[kP] + r.e[kU] / 2);
        r.e[kU] = static_cast<int16_t>(r.e[kU] % 2);
    }
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) {
        if (i == kP || i == kU) continue;
        int d = int(e[i]) - int(o.e[i]);
        if (d < 0) return std::nullopt;
        r.e[i] = static_cast<int16_t>(d);
    }
    int du = int(e[kU]) - int(o.e[kU]);
    int dp = int(e[kP]) - int(o.e[kP]);
    if (du < 0) {
        // borrow: u = u * p / u^2, so lend one p and gain one u
        du += 2;
        dp -= 1;
    }
    if (dp < 0) return std::nullopt;
    r.e[kU] = static_cast<int16_t>(du);
    r.e[kP] = static_cast<int16_t>(dp);
    return r;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kVarCount; ++i) {
        if (e[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << var_name(static_cast<Var>(i));
        if (e[i] > 1) os << '^' << e[i];
    }
    if (first) return "1";
    return os.str();
}

std::optional<Monomial> Monomial::parse(const std::string& key) {
    Monomial m;
    if (key == "1" || key.empty()) return m;
    std::istringstream is(key);
    std::string tok;
    while (is >> tok) {
        std::string name = tok;
        int exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (...) {
                return std::nullopt;
            }
        }
        auto v = var_from_name(name);
        if (!v || exp < 0) return std::nullopt;
        m.e[var_index(*v)] = static_cast<int16_t>(m.e[var_index(*v)] + exp);
    }
    if (m.e[kU] >= 2) {
        m.e[kP] = static_cast<int16_t>(m.e[kP] + m.e[kU] / 2);
        m.e[kU] = static_cast<int16_t>(m.e[kU] % 2);
    }
    return m;
}

}  // namespace heckelab
