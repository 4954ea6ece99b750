#include "motives/padic.hpp"

#include "core/errors.hpp"

namespace heckelab {

nlohmann::ordered_json AdmissibilityReport::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["ord_alpha"] = ord_alpha.str();
    j["kind"] = bounded ? "bounded" : "log-growth";
    if (!bounded) j["h"] = h;
    return j;
}

AdmissibilityReport padic_admissibility(const Rational& ord_alpha) {
    if (ord_alpha.sign() < 0) fail(errc::negative_order, "ord_p(alpha_0) must be >= 0");
    AdmissibilityReport rep;
    rep.ord_alpha = ord_alpha;
    if (ord_alpha.is_zero()) {
        rep.bounded = true;
        return rep;
    }
    rep.bounded = false;
    // h = floor(2 ord) + 1
    Rational twice = ord_alpha * Rational(2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), twice.num().get_mpz_t(), twice.den().get_mpz_t());
    rep.h = fl.get_si() + 1;
    return rep;
}

}  // namespace heckelab
