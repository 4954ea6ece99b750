#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

// Error taxonomy shared by the C++ core and the C API (see include/heckelab.h
// for the numeric mapping).
enum class errc {
    none = 0,
    verification_failed,
    invalid_input,
    parse_error,
    not_divisible,
    not_a_unit,
    inconsistent,
    underdetermined,
    not_in_image,
    unsupported_genus,
    weight_too_small,
    non_invertible_parameter,
    pole,
    negative_order,
    zero_input,
    congruence_hypothesis_fails,
    empty_input,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace heckelab
