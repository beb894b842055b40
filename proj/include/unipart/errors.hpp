#pragma once

#include <stdexcept>
#include <string>

namespace unipart {

// Domain error codes. Each maps 1:1 onto a stable machine-readable name
// used in CLI error output.
enum class errc {
    conductor_mismatch,
    division_by_zero,
    not_a_divisor,
    conductor_overflow,
    non_square,
    order_violation,
    dimension_mismatch,
    cap_exceeded,
    not_unitary,
    not_a_p_group,
    is_elementary_abelian,
    is_trivial,
    not_projective_order_p,
    non_abelian_unsupported,
    not_invariant,
    not_strongly_fixed,
    not_weakly_fixed,
    bound_exceeded,
    internal_inconsistency,
    bad_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace unipart
