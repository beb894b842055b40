#include "unipart/errors.hpp"

namespace unipart {

const char* errc_name(errc c) {
    switch (c) {
        case errc::conductor_mismatch: return "ConductorMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::conductor_overflow: return "ConductorOverflow";
        case errc::non_square: return "NonSquare";
        case errc::order_violation: return "OrderViolation";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_unitary: return "NotUnitary";
        case errc::not_a_p_group: return "NotAPGroup";
        case errc::is_elementary_abelian: return "IsElementaryAbelian";
        case errc::is_trivial: return "IsTrivial";
        case errc::not_projective_order_p: return "NotProjectiveOrderP";
        case errc::non_abelian_unsupported: return "NonAbelianUnsupported";
        case errc::not_invariant: return "NotInvariant";
        case errc::not_strongly_fixed: return "NotStronglyFixed";
        case errc::not_weakly_fixed: return "NotWeaklyFixed";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

} // namespace unipart
