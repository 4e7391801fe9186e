#include "sakaguchi/errors.hpp"

namespace sakaguchi {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::division_by_non_unit: return "DivisionByNonUnit";
        case errc::nonvanishing_inner: return "NonvanishingInner";
        case errc::pole_at_input: return "PoleAtInput";
        case errc::param_out_of_disk: return "ParamOutOfDisk";
        case errc::bad_measure: return "BadMeasure";
        case errc::tau_out_of_range: return "TauOutOfRange";
        case errc::membership_check_failed: return "MembershipCheckFailed";
        case errc::bad_spec: return "BadSpec";
        case errc::conditions_not_met: return "ConditionsNotMet";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::denominator_vanishes: return "DenominatorVanishes";
        case errc::insufficient_coefficients: return "InsufficientCoefficients";
        case errc::bound_violation: return "BoundViolation";
        case errc::usage: return "Usage";
    }
    return "UnknownError";
}

} // namespace sakaguchi
