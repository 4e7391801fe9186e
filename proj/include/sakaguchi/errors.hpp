#pragma once

#include <stdexcept>
#include <string>

namespace sakaguchi {

// Failure codes for everything the library can reject. Tests and the CLI
// dispatch on code(), never on message text.
enum class errc {
    division_by_non_unit,
    nonvanishing_inner,
    pole_at_input,
    param_out_of_disk,
    bad_measure,
    tau_out_of_range,
    membership_check_failed,
    bad_spec,
    conditions_not_met,
    hypothesis_failed,
    denominator_vanishes,
    insufficient_coefficients,
    bound_violation,
    usage,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace sakaguchi
