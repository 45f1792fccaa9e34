#pragma once

#include <stdexcept>
#include <string>

namespace fgof {

enum class Errc {
    empty_window,
    empty_side,
    zero_denominator,
    bad_k,
    degenerate_design,
    domain_error,
    empty_design,
    length_mismatch,
    too_few_reps,
    degenerate_draw,
    parse_error,
    too_few_rows,
    invalid_spec,
};

const char* errc_name(Errc c) noexcept;

// All library failures are reported through this type so callers can branch on
// the code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fgof
