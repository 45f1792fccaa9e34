#include "fgof/errors.hpp"

namespace fgof {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::empty_window: return "EmptyWindow";
        case Errc::empty_side: return "EmptySide";
        case Errc::zero_denominator: return "ZeroDenominator";
        case Errc::bad_k: return "BadK";
        case Errc::degenerate_design: return "DegenerateDesign";
        case Errc::domain_error: return "DomainError";
        case Errc::empty_design: return "EmptyDesign";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::too_few_reps: return "TooFewReps";
        case Errc::degenerate_draw: return "DegenerateDraw";
        case Errc::parse_error: return "ParseError";
        case Errc::too_few_rows: return "TooFewRows";
        case Errc::invalid_spec: return "InvalidSpec";
    }
    return "Error";
}

}  // namespace fgof
