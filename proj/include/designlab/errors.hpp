#pragma once

#include <stdexcept>
#include <string>

namespace designlab {

enum class ErrorKind {
    InvalidArgument,
    SizeCap,
    Parse,
    SchemeAxiom,
    NotConnected,
    Convergence,
    GroupingAmbiguity,
    NoAction,
    Vacuous,
    NotADesign,
};

inline const char* to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::SizeCap: return "size_cap";
        case ErrorKind::Parse: return "parse_error";
        case ErrorKind::SchemeAxiom: return "scheme_axiom";
        case ErrorKind::NotConnected: return "not_connected";
        case ErrorKind::Convergence: return "no_convergence";
        case ErrorKind::GroupingAmbiguity: return "grouping_ambiguity";
        case ErrorKind::NoAction: return "no_isometry_action";
        case ErrorKind::Vacuous: return "vacuous";
        case ErrorKind::NotADesign: return "not_a_design";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace designlab
