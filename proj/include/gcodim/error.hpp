#pragma once

#include <stdexcept>
#include <string>

namespace gcodim {

enum class Errc {
    NotAssociative,
    NoIdentity,
    NoInverse,
    UnknownName,
    BadParameter,
    NotASubgroup,
    NotFoundWithinBound,
    CosetCollision,
    BadCocycle,
    BlockMismatch,
    CapExceeded,
    SizeMismatch,
    NonIntegerQuotient,
    UnsupportedStructure,
    NotRepresentable,
    EmptyUniverse,
    ParseError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Thrown when a constant leaves the q*sqrt(r)*pi^(p/2) form; carries a float approximation.
class NotRepresentableError : public Error {
public:
    NotRepresentableError(const std::string& what, double approx)
        : Error(Errc::NotRepresentable, what), approx_(approx) {}
    double approximation() const noexcept { return approx_; }

private:
    double approx_;
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotFoundWithinBound: return "NotFoundWithinBound";
    case Errc::CosetCollision: return "CosetCollision";
    case Errc::BadCocycle: return "BadCocycle";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NonIntegerQuotient: return "NonIntegerQuotient";
    case Errc::UnsupportedStructure: return "UnsupportedStructure";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::EmptyUniverse: return "EmptyUniverse";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace gcodim
