#pragma once

#include <stdexcept>
#include <string>

namespace tav {

enum class ErrorKind {
    InvalidArgument,
    NotSquare,
    ZeroAtNegativeExponent,
    OrderBoundExceeded,
    EnumerationBoundExceeded,
    PrimePowerInput,
    MultiComponentLink,
    MalformedPD,
    NotCyclicAbelianization,
    NotCoprime,
    MissingLongitude,
    DeficiencyViolation,
    ParseError,
    KnotNotFound,
    GroupNotFound,
    NormalizationFailure,
    InvalidHom,
    NotClosedUnderAction,
    CatalogIncomplete,
    CacheCorrupt,
    Mismatch,
    ProvenanceMismatch,
    Io,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

} // namespace tav
