#include "tav/error.hpp"

namespace tav {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ZeroAtNegativeExponent: return "ZeroAtNegativeExponent";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::PrimePowerInput: return "PrimePowerInput";
    case ErrorKind::MultiComponentLink: return "MultiComponentLink";
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::NotCyclicAbelianization: return "NotCyclicAbelianization";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::MissingLongitude: return "MissingLongitude";
    case ErrorKind::DeficiencyViolation: return "DeficiencyViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::KnotNotFound: return "KnotNotFound";
    case ErrorKind::GroupNotFound: return "GroupNotFound";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::InvalidHom: return "InvalidHom";
    case ErrorKind::NotClosedUnderAction: return "NotClosedUnderAction";
    case ErrorKind::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::ProvenanceMismatch: return "ProvenanceMismatch";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& msg)
{
    throw Error(kind, msg);
}

} // namespace tav
