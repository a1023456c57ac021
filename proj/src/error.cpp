#include "sturmian/error.hpp"

namespace sturmian {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::UnknownVertexInEdge: return "UnknownVertexInEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::RadiusTooLarge: return "RadiusTooLarge";
    case Errc::TruncationHit: return "TruncationHit";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::NotSturmian: return "NotSturmian";
    case Errc::AmbiguousAssignment: return "AmbiguousAssignment";
    case Errc::IllDefined: return "IllDefined";
    case Errc::EndMismatch: return "EndMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DecompositionMismatch: return "DecompositionMismatch";
    case Errc::HorizonTooShort: return "HorizonTooShort";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::PrecisionInsufficient: return "PrecisionInsufficient";
    case Errc::PrefixTooShort: return "PrefixTooShort";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& msg, long long where)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code), where_(where)
{
}

} // namespace sturmian
