#ifndef STURMIAN_ERROR_HPP
#define STURMIAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sturmian {

enum class Errc {
    SyntaxError,
    DuplicateVertex,
    UnknownVertexInEdge,
    UnknownVertex,
    RadiusTooLarge,
    TruncationHit,
    EmptyWindow,
    NotSturmian,
    AmbiguousAssignment,
    IllDefined,
    EndMismatch,
    IndexOutOfRange,
    DecompositionMismatch,
    HorizonTooShort,
    Inadmissible,
    PrecisionInsufficient,
    PrefixTooShort,
    InvalidArgument
};

const char* errc_name(Errc c);

/* Every failure raised by the library.  `where` carries the line, level,
   vertex or step the condition refers to (-1 if none applies). */
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg, long long where = -1);
    Errc code() const { return code_; }
    long long where() const { return where_; }

private:
    Errc code_;
    long long where_;
};

} // namespace sturmian

#endif
