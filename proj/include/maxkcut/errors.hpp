#ifndef MAXKCUT_ERRORS_HPP
#define MAXKCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxkcut {

enum class ErrorKind {
    MalformedLine,
    DuplicateEdge,
    VertexOutOfRange,
    BadParams,
    BadK,
    BadDims,
    LengthMismatch,
    HasPsdBlock,
    HasQuadraticObjective,
    NoPsdBlock,
    TooLargeUpfront,
    InvalidPeo,
    NoConvergence,
    TooLarge,
    NotOnSimplex,
    GridTooLarge,
};

/// Library error carrying a machine-checkable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace maxkcut

#endif
