#pragma once

#include <stdexcept>
#include <string>

namespace squareham {

// Machine-checkable failure categories. Verification failures are not
// errors (they travel in VerificationReport); these are contract and
// input violations.
enum class ErrorCode {
    DartReused,
    DanglingDart,
    LoopEdge,
    NotPlanarEmbedding,
    Disconnected,
    BridgeEdge,
    ChordEndpointsEqual,
    ChordParallelInSimple,
    CornerNotOnFace,
    UnknownVertex,
    MatchingNotPerfect,
    NotCubic,
    DegreeViolation,
    LimitExceeded,
    DualDisconnectedOverX,
    ParityClash,
    NoBondOrdering,
    DiamondOverlap,
    EdgeNotPresentForRemoval,
    UnknownName,
    BadParity,
    SyntaxError,
    SemanticError,
    SizeLimit,
    LayoutDegenerate,
    VerificationFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace squareham
