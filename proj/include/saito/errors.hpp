#pragma once

#include <stdexcept>
#include <string>

namespace saito {

struct SaitoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tree construction
struct UnknownVertex : SaitoError {
    using SaitoError::SaitoError;
};
struct Rule2EdgeMissing : SaitoError {
    using SaitoError::SaitoError;
};
struct NotComparable : SaitoError {
    using SaitoError::SaitoError;
};

// dicriticity
struct IntegralityViolation : SaitoError {
    using SaitoError::SaitoError;
};
struct UniquenessViolation : SaitoError {
    using SaitoError::SaitoError;
};
struct TreeTooLarge : SaitoError {
    using SaitoError::SaitoError;
};
struct InternalInconsistency : SaitoError {
    using SaitoError::SaitoError;
};

// curve model
struct InvalidCharacteristic : SaitoError {
    using SaitoError::SaitoError;
};
struct SmoothCurve : SaitoError {
    using SaitoError::SaitoError;
};
struct UnknownFamily : SaitoError {
    using SaitoError::SaitoError;
};
struct OddR : SaitoError {
    using SaitoError::SaitoError;
};

// analysis / moduli
struct DegenerateAssignment : SaitoError {
    using SaitoError::SaitoError;
};
struct UnsupportedInstance : SaitoError {
    using SaitoError::SaitoError;
};
struct NegativeResult : SaitoError {
    using SaitoError::SaitoError;
};

// text format; line is 1-based, 0 when not tied to a line
struct ParseError : SaitoError {
    int line;
    ParseError(int line_, const std::string& what_)
        : SaitoError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct DuplicateId : ParseError {
    using ParseError::ParseError;
};
struct ForwardReference : ParseError {
    using ParseError::ParseError;
};
struct EmptyTree : ParseError {
    using ParseError::ParseError;
};

}  // namespace saito
