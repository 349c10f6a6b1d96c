#pragma once

#include <stdexcept>
#include <string>

namespace tightcat {

enum class ErrorKind {
    MissingComposite,
    AssociativityViolation,
    UnitViolation,
    DuplicateId,
    UnknownElement,
    UnknownObject,
    FunctorialityViolation,
    FiberMismatch,
    SizeLimit,
    NotIdempotent,
    SplitMismatch,
    RetractionFailure,
    NoLooseColimit,
    NotSplittable,
    NotFree,
    TypeMismatch,
    ParseError,
    UnknownReference,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tightcat
