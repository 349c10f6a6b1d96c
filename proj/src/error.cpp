#include "tightcat/error.hpp"

#include <cstdlib>
#include <string>

#include "tightcat/config.hpp"

namespace tightcat {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::MissingComposite: return "MissingComposite";
        case ErrorKind::AssociativityViolation: return "AssociativityViolation";
        case ErrorKind::UnitViolation: return "UnitViolation";
        case ErrorKind::DuplicateId: return "DuplicateId";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::UnknownObject: return "UnknownObject";
        case ErrorKind::FunctorialityViolation: return "FunctorialityViolation";
        case ErrorKind::FiberMismatch: return "FiberMismatch";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::SplitMismatch: return "SplitMismatch";
        case ErrorKind::RetractionFailure: return "RetractionFailure";
        case ErrorKind::NoLooseColimit: return "NoLooseColimit";
        case ErrorKind::NotSplittable: return "NotSplittable";
        case ErrorKind::NotFree: return "NotFree";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownReference: return "UnknownReference";
    }
    return "Error";
}

std::size_t default_cap() {
    static const std::size_t cap = [] {
        std::size_t v = 1000000;
        if (const char* env = std::getenv("TIGHTCAT_CAP")) {
            try {
                v = static_cast<std::size_t>(std::stoull(env));
            } catch (...) {
            }
        }
        return v;
    }();
    return cap;
}

}  // namespace tightcat
