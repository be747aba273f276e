#pragma once

#include <stdexcept>
#include <string>

namespace taskinfer {

// Input documents that cannot be parsed or fail validation. CLI exit code 2.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index construction failures (e.g. nothing in the ontology is embeddable).
// CLI exit code 3.
class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inference that cannot produce a result (empty label set after filtering,
// no rankable candidates). CLI exit code 4.
class InferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace taskinfer
