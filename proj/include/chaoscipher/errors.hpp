#pragma once

#include <stdexcept>
#include <string>

namespace chaoscipher {

// Base for all library errors. name() is stable and machine-parsable; the CLI
// prints it as the last stderr line before exiting with status 2.
class ChaosError : public std::runtime_error {
public:
    ChaosError(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define CHAOSCIPHER_DEFINE_ERROR(NAME)                                  \
    class NAME : public ChaosError {                                    \
    public:                                                             \
        explicit NAME(const std::string& message)                       \
            : ChaosError(#NAME, message) {}                             \
    }

CHAOSCIPHER_DEFINE_ERROR(OrbitDiverged);
CHAOSCIPHER_DEFINE_ERROR(DegenerateTangent);
CHAOSCIPHER_DEFINE_ERROR(EntropyUnavailable);
CHAOSCIPHER_DEFINE_ERROR(InsufficientOrbit);
CHAOSCIPHER_DEFINE_ERROR(KeystreamMismatch);
CHAOSCIPHER_DEFINE_ERROR(InvalidKey);
CHAOSCIPHER_DEFINE_ERROR(UnsupportedFormat);
CHAOSCIPHER_DEFINE_ERROR(MalformedHeader);
CHAOSCIPHER_DEFINE_ERROR(TruncatedPixelData);
CHAOSCIPHER_DEFINE_ERROR(IoFailure);
CHAOSCIPHER_DEFINE_ERROR(ShapeMismatch);
CHAOSCIPHER_DEFINE_ERROR(DegenerateVariance);
CHAOSCIPHER_DEFINE_ERROR(TooSmall);
CHAOSCIPHER_DEFINE_ERROR(PreconditionViolation);

#undef CHAOSCIPHER_DEFINE_ERROR

}  // namespace chaoscipher
