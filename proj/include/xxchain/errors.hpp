#pragma once

#include <stdexcept>
#include <string>

namespace xxchain {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1; malformed input (usage) is handled separately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveCoupling : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NonMonotoneDual : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

struct DegenerateSpectrum : Error { using Error::Error; };
struct NegativeJSquared : Error { using Error::Error; };
struct ConditioningFailure : Error { using Error::Error; };

struct NonPositiveSpectrum : Error { using Error::Error; };
struct NotMirrorSymmetric : Error { using Error::Error; };
struct GradientTooLarge : Error { using Error::Error; };

struct MissingDualGrid : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

struct SingularResolvent : Error { using Error::Error; };
struct ImaginaryLeak : Error { using Error::Error; };
struct InsufficientPoints : Error { using Error::Error; };

} // namespace xxchain
