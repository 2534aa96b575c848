#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace exitlab {

// Points of the plane are complex numbers throughout.
using Point = std::complex<double>;

// Absolute tolerance for geometric predicates, in domain units.
inline constexpr double kGeomTol = 1e-12;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PointOutsideDomain : Error { using Error::Error; };
struct UnsupportedVariant : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct NonpositiveVariance : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct UnsortedGrid : Error { using Error::Error; };
struct InsufficientCoverage : Error { using Error::Error; };
struct ZeroSurvival : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct SchemaMismatch : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct MaxStepsExceeded : Error { using Error::Error; };

}  // namespace exitlab
