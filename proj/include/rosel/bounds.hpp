#pragma once

#include <cstdint>

/// Measured constants for the space and time bounds. Tests assert against
/// these values and the README documents how they were obtained.
namespace rosel::bounds {

/// Linear-bits peak workspace is at most this many bits per input element.
inline constexpr double kLinearBitsPerElement = 4.5;

/// select_auto runs the linear-bits algorithm once the budget reaches this many
/// bits per element, so that run stays within the budget itself.
inline constexpr double kAutoLinearFactor = kLinearBitsPerElement;

/// Zone algorithm peak workspace is at most this factor times lg^2 N bits.
inline constexpr double kLogSqFactor = 12.0;

/// Budgeted algorithm peak workspace is at most this factor times S bits.
inline constexpr double kGeneralFactor = 10.0;

/// Each median-of-medians round keeps at most 3n/4 + kPruneSlack * lg N survivors.
inline constexpr double kPruneSlack = 1.0;

/// Reads during reduction to S actives are at most this factor times N lg*(N / S).
inline constexpr double kReductionReadsFactor = 24.0;

/// Elements examined while walking buckets, over all rounds, are at most this factor times N.
inline constexpr double kBucketScanFactor = 8.0;

/// Wavelet stack bits are at most this factor times the base length.
inline constexpr double kStackFactor = 4.0;

}  // namespace rosel::bounds
