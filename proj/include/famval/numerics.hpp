#pragma once

#include <cstddef>
#include <span>

namespace famval {

/// Neumaier-compensated sum; error stays O(eps) independent of length.
double compensated_sum(std::span<const double> xs);

/// Compensated dot product sum_i w[i]*v[i]; spans must have equal length.
/// Picking a Dirac weight vector returns the selected value bit-exactly.
double compensated_dot(std::span<const double> w, std::span<const double> v);

/// Standard normal distribution function via erfc, accurate to ~1e-16.
double normal_cdf(double x);

}  // namespace famval
