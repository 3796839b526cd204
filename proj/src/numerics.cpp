#include "famval/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace famval {

double compensated_sum(std::span<const double> xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double compensated_dot(std::span<const double> w, std::span<const double> v) {
    if (w.size() != v.size()) {
        throw std::invalid_argument("compensated_dot: length mismatch");
    }
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double x = w[i] * v[i];
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

}  // namespace famval
