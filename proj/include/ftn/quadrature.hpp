#pragma once

#include <functional>
#include <vector>

namespace ftn {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // absolute error estimate
    size_t evals = 0;
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    size_t max_segments = 4000;
};

/// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

/// Same, but the interval is pre-split at the given breakpoints (kink
/// locations). Breakpoints outside (a, b) are ignored.
QuadResult integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                      std::vector<double> breakpoints,
                                      const QuadOptions& opts = {});

}  // namespace ftn
