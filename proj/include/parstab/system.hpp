#pragma once

#include <functional>
#include <vector>

#include "parstab/partition.hpp"

namespace parstab {

/// Control-affine Ito system
///
///   dx = (f(x) + g(x) u) dt + sigma(x, u) dW,
///
/// with an optional non-affine drift correction for rows where the model's
/// closed-loop drift carries products of control components (the correction
/// vanishes at u = 0, so drift(x) alone is still the open-loop field).
/// The diffusion callback takes the control because closed-loop noise may
/// carry the feedback; rows where that happens are listed in
/// control_dependent_diffusion_rows so the generator computation can prove
/// they do not contribute.
struct StochasticControlSystem {
    int n = 0;    // state dimension
    int k = 0;    // control dimension
    int k_w = 0;  // Wiener channels

    std::function<Vector(const Vector&)> drift;                        // f(x), n
    std::function<Matrix(const Vector&)> input;                        // g(x), n x k
    std::function<Matrix(const Vector&, const Vector&)> diffusion;     // sigma(x,u), n x k_w
    std::function<Vector(const Vector&, const Vector&)> drift_coupling;  // optional, n

    std::vector<int> control_dependent_diffusion_rows;

    /// Full drift at state x under control u.
    Vector closed_loop_drift(const Vector& x, const Vector& u) const;
};

struct ClosedLoopRhs {
    Vector drift;      // f(x) + g(x) h(x) (+ coupling)
    Matrix diffusion;  // sigma(x, h(x))
};

/// Evaluates the closed-loop right-hand side under the feedback law.
/// Throws NumericalBlowup (with the offending coordinate) if either part
/// comes out non-finite.
ClosedLoopRhs closed_loop_rhs(const StochasticControlSystem& system,
                              const std::function<Vector(const Vector&)>& feedback,
                              const PartitionedState& state);

}  // namespace parstab
