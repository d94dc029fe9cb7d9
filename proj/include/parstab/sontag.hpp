#pragma once

#include <functional>

#include "parstab/clf.hpp"
#include "parstab/partition.hpp"
#include "parstab/system.hpp"

namespace parstab {

enum class FeedbackBranch : int {
    ZeroB = 0,      // b below tolerance: u = 0
    Radical = 1,    // 2 sqrt(a^2 + |b|^4) >= alpha
    AlphaFloor = 2  // otherwise
};

/// Output of the universal feedback at one state: the control, the branch
/// taken, and the generator data it was built from. lhv is a + b.u, the
/// realized generator value of V under this control.
struct FeedbackResult {
    Vector u;
    FeedbackBranch branch = FeedbackBranch::ZeroB;
    double a = 0.0;
    Vector b;
    double lhv = 0.0;
};

/// Numerical zero threshold for ||b||, scaled by context.
double default_b_tolerance(const Vector& b);

/// The universal partial-stabilizing feedback:
///   u = 0                                    if ||b|| <= tol_b,
///   u_i = -b_i (a + sqrt(a^2 + ||b||^4)) / ||b||^2
///                                            if 2 sqrt(a^2 + ||b||^4) >= alpha,
///   u_i = -b_i (2a + alpha) / (2 ||b||^2)    otherwise.
/// alpha_y is alpha(||y||) at the state. Non-finite inputs are rejected.
FeedbackResult sontag_feedback(const GeneratorPair& pair, double alpha_y, double tol_b);
FeedbackResult sontag_feedback(const GeneratorPair& pair, double alpha_y);

/// Closed-form value of the generator under the universal feedback:
/// a, -sqrt(a^2 + ||b||^4), or -alpha/2 by branch.
double closed_form_lhv(const GeneratorPair& pair, double alpha_y, double tol_b);
double closed_form_lhv(const GeneratorPair& pair, double alpha_y);

/// A feedback policy bundled with the Lyapunov value used for recording.
struct Controller {
    std::function<FeedbackResult(const Vector&)> feedback;
    std::function<double(const Vector&)> lyapunov;
};

/// Controller realizing the universal formula for the given system and CLF.
Controller make_sontag_controller(const StochasticControlSystem& system,
                                  const Partition& partition, const Clf& clf);

/// Zero control everywhere; V recorded as zero unless a value callback is given.
Controller zero_controller(int k, std::function<double(const Vector&)> value = {});

}  // namespace parstab
