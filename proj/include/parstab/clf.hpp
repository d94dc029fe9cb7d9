#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/system.hpp"

namespace parstab {

/// Exact sign tests for a quadratic Lyapunov candidate V = 1/2 y^T Q y with
/// quadratic generator data: a(x) = y^T D y and b(x) = B y on the stabilized
/// coordinates. The candidate certifies the stabilizability conditions iff
/// Q is positive definite and a + alpha/2 is nonpositive on the uncontrolled
/// subspace {y : B y = 0}, where alpha = gamma ||y||^2.
struct QuadraticSclfCertificate {
    Matrix v_form;      // Q, m x m
    Matrix drift_form;  // D, m x m (symmetric)
    Matrix input_rows;  // B, k x m
    double gamma = 1.0;
};

struct CertificateResult {
    double v_min_eigenvalue = 0.0;
    bool v_positive_definite = false;
    double decrease_max_eigenvalue = 0.0;  // of (D + gamma/2 I) restricted to ker B
    bool decrease_ok = false;
    bool ok() const { return v_positive_definite && decrease_ok; }
};

CertificateResult evaluate_certificate(const QuadraticSclfCertificate& cert);

/// Throws IndefiniteClf when the certificate fails either sign condition.
void require_definite(const QuadraticSclfCertificate& cert);

/// A C^2 Lyapunov candidate with analytic derivatives and the quadratic
/// comparison rate gamma, alpha(s) = gamma s^2. Models that are quadratic
/// forms in y attach the exact certificate.
struct Clf {
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::function<Matrix(const Vector&)> hessian;
    double comparison_rate = 1.0;  // gamma
    std::optional<QuadraticSclfCertificate> certificate;

    double alpha(double y_norm) const { return comparison_rate * y_norm * y_norm; }
};

/// The generator of V along the control system, split into the part that is
/// independent of the control and the row vector multiplying it:
///   L_u V = a(x) + b(x) . u.
struct GeneratorPair {
    double a = 0.0;
    Vector b;
};

/// a = grad V . f + 1/2 tr(sigma(x,0) sigma(x,0)^T Hess V),  b = g^T grad V.
/// Control-dependent diffusion rows are verified against the Hessian first
/// (ControlNoiseLeak if any meets a nonzero entry) and excluded from the
/// trace. Throws NumericalBlowup on non-finite results.
GeneratorPair generator_pair(const StochasticControlSystem& system, const Clf& clf,
                             const Vector& x);

using StateSampler = std::function<Vector(std::mt19937_64&)>;

struct SclfReport {
    std::vector<Vector> bound_violations;     // V <= 0 at a sampled state with y != 0
    std::vector<Vector> decrease_violations;  // L_h V > -alpha/2 at a sampled state
    std::optional<CertificateResult> certificate;
    int samples = 0;
    std::vector<std::pair<double, double>> envelope;  // sorted (||y||, max V up to ||y||)

    bool pass() const {
        return bound_violations.empty() && decrease_violations.empty() &&
               (!certificate || certificate->ok());
    }
};

/// Samples N states, checking positivity of V off {y = 0}, fitting the
/// monotone envelope of V over ||y||, and checking the closed-loop decrease
/// L_h V <= -alpha(||y||)/2 under the universal feedback. When the Clf
/// carries a quadratic certificate, the exact eigenvalue tests run as well.
SclfReport check_sclf(const StochasticControlSystem& system, const Partition& partition,
                      const Clf& clf, const StateSampler& sampler, int n_samples,
                      std::uint64_t seed = 0);

enum class SmallControlOutcome { Confirmed, Failed, Inconclusive };

struct SmallControlResult {
    SmallControlOutcome outcome = SmallControlOutcome::Inconclusive;
    std::vector<double> radii;
    std::vector<double> max_control_norms;
    bool passed() const { return outcome == SmallControlOutcome::Confirmed; }
};

/// Empirical check of the small control property at a point with y = 0:
/// samples shrinking balls around x0 and requires the feedback norm to fall
/// below eps, monotonically over the sweep. A non-monotone trend reports
/// Inconclusive. Throws std::invalid_argument when x0 has y != 0.
SmallControlResult check_small_control(const StochasticControlSystem& system,
                                       const Partition& partition, const Clf& clf,
                                       const Vector& x0, double eps,
                                       const std::vector<double>& radii = {1e-1, 1e-2, 1e-3,
                                                                           1e-4},
                                       int samples_per_radius = 200,
                                       std::uint64_t seed = 0);

}  // namespace parstab
