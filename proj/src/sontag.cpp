#include "parstab/sontag.hpp"

#include <cmath>
#include <stdexcept>

#include "parstab/errors.hpp"

namespace parstab {

double default_b_tolerance(const Vector& b) {
    return 1e-12 * (1.0 + b.lpNorm<Eigen::Infinity>());
}

FeedbackResult sontag_feedback(const GeneratorPair& pair, double alpha_y, double tol_b) {
    if (!std::isfinite(pair.a) || !pair.b.allFinite() || !std::isfinite(alpha_y))
        throw std::invalid_argument("sontag_feedback: non-finite input");
    if (alpha_y < 0.0) throw std::invalid_argument("sontag_feedback: alpha must be >= 0");

    FeedbackResult res;
    res.a = pair.a;
    res.b = pair.b;

    const double b_norm_sq = pair.b.squaredNorm();
    if (std::sqrt(b_norm_sq) <= tol_b) {
        res.u = Vector::Zero(pair.b.size());
        res.branch = FeedbackBranch::ZeroB;
        res.lhv = pair.a;
        return res;
    }

    // sqrt(a^2 + ||b||^4) via hypot so large |a| cannot overflow the square.
    const double root = std::hypot(pair.a, b_norm_sq);
    if (2.0 * root >= alpha_y) {
        res.u = -pair.b * ((pair.a + root) / b_norm_sq);
        res.branch = FeedbackBranch::Radical;
    } else {
        res.u = -pair.b * ((2.0 * pair.a + alpha_y) / (2.0 * b_norm_sq));
        res.branch = FeedbackBranch::AlphaFloor;
    }
    res.lhv = pair.a + pair.b.dot(res.u);
    return res;
}

FeedbackResult sontag_feedback(const GeneratorPair& pair, double alpha_y) {
    return sontag_feedback(pair, alpha_y, default_b_tolerance(pair.b));
}

double closed_form_lhv(const GeneratorPair& pair, double alpha_y, double tol_b) {
    const double b_norm_sq = pair.b.squaredNorm();
    if (std::sqrt(b_norm_sq) <= tol_b) return pair.a;
    const double root = std::hypot(pair.a, b_norm_sq);
    if (2.0 * root >= alpha_y) return -root;
    return -0.5 * alpha_y;
}

double closed_form_lhv(const GeneratorPair& pair, double alpha_y) {
    return closed_form_lhv(pair, alpha_y, default_b_tolerance(pair.b));
}

Controller make_sontag_controller(const StochasticControlSystem& system,
                                  const Partition& partition, const Clf& clf) {
    Controller ctrl;
    ctrl.feedback = [&system, &partition, &clf](const Vector& x) {
        const GeneratorPair pair = generator_pair(system, clf, x);
        return sontag_feedback(pair, clf.alpha(partition.y_norm(x)));
    };
    ctrl.lyapunov = clf.value;
    return ctrl;
}

Controller zero_controller(int k, std::function<double(const Vector&)> value) {
    Controller ctrl;
    ctrl.feedback = [k](const Vector&) {
        FeedbackResult res;
        res.u = Vector::Zero(k);
        res.b = Vector::Zero(k);
        res.branch = FeedbackBranch::ZeroB;
        return res;
    };
    ctrl.lyapunov = value ? std::move(value) : [](const Vector&) { return 0.0; };
    return ctrl;
}

}  // namespace parstab
