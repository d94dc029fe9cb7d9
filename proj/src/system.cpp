#include "parstab/system.hpp"

#include <cmath>

#include "parstab/errors.hpp"

namespace parstab {

namespace {

int first_nonfinite(const Vector& v) {
    for (int i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i])) return i;
    return -1;
}

int first_nonfinite(const Matrix& m) {
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j))) return i;
    return -1;
}

}  // namespace

Vector StochasticControlSystem::closed_loop_drift(const Vector& x, const Vector& u) const {
    Vector d = drift(x) + input(x) * u;
    if (drift_coupling) d += drift_coupling(x, u);
    return d;
}

ClosedLoopRhs closed_loop_rhs(const StochasticControlSystem& system,
                              const std::function<Vector(const Vector&)>& feedback,
                              const PartitionedState& state) {
    const Vector u = feedback(state.x);
    ClosedLoopRhs rhs{system.closed_loop_drift(state.x, u), system.diffusion(state.x, u)};
    if (int i = first_nonfinite(rhs.drift); i >= 0)
        throw NumericalBlowup("closed-loop drift is non-finite", i);
    if (int i = first_nonfinite(rhs.diffusion); i >= 0)
        throw NumericalBlowup("closed-loop diffusion is non-finite", i);
    return rhs;
}

}  // namespace parstab
