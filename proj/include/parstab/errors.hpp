#pragma once

#include <stdexcept>
#include <string>

namespace parstab {

/// A state or derived quantity left the representable range (non-finite or
/// beyond the blowup guard). Carries the first offending coordinate index,
/// or -1 when the quantity is not a state vector.
class NumericalBlowup : public std::runtime_error {
public:
    NumericalBlowup(const std::string& what, int coordinate = -1)
        : std::runtime_error(what), coordinate_(coordinate) {}
    int coordinate() const noexcept { return coordinate_; }

private:
    int coordinate_;
};

/// A control-dependent diffusion row meets a nonzero Hessian entry of the
/// Lyapunov function, so the generator is no longer affine in the control
/// and the universal formula does not apply.
class ControlNoiseLeak : public std::runtime_error {
public:
    ControlNoiseLeak(const std::string& what, int row, int col)
        : std::runtime_error(what), row_(row), col_(col) {}
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

/// A quadratic Lyapunov candidate fails the sign-definiteness conditions it
/// has to certify.
class IndefiniteClf : public std::runtime_error {
public:
    explicit IndefiniteClf(const std::string& what) : std::runtime_error(what) {}
};

/// An estimator was handed zero paths.
class EmptyEnsemble : public std::runtime_error {
public:
    explicit EmptyEnsemble(const std::string& what) : std::runtime_error(what) {}
};

/// The integrator validation probe measured a convergence order outside the
/// accepted window.
class ConvergenceOrderOutOfRange : public std::runtime_error {
public:
    ConvergenceOrderOutOfRange(const std::string& what, double weak, double strong)
        : std::runtime_error(what), weak_(weak), strong_(strong) {}
    double weak_order() const noexcept { return weak_; }
    double strong_order() const noexcept { return strong_; }

private:
    double weak_;
    double strong_;
};

}  // namespace parstab
