#pragma once

#include <Eigen/Dense>
#include <vector>

namespace parstab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Index split of an n-dimensional state into the stabilized coordinates
/// (the y-part, listed in y_indices) and the remaining free coordinates.
/// H bounds the domain: states are admissible while the Euclidean norm of
/// the y-part stays at or below H; the free part is unconstrained.
struct Partition {
    Partition(int n, std::vector<int> y_indices, double H);

    int n = 0;
    std::vector<int> y_indices;
    double H = 0.0;

    int m() const { return static_cast<int>(y_indices.size()); }

    /// Euclidean norm of the stabilized coordinates.
    double y_norm(const Vector& x) const;

    bool inside_domain(const Vector& x) const { return y_norm(x) <= H; }
};

/// A state vector together with the partition that interprets it.
struct PartitionedState {
    Vector x;
    const Partition* partition = nullptr;

    double y_norm() const { return partition->y_norm(x); }
    bool inside_domain() const { return partition->inside_domain(x); }
};

double y_norm(const PartitionedState& state);

}  // namespace parstab
