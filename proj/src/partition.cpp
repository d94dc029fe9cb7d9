#include "parstab/partition.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace parstab {

Partition::Partition(int n_, std::vector<int> y_indices_, double H_)
    : n(n_), y_indices(std::move(y_indices_)), H(H_) {
    if (n < 1) throw std::invalid_argument("Partition: n must be positive");
    if (y_indices.empty() || static_cast<int>(y_indices.size()) > n)
        throw std::invalid_argument("Partition: need 1 <= m <= n stabilized indices");
    std::set<int> seen;
    for (int idx : y_indices) {
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("Partition: y index out of range");
        if (!seen.insert(idx).second)
            throw std::invalid_argument("Partition: duplicate y index");
    }
    if (!(H > 0.0)) throw std::invalid_argument("Partition: H must be positive");
}

double Partition::y_norm(const Vector& x) const {
    double sum = 0.0;
    for (int idx : y_indices) {
        const double v = x[idx];
        sum += v * v;
    }
    return std::sqrt(sum);
}

double y_norm(const PartitionedState& state) { return state.partition->y_norm(state.x); }

}  // namespace parstab
