#include "entcast/chsh_oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "entcast/criteria.hpp"

namespace entcast {

namespace {

// For fixed measurement directions b, b' the optimal a, a' align with T(b+b')
// and T(b-b'), so <B> = |T(b+b')| + |T(b-b')|.
double value_at(const Eigen::Matrix3d& t, const Eigen::Vector3d& b, const Eigen::Vector3d& bp) {
    return (t * (b + bp)).norm() + (t * (b - bp)).norm();
}

std::vector<Eigen::Vector3d> fibonacci_sphere(int count) {
    std::vector<Eigen::Vector3d> points;
    points.reserve(count);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        points.emplace_back(rad * std::cos(phi), rad * std::sin(phi), z);
    }
    return points;
}

}  // namespace

double chsh_bruteforce_max(const DensityOperator& rho, int grid_points, int refine_rounds) {
    if (grid_points < 8) raise(Errc::invalid_argument, "chsh_bruteforce_max: grid too coarse");
    const Eigen::Matrix3d t = bloch_decompose(rho).t;

    const auto grid = fibonacci_sphere(grid_points);
    std::vector<Eigen::Vector3d> mapped;  // T g, reused across pairs
    mapped.reserve(grid.size());
    for (const auto& g : grid) mapped.push_back(t * g);

    double best = 0.0;
    Eigen::Vector3d best_b = grid.front();
    Eigen::Vector3d best_bp = grid.front();
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = i; j < grid.size(); ++j) {
            const double v = (mapped[i] + mapped[j]).norm() + (mapped[i] - mapped[j]).norm();
            if (v > best) {
                best = v;
                best_b = grid[i];
                best_bp = grid[j];
            }
        }
    }

    // Local refinement: random-free coordinate perturbations with a shrinking
    // step, keeping improvements.
    double step = 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(grid_points));
    for (int round = 0; round < refine_rounds; ++round) {
        bool improved = false;
        for (int axis = 0; axis < 3; ++axis) {
            for (double sign : {-1.0, 1.0}) {
                Eigen::Vector3d delta = Eigen::Vector3d::Zero();
                delta(axis) = sign * step;
                Eigen::Vector3d cb = (best_b + delta).normalized();
                if (double v = value_at(t, cb, best_bp); v > best) {
                    best = v;
                    best_b = cb;
                    improved = true;
                }
                Eigen::Vector3d cbp = (best_bp + delta).normalized();
                if (double v = value_at(t, best_b, cbp); v > best) {
                    best = v;
                    best_bp = cbp;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace entcast
