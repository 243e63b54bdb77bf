#include "mfglab/norms.hpp"

#include <cmath>

#include "mfglab/fd_ops.hpp"

namespace mfglab {

namespace {

double sq_norm_slice(const ScalarField& f, const Mask* region) {
    const Grid& g = *f.grid;
    double s = 0.0;
    for (std::size_t node = 0; node < g.num_nodes(); ++node) {
        if (region && !(*region)[node]) continue;
        s += g.node_weight(node) * f[node] * f[node];
    }
    return s;
}

}  // namespace

double norm_l2(const ScalarField& f, const Mask* region) {
    return std::sqrt(sq_norm_slice(f, region));
}

double norm_h2_slice(const ScalarField& f) {
    const Grid& g = *f.grid;
    double s = sq_norm_slice(f, nullptr);
    const VectorField grad = gradient_fd(f);
    for (int c = 0; c < g.d; ++c) {
        ScalarField comp(f.grid);
        for (std::size_t node = 0; node < g.num_nodes(); ++node)
            comp[node] = grad.at(c, node);
        s += sq_norm_slice(comp, nullptr);
    }
    for (int ci = 0; ci < g.d; ++ci)
        for (int cj = 0; cj < g.d; ++cj) {
            const ScalarField dd = second_derivative_fd(f, ci, cj);
            s += sq_norm_slice(dd, nullptr);
        }
    return std::sqrt(s);
}

double sq_norm_l2_q(const SpaceTimeField& f, const Mask* region) {
    const Grid& g = *f.grid;
    double s = 0.0;
    for (int k = 0; k <= g.nt; ++k) {
        double level = 0.0;
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            if (region && !(*region)[node]) continue;
            const double x = f.at(k, node);
            level += g.node_weight(node) * x * x;
        }
        s += g.time_weight(k) * level;
    }
    return s;
}

double norm_l2_q(const SpaceTimeField& f, const Mask* region) {
    return std::sqrt(sq_norm_l2_q(f, region));
}

double norm_h1t_l2(const SpaceTimeField& traj, const Mask* region) {
    const SpaceTimeField dt_traj = time_derivative(traj);
    return std::sqrt(sq_norm_l2_q(traj, region) + sq_norm_l2_q(dt_traj, region));
}

}  // namespace mfglab
