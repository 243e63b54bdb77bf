#include "mfglab/fd_ops.hpp"

#include <stdexcept>

namespace mfglab {

namespace {

// First derivative along one axis at node (i,j); axis 0 varies i, axis 1
// varies j. Central inside, one-sided second order at the axis endpoints.
double d1_axis(const ScalarField& f, int i, int j, int axis) {
    const Grid& g = *f.grid;
    const double h = g.h;
    const int per = g.nodes_per_axis();
    const int pos = axis == 0 ? i : j;
    auto val = [&](int q) {
        return axis == 0 ? f[g.index(q, j)] : f[g.index(i, q)];
    };
    if (pos == 0) return (-3.0 * val(0) + 4.0 * val(1) - val(2)) / (2.0 * h);
    if (pos == per - 1)
        return (3.0 * val(per - 1) - 4.0 * val(per - 2) + val(per - 3)) / (2.0 * h);
    return (val(pos + 1) - val(pos - 1)) / (2.0 * h);
}

// Pure second derivative along one axis, compact stencil inside, one-sided
// four-point at the axis endpoints.
double d2_axis(const ScalarField& f, int i, int j, int axis) {
    const Grid& g = *f.grid;
    const double h2 = g.h * g.h;
    const int per = g.nodes_per_axis();
    const int pos = axis == 0 ? i : j;
    auto val = [&](int q) {
        return axis == 0 ? f[g.index(q, j)] : f[g.index(i, q)];
    };
    if (pos == 0) return (2.0 * val(0) - 5.0 * val(1) + 4.0 * val(2) - val(3)) / h2;
    if (pos == per - 1)
        return (2.0 * val(per - 1) - 5.0 * val(per - 2) + 4.0 * val(per - 3) -
                val(per - 4)) / h2;
    return (val(pos + 1) - 2.0 * val(pos) + val(pos - 1)) / h2;
}

}  // namespace

VectorField gradient_fd(const ScalarField& f) {
    const Grid& g = *f.grid;
    VectorField out(f.grid);
    const int per = g.nodes_per_axis();
    const int jmax = g.d == 2 ? per : 1;
    for (int j = 0; j < jmax; ++j)
        for (int i = 0; i < per; ++i) {
            const std::size_t node = g.index(i, j);
            for (int c = 0; c < g.d; ++c) out.at(c, node) = d1_axis(f, i, j, c);
        }
    return out;
}

ScalarField laplacian_fd(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(f.grid);
    const int per = g.nodes_per_axis();
    const int jmax = g.d == 2 ? per : 1;
    for (int j = 0; j < jmax; ++j)
        for (int i = 0; i < per; ++i) {
            double s = d2_axis(f, i, j, 0);
            if (g.d == 2) s += d2_axis(f, i, j, 1);
            out[g.index(i, j)] = s;
        }
    return out;
}

ScalarField divergence_fd(const VectorField& F) {
    const Grid& g = *F.grid;
    ScalarField out(F.grid);
    const int per = g.nodes_per_axis();
    const int jmax = g.d == 2 ? per : 1;
    ScalarField comp(F.grid);
    for (int c = 0; c < g.d; ++c) {
        for (std::size_t node = 0; node < g.num_nodes(); ++node)
            comp[node] = F.at(c, node);
        for (int j = 0; j < jmax; ++j)
            for (int i = 0; i < per; ++i)
                out[g.index(i, j)] += d1_axis(comp, i, j, c);
    }
    return out;
}

ScalarField second_derivative_fd(const ScalarField& f, int ci, int cj) {
    const Grid& g = *f.grid;
    if (ci < 0 || ci >= g.d || cj < 0 || cj >= g.d)
        throw std::invalid_argument("second_derivative_fd: axis out of range");
    const int per = g.nodes_per_axis();
    const int jmax = g.d == 2 ? per : 1;
    ScalarField out(f.grid);
    if (ci == cj) {
        for (int j = 0; j < jmax; ++j)
            for (int i = 0; i < per; ++i)
                out[g.index(i, j)] = d2_axis(f, i, j, ci);
        return out;
    }
    ScalarField first(f.grid);
    for (int j = 0; j < jmax; ++j)
        for (int i = 0; i < per; ++i)
            first[g.index(i, j)] = d1_axis(f, i, j, cj);
    for (int j = 0; j < jmax; ++j)
        for (int i = 0; i < per; ++i)
            out[g.index(i, j)] = d1_axis(first, i, j, ci);
    return out;
}

namespace {

template <typename ST>
ST time_derivative_impl(const ST& traj) {
    const Grid& g = *traj.grid;
    if (g.nt < 2) throw std::invalid_argument("time_derivative: need nt >= 2");
    ST out(traj.grid);
    const std::size_t stride = traj.v.size() / (g.nt + 1);
    const double dt = g.dt;
    for (std::size_t m = 0; m < stride; ++m) {
        out.v[m] = (-3.0 * traj.v[m] + 4.0 * traj.v[stride + m] -
                    traj.v[2 * stride + m]) / (2.0 * dt);
        for (int k = 1; k < g.nt; ++k)
            out.v[k * stride + m] =
                (traj.v[(k + 1) * stride + m] - traj.v[(k - 1) * stride + m]) /
                (2.0 * dt);
        const std::size_t e = static_cast<std::size_t>(g.nt) * stride;
        out.v[e + m] = (3.0 * traj.v[e + m] - 4.0 * traj.v[e - stride + m] +
                        traj.v[e - 2 * stride + m]) / (2.0 * dt);
    }
    return out;
}

}  // namespace

SpaceTimeField time_derivative(const SpaceTimeField& traj) {
    return time_derivative_impl(traj);
}

SpaceTimeVectorField time_derivative(const SpaceTimeVectorField& traj) {
    return time_derivative_impl(traj);
}

SpaceTimeField time_second_derivative(const SpaceTimeField& traj) {
    const Grid& g = *traj.grid;
    if (g.nt < 3) throw std::invalid_argument("time_second_derivative: need nt >= 3");
    SpaceTimeField out(traj.grid);
    const std::size_t stride = g.num_nodes();
    const double dt2 = g.dt * g.dt;
    for (std::size_t m = 0; m < stride; ++m) {
        out.v[m] = (2.0 * traj.v[m] - 5.0 * traj.v[stride + m] +
                    4.0 * traj.v[2 * stride + m] - traj.v[3 * stride + m]) / dt2;
        for (int k = 1; k < g.nt; ++k)
            out.v[k * stride + m] =
                (traj.v[(k + 1) * stride + m] - 2.0 * traj.v[k * stride + m] +
                 traj.v[(k - 1) * stride + m]) / dt2;
        const std::size_t e = static_cast<std::size_t>(g.nt) * stride;
        out.v[e + m] = (2.0 * traj.v[e + m] - 5.0 * traj.v[e - stride + m] +
                        4.0 * traj.v[e - 2 * stride + m] -
                        traj.v[e - 3 * stride + m]) / dt2;
    }
    return out;
}

}  // namespace mfglab
