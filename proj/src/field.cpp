#include "mfglab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mfglab {

double VectorField::magnitude(std::size_t node) const {
    double s = 0.0;
    for (int c = 0; c < grid->d; ++c) {
        const double x = at(c, node);
        s += x * x;
    }
    return std::sqrt(s);
}

ScalarField SpaceTimeField::slice(int level) const {
    ScalarField f(grid);
    const std::size_t N = grid->num_nodes();
    std::copy_n(v.begin() + idx(level, 0), N, f.v.begin());
    return f;
}

void SpaceTimeField::set_slice(int level, const ScalarField& f) {
    const std::size_t N = grid->num_nodes();
    std::copy_n(f.v.begin(), N, v.begin() + idx(level, 0));
}

VectorField SpaceTimeVectorField::slice(int level) const {
    VectorField f(grid);
    const std::size_t N = grid->num_nodes();
    for (int c = 0; c < grid->d; ++c)
        std::copy_n(v.begin() + idx(level, c, 0), N, f.v.begin() + c * N);
    return f;
}

void SpaceTimeVectorField::set_slice(int level, const VectorField& f) {
    const std::size_t N = grid->num_nodes();
    for (int c = 0; c < grid->d; ++c)
        std::copy_n(f.v.begin() + c * N, N, v.begin() + idx(level, c, 0));
}

ScalarField sample_scalar(const GridPtr& g, const SpatialFn& f) {
    ScalarField out(g);
    const int per = g->nodes_per_axis();
    const int jmax = g->d == 2 ? per : 1;
    for (int j = 0; j < jmax; ++j)
        for (int i = 0; i < per; ++i)
            out[g->index(i, j)] = f(g->coord(i), g->coord(j));
    return out;
}

SpaceTimeField sample_space_time(const GridPtr& g, const SpaceTimeFn& f) {
    SpaceTimeField out(g);
    const int per = g->nodes_per_axis();
    const int jmax = g->d == 2 ? per : 1;
    for (int k = 0; k <= g->nt; ++k) {
        const double t = g->time(k);
        for (int j = 0; j < jmax; ++j)
            for (int i = 0; i < per; ++i)
                out.at(k, g->index(i, j)) = f(g->coord(i), g->coord(j), t);
    }
    return out;
}

double sup_norm(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

double sup_norm(const VectorField& f) {
    double m = 0.0;
    for (std::size_t node = 0; node < f.grid->num_nodes(); ++node)
        m = std::max(m, f.magnitude(node));
    return m;
}

double sup_norm(const SpaceTimeField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const SpaceTimeField& a, const SpaceTimeField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

void require_same_grid(const GridPtr& a, const GridPtr& b, const char* context) {
    if (a == b) return;
    if (!a || !b || !a->same_layout(*b))
        throw std::invalid_argument(std::string(context) + ": grid mismatch");
}

}  // namespace mfglab
