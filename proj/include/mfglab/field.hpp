#pragma once

#include <functional>
#include <vector>

#include "mfglab/grid.hpp"

namespace mfglab {

/// Scalar field with one value per grid node (boundary included).
struct ScalarField {
    GridPtr grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(GridPtr g, double fill = 0.0)
        : grid(std::move(g)), v(grid->num_nodes(), fill) {}

    double& operator[](std::size_t node) { return v[node]; }
    double operator[](std::size_t node) const { return v[node]; }
    std::size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
};

/// Vector field: d components per node, component-major storage.
struct VectorField {
    GridPtr grid;
    std::vector<double> v;  // comp*N + node

    VectorField() = default;
    explicit VectorField(GridPtr g, double fill = 0.0)
        : grid(std::move(g)), v(grid->num_nodes() * grid->d, fill) {}

    double& at(int comp, std::size_t node) { return v[comp * grid->num_nodes() + node]; }
    double at(int comp, std::size_t node) const { return v[comp * grid->num_nodes() + node]; }

    double magnitude(std::size_t node) const;
    bool empty() const { return v.empty(); }
};

/// Trajectory of scalar slices, one per time level 0..nt.
struct SpaceTimeField {
    GridPtr grid;
    std::vector<double> v;  // level*(num_nodes) + node

    SpaceTimeField() = default;
    explicit SpaceTimeField(GridPtr g, double fill = 0.0)
        : grid(std::move(g)),
          v(static_cast<std::size_t>(grid->nt + 1) * grid->num_nodes(), fill) {}

    double& at(int level, std::size_t node) { return v[idx(level, node)]; }
    double at(int level, std::size_t node) const { return v[idx(level, node)]; }
    std::size_t idx(int level, std::size_t node) const {
        return static_cast<std::size_t>(level) * grid->num_nodes() + node;
    }

    ScalarField slice(int level) const;
    void set_slice(int level, const ScalarField& f);
    bool empty() const { return v.empty(); }
};

/// Trajectory of vector slices.
struct SpaceTimeVectorField {
    GridPtr grid;
    std::vector<double> v;  // (level*d + comp)*num_nodes + node

    SpaceTimeVectorField() = default;
    explicit SpaceTimeVectorField(GridPtr g, double fill = 0.0)
        : grid(std::move(g)),
          v(static_cast<std::size_t>(grid->nt + 1) * grid->d * grid->num_nodes(), fill) {}

    double& at(int level, int comp, std::size_t node) { return v[idx(level, comp, node)]; }
    double at(int level, int comp, std::size_t node) const { return v[idx(level, comp, node)]; }
    std::size_t idx(int level, int comp, std::size_t node) const {
        return (static_cast<std::size_t>(level) * grid->d + comp) * grid->num_nodes() + node;
    }

    VectorField slice(int level) const;
    void set_slice(int level, const VectorField& f);
    bool empty() const { return v.empty(); }
};

using SpatialFn = std::function<double(double, double)>;        // (x, y)
using SpaceTimeFn = std::function<double(double, double, double)>;  // (x, y, t)

ScalarField sample_scalar(const GridPtr& g, const SpatialFn& f);
SpaceTimeField sample_space_time(const GridPtr& g, const SpaceTimeFn& f);

double sup_norm(const ScalarField& f);
double sup_norm(const VectorField& f);
double sup_norm(const SpaceTimeField& f);
double max_abs_diff(const SpaceTimeField& a, const SpaceTimeField& b);

/// Throws std::invalid_argument unless both fields live on structurally
/// identical grids.
void require_same_grid(const GridPtr& a, const GridPtr& b, const char* context);

}  // namespace mfglab
