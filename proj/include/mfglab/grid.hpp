#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace mfglab {

/// Axis-aligned open box (lo_k, hi_k) inside the unit domain, used to
/// specify the observation subdomains.
struct Box {
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{0.0, 0.0};

    static Box interval(double a, double b) { return Box{{a, 0.0}, {b, 0.0}}; }
    static Box square(double ax, double bx, double ay, double by) {
        return Box{{ax, ay}, {bx, by}};
    }

    bool contains(double x0, double x1, int d) const {
        for (int c = 0; c < d; ++c) {
            const double x = (c == 0) ? x0 : x1;
            if (!(lo[c] < x && x < hi[c])) return false;
        }
        return true;
    }
    // Strict containment of *this inside outer, componentwise.
    bool strictly_inside(const Box& outer, int d) const {
        for (int c = 0; c < d; ++c) {
            if (!(outer.lo[c] < lo[c] && hi[c] < outer.hi[c])) return false;
        }
        return true;
    }
};

using Mask = std::vector<std::uint8_t>;

/// Uniform tensor grid on (0,1)^d x (0,T), d in {1,2}.
///
/// Nodes include the boundary: per axis there are n interior nodes plus the
/// two endpoints, spacing h = 1/(n+1), coordinates i*h for i = 0..n+1.
/// Time levels are k*dt for k = 0..nt.
class Grid {
public:
    int d = 1;          // spatial dimension
    int n = 0;          // interior nodes per axis
    double h = 0.0;     // mesh width 1/(n+1)
    double T = 0.0;     // time horizon
    int nt = 0;         // time steps; nt+1 levels
    double dt = 0.0;    // T/nt
    int t0_index = 0;   // t0 = t0_index*dt, strictly interior

    Box omega_box;      // observation subdomain
    Box omega0_box;     // inner subdomain where |grad eta| may vanish

    Mask boundary_mask;
    Mask omega_mask;
    Mask omega0_mask;

    int nodes_per_axis() const { return n + 2; }
    std::size_t num_nodes() const {
        std::size_t per = static_cast<std::size_t>(n + 2);
        return d == 1 ? per : per * per;
    }
    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n + 2) +
               static_cast<std::size_t>(i);
    }
    double coord(int i) const { return i * h; }
    double time(int k) const { return k * dt; }
    double t0() const { return t0_index * dt; }

    bool is_boundary(int i, int j = 0) const {
        if (i == 0 || i == n + 1) return true;
        return d == 2 && (j == 0 || j == n + 1);
    }

    // Quadrature weight of a node: h^d with trapezoid halving on the boundary.
    double node_weight(int i, int j = 0) const;
    double node_weight(std::size_t node) const;

    // Time quadrature weight (trapezoid): dt, halved at k = 0 and k = nt.
    double time_weight(int k) const {
        return (k == 0 || k == nt) ? 0.5 * dt : dt;
    }

    void node_ij(std::size_t node, int& i, int& j) const {
        const int per = n + 2;
        i = static_cast<int>(node % static_cast<std::size_t>(per));
        j = d == 2 ? static_cast<int>(node / static_cast<std::size_t>(per)) : 0;
    }

    bool same_layout(const Grid& other) const {
        return d == other.d && n == other.n && nt == other.nt &&
               T == other.T;
    }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Build a grid and validate the subdomain geometry.
///
/// Requires omega0 strictly inside omega, omega inside the unit box, the
/// domain center inside omega0 (the weight function construction needs its
/// critical point there), and 0 < t0_fraction < 1 with the rounded index
/// strictly between 0 and nt. Violations throw std::invalid_argument.
GridPtr build_grid(int d, int n, double T, int nt, const Box& omega,
                   const Box& omega0, double t0_fraction);

/// All-ones mask over the grid nodes.
Mask full_mask(const Grid& g);

/// Mask of interior (non-boundary) nodes.
Mask interior_mask(const Grid& g);

/// Interior nodes at distance > collar_width from the boundary.
Mask collar_excluded_mask(const Grid& g, double collar_width);

std::size_t mask_count(const Mask& m);

}  // namespace mfglab
