#include "mfglab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mfglab {

double Grid::node_weight(int i, int j) const {
    double w = (i == 0 || i == n + 1) ? 0.5 * h : h;
    if (d == 2) w *= (j == 0 || j == n + 1) ? 0.5 * h : h;
    return w;
}

double Grid::node_weight(std::size_t node) const {
    int i, j;
    node_ij(node, i, j);
    return node_weight(i, j);
}

GridPtr build_grid(int d, int n, double T, int nt, const Box& omega,
                   const Box& omega0, double t0_fraction) {
    if (d != 1 && d != 2) throw std::invalid_argument("grid: d must be 1 or 2");
    if (n < 3) throw std::invalid_argument("grid: need n >= 3 interior nodes");
    if (!(T > 0.0)) throw std::invalid_argument("grid: T must be positive");
    if (nt < 2) throw std::invalid_argument("grid: need nt >= 2 time steps");

    const Box unit{{0.0, 0.0}, {1.0, 1.0}};
    if (!omega.strictly_inside(unit, d))
        throw std::invalid_argument("grid: omega must lie strictly inside the unit box");
    if (!omega0.strictly_inside(omega, d))
        throw std::invalid_argument("grid: omega0 must lie strictly inside omega");
    if (!omega0.contains(0.5, 0.5, d))
        throw std::invalid_argument(
            "grid: omega0 must contain the domain center (weight construction)");

    if (!(t0_fraction > 0.0 && t0_fraction < 1.0))
        throw std::invalid_argument(
            "grid: t0 must be strictly inside (0,T); the endpoint cases are not admitted");

    auto g = std::make_shared<Grid>();
    g->d = d;
    g->n = n;
    g->h = 1.0 / (n + 1);
    g->T = T;
    g->nt = nt;
    g->dt = T / nt;
    g->t0_index = static_cast<int>(std::lround(t0_fraction * nt));
    if (g->t0_index <= 0 || g->t0_index >= nt)
        throw std::invalid_argument("grid: t0 index must be strictly between 0 and nt");

    g->omega_box = omega;
    g->omega0_box = omega0;

    const std::size_t N = g->num_nodes();
    g->boundary_mask.assign(N, 0);
    g->omega_mask.assign(N, 0);
    g->omega0_mask.assign(N, 0);

    const int per = g->nodes_per_axis();
    const int jmax = d == 2 ? per : 1;
    for (int j = 0; j < jmax; ++j) {
        for (int i = 0; i < per; ++i) {
            const std::size_t node = g->index(i, j);
            const double x = g->coord(i);
            const double y = g->coord(j);
            if (g->is_boundary(i, j)) g->boundary_mask[node] = 1;
            if (omega.contains(x, y, d)) g->omega_mask[node] = 1;
            if (omega0.contains(x, y, d)) g->omega0_mask[node] = 1;
        }
    }

    // The continuous containment checks above guarantee mask containment;
    // still require that omega actually has nodes outside omega0 so the
    // discrete subdomains are strictly nested.
    bool omega_minus_omega0 = false;
    for (std::size_t k = 0; k < N; ++k) {
        if (g->omega_mask[k] && !g->omega0_mask[k]) omega_minus_omega0 = true;
        if (g->omega0_mask[k] && !g->omega_mask[k])
            throw std::invalid_argument("grid: omega0 mask escapes omega mask");
    }
    if (!omega_minus_omega0)
        throw std::invalid_argument("grid: no omega nodes outside omega0 at this resolution");
    if (mask_count(g->omega0_mask) == 0)
        throw std::invalid_argument("grid: omega0 contains no nodes at this resolution");

    return g;
}

Mask full_mask(const Grid& g) { return Mask(g.num_nodes(), 1); }

Mask interior_mask(const Grid& g) {
    Mask m(g.num_nodes(), 1);
    for (std::size_t k = 0; k < m.size(); ++k)
        if (g.boundary_mask[k]) m[k] = 0;
    return m;
}

Mask collar_excluded_mask(const Grid& g, double collar_width) {
    Mask m(g.num_nodes(), 0);
    const int per = g.nodes_per_axis();
    const int jmax = g.d == 2 ? per : 1;
    for (int j = 0; j < jmax; ++j) {
        for (int i = 0; i < per; ++i) {
            const double x = g.coord(i);
            const double y = g.coord(j);
            bool inside = x > collar_width && x < 1.0 - collar_width;
            if (g.d == 2) inside = inside && y > collar_width && y < 1.0 - collar_width;
            if (inside) m[g.index(i, j)] = 1;
        }
    }
    return m;
}

std::size_t mask_count(const Mask& m) {
    std::size_t c = 0;
    for (auto v : m) c += v ? 1 : 0;
    return c;
}

}  // namespace mfglab
