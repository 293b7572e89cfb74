#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

#include "dphase/errors.hpp"

namespace dphase {

/// A point in R^1 or R^2; y is ignored in 1D.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One quadrature point: physical location, weight, and the values of the
/// element's nodal basis functions there.
struct QuadPoint {
    Point pos;
    double weight = 0.0;
    std::array<double, 3> basis{0.0, 0.0, 0.0};
};

/// Per-element quadrature data. Default rules: 3-point Gauss per interval,
/// 3-point edge-midpoint rule per triangle (degree 2, weights summing to the
/// element measure).
struct QuadratureRule {
    int points_per_element = 0;
    int order = 0;
    std::vector<QuadPoint> points;  // element-major, points_per_element each

    const QuadPoint& at(std::size_t elem, int k) const {
        return points[elem * static_cast<std::size_t>(points_per_element) +
                      static_cast<std::size_t>(k)];
    }
};

/// Conforming simplicial mesh of (0,1) or the unit square with piecewise-linear
/// shape data precomputed per element: measures, nodal basis gradients, and
/// the default quadrature rule. Immutable after construction and shareable
/// across threads.
class Mesh {
public:
    int dim = 1;
    std::vector<Point> nodes;
    std::vector<std::array<int, 3>> elements;  // node ids; [2] unused in 1D
    std::vector<double> measures;
    std::vector<char> is_boundary;                          // per node
    std::vector<std::array<Point, 3>> basis_gradients;      // per element, per local node
    QuadratureRule quad;

    int nodes_per_element() const { return dim + 1; }
    std::size_t node_count() const { return nodes.size(); }
    std::size_t element_count() const { return elements.size(); }

    std::size_t interior_count() const {
        std::size_t n = 0;
        for (char b : is_boundary) n += (b == 0);
        return n;
    }
};

namespace detail {

inline void finalize_interval_quadrature(Mesh& m) {
    // Gauss-Legendre with 3 points, exact through degree 5.
    const double s = std::sqrt(3.0 / 5.0);
    const double xi[3] = {0.5 * (1.0 - s), 0.5, 0.5 * (1.0 + s)};
    const double w[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    m.quad.points_per_element = 3;
    m.quad.order = 5;
    m.quad.points.reserve(m.element_count() * 3);
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        const double x0 = m.nodes[m.elements[e][0]].x;
        const double x1 = m.nodes[m.elements[e][1]].x;
        const double h = x1 - x0;
        for (int k = 0; k < 3; ++k) {
            QuadPoint qp;
            qp.pos = {x0 + xi[k] * h, 0.0};
            qp.weight = w[k] * h;
            qp.basis = {1.0 - xi[k], xi[k], 0.0};
            m.quad.points.push_back(qp);
        }
    }
}

inline void finalize_triangle_quadrature(Mesh& m) {
    // Edge-midpoint rule: barycentric (1/2,1/2,0) cyclic, weight |T|/3 each.
    const double bc[3][3] = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
    m.quad.points_per_element = 3;
    m.quad.order = 2;
    m.quad.points.reserve(m.element_count() * 3);
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        const Point a = m.nodes[m.elements[e][0]];
        const Point b = m.nodes[m.elements[e][1]];
        const Point c = m.nodes[m.elements[e][2]];
        for (int k = 0; k < 3; ++k) {
            QuadPoint qp;
            qp.pos = {bc[k][0] * a.x + bc[k][1] * b.x + bc[k][2] * c.x,
                      bc[k][0] * a.y + bc[k][1] * b.y + bc[k][2] * c.y};
            qp.weight = m.measures[e] / 3.0;
            qp.basis = {bc[k][0], bc[k][1], bc[k][2]};
            m.quad.points.push_back(qp);
        }
    }
}

}  // namespace detail

/// Uniform mesh of (0,1) with n elements and homogeneous Dirichlet boundary
/// {0, 1}. Requires n >= 2 so at least one interior degree of freedom exists.
inline std::shared_ptr<const Mesh> build_interval_mesh(int n) {
    if (n < 2) throw BadSize("build_interval_mesh: need n >= 2, got " + std::to_string(n));
    auto m = std::make_shared<Mesh>();
    m->dim = 1;
    m->nodes.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) m->nodes[i] = {static_cast<double>(i) / n, 0.0};
    m->elements.resize(static_cast<std::size_t>(n));
    m->measures.resize(static_cast<std::size_t>(n));
    m->basis_gradients.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        m->elements[e] = {e, e + 1, -1};
        const double h = m->nodes[e + 1].x - m->nodes[e].x;
        m->measures[e] = h;
        m->basis_gradients[e] = {Point{-1.0 / h, 0.0}, Point{1.0 / h, 0.0}, Point{0.0, 0.0}};
    }
    m->is_boundary.assign(m->nodes.size(), 0);
    m->is_boundary.front() = 1;
    m->is_boundary.back() = 1;
    detail::finalize_interval_quadrature(*m);
    return m;
}

/// Unit square cut into nx*ny cells, each split along the lower-left to
/// upper-right diagonal (so uniform refinement yields nested P1 spaces).
inline std::shared_ptr<const Mesh> build_rect_mesh(int nx, int ny) {
    if (nx < 2 || ny < 2)
        throw BadSize("build_rect_mesh: need nx, ny >= 2, got " + std::to_string(nx) + "x" +
                      std::to_string(ny));
    auto m = std::make_shared<Mesh>();
    m->dim = 2;
    const auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
    m->nodes.resize(static_cast<std::size_t>(nx + 1) * (ny + 1));
    m->is_boundary.assign(m->nodes.size(), 0);
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            m->nodes[id(i, j)] = {static_cast<double>(i) / nx, static_cast<double>(j) / ny};
            if (i == 0 || i == nx || j == 0 || j == ny) m->is_boundary[id(i, j)] = 1;
        }
    m->elements.reserve(static_cast<std::size_t>(nx) * ny * 2);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int v00 = id(i, j), v10 = id(i + 1, j), v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
            m->elements.push_back({v00, v10, v11});
            m->elements.push_back({v00, v11, v01});
        }
    m->measures.resize(m->element_count());
    m->basis_gradients.resize(m->element_count());
    for (std::size_t e = 0; e < m->element_count(); ++e) {
        const Point a = m->nodes[m->elements[e][0]];
        const Point b = m->nodes[m->elements[e][1]];
        const Point c = m->nodes[m->elements[e][2]];
        const double e1x = b.x - a.x, e1y = b.y - a.y;
        const double e2x = c.x - a.x, e2y = c.y - a.y;
        const double det = e1x * e2y - e1y * e2x;  // twice the signed area
        m->measures[e] = 0.5 * std::abs(det);
        const Point gb{e2y / det, -e2x / det};
        const Point gc{-e1y / det, e1x / det};
        m->basis_gradients[e] = {Point{-gb.x - gc.x, -gb.y - gc.y}, gb, gc};
    }
    detail::finalize_triangle_quadrature(*m);
    return m;
}

}  // namespace dphase
