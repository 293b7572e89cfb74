#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "dphase/errors.hpp"
#include "dphase/fields.hpp"
#include "dphase/mesh.hpp"

namespace dphase {

/// Nodal values of a piecewise-linear function with zero boundary trace.
/// Construction and every mutating helper force boundary entries to exactly 0.
class GridFunction {
public:
    GridFunction() = default;

    explicit GridFunction(std::shared_ptr<const Mesh> mesh)
        : mesh_(std::move(mesh)), values_(mesh_->node_count(), 0.0) {}

    GridFunction(std::shared_ptr<const Mesh> mesh, std::vector<double> values)
        : mesh_(std::move(mesh)), values_(std::move(values)) {
        if (values_.size() != mesh_->node_count())
            throw BadSize("GridFunction: value count does not match node count");
        clamp_boundary();
    }

    const Mesh& mesh() const { return *mesh_; }
    std::shared_ptr<const Mesh> mesh_ptr() const { return mesh_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Set one interior nodal value; boundary nodes are pinned at 0.
    void set(std::size_t i, double v) {
        if (!mesh_->is_boundary[i]) values_[i] = v;
    }

    void clamp_boundary() {
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (mesh_->is_boundary[i]) values_[i] = 0.0;
    }

    /// Value at a quadrature point of element e.
    double at(std::size_t e, const QuadPoint& qp) const {
        const auto& conn = mesh_->elements[e];
        double v = 0.0;
        for (int k = 0; k < mesh_->nodes_per_element(); ++k)
            v += qp.basis[k] * values_[static_cast<std::size_t>(conn[k])];
        return v;
    }

    bool is_zero() const {
        for (double v : values_)
            if (v != 0.0) return false;
        return true;
    }

    double min_interior() const {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!mesh_->is_boundary[i]) m = std::min(m, values_[i]);
        return m;
    }

    double mean_abs() const {
        long double acc = 0.0L;
        for (double v : values_) acc += std::abs(v);
        return values_.empty() ? 0.0 : static_cast<double>(acc / values_.size());
    }

    /// Nodal interpolant of f, clamped to zero trace.
    static GridFunction interpolate(std::shared_ptr<const Mesh> mesh,
                                    const std::function<double(Point)>& f) {
        GridFunction u(std::move(mesh));
        for (std::size_t i = 0; i < u.values_.size(); ++i)
            if (!u.mesh_->is_boundary[i]) u.values_[i] = f(u.mesh_->nodes[i]);
        return u;
    }

    friend GridFunction operator*(double s, const GridFunction& u) {
        GridFunction v = u;
        for (double& x : v.values_) x *= s;
        return v;
    }

private:
    std::shared_ptr<const Mesh> mesh_;
    std::vector<double> values_;
};

/// Element-wise constant gradient of the linear interpolant.
inline ElementField gradient(const GridFunction& u) {
    const Mesh& m = u.mesh();
    ElementField g = ElementField::zeros(m);
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        double gx = 0.0, gy = 0.0;
        for (int k = 0; k < m.nodes_per_element(); ++k) {
            const double uk = u[static_cast<std::size_t>(m.elements[e][k])];
            gx += uk * m.basis_gradients[e][k].x;
            gy += uk * m.basis_gradients[e][k].y;
        }
        g.vx[e] = gx;
        g.vy[e] = gy;
    }
    return g;
}

/// Quadrature of coeff(x) * f(u(x)) over the domain under the given rule.
template <class F>
double integrate(const GridFunction& u, F&& f, const ScalarField& coeff,
                 const QuadratureRule& rule) {
    const Mesh& m = u.mesh();
    long double acc = 0.0L;
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        for (int k = 0; k < rule.points_per_element; ++k) {
            const QuadPoint& qp = rule.at(e, k);
            acc += static_cast<long double>(qp.weight) * coeff.value(m, e, qp) * f(u.at(e, qp));
        }
    }
    return static_cast<double>(acc);
}

}  // namespace dphase
