#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dphase/errors.hpp"
#include "dphase/mesh.hpp"

namespace dphase {

/// A spatial coefficient (the weight mu or the singular coefficient a),
/// sampled at quadrature points. Nodal tables are interpolated with the
/// element's P1 basis so every integral follows one quadrature contract.
struct ScalarField {
    enum class Kind { Constant, Affine, NodalTable };

    Kind kind = Kind::Constant;
    double c0 = 0.0;  // Constant: value; Affine: c0 + c1*x + c2*y
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> table;  // NodalTable: one value per mesh node

    static ScalarField constant(double v) { return {Kind::Constant, v, 0.0, 0.0, {}}; }
    static ScalarField affine(double c0, double c1, double c2 = 0.0) {
        return {Kind::Affine, c0, c1, c2, {}};
    }
    static ScalarField nodal(std::vector<double> values) {
        ScalarField f;
        f.kind = Kind::NodalTable;
        f.table = std::move(values);
        return f;
    }

    double value(const Mesh& mesh, std::size_t elem, const QuadPoint& qp) const {
        switch (kind) {
            case Kind::Constant: return c0;
            case Kind::Affine: return c0 + c1 * qp.pos.x + c2 * qp.pos.y;
            case Kind::NodalTable: {
                const auto& conn = mesh.elements[elem];
                double v = 0.0;
                for (int k = 0; k < mesh.nodes_per_element(); ++k)
                    v += qp.basis[k] * table[static_cast<std::size_t>(conn[k])];
                return v;
            }
        }
        return 0.0;
    }

    bool operator==(const ScalarField&) const = default;
};

/// Per-element constant vectors with their element measures; this is how the
/// gradient of a piecewise-linear function is stored.
struct ElementField {
    const Mesh* mesh = nullptr;
    int dim = 1;
    std::vector<double> vx;  // per element
    std::vector<double> vy;  // per element, zero in 1D
    std::vector<double> measures;

    std::size_t size() const { return vx.size(); }

    double norm_at(std::size_t e) const {
        return dim == 1 ? std::abs(vx[e]) : std::hypot(vx[e], vy[e]);
    }

    static ElementField zeros(const Mesh& m) {
        ElementField f;
        f.mesh = &m;
        f.dim = m.dim;
        f.vx.assign(m.element_count(), 0.0);
        f.vy.assign(m.element_count(), 0.0);
        f.measures = m.measures;
        return f;
    }
};

/// Per-element integral of a coefficient under the mesh's quadrature rule.
inline std::vector<double> element_integrals(const Mesh& mesh, const ScalarField& f) {
    std::vector<double> out(mesh.element_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        long double acc = 0.0L;
        for (int k = 0; k < mesh.quad.points_per_element; ++k) {
            const QuadPoint& qp = mesh.quad.at(e, k);
            acc += static_cast<long double>(qp.weight) * f.value(mesh, e, qp);
        }
        out[e] = static_cast<double>(acc);
    }
    return out;
}

/// Sample a coefficient at every quadrature point (element-major layout).
inline std::vector<double> sample_at_quadrature(const Mesh& mesh, const ScalarField& f) {
    std::vector<double> out;
    out.reserve(mesh.element_count() * static_cast<std::size_t>(mesh.quad.points_per_element));
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        for (int k = 0; k < mesh.quad.points_per_element; ++k)
            out.push_back(f.value(mesh, e, mesh.quad.at(e, k)));
    return out;
}

}  // namespace dphase
