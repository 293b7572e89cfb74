#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "dphase/errors.hpp"

namespace dphase {

/// The exponent quadruple (p, q, gamma, r) of the double-phase problem
///
///   -div(|grad u|^{p-2} grad u + mu(x) |grad u|^{q-2} grad u)
///       = a(x) u^{-gamma} + lambda u^{r-1}.
///
/// Standing hypotheses: 1 < p < q, 0 < gamma < 1, q < r. In two dimensions
/// additionally p < N = 2 and q, r < p* = Np/(N-p); in one dimension p* is
/// treated as +infinity (1D runs are a testing convenience, not covered by
/// the 2D theory).
struct Exponents {
    double p = 1.8;
    double q = 2.2;
    double gamma = 0.5;
    double r = 3.0;

    double critical(int dim) const {
        if (dim >= 2) return static_cast<double>(dim) * p / (static_cast<double>(dim) - p);
        return std::numeric_limits<double>::infinity();
    }

    /// Throws HypothesisViolation naming the first failed inequality.
    void validate(int dim) const {
        if (!(p > 1.0)) throw HypothesisViolation("1<p violated (p=" + std::to_string(p) + ")");
        if (!(p < q)) throw HypothesisViolation("p<q violated");
        if (!(gamma > 0.0 && gamma < 1.0)) throw HypothesisViolation("0<γ<1 violated");
        if (!(q < r)) throw HypothesisViolation("q<r violated");
        if (dim >= 2) {
            if (!(p < static_cast<double>(dim)))
                throw HypothesisViolation("p<N violated (N=" + std::to_string(dim) + ")");
            const double pstar = critical(dim);
            if (!(q < pstar)) throw HypothesisViolation("q<p* violated");
            if (!(r < pstar)) throw HypothesisViolation("r<p* violated");
        }
    }

    bool operator==(const Exponents&) const = default;
};

}  // namespace dphase
