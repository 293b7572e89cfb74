#pragma once

#include <stdexcept>
#include <string>

namespace dphase {

/// Thrown when a mesh size or array length is too small to be meaningful.
struct BadSize : std::runtime_error {
    explicit BadSize(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an intermediate value overflows or is NaN at a scale the
/// algorithms cannot bracket (pathological input magnitudes).
struct NonFinite : std::runtime_error {
    explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};

/// A ray t -> t*u admits no Nehari projection (the fiber maximum does not
/// clear the level lambda*||u||_r^r), or a required profile component vanishes.
struct DegenerateDirection : std::runtime_error {
    explicit DegenerateDirection(const std::string& what) : std::runtime_error(what) {}
};

/// Every probe direction of a multi-start run was degenerate.
struct LambdaTooLarge : std::runtime_error {
    explicit LambdaTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// The two computed minimizers do not satisfy energy(u*) < 0 < energy(v*).
struct NotSplit : std::runtime_error {
    explicit NotSplit(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration cap reached before any stopping criterion.
struct MaxIters : std::runtime_error {
    explicit MaxIters(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid configuration that violates the standing hypotheses;
/// the message names the exact failed inequality.
struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// No feasible/infeasible lambda pair could be bracketed.
struct NoBracket : std::runtime_error {
    explicit NoBracket(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dphase
