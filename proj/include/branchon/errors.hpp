// Exception hierarchy shared by the whole library.
//
// Two families matter to callers: configuration/domain problems (the input
// can never work) and numerical failures (the input looked fine but a
// computation could not be completed to tolerance).  The CLI maps the first
// family to exit code 2 and the second to exit code 3.
#pragma once

#include <stdexcept>
#include <string>

namespace branchon {

// --- configuration / domain family -----------------------------------------

// Malformed run configuration (unknown key, unparsable value, missing file).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input lies outside the mathematical domain of the requested operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation lands exactly on a pole or other measure-zero singular set.
struct SingularInput : DomainError {
    explicit SingularInput(const std::string& what) : DomainError(what) {}
};

// A parameter value collapses the model (e.g. a coupling of zero where a
// division by it is required).
struct DegenerateParameter : DomainError {
    explicit DegenerateParameter(const std::string& what) : DomainError(what) {}
};

// Spatial grid too coarse to even attempt a discretisation.
struct GridTooCoarse : DomainError {
    explicit GridTooCoarse(const std::string& what) : DomainError(what) {}
};

// --- numerical-failure family ----------------------------------------------

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Trajectory left the configured phase-space bound.
struct BlowUp : NumericalError {
    BlowUp(const std::string& what, double t) : NumericalError(what), time(t) {}
    double time;  // integration time at which the bound was exceeded
};

// A sampled trajectory point came within tolerance of the momentum-map pole,
// where the velocity-to-momentum inversion loses meaning.
struct PoleCrossing : NumericalError {
    PoleCrossing(const std::string& what, double t) : NumericalError(what), time(t) {}
    double time;
};

// Refinement (grid halving or basis growth) failed to stabilise the result.
struct NotConverged : NumericalError {
    explicit NotConverged(const std::string& what) : NumericalError(what) {}
};

// Perturbation coefficients still drift when the truncated basis is enlarged.
struct BasisTooSmall : NumericalError {
    explicit BasisTooSmall(const std::string& what) : NumericalError(what) {}
};

// Matrix-element quadrature changed too much under node doubling.
struct QuadratureNotConverged : NumericalError {
    explicit QuadratureNotConverged(const std::string& what) : NumericalError(what) {}
};

}  // namespace branchon
