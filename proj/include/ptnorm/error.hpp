#pragma once

#include <stdexcept>
#include <string>

namespace ptnorm {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// codes, so keep the split between usage, numerical, and regime errors.
enum class ErrorKind {
    NoSignChange,        // root bracket does not enclose a sign change
    MaxIterations,       // iteration budget exhausted before the tolerance
    Diverged,            // iterate left the trust region or became non-finite
    OutOfOvalRange,      // p outside the oval's momentum interval
    NotBroken,           // coupling below the critical value; no complex pair
    ExceptionalCoupling, // parameter sits exactly on an excluded/critical value
    BranchCut,           // evaluation point on the power branch cut
    ZeroPseudoNorm,      // self pseudo-product vanishes; state needs pair treatment
    DegeneratePair,      // cross pseudo-product vanishes; pair cannot be normalized
    TruncationTooTight,  // integrand not decayed at the contour ends
    PoorReconstruction,  // state not representable in the truncated basis
    OverflowGuard,       // requested evolution time would overflow exp()
    LinearSolveFailure,  // tridiagonal solve hit a negligible pivot
    InvalidArgument,     // precondition violated by the caller
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace ptnorm
