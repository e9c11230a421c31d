#include "ptnorm/error.hpp"

namespace ptnorm {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoSignChange: return "no sign change";
    case ErrorKind::MaxIterations: return "iteration budget exhausted";
    case ErrorKind::Diverged: return "iteration diverged";
    case ErrorKind::OutOfOvalRange: return "momentum outside oval range";
    case ErrorKind::NotBroken: return "coupling below critical";
    case ErrorKind::ExceptionalCoupling: return "exceptional coupling";
    case ErrorKind::BranchCut: return "point on branch cut";
    case ErrorKind::ZeroPseudoNorm: return "vanishing self pseudo-product";
    case ErrorKind::DegeneratePair: return "degenerate pair";
    case ErrorKind::TruncationTooTight: return "contour truncation too tight";
    case ErrorKind::PoorReconstruction: return "state outside truncated basis";
    case ErrorKind::OverflowGuard: return "evolution time exceeds overflow guard";
    case ErrorKind::LinearSolveFailure: return "linear solve failed";
    case ErrorKind::InvalidArgument: return "invalid argument";
    }
    return "unknown error";
}

} // namespace ptnorm
