#include "hankel/norm_estimate.hpp"

namespace hankel {

std::string_view to_string(NormMethod m) {
    switch (m) {
    case NormMethod::SpectralExact: return "spectral-exact";
    case NormMethod::GridQuadrature: return "grid-quadrature";
    case NormMethod::MonteCarlo: return "monte-carlo";
    case NormMethod::ClosedForm: return "closed-form";
    }
    return "unknown";
}

} // namespace hankel
