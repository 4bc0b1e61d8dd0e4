#pragma once

#include <map>
#include <string>
#include <string_view>

namespace hankel {

enum class NormMethod { SpectralExact, GridQuadrature, MonteCarlo, ClosedForm };

std::string_view to_string(NormMethod m);

/// A computed norm together with how it was obtained and how far it may be off.
struct NormEstimate {
    double value = 0.0;
    NormMethod method = NormMethod::ClosedForm;
    double error_bound = 0.0;
    /// Grid sizes, seeds, iteration counts, caveats.
    std::map<std::string, std::string> metadata;
};

} // namespace hankel
