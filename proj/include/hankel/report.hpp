#pragma once

#include "hankel/minimal_norm.hpp"
#include "hankel/nehari.hpp"
#include "hankel/norm_estimate.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hankel {

/// One line of a results table: (quantity, value, method, error bound).
struct ReportRow {
    std::string quantity;
    double value = 0.0;
    std::string method;
    double error_bound = 0.0;
};

ReportRow make_row(std::string quantity, const NormEstimate& est);
ReportRow make_row(std::string quantity, const BoundReport& report);

/// Aligned plain-text table.
std::string render_table(std::span<const ReportRow> rows);
/// JSON array with one flat object per row, same values as the text table.
std::string render_json(std::span<const ReportRow> rows);

std::string render_verdict(const MinimalityVerdict& v);
std::string render_verdict_json(const MinimalityVerdict& v);

enum class Comparison { Equal, AtLeast, InRange };

/// A reproduced number next to its published reference.
struct ReproRow {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::Equal;
    /// Upper end for InRange rows (reference is the lower end).
    double reference_hi = 0.0;

    double difference() const;
    bool pass() const;
};

struct ReproduceOptions {
    std::size_t psi_truncation = 10'000;
    std::size_t psi_grid = 512;
    /// Tensor grid for the two-variable H^1 norm behind the dual bound.
    std::size_t h1_grid = 2048;
};

std::vector<ReproRow> reproduce_all(const ReproduceOptions& opts = {});

std::string render_repro_table(std::span<const ReproRow> rows);
std::string render_repro_json(std::span<const ReproRow> rows);

} // namespace hankel
