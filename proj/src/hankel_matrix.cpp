#include "hankel/hankel_matrix.hpp"

#include "hankel/errors.hpp"
#include "hankel/symbol_io.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace hankel {

namespace {

HankelMatrix assemble(const Symbol& s, std::vector<MultiIndex> rows, std::vector<MultiIndex> cols) {
    HankelMatrix h;
    h.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()),
                                       static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            h.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::conj(s.coefficient(cols[c] + rows[r]));
        }
    }
    h.row_basis = std::move(rows);
    h.column_basis = std::move(cols);
    return h;
}

} // namespace

ActiveBases active_bases(const Symbol& s) {
    std::set<MultiIndex> active;
    for (const auto& [alpha, c] : s.terms()) {
        for (auto& beta : dominated_indices(alpha)) active.insert(std::move(beta));
    }
    ActiveBases out;
    out.columns.assign(active.begin(), active.end());
    out.rows = out.columns;
    return out;
}

HankelMatrix build_matrix(const Symbol& s) {
    auto bases = active_bases(s);
    return assemble(s, std::move(bases.rows), std::move(bases.columns));
}

HankelMatrix build_block(const Symbol& s, std::uint64_t k) {
    const auto m = is_homogeneous(s);
    if (!m) throw ContractViolation("build_block: symbol is not homogeneous");
    if (k > *m || s.is_zero()) return {};

    const auto bases = active_bases(s);
    std::vector<MultiIndex> cols, rows;
    for (const auto& beta : bases.columns) {
        if (beta.degree() == k) cols.push_back(beta);
        if (beta.degree() == *m - k) rows.push_back(beta);
    }
    return assemble(s, std::move(rows), std::move(cols));
}

NormEstimate spectral_norm(const Eigen::MatrixXcd& m) {
    NormEstimate est;
    est.method = NormMethod::SpectralExact;
    est.metadata["shape"] = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    if (m.size() == 0) return est;

    // Hermitian eigenproblem on the smaller Gram matrix; its top eigenvalue is sigma_max^2.
    const Eigen::MatrixXcd gram =
        m.rows() >= m.cols() ? Eigen::MatrixXcd(m.adjoint() * m) : Eigen::MatrixXcd(m * m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral_norm: eigensolver did not converge");
    }
    const double top = solver.eigenvalues().maxCoeff();
    est.value = std::sqrt(std::max(top, 0.0));
    est.error_bound = 64.0 * std::numeric_limits<double>::epsilon() * est.value;
    est.metadata["gram_size"] = std::to_string(gram.rows());
    return est;
}

NormEstimate spectral_norm(const HankelMatrix& m) {
    return spectral_norm(m.entries);
}

NormEstimate operator_norm(const Symbol& s) {
    auto est = spectral_norm(build_matrix(s));
    est.metadata["basis"] = "active";
    return est;
}

std::vector<std::pair<std::uint64_t, double>> block_norms(const Symbol& s, std::uint64_t first,
                                                          std::uint64_t last) {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (std::uint64_t k = first; k <= last; ++k) {
        out.emplace_back(k, spectral_norm(build_block(s, k)).value);
    }
    return out;
}

std::string dump_matrix(const HankelMatrix& m) {
    std::string out = "rows " + std::to_string(m.rows()) + " cols " + std::to_string(m.cols()) + "\n";
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            if (c) out += ' ';
            // Adding 0.0 folds the -0 that conjugation leaves behind.
            out += format_double(m.entries(r, c).real() + 0.0);
            out += ',';
            out += format_double(m.entries(r, c).imag() + 0.0);
        }
        out += '\n';
    }
    return out;
}

} // namespace hankel
