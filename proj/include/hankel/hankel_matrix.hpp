#pragma once

#include "hankel/norm_estimate.hpp"
#include "hankel/symbol.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

/// Finite matrix of the small Hankel operator H_phi f = Pbar(conj(phi) f).
///
/// The monomial z^beta is sent to sum_gamma conj(phi_{beta+gamma}) conj(z)^gamma,
/// so entry(gamma, beta) = conj(phi_{beta+gamma}). Columns are indexed by the
/// input exponents beta, rows by the conjugate output exponents gamma.
struct HankelMatrix {
    std::vector<MultiIndex> column_basis;
    std::vector<MultiIndex> row_basis;
    Eigen::MatrixXcd entries;

    std::size_t rows() const noexcept { return row_basis.size(); }
    std::size_t cols() const noexcept { return column_basis.size(); }
    bool empty() const noexcept { return rows() == 0 || cols() == 0; }
};

struct ActiveBases {
    std::vector<MultiIndex> columns;
    std::vector<MultiIndex> rows;
};

/// Indices dominated componentwise by some element of the support; H_phi
/// vanishes on every other monomial. Rows and columns coincide.
ActiveBases active_bases(const Symbol& s);

/// Full operator on its active bases. Every omitted row and column is zero.
HankelMatrix build_matrix(const Symbol& s);

/// Restriction H_{phi,k} to k-homogeneous inputs, for m-homogeneous phi.
/// Rows are the (m-k)-homogeneous outputs. k > m gives the empty (zero) block.
/// Throws ContractViolation when s is not homogeneous.
HankelMatrix build_block(const Symbol& s, std::uint64_t k);

/// Largest singular value. Empty matrices have norm 0.
NormEstimate spectral_norm(const Eigen::MatrixXcd& m);
NormEstimate spectral_norm(const HankelMatrix& m);

/// ||H_phi|| via the full active-basis matrix.
NormEstimate operator_norm(const Symbol& s);

/// (k, ||H_{phi,k}||) for k = first..last, m-homogeneous s only.
std::vector<std::pair<std::uint64_t, double>> block_norms(const Symbol& s, std::uint64_t first,
                                                          std::uint64_t last);

/// `rows <n> cols <m>` header, then one line per row of space-separated `re,im` pairs.
std::string dump_matrix(const HankelMatrix& m);

} // namespace hankel
