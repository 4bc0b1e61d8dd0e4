#pragma once

#include "hankel/multiindex.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace hankel {

using Complex = std::complex<double>;

/// A polynomial symbol phi(z) = sum_alpha c_alpha z^alpha on the d-torus.
///
/// Terms are kept in graded multi-index order and exact zeros are never
/// stored. Symbols are immutable once built; every operation returns a new one.
class Symbol {
public:
    using Terms = std::map<MultiIndex, Complex>;

    /// The zero symbol in dimension d (d >= 1).
    explicit Symbol(std::size_t dimension);

    /// Canonicalizes: sums duplicate indices and drops coefficients that are exactly zero.
    /// Throws DimensionError if some index has length != dimension.
    Symbol(std::size_t dimension, std::span<const std::pair<MultiIndex, Complex>> terms);
    Symbol(std::size_t dimension, std::initializer_list<std::pair<MultiIndex, Complex>> terms);

    static Symbol monomial(const MultiIndex& alpha, Complex coefficient = 1.0);
    static Symbol constant(std::size_t dimension, Complex value);
    /// z_j (0-based j).
    static Symbol variable(std::size_t dimension, std::size_t j);

    std::size_t dimension() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Fourier coefficient at alpha, zero when absent.
    Complex coefficient(const MultiIndex& alpha) const;

    /// Largest total degree in the support (0 for the zero symbol).
    std::uint64_t max_degree() const noexcept;

    /// Same polynomial viewed on a torus of larger dimension.
    Symbol embed(std::size_t new_dimension) const;

    friend bool operator==(const Symbol&, const Symbol&) = default;

private:
    std::size_t dim_;
    Terms terms_;
};

Symbol make_symbol(std::size_t dimension, std::span<const std::pair<MultiIndex, Complex>> terms);

Symbol add(const Symbol& a, const Symbol& b);
Symbol mul(const Symbol& a, const Symbol& b);
Symbol scale(const Symbol& s, Complex c);

inline Symbol operator+(const Symbol& a, const Symbol& b) { return add(a, b); }
inline Symbol operator*(const Symbol& a, const Symbol& b) { return mul(a, b); }
inline Symbol operator*(Complex c, const Symbol& s) { return scale(s, c); }

/// ||s||_{H^2} = sqrt(sum |c_alpha|^2).
double h2_norm(const Symbol& s);

/// Variables j (0-based) that appear with a positive exponent somewhere in the support.
std::set<std::size_t> variable_support(const Symbol& s);
bool separate_variables(const Symbol& a, const Symbol& b);

Symbol homogeneous_part(const Symbol& s, std::uint64_t m);

/// m if every term has degree m, nullopt for mixed degrees. The zero symbol reports 0.
std::optional<std::uint64_t> is_homogeneous(const Symbol& s);

/// s~(z) = conj(s(conj z)): conjugate every coefficient.
Symbol reflect(const Symbol& s);

/// s(e^{i theta_1}, ..., e^{i theta_d}).
Complex evaluate(const Symbol& s, std::span<const double> angles);

/// <a, b> = sum_alpha a_alpha conj(b_alpha).
Complex pairing(const Symbol& a, const Symbol& b);

/// sum_alpha |c_alpha| * degree(alpha); Lipschitz constant of s on the torus in the l^inf angle metric.
double lipschitz_bound(const Symbol& s);

} // namespace hankel
