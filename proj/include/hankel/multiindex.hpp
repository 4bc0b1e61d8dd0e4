#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hankel {

/// Exponent vector alpha in N_0^d, standing for the monomial z^alpha.
///
/// Ordering is graded: total degree first, then lexicographic with the
/// larger leading exponent first, so that in two variables the degree-1
/// block reads (z1, z2) and the degree-2 block reads (z1^2, z1 z2, z2^2).
class MultiIndex {
public:
    using exponent_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dimension) : exps_(dimension, 0) {}
    MultiIndex(std::initializer_list<exponent_type> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}

    /// The unit index e_j.
    static MultiIndex unit(std::size_t dimension, std::size_t j);

    std::size_t dimension() const noexcept { return exps_.size(); }
    exponent_type operator[](std::size_t j) const { return exps_[j]; }
    exponent_type& operator[](std::size_t j) { return exps_[j]; }
    std::span<const exponent_type> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;

    /// Componentwise order: every entry of *this is <= the matching entry of other.
    bool dominated_by(const MultiIndex& other) const;

    /// Componentwise sum. Throws DimensionError on length mismatch.
    MultiIndex operator+(const MultiIndex& other) const;

    /// Pad with zero exponents up to new_dimension.
    MultiIndex embedded(std::size_t new_dimension) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<exponent_type> exps_;
};

/// All beta with beta <= alpha componentwise, in graded order.
std::vector<MultiIndex> dominated_indices(const MultiIndex& alpha);

} // namespace hankel
