#include "hankel/multiindex.hpp"

#include "hankel/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hankel {

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t j) {
    if (j >= dimension) {
        throw DimensionError("unit index " + std::to_string(j) + " outside dimension " +
                             std::to_string(dimension));
    }
    MultiIndex e(dimension);
    e.exps_[j] = 1;
    return e;
}

std::uint64_t MultiIndex::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
    if (dimension() != other.dimension()) {
        throw DimensionError("comparing multi-indices of lengths " + std::to_string(dimension()) +
                             " and " + std::to_string(other.dimension()));
    }
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] > other.exps_[j]) {
            return false;
        }
    }
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (dimension() != other.dimension()) {
        throw DimensionError("adding multi-indices of lengths " + std::to_string(dimension()) +
                             " and " + std::to_string(other.dimension()));
    }
    MultiIndex out = *this;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        out.exps_[j] += other.exps_[j];
    }
    return out;
}

MultiIndex MultiIndex::embedded(std::size_t new_dimension) const {
    if (new_dimension < dimension()) {
        throw DimensionError("cannot embed into a smaller dimension");
    }
    MultiIndex out = *this;
    out.exps_.resize(new_dimension, 0);
    return out;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(exps_[j]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
    // Larger leading exponent sorts first.
    for (std::size_t j = 0; j < a.dimension(); ++j) {
        if (a[j] != b[j]) return b[j] <=> a[j];
    }
    return std::strong_ordering::equal;
}

std::vector<MultiIndex> dominated_indices(const MultiIndex& alpha) {
    std::vector<MultiIndex> out;
    MultiIndex beta(alpha.dimension());
    // Odometer over the box [0, alpha_1] x ... x [0, alpha_d].
    while (true) {
        out.push_back(beta);
        std::size_t j = 0;
        for (; j < alpha.dimension(); ++j) {
            if (beta[j] < alpha[j]) {
                ++beta[j];
                break;
            }
            beta[j] = 0;
        }
        if (j == alpha.dimension()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hankel
