#include "mlcshe/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace mlcshe {

double genome_distance(const Vector& a, const Vector& b, std::span<const DimensionSpec> dims,
                       const DistanceConfig& cfg) {
    if (a.size() != b.size() || static_cast<size_t>(a.size()) != dims.size())
        throw std::invalid_argument("genome_distance: length mismatch against dimension table");
    int categorical = 0, numeric = 0;
    double mismatches = 0.0, cityblock = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const DimensionSpec& d = dims[static_cast<size_t>(i)];
        if (d.kind == DimKind::Categorical) {
            ++categorical;
            if (a[i] != b[i]) mismatches += 1.0;
        } else {
            ++numeric;
            if (d.span > 0.0) cityblock += std::abs(a[i] - b[i]) / d.span;
        }
    }
    if (categorical + numeric == 0) return 0.0;
    if (cfg.weighting == DistanceWeighting::ByDimensionCount)
        return (mismatches + cityblock) / static_cast<double>(categorical + numeric);
    const double hamming_norm = categorical > 0 ? mismatches / categorical : 0.0;
    const double cityblock_norm = numeric > 0 ? cityblock / numeric : 0.0;
    if (categorical == 0) return cityblock_norm;
    if (numeric == 0) return hamming_norm;
    return 0.5 * (hamming_norm + cityblock_norm);
}

double dist(const CompleteSolution& a, const CompleteSolution& b, const SearchSpaceSpec& spec,
            const DistanceConfig& cfg) {
    return genome_distance(flatten(a, spec), flatten(b, spec), spec.dimensions(), cfg);
}

void DistanceMatrix::extend(std::span<const Vector> flats, std::span<const DimensionSpec> dims) {
    const int n = static_cast<int>(flats.size());
    if (n < size_) throw std::invalid_argument("DistanceMatrix::extend: archive shrank");
    if (n == size_) return;
    if (d_.rows() < n) {
        const int cap = std::max(n, static_cast<int>(d_.rows()) * 2);
        d_.conservativeResize(cap, cap);
    }
    for (int i = size_; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            d_(i, j) = genome_distance(flats[static_cast<size_t>(i)], flats[static_cast<size_t>(j)], dims, cfg_);
            ++dist_calls_;
        }
    }
    size_ = n;
}

} // namespace mlcshe
