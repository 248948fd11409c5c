#ifndef MLCSHE_DISTANCE_HPP
#define MLCSHE_DISTANCE_HPP

#include <Eigen/Dense>
#include <span>

#include "mlcshe/genotypes.hpp"
#include "mlcshe/search_space.hpp"

namespace mlcshe {

/// How the Hamming (categorical) and city-block (numeric) components are
/// averaged. ByDimensionCount weights each flattened dimension equally, so
/// the distance is 1 exactly when every categorical value differs and every
/// numeric difference is maximal. ComponentMean is the plain mean of the
/// two component scores, kept for sensitivity checks.
enum class DistanceWeighting { ByDimensionCount, ComponentMean };

struct DistanceConfig {
    DistanceWeighting weighting = DistanceWeighting::ByDimensionCount;
};

/// Normalized heterogeneous distance over a flattened genome segment:
/// categorical positions contribute a Hamming mismatch, numeric positions
/// |a-b| / span. Result in [0, 1]; 0 iff the vectors are equal.
double genome_distance(const Vector& a, const Vector& b, std::span<const DimensionSpec> dims,
                       const DistanceConfig& cfg = {});

double dist(const CompleteSolution& a, const CompleteSolution& b, const SearchSpaceSpec& spec,
            const DistanceConfig& cfg = {});

/// Pairwise distances over an append-only archive of flattened solutions.
/// Symmetric with a zero diagonal; extension computes only the entries that
/// involve new solutions and never touches existing ones.
class DistanceMatrix {
public:
    explicit DistanceMatrix(DistanceConfig cfg = {}) : cfg_(cfg) {}

    int size() const { return size_; }

    double at(int i, int j) const {
        if (i == j) return 0.0;
        return i > j ? d_(i, j) : d_(j, i);
    }

    /// Extends the matrix to cover `flats` (the archive's flattened vectors,
    /// whose first size() entries were covered by previous calls).
    void extend(std::span<const Vector> flats, std::span<const DimensionSpec> dims);

    /// Cumulative number of distance evaluations; lets tests assert that
    /// extension never recomputes an existing pair.
    long long dist_calls() const { return dist_calls_; }

    const DistanceConfig& config() const { return cfg_; }

private:
    DistanceConfig cfg_;
    Eigen::MatrixXd d_; // lower triangle holds the values
    int size_ = 0;
    long long dist_calls_ = 0;
};

} // namespace mlcshe

#endif
