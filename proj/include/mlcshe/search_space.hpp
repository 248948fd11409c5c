#ifndef MLCSHE_SEARCH_SPACE_HPP
#define MLCSHE_SEARCH_SPACE_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mlcshe {

enum class DimKind {
    Real,        // continuous; Gaussian mutation, city-block distance
    Integer,     // integral (pixels, time steps); uniform resampling, city-block distance
    Categorical  // label codes; uniform resampling, Hamming distance
};

/// One scenario parameter. Numeric parameters carry [lower, upper] bounds,
/// categorical ones a cardinality (codes 0..cardinality-1).
struct ParamSpec {
    std::string name;
    DimKind kind = DimKind::Real;
    double lower = 0.0;
    double upper = 1.0;
    int cardinality = 0;
};

/// Shape of a trajectory-structured MLC-output genotype: n trajectories,
/// each (class, start box, end box) over a duration-T simulation with a
/// frame_width x frame_height camera frame.
struct TrajectoryMlcoShape {
    int max_trajectories = 1;
    int frame_width = 800;
    int frame_height = 600;
    int class_count = 2;
    int duration = 1;
};

/// MLC-output side described as a plain parameter list (benchmark spaces
/// such as MTQ or Onemax, where the second population is not a trajectory
/// sequence).
struct ParamMlcoShape {
    std::vector<ParamSpec> params;
};

/// One flattened genome dimension. `span` is the normalization denominator
/// used by the distance metric and by Gaussian mutation; it equals
/// upper - lower except for box time fields, which normalize by the full
/// simulation duration T.
struct DimensionSpec {
    std::string name;
    DimKind kind = DimKind::Real;
    double lower = 0.0;
    double upper = 1.0;
    int cardinality = 0;
    double span = 1.0;
};

/// Number of flattened dimensions per trajectory: class + two (t, x_min,
/// x_max, y_min, y_max) quintuples.
inline constexpr int kTrajectoryDims = 11;

/// Declarative description of the joint genotype space. The flattened
/// ordering is: scenario parameters first, then per-trajectory
/// (class, start quintuple, end quintuple) blocks (or the plain mlco
/// parameter list for benchmark spaces).
class SearchSpaceSpec {
public:
    using MlcoShape = std::variant<TrajectoryMlcoShape, ParamMlcoShape>;

    SearchSpaceSpec(std::vector<ParamSpec> scenario_params, MlcoShape mlco);

    const std::vector<ParamSpec>& scenario_params() const { return scenario_params_; }
    const MlcoShape& mlco_shape() const { return mlco_; }

    bool has_trajectory_mlco() const { return std::holds_alternative<TrajectoryMlcoShape>(mlco_); }
    const TrajectoryMlcoShape& trajectory_shape() const;

    int scenario_size() const { return scenario_size_; }
    int mlco_size() const { return mlco_size_; }
    int total_size() const { return scenario_size_ + mlco_size_; }

    /// Per-dimension table over the full flattened genome.
    std::span<const DimensionSpec> dimensions() const { return dims_; }
    std::span<const DimensionSpec> scenario_dimensions() const {
        return std::span<const DimensionSpec>(dims_).first(scenario_size_);
    }
    std::span<const DimensionSpec> mlco_dimensions() const {
        return std::span<const DimensionSpec>(dims_).subspan(scenario_size_);
    }

    bool operator==(const SearchSpaceSpec& other) const;

private:
    std::vector<ParamSpec> scenario_params_;
    MlcoShape mlco_;
    std::vector<DimensionSpec> dims_;
    int scenario_size_ = 0;
    int mlco_size_ = 0;
};

inline DimensionSpec dimension_from_param(const ParamSpec& p) {
    DimensionSpec d;
    d.name = p.name;
    d.kind = p.kind;
    if (p.kind == DimKind::Categorical) {
        if (p.cardinality < 2) throw std::invalid_argument("categorical param '" + p.name + "' needs cardinality >= 2");
        d.lower = 0.0;
        d.upper = static_cast<double>(p.cardinality - 1);
        d.cardinality = p.cardinality;
        d.span = 1.0; // Hamming: span is unused
    } else {
        if (!(p.lower < p.upper)) throw std::invalid_argument("param '" + p.name + "' needs lower < upper");
        d.lower = p.lower;
        d.upper = p.upper;
        d.span = p.upper - p.lower;
    }
    return d;
}

} // namespace mlcshe

#endif
