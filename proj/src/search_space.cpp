#include "mlcshe/search_space.hpp"

#include <set>

namespace mlcshe {

namespace {

void append_box_dims(std::vector<DimensionSpec>& dims, const TrajectoryMlcoShape& s,
                     const std::string& prefix) {
    // Time steps run 1..T but normalize by T, matching the frame fields
    // which normalize by their full pixel extent.
    dims.push_back({prefix + ".t", DimKind::Integer, 1.0, static_cast<double>(s.duration), 0,
                    static_cast<double>(s.duration)});
    dims.push_back({prefix + ".x_min", DimKind::Integer, 0.0, static_cast<double>(s.frame_width), 0,
                    static_cast<double>(s.frame_width)});
    dims.push_back({prefix + ".x_max", DimKind::Integer, 0.0, static_cast<double>(s.frame_width), 0,
                    static_cast<double>(s.frame_width)});
    dims.push_back({prefix + ".y_min", DimKind::Integer, 0.0, static_cast<double>(s.frame_height), 0,
                    static_cast<double>(s.frame_height)});
    dims.push_back({prefix + ".y_max", DimKind::Integer, 0.0, static_cast<double>(s.frame_height), 0,
                    static_cast<double>(s.frame_height)});
}

} // namespace

SearchSpaceSpec::SearchSpaceSpec(std::vector<ParamSpec> scenario_params, MlcoShape mlco)
    : scenario_params_(std::move(scenario_params)), mlco_(std::move(mlco)) {
    std::set<std::string> names;
    for (const auto& p : scenario_params_) {
        if (!names.insert(p.name).second)
            throw std::invalid_argument("duplicate scenario param name '" + p.name + "'");
        dims_.push_back(dimension_from_param(p));
    }
    scenario_size_ = static_cast<int>(dims_.size());

    if (const auto* t = std::get_if<TrajectoryMlcoShape>(&mlco_)) {
        if (t->max_trajectories < 1 || t->frame_width < 1 || t->frame_height < 1 ||
            t->class_count < 1 || t->duration < 1)
            throw std::invalid_argument("trajectory mlco shape fields must be positive");
        for (int i = 0; i < t->max_trajectories; ++i) {
            const std::string p = "trj" + std::to_string(i);
            if (t->class_count >= 2) {
                dims_.push_back({p + ".class", DimKind::Categorical, 0.0,
                                 static_cast<double>(t->class_count - 1), t->class_count, 1.0});
            } else {
                // A single-class space has no label choice; keep the slot as a
                // constant integer so the flattened layout stays uniform.
                dims_.push_back({p + ".class", DimKind::Integer, 0.0, 0.0, 0, 1.0});
            }
            append_box_dims(dims_, *t, p + ".start");
            append_box_dims(dims_, *t, p + ".end");
        }
    } else {
        const auto& g = std::get<ParamMlcoShape>(mlco_);
        if (g.params.empty()) throw std::invalid_argument("mlco param list must be non-empty");
        for (const auto& p : g.params) {
            if (!names.insert(p.name).second)
                throw std::invalid_argument("duplicate param name '" + p.name + "'");
            dims_.push_back(dimension_from_param(p));
        }
    }
    mlco_size_ = static_cast<int>(dims_.size()) - scenario_size_;
}

const TrajectoryMlcoShape& SearchSpaceSpec::trajectory_shape() const {
    const auto* t = std::get_if<TrajectoryMlcoShape>(&mlco_);
    if (!t) throw std::logic_error("search space has a plain-parameter mlco, not trajectories");
    return *t;
}

bool SearchSpaceSpec::operator==(const SearchSpaceSpec& other) const {
    if (dims_.size() != other.dims_.size() || scenario_size_ != other.scenario_size_) return false;
    for (size_t i = 0; i < dims_.size(); ++i) {
        const auto& a = dims_[i];
        const auto& b = other.dims_[i];
        if (a.name != b.name || a.kind != b.kind || a.lower != b.lower || a.upper != b.upper ||
            a.cardinality != b.cardinality || a.span != b.span)
            return false;
    }
    return true;
}

} // namespace mlcshe
