#include "mlcshe/genotypes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mlcshe/rng.hpp"

namespace mlcshe {

namespace {

double sample_dimension(const DimensionSpec& d, std::mt19937_64& rng) {
    switch (d.kind) {
    case DimKind::Real: {
        std::uniform_real_distribution<double> u(d.lower, d.upper);
        return u(rng);
    }
    case DimKind::Integer:
    case DimKind::Categorical: {
        std::uniform_int_distribution<long long> u(static_cast<long long>(d.lower),
                                                   static_cast<long long>(d.upper));
        return static_cast<double>(u(rng));
    }
    }
    return d.lower;
}

} // namespace

Vector random_genome(std::span<const DimensionSpec> dims, std::mt19937_64& rng) {
    Vector v(static_cast<Eigen::Index>(dims.size()));
    for (size_t i = 0; i < dims.size(); ++i) v[static_cast<Eigen::Index>(i)] = sample_dimension(dims[i], rng);
    return v;
}

Scenario random_scenario(const SearchSpaceSpec& spec, std::mt19937_64& rng) {
    return Scenario{random_genome(spec.scenario_dimensions(), rng)};
}

MlcoGenotype random_mlco(const SearchSpaceSpec& spec, std::mt19937_64& rng) {
    // Sampled per dimension then repaired so box coordinate pairs come out
    // ordered; sampling and repair stay a single code path with breeding.
    return repair(MlcoGenotype{random_genome(spec.mlco_dimensions(), rng)}, spec);
}

CompleteSolution random_solution(const SearchSpaceSpec& spec, std::mt19937_64& rng) {
    CompleteSolution s;
    s.scenario = random_scenario(spec, rng);
    s.mlco = random_mlco(spec, rng);
    return s;
}

BoundaryBox interpolate_trajectory(const Trajectory& trj, int t) {
    if (t < trj.start.t || t > trj.end.t)
        throw std::invalid_argument("interpolation time " + std::to_string(t) +
                                    " outside [" + std::to_string(trj.start.t) + ", " +
                                    std::to_string(trj.end.t) + "]");
    if (t == trj.start.t) return BoundaryBox{t, trj.start.x_min, trj.start.x_max, trj.start.y_min, trj.start.y_max};
    if (t == trj.end.t) return BoundaryBox{t, trj.end.x_min, trj.end.x_max, trj.end.y_min, trj.end.y_max};
    const double a = static_cast<double>(t - trj.start.t) / static_cast<double>(trj.end.t - trj.start.t);
    auto lerp = [a](int s, int e) {
        return static_cast<int>(std::lround(static_cast<double>(s) + a * static_cast<double>(e - s)));
    };
    BoundaryBox b;
    b.t = t;
    b.x_min = lerp(trj.start.x_min, trj.end.x_min);
    b.x_max = lerp(trj.start.x_max, trj.end.x_max);
    b.y_min = lerp(trj.start.y_min, trj.end.y_min);
    b.y_max = lerp(trj.start.y_max, trj.end.y_max);
    return b;
}

MlcOutputSequence decode_mlco(const MlcoGenotype& g, const SearchSpaceSpec& spec) {
    const auto& shape = spec.trajectory_shape();
    if (g.values.size() != spec.mlco_size())
        throw std::invalid_argument("mlco genotype has wrong length");
    MlcOutputSequence seq;
    seq.trajectories.reserve(static_cast<size_t>(shape.max_trajectories));
    for (int i = 0; i < shape.max_trajectories; ++i) {
        const Eigen::Index o = static_cast<Eigen::Index>(i) * kTrajectoryDims;
        auto at = [&](Eigen::Index j) { return static_cast<int>(std::llround(g.values[o + j])); };
        Trajectory trj;
        trj.class_code = at(0);
        trj.start = BoundaryBox{at(1), at(2), at(3), at(4), at(5)};
        trj.end = BoundaryBox{at(6), at(7), at(8), at(9), at(10)};
        seq.trajectories.push_back(trj);
    }
    return seq;
}

MlcoGenotype encode_mlco(const MlcOutputSequence& seq, const SearchSpaceSpec& spec) {
    const auto& shape = spec.trajectory_shape();
    if (static_cast<int>(seq.trajectories.size()) != shape.max_trajectories)
        throw std::invalid_argument("mlco must hold exactly " + std::to_string(shape.max_trajectories) +
                                    " trajectories");
    Vector v(spec.mlco_size());
    Eigen::Index o = 0;
    for (const auto& trj : seq.trajectories) {
        v[o++] = trj.class_code;
        for (const auto* b : {&trj.start, &trj.end}) {
            v[o++] = b->t;
            v[o++] = b->x_min;
            v[o++] = b->x_max;
            v[o++] = b->y_min;
            v[o++] = b->y_max;
        }
    }
    return MlcoGenotype{std::move(v)};
}

Vector repair_genome(Vector values, std::span<const DimensionSpec> dims, bool mlco_boxes,
                     const SearchSpaceSpec& spec) {
    if (static_cast<size_t>(values.size()) != dims.size())
        throw std::invalid_argument("genome length does not match dimension table");
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const DimensionSpec& d = dims[static_cast<size_t>(i)];
        double v = values[i];
        if (!std::isfinite(v)) v = d.lower;
        switch (d.kind) {
        case DimKind::Real:
            v = std::clamp(v, d.lower, d.upper);
            break;
        case DimKind::Integer:
            v = std::round(v);
            v = std::clamp(v, d.lower, d.upper);
            break;
        case DimKind::Categorical: {
            long long code = static_cast<long long>(std::llround(v));
            long long card = d.cardinality;
            code = ((code % card) + card) % card;
            v = static_cast<double>(code);
            break;
        }
        }
        values[i] = v + 0.0; // normalize -0.0
    }
    if (mlco_boxes && spec.has_trajectory_mlco()) {
        const auto& shape = spec.trajectory_shape();
        for (int t = 0; t < shape.max_trajectories; ++t) {
            const Eigen::Index o = static_cast<Eigen::Index>(t) * kTrajectoryDims;
            // start.t <= end.t, then x/y min <= max within each box
            if (values[o + 1] > values[o + 6]) std::swap(values[o + 1], values[o + 6]);
            if (values[o + 2] > values[o + 3]) std::swap(values[o + 2], values[o + 3]);
            if (values[o + 4] > values[o + 5]) std::swap(values[o + 4], values[o + 5]);
            if (values[o + 7] > values[o + 8]) std::swap(values[o + 7], values[o + 8]);
            if (values[o + 9] > values[o + 10]) std::swap(values[o + 9], values[o + 10]);
        }
    }
    return values;
}

Scenario repair(Scenario s, const SearchSpaceSpec& spec) {
    s.values = repair_genome(std::move(s.values), spec.scenario_dimensions(), false, spec);
    return s;
}

MlcoGenotype repair(MlcoGenotype m, const SearchSpaceSpec& spec) {
    m.values = repair_genome(std::move(m.values), spec.mlco_dimensions(), true, spec);
    return m;
}

bool genome_is_valid(const Vector& values, std::span<const DimensionSpec> dims, bool mlco_boxes,
                     const SearchSpaceSpec& spec) {
    if (static_cast<size_t>(values.size()) != dims.size()) return false;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const DimensionSpec& d = dims[static_cast<size_t>(i)];
        const double v = values[i];
        if (!std::isfinite(v)) return false;
        if (d.kind != DimKind::Real && v != std::round(v)) return false;
        if (d.kind == DimKind::Categorical) {
            if (v < 0 || v >= d.cardinality) return false;
        } else if (v < d.lower || v > d.upper) {
            return false;
        }
    }
    if (mlco_boxes && spec.has_trajectory_mlco()) {
        const auto& shape = spec.trajectory_shape();
        for (int t = 0; t < shape.max_trajectories; ++t) {
            const Eigen::Index o = static_cast<Eigen::Index>(t) * kTrajectoryDims;
            if (values[o + 1] > values[o + 6]) return false;
            if (values[o + 2] > values[o + 3] || values[o + 4] > values[o + 5]) return false;
            if (values[o + 7] > values[o + 8] || values[o + 9] > values[o + 10]) return false;
        }
    }
    return true;
}

Vector flatten(const CompleteSolution& s, const SearchSpaceSpec& spec) {
    if (s.scenario.values.size() != spec.scenario_size() || s.mlco.values.size() != spec.mlco_size())
        throw std::invalid_argument("solution does not conform to the search space");
    Vector v(spec.total_size());
    v.head(spec.scenario_size()) = s.scenario.values;
    v.tail(spec.mlco_size()) = s.mlco.values;
    return v;
}

CompleteSolution unflatten(const Vector& flat, const SearchSpaceSpec& spec) {
    if (flat.size() != spec.total_size())
        throw std::invalid_argument("flattened vector has wrong length");
    CompleteSolution s;
    s.scenario.values = flat.head(spec.scenario_size());
    s.mlco.values = flat.tail(spec.mlco_size());
    return s;
}

bool same_genotype(const CompleteSolution& a, const CompleteSolution& b) {
    return a.scenario.values == b.scenario.values && a.mlco.values == b.mlco.values;
}

std::uint64_t genome_hash(const Vector& flat, std::uint64_t seed) {
    std::uint64_t h = splitmix64(seed ^ 0x6d6c63736865ULL);
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
        const double v = flat[i] + 0.0;
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        h = splitmix64(h ^ bits);
    }
    return h;
}

std::string solution_to_json(const CompleteSolution& s, const SearchSpaceSpec& spec) {
    nlohmann::json j;
    j["scenario"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < s.scenario.values.size(); ++i) {
        const auto& d = spec.scenario_dimensions()[static_cast<size_t>(i)];
        if (d.kind == DimKind::Real)
            j["scenario"].push_back(s.scenario.values[i]);
        else
            j["scenario"].push_back(static_cast<long long>(std::llround(s.scenario.values[i])));
    }
    if (spec.has_trajectory_mlco()) {
        auto trajectories = nlohmann::json::array();
        const auto& shape = spec.trajectory_shape();
        for (int t = 0; t < shape.max_trajectories; ++t) {
            auto row = nlohmann::json::array();
            const Eigen::Index o = static_cast<Eigen::Index>(t) * kTrajectoryDims;
            for (Eigen::Index k = 0; k < kTrajectoryDims; ++k)
                row.push_back(static_cast<long long>(std::llround(s.mlco.values[o + k])));
            trajectories.push_back(std::move(row));
        }
        j["mlco"] = std::move(trajectories);
    } else {
        j["mlco"] = nlohmann::json::array();
        for (Eigen::Index i = 0; i < s.mlco.values.size(); ++i) {
            const auto& d = spec.mlco_dimensions()[static_cast<size_t>(i)];
            if (d.kind == DimKind::Real)
                j["mlco"].push_back(s.mlco.values[i]);
            else
                j["mlco"].push_back(static_cast<long long>(std::llround(s.mlco.values[i])));
        }
    }
    if (s.is_unsafe)
        j["is_unsafe"] = *s.is_unsafe;
    else
        j["is_unsafe"] = nullptr;
    if (s.fitness)
        j["fitness"] = *s.fitness;
    else
        j["fitness"] = nullptr;
    return j.dump();
}

CompleteSolution solution_from_json(const std::string& line, const SearchSpaceSpec& spec) {
    const nlohmann::json j = nlohmann::json::parse(line);
    CompleteSolution s;
    const auto& sc = j.at("scenario");
    if (static_cast<int>(sc.size()) != spec.scenario_size())
        throw std::invalid_argument("scenario length mismatch in JSON solution");
    s.scenario.values.resize(spec.scenario_size());
    for (Eigen::Index i = 0; i < s.scenario.values.size(); ++i)
        s.scenario.values[i] = sc[static_cast<size_t>(i)].get<double>();

    const auto& ml = j.at("mlco");
    s.mlco.values.resize(spec.mlco_size());
    if (spec.has_trajectory_mlco()) {
        const auto& shape = spec.trajectory_shape();
        if (static_cast<int>(ml.size()) != shape.max_trajectories)
            throw std::invalid_argument("mlco trajectory count mismatch in JSON solution");
        Eigen::Index o = 0;
        for (const auto& row : ml) {
            if (static_cast<int>(row.size()) != kTrajectoryDims)
                throw std::invalid_argument("trajectory row must have 11 values");
            for (const auto& v : row) s.mlco.values[o++] = v.get<double>();
        }
    } else {
        if (static_cast<int>(ml.size()) != spec.mlco_size())
            throw std::invalid_argument("mlco length mismatch in JSON solution");
        for (Eigen::Index i = 0; i < s.mlco.values.size(); ++i)
            s.mlco.values[i] = ml[static_cast<size_t>(i)].get<double>();
    }
    if (j.contains("is_unsafe") && !j["is_unsafe"].is_null()) s.is_unsafe = j["is_unsafe"].get<bool>();
    if (j.contains("fitness") && !j["fitness"].is_null()) s.fitness = j["fitness"].get<double>();
    return s;
}

} // namespace mlcshe
