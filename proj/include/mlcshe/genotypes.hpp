#ifndef MLCSHE_GENOTYPES_HPP
#define MLCSHE_GENOTYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mlcshe/search_space.hpp"

namespace mlcshe {

using Vector = Eigen::VectorXd;

/// Pixel-valued bounding box at one time step.
struct BoundaryBox {
    int t = 1;
    int x_min = 0, x_max = 0;
    int y_min = 0, y_max = 0;

    bool operator==(const BoundaryBox&) const = default;
};

/// One obstacle trajectory: a class label plus start and end boxes;
/// intermediate boxes are linearly interpolated.
struct Trajectory {
    int class_code = 0;
    BoundaryBox start;
    BoundaryBox end;

    bool operator==(const Trajectory&) const = default;
};

/// Decoded trajectory view of an MLC-output genotype.
struct MlcOutputSequence {
    std::vector<Trajectory> trajectories;

    bool operator==(const MlcOutputSequence&) const = default;
};

/// Scenario genotype: one value per scenario parameter, categorical codes
/// stored as integral doubles.
struct Scenario {
    Vector values;
};

/// MLC-output genotype in flattened form (per-trajectory 11-blocks, or the
/// plain parameter vector for benchmark spaces).
struct MlcoGenotype {
    Vector values;
};

/// A scenario joined with an MLC-output sequence: one point in the joint
/// input space and the unit of oracle evaluation. Verdict and fitness are
/// filled in as the solution passes through evaluation and scoring.
struct CompleteSolution {
    Scenario scenario;
    MlcoGenotype mlco;
    std::optional<bool> is_unsafe;
    std::optional<double> fitness;
};

// --- sampling -------------------------------------------------------------

Vector random_genome(std::span<const DimensionSpec> dims, std::mt19937_64& rng);
Scenario random_scenario(const SearchSpaceSpec& spec, std::mt19937_64& rng);
MlcoGenotype random_mlco(const SearchSpaceSpec& spec, std::mt19937_64& rng);
CompleteSolution random_solution(const SearchSpaceSpec& spec, std::mt19937_64& rng);

// --- trajectory structure ---------------------------------------------------

/// Box at time t, each coordinate linearly interpolated between start and
/// end and rounded to the nearest integer. Requires start.t <= t <= end.t.
BoundaryBox interpolate_trajectory(const Trajectory& trj, int t);

MlcOutputSequence decode_mlco(const MlcoGenotype& g, const SearchSpaceSpec& spec);
MlcoGenotype encode_mlco(const MlcOutputSequence& seq, const SearchSpaceSpec& spec);

// --- repair -----------------------------------------------------------------

/// Total repair over a genome segment: integral dimensions rounded,
/// numeric values clamped into bounds, categorical codes wrapped modulo
/// cardinality, box coordinate pairs (and start/end times) swapped into
/// order. Idempotent; valid genomes pass through unchanged.
Vector repair_genome(Vector values, std::span<const DimensionSpec> dims, bool mlco_boxes,
                     const SearchSpaceSpec& spec);
Scenario repair(Scenario s, const SearchSpaceSpec& spec);
MlcoGenotype repair(MlcoGenotype m, const SearchSpaceSpec& spec);

bool genome_is_valid(const Vector& values, std::span<const DimensionSpec> dims, bool mlco_boxes,
                     const SearchSpaceSpec& spec);

// --- flattened view ----------------------------------------------------------

/// Canonical vector view: scenario parameters, then per-trajectory
/// (class, start quintuple, end quintuple). Length = spec.total_size().
Vector flatten(const CompleteSolution& s, const SearchSpaceSpec& spec);
CompleteSolution unflatten(const Vector& flat, const SearchSpaceSpec& spec);

/// Exact equality of flattened vectors; the dedup notion used by the
/// solution archive.
bool same_genotype(const CompleteSolution& a, const CompleteSolution& b);

/// Order-independent content hash of a flattened genome (treats -0.0 as 0.0
/// so hash and equality agree).
std::uint64_t genome_hash(const Vector& flat, std::uint64_t seed = 0);

// --- canonical JSON form ------------------------------------------------------

/// One JSON object per solution:
///   {"scenario": [...], "mlco": [[class, t,x0,x1,y0,y1, t,x0,x1,y0,y1], ...]
///    or [...], "is_unsafe": bool|null, "fitness": number|null}
std::string solution_to_json(const CompleteSolution& s, const SearchSpaceSpec& spec);
CompleteSolution solution_from_json(const std::string& line, const SearchSpaceSpec& spec);

} // namespace mlcshe

#endif
