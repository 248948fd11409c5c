#ifndef MLCSHE_ORACLE_HPP
#define MLCSHE_ORACLE_HPP

#include <sys/types.h>

#include <chrono>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlcshe/distance.hpp"
#include "mlcshe/genotypes.hpp"
#include "mlcshe/search_space.hpp"

namespace mlcshe {

/// Raised when an oracle cannot produce a verdict (external process died,
/// timed out, or replied garbage). Runs abort on it; there is no silent
/// default verdict.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The "simulate and check the safety requirement" step. evaluate() must be
/// a pure function of (solution, oracle seed): repeated calls with identical
/// inputs return identical verdicts regardless of call order.
class SafetyOracle {
public:
    virtual ~SafetyOracle() = default;
    virtual bool evaluate(const CompleteSolution& solution) const = 0;
    virtual const std::string& name() const = 0;
    virtual const SearchSpaceSpec& space() const = 0;
};

/// One probabilistic unsafe region: solutions within `radius` (normalized
/// heterogeneous distance) of `center` are unsafe with probability
/// `unsafe_prob`.
struct UnsafeRegion {
    Vector center;
    double radius = 0.0;
    double unsafe_prob = 0.0;
};

/// Desk-scale stand-in for a high-fidelity simulator: piecewise-constant
/// unsafe probability (first matching region, else background), with verdict
/// noise derived from hash(flatten(solution), noise_seed) so evaluation is
/// deterministic and order-independent.
class SyntheticRegionOracle : public SafetyOracle {
public:
    SyntheticRegionOracle(SearchSpaceSpec space, std::vector<UnsafeRegion> regions,
                          double background_prob, std::uint64_t noise_seed,
                          DistanceConfig dcfg = {});

    bool evaluate(const CompleteSolution& solution) const override;
    const std::string& name() const override { return name_; }
    const SearchSpaceSpec& space() const override { return space_; }

    /// Analytic ground truth: the exact unsafe probability at a flattened
    /// point. The independent oracle for fitness-module acceptance tests.
    double unsafe_probability(const Vector& flat) const;

    const std::vector<UnsafeRegion>& regions() const { return regions_; }
    double background_prob() const { return background_prob_; }
    std::uint64_t noise_seed() const { return noise_seed_; }

private:
    SearchSpaceSpec space_;
    std::vector<UnsafeRegion> regions_;
    double background_prob_;
    std::uint64_t noise_seed_;
    DistanceConfig dcfg_;
    std::string name_ = "synthetic_regions";
};

/// Maximum of Two Quadratics benchmark over [0,1]^2 (one dimension per
/// population): f(x, y) = max_i h_i * (1 - ((x-c_i)^2 + (y-c_i)^2) / s_i^2),
/// unsafe iff f >= threshold.
class MtqOracle : public SafetyOracle {
public:
    MtqOracle(double h1, double h2, double s1, double s2, double center1, double center2,
              double threshold);

    bool evaluate(const CompleteSolution& solution) const override;
    const std::string& name() const override { return name_; }
    const SearchSpaceSpec& space() const override { return space_; }

    double value(double x, double y) const;

private:
    SearchSpaceSpec space_;
    double h1_, h2_, s1_, s2_, c1_, c2_, threshold_;
    std::string name_ = "mtq";
};

std::unique_ptr<MtqOracle> mtq_oracle(double h1, double h2, double s1, double s2, double center1,
                                      double center2, double threshold);

/// Onemax benchmark: binary genome split across the two populations, unsafe
/// iff the number of ones reaches `threshold`.
class OnemaxOracle : public SafetyOracle {
public:
    OnemaxOracle(int scenario_bits, int mlco_bits, int threshold);

    bool evaluate(const CompleteSolution& solution) const override;
    const std::string& name() const override { return name_; }
    const SearchSpaceSpec& space() const override { return space_; }

private:
    SearchSpaceSpec space_;
    int threshold_;
    std::string name_ = "onemax";
};

/// Adapter for an out-of-process oracle speaking a line protocol on
/// stdin/stdout: request = canonical solution JSON + newline, reply =
/// {"is_unsafe": true|false} + newline, one request in flight per process.
class ExternalProcessOracle : public SafetyOracle {
public:
    ExternalProcessOracle(SearchSpaceSpec space, std::string command, std::chrono::milliseconds timeout);
    ~ExternalProcessOracle() override;

    ExternalProcessOracle(const ExternalProcessOracle&) = delete;
    ExternalProcessOracle& operator=(const ExternalProcessOracle&) = delete;

    bool evaluate(const CompleteSolution& solution) const override;
    const std::string& name() const override { return name_; }
    const SearchSpaceSpec& space() const override { return space_; }

private:
    void spawn() const;
    void shutdown() const;

    SearchSpaceSpec space_;
    std::string command_;
    std::chrono::milliseconds timeout_;
    std::string name_ = "external";

    mutable std::mutex mutex_; // requests are serialized per child process
    mutable pid_t child_pid_ = -1;
    mutable int to_child_ = -1;
    mutable int from_child_ = -1;
    mutable std::string read_buffer_;
};

} // namespace mlcshe

#endif
