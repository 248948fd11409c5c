#ifndef MLCSHE_RNG_HPP
#define MLCSHE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace mlcshe {

/// splitmix64 mixing step; used to derive stream seeds and hash noise.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives independent, purpose-tagged random streams from one master seed.
/// Adding workers or reordering evaluations cannot perturb a stream because
/// each purpose owns its own generator seeded only by (master, tag, index).
class RngStreams {
public:
    explicit RngStreams(std::uint64_t master) : master_(master) {}

    std::uint64_t master() const { return master_; }

    std::mt19937_64 make(std::string_view purpose, std::uint64_t index = 0) const {
        std::uint64_t h = master_;
        for (char c : purpose) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
        h = splitmix64(h ^ index);
        return std::mt19937_64(h);
    }

private:
    std::uint64_t master_;
};

} // namespace mlcshe

#endif
