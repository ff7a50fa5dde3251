#pragma once

#include <cstdint>
#include <random>

namespace rlx {

// Derives an independent sub-seed for a numbered stream (episode index, trial
// index, ...). splitmix64 finalizer; the same (base, stream) pair always maps
// to the same seed, which is what makes single episodes replayable.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// mt19937_64 with portable output mappings. The standard distributions are
// implementation-defined, so uniform draws are mapped by hand to keep runs
// byte-identical across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    void reseed(std::uint64_t seed) { engine_.seed(seed); }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rlx
