#pragma once

namespace crnkit {

// Offset applied to deterministic quasi-random sampling (rate sign checks,
// Newton multistarts). Zero by default; the CLI --seed flag shifts it so
// sampled diagnostics can be re-rolled reproducibly.
inline long& sample_seed_ref() {
    static long seed = 0;
    return seed;
}

inline long sample_seed() { return sample_seed_ref(); }
inline void set_sample_seed(long s) { sample_seed_ref() = s; }

}  // namespace crnkit
