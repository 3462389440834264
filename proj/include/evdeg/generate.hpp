#pragma once

#include <cstdint>
#include <string>

#include "evdeg/graph.hpp"

namespace evdeg {

// xorshift64* (Marsaglia's shift-register generator with Vigna's
// multiplicative output scramble). The constants are fixed so any
// implementation of the same recurrence reproduces our random graphs:
//   s ^= s >> 12; s ^= s << 25; s ^= s >> 27; output = s * 0x2545F4914F6CDD1D
// A zero seed is remapped to 0x9E3779B97F4A7C15 (state must be nonzero).
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0,1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// One step of splitmix64; used to stretch one user seed into independent
// per-sample seeds. Fixed constants, same cross-implementation contract.
std::uint64_t splitmix64(std::uint64_t x);

enum class Family {
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    random_gnp,
    random_bipartite_gnp,
};

// Parameters for generate(). `a` is the primary size: vertex count for
// path/cycle/complete, leaf count for star (star(k) = K_{1,k}), left side
// for the bipartite families. `b` is the right side where applicable,
// `p` and `seed` drive the random families.
struct FamilySpec {
    Family family = Family::path;
    int a = 1;
    int b = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Builds the requested graph; throws std::invalid_argument on bad
// parameters (sizes < 1, cycle size < 3, p outside [0,1]).
//
// Random families decide each candidate pair in lexicographic order with
// one PRNG draw per pair (edge present iff next_unit() < p), so a
// (family, sizes, p, seed) tuple names one graph forever.
Graph generate(const FamilySpec& spec);

std::string family_name(Family f);

// Compact human-readable descriptor, e.g. "path(5)" or
// "random_gnp(n=7,p=0.400,seed=99)". Used as the input label in reports.
std::string describe(const FamilySpec& spec);

}  // namespace evdeg
