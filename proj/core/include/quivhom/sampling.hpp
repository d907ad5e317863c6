#pragma once

// Seeded, fully deterministic generators for test inputs: random modules are
// quotients of random projective sums, random morphisms are random
// combinations of a canonical hom basis. The seed determines everything.

#include <random>

#include "quivhom/realize.hpp"

namespace quivhom {

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint32_t uniform(uint32_t bound) {  // in [0, bound)
    return bound == 0 ? 0 : static_cast<uint32_t>(rng_() % bound);
  }
  uint32_t field_element(const FieldPrime& p) { return uniform(p.modulus()); }

 private:
  std::mt19937_64 rng_;
};

// Random quotient of a random sum of indecomposable projectives, nonzero,
// with total dimension at most max_total_dim.
Rep random_rep(Sampler& s, const AlgebraPtr& alg, size_t max_total_dim);

RepMap random_endo(Sampler& s, const Rep& a);
RepMap random_map(Sampler& s, const Rep& from, const Rep& to);

// A random isomorphism from m onto a conjugated copy of m.
struct IsoTwist {
  Rep twisted;
  RepMap iso;  // m -> twisted
};
IsoTwist random_iso_twist(Sampler& s, const Rep& m);

// Random submodule of m (possibly zero or all of m).
SubRep random_submodule(Sampler& s, const Rep& m);

// The default verification battery: all simples, all indecomposable
// projectives, all nonzero Omega S(v), and `random_count` seeded random
// representations of total dimension <= random_max_dim.
std::vector<BatteryEntry> default_battery(const AlgebraPtr& alg, uint64_t seed,
                                          size_t random_count = 8, size_t random_max_dim = 6);

}  // namespace quivhom
