#pragma once

// The Hilton-Rees correspondence made computational: a morphism f: B -> A
// induces Ext^1(A,-) -> Ext^1(B,-) through the syzygy lift, its connecting
// class lives in Ext^1(B, Omega A) and vanishes exactly on morphisms
// factoring through projectives. Stable idempotents are detected and
// produced through the canonical stable Hom projection.

#include "quivhom/cache.hpp"

namespace quivhom {

struct InducedExtMap {
  RepMap f;
  Rep m;
  MatrixModP matrix;  // ExtSpace(A,m) coords -> ExtSpace(B,m) coords
};

InducedExtMap induced_ext_map(HomCache& cache, const RepMap& f, const Rep& m);

// Covariant functoriality in the module argument: Ext^1(b, X) -> Ext^1(b, Y)
// for g : X -> Y.
MatrixModP induced_ext_map_cov(HomCache& cache, const Rep& b, const RepMap& g);

struct ConnectingClass {
  RepMap f;
  MatrixModP value;  // element of ExtSpace(B, Omega A)
};

ConnectingClass connecting_class(HomCache& cache, const RepMap& f);

bool is_stably_idempotent(HomCache& cache, const RepMap& f);

struct StablePower {
  RepMap e;
  uint64_t m = 0;
};

// Smallest m >= 1 with u^m stably equal to u^{2m}; e = u^m is then stably
// idempotent. Exists because the stable endomorphism ring is finite.
StablePower stable_power_idempotent(HomCache& cache, const RepMap& u);

}  // namespace quivhom
