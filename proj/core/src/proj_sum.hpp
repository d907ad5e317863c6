#pragma once

// Internal bookkeeping for direct sums of indecomposable projectives: which
// coordinates belong to which summand, Yoneda extension of generator images
// to module maps, and the reverse extraction.

#include "quivhom/rep.hpp"

namespace quivhom {

struct ProjSum {
  Rep rep;
  std::vector<size_t> summand_vertices;
  std::vector<std::vector<size_t>> offsets;  // offsets[k][w]: column offset of summand k at w
};

ProjSum projective_sum(const AlgebraPtr& alg, const std::vector<size_t>& vertices);

// Rebuilds the offset table for a cover rep stored with its summand list.
ProjSum resum(const AlgebraPtr& alg, const Rep& cover, const std::vector<size_t>& vertices);

// Coordinate of the idempotent class e_v inside path_basis(v, v).
size_t generator_position(const AlgebraTable& a, size_t v);

// Module map out of a projective sum determined by the images of the summand
// generators.
RepMap proj_sum_map(const ProjSum& ps, const Rep& m, const std::vector<MatrixModP>& gen_images);

// Images of the summand generators under a map out of the sum.
std::vector<MatrixModP> generator_images(const ProjSum& ps, const RepMap& f);

}  // namespace quivhom
