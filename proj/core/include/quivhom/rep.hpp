#pragma once

// Finite-dimensional representations of a bound quiver algebra and the
// abelian-category operations on them: Hom spaces, kernels, images,
// cokernels, direct sums, the subobject lattice and pushouts. Subobjects
// carry rref-canonical column bases per vertex, so chains of subobjects have
// decidable stabilization.

#include <memory>
#include <vector>

#include "quivhom/algebra.hpp"
#include "quivhom/matrix.hpp"

namespace quivhom {

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

class Rep {
 public:
  // Validates that every relation of the algebra evaluates to zero.
  Rep(AlgebraPtr algebra, std::vector<size_t> dims, std::vector<MatrixModP> arrow_mats);

  static Rep zero(AlgebraPtr algebra);

  const AlgebraTable& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const std::vector<size_t>& dims() const { return dims_; }
  size_t dim(size_t v) const { return dims_[v]; }
  size_t total_dim() const;
  const MatrixModP& arrow(size_t a) const { return arrow_mats_[a]; }

  // Matrix of the path word acting source -> target (identity for the empty
  // word at the given vertex).
  MatrixModP word_action(const std::vector<size_t>& word, size_t source_vertex) const;
  // Action of a general algebra element with the given source and target.
  MatrixModP element_action(const std::vector<uint32_t>& coords, size_t source_vertex,
                            size_t target_vertex) const;

  bool operator==(const Rep& other) const {
    return dims_ == other.dims_ && arrow_mats_ == other.arrow_mats_ &&
           (alg_ == other.alg_ || *alg_ == *other.alg_);
  }

 private:
  AlgebraPtr alg_;
  std::vector<size_t> dims_;
  std::vector<MatrixModP> arrow_mats_;
};

class RepMap {
 public:
  // Validates the intertwining relations blocks[t(a)] * from_a = to_a * blocks[s(a)].
  RepMap(Rep from, Rep to, std::vector<MatrixModP> blocks);

  static RepMap zero(const Rep& from, const Rep& to);
  static RepMap identity(const Rep& m);

  const Rep& from() const { return from_; }
  const Rep& to() const { return to_; }
  const MatrixModP& block(size_t v) const { return blocks_[v]; }
  const std::vector<MatrixModP>& blocks() const { return blocks_; }

  bool is_endo() const { return from_ == to_; }

  RepMap operator+(const RepMap& rhs) const;
  RepMap operator-(const RepMap& rhs) const;
  RepMap scaled(uint32_t s) const;

  bool operator==(const RepMap& other) const {
    return blocks_ == other.blocks_ && from_ == other.from_ && to_ == other.to_;
  }

 private:
  Rep from_, to_;
  std::vector<MatrixModP> blocks_;
};

// g after f (f first).
RepMap compose(const RepMap& g, const RepMap& f);
RepMap power(const RepMap& endo, uint64_t e);

struct SubRep {
  Rep ambient;
  std::vector<MatrixModP> basis;  // canonical columns per vertex

  size_t total_dim() const;
  bool operator==(const SubRep& other) const {
    return basis == other.basis && ambient == other.ambient;
  }
};

// The subobject as a representation together with its inclusion.
struct SubRepEmbedding {
  SubRep sub;
  Rep rep;
  RepMap inclusion;
};

// Builds a SubRep from per-vertex spanning columns, canonicalizing and
// checking arrow stability.
SubRep make_subrep(const Rep& ambient, const std::vector<MatrixModP>& span_cols);
SubRepEmbedding embed(const SubRep& s);
SubRep full_subrep(const Rep& m);
SubRep zero_subrep(const Rep& m);

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);
// Coordinates of f in the canonical hom basis.
MatrixModP hom_coords(const std::vector<RepMap>& basis, const RepMap& f);
// One column of coordinates per map, solved in a single pass.
MatrixModP hom_coords_batch(const std::vector<RepMap>& basis, const std::vector<RepMap>& maps,
                            const FieldPrime& p);
RepMap hom_from_coords(const Rep& m, const Rep& n, const MatrixModP& coords);

struct KernelResult {
  SubRep sub;
  Rep rep;
  RepMap inclusion;
};
struct ImageResult {
  SubRep sub;
  Rep rep;
  RepMap alpha;  // epi onto the image
  RepMap beta;   // inclusion; beta o alpha = f exactly
};
struct CokernelResult {
  Rep rep;
  RepMap projection;
};

KernelResult kernel(const RepMap& f);
ImageResult image(const RepMap& f);
CokernelResult cokernel(const RepMap& f);

struct DirectSum {
  Rep rep;
  std::vector<RepMap> injections;
  std::vector<RepMap> projections;
};
DirectSum direct_sum(const Rep& m, const Rep& n);

SubRep sub_intersect(const SubRep& s, const SubRep& t);
SubRep sub_add(const SubRep& s, const SubRep& t);

struct PushoutResult {
  Rep rep;               // E
  RepMap from_second;    // c : D -> E
  RepMap from_first;     // d : B -> E
};
// Pushout of a: A -> B and b: A -> D, computed as the cokernel of
// (a, -b): A -> B (+) D.
PushoutResult pushout(const RepMap& a, const RepMap& b);

bool is_mono(const RepMap& f);
bool is_epi(const RepMap& f);
bool is_iso(const RepMap& f);

// Simple at a vertex, indecomposable projective, and the regular module.
Rep simple_rep(const AlgebraPtr& alg, size_t vertex);
Rep projective_rep(const AlgebraPtr& alg, size_t vertex);

// Radical rad(M) = sum of the images of all arrow actions, as a subobject.
SubRep radical(const Rep& m);

// Smallest subrepresentation containing the given per-vertex columns.
SubRep submodule_generated(const Rep& ambient, const std::vector<MatrixModP>& cols);

// Quotient of m by a subobject, with the projection map.
CokernelResult quotient(const Rep& m, const SubRep& s);

}  // namespace quivhom
