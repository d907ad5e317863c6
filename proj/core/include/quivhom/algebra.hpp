#pragma once

// Bound quiver algebras Lambda = F_p Q / I presented by a path basis with a
// full multiplication table. Path words are stored left-to-right in
// application order: the word [a, b] means "a first, then b" and needs
// target(a) = source(b). The product of basis classes i and j is the class of
// "i followed by j".

#include <cstdint>
#include <string>
#include <vector>

#include "quivhom/matrix.hpp"

namespace quivhom {

struct Arrow {
  std::string name;
  size_t source = 0;
  size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  size_t vertex_index(const std::string& label) const;
  size_t arrow_index(const std::string& name) const;
};

// One relation: sum of coeff * path-word, every word of length >= 2, all
// terms sharing one source and one target.
struct RelationTerm {
  uint32_t coeff = 0;
  std::vector<size_t> word;  // arrow indices, application order
};
using Relation = std::vector<RelationTerm>;

struct RelationSet {
  std::vector<Relation> relations;
  size_t nilpotency_bound = 12;  // every path of this length or longer is zero
};

struct BasisPath {
  std::vector<size_t> word;  // arrow indices; empty word = vertex idempotent
  size_t source = 0;
  size_t target = 0;
  bool operator==(const BasisPath&) const = default;
};

class AlgebraTable {
 public:
  AlgebraTable(FieldPrime p, Quiver quiver, std::vector<BasisPath> basis,
               std::vector<std::vector<uint32_t>> mult, size_t nilpotency_bound);

  const FieldPrime& field() const { return p_; }
  const Quiver& quiver() const { return quiver_; }
  size_t dim() const { return basis_.size(); }
  size_t vertex_count() const { return quiver_.vertices.size(); }
  size_t arrow_count() const { return quiver_.arrows.size(); }
  size_t nilpotency_bound() const { return nilpotency_bound_; }

  const BasisPath& basis(size_t i) const { return basis_[i]; }
  const std::vector<BasisPath>& basis() const { return basis_; }

  // Coordinates of basis_i * basis_j over the basis ("i first, then j").
  const std::vector<uint32_t>& mult(size_t i, size_t j) const { return mult_[i * dim() + j]; }

  size_t idempotent_index(size_t vertex) const { return idempotent_index_[vertex]; }
  size_t arrow_basis_index(size_t arrow) const { return arrow_basis_index_[arrow]; }

  // Basis classes with the given source and target, in basis order.
  const std::vector<size_t>& path_basis(size_t source, size_t target) const;

  bool operator==(const AlgebraTable& other) const;

 private:
  FieldPrime p_;
  Quiver quiver_;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<uint32_t>> mult_;
  size_t nilpotency_bound_;
  std::vector<size_t> idempotent_index_;
  std::vector<size_t> arrow_basis_index_;
  std::vector<std::vector<size_t>> by_source_target_;  // vertex-pair -> basis indices
};

// Enumerates paths up to the nilpotency bound and saturates the relation
// ideal over them; the surviving pivot-complement paths form the basis.
AlgebraTable build_algebra(const Quiver& q, const RelationSet& r, FieldPrime p);

std::vector<size_t> path_basis(const AlgebraTable& a, const std::string& source,
                               const std::string& target);

// Same basis labels with every word reversed, arrows reversed, and
// mult(i,j) = original mult(j,i). Applying it twice restores the original.
AlgebraTable opposite_algebra(const AlgebraTable& a);

}  // namespace quivhom
