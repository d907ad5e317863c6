#pragma once

// The transpose and Tor_1. A representation over a table V plays the role of
// a right module over the algebra whose left modules are representations
// over W = opposite_algebra(V); the transpose dualizes a minimal projective
// presentation over V into a representation over W, and
// Tor_1(A,-) = ker(OmegaA (x) - -> P_0 (x) -) is computed directly from the
// cover sequence so it stays an independent oracle for the stable Hom
// identification.

#include "quivhom/cache.hpp"
#include "quivhom/homological.hpp"

namespace quivhom {

// True when w is structurally the opposite table of v (same labels, arrows
// reversed index by index, transposed multiplication).
bool tables_opposite(const AlgebraTable& v, const AlgebraTable& w);

struct MinimalPresentation {
  Rep a;
  Rep p1, p0;
  RepMap d;         // p1 -> p0, image = Omega A
  RepMap pi;        // p0 -> a, minimal cover
  Rep omega;        // Omega A
  RepMap iota;      // Omega A -> p0
  RepMap pi_omega;  // p1 -> Omega A, cover of the syzygy
  std::vector<size_t> p0_vertices, p1_vertices;
};

MinimalPresentation minimal_presentation(const Rep& a);

struct TransposeResult {
  Rep tr;            // over the opposite table
  RepMap dual_map;   // P0* -> P1*
  RepMap projection; // P1* -> Tr
};

TransposeResult transpose_full(const MinimalPresentation& mp, const AlgebraPtr& opposite);
Rep transpose(const Rep& a, const AlgebraPtr& opposite);

struct TensorSpace {
  Rep m, n;  // m over V, n over opposite(V)
  size_t dim = 0;
  std::vector<size_t> offsets;  // block offset per vertex; block v is m_v x n_v row-major
  QuotientSpace quot;
};

TensorSpace tensor(const Rep& m, const Rep& n);
// Class of x (x) y for column vectors x in m_v, y in n_v.
MatrixModP tensor_pure(const TensorSpace& t, size_t v, const MatrixModP& x, const MatrixModP& y);
MatrixModP tensor_induced_left(const TensorSpace& from, const TensorSpace& to, const RepMap& f);
MatrixModP tensor_induced_right(const TensorSpace& from, const TensorSpace& to, const RepMap& g);

struct TorSpace {
  Rep a, n;
  size_t dim = 0;
  TensorSpace omega_tensor;
  TensorSpace cover_tensor;
  MatrixModP inclusion_matrix;  // OmegaA (x) n -> P0 (x) n
  MatrixModP basis;             // columns: canonical basis inside OmegaA (x) n
};

TorSpace tor1_with_syzygy(const SyzygyData& syz, const Rep& n);
TorSpace tor1_with_presentation(const MinimalPresentation& mp, const Rep& n);
TorSpace tor1(const Rep& a, const Rep& n);

// Tor_1(a, g) : Tor_1(a, n) -> Tor_1(a, n') for g : n -> n'.
MatrixModP tor_induced_right(const TorSpace& from, const TorSpace& to, const RepMap& g);

// The natural isomorphism Tor_1(a, n) -> stable Hom(Tr a, n), fixed by
// matching coordinates through the shared presentation.
MatrixModP tor_stable_iso(const MinimalPresentation& mp, const TransposeResult& tr,
                          const TorSpace& tor, const StableHomSpace& sh,
                          const AlgebraPtr& opposite);

struct TorIsoReport {
  size_t tor_dim = 0;
  size_t stable_dim = 0;
  bool dims_equal = false;
  bool iso_invertible = false;
  bool natural = true;
  bool pass = false;
};

// Dimension + explicit-iso + naturality check against the supplied test maps
// g : n -> n' (all over the opposite table).
TorIsoReport tor_iso_check(const Rep& a, const Rep& n, const AlgebraPtr& opposite,
                           const std::vector<RepMap>& test_maps);

}  // namespace quivhom
