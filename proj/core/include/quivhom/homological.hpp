#pragma once

// Projective covers, syzygies, Ext^1 evaluation, lifting along covers, and
// Hom modulo projectives. Ext^1(A,-) is presented as the cokernel of
// Hom(P,-) -> Hom(OmegaA,-) coming from the cover sequence
// 0 -> OmegaA -> P -> A -> 0; all coordinates are canonical.

#include <optional>
#include <vector>

#include "quivhom/rep.hpp"

namespace quivhom {

struct SyzygyData {
  Rep target;   // A
  Rep cover;    // P, direct sum of indecomposable projectives
  RepMap pi;    // P -> A, epi
  Rep omega;    // Omega A
  RepMap iota;  // Omega A -> P, kernel of pi

  // vertex index of each indecomposable summand of the cover, with the
  // coordinate offsets of the summand at each vertex
  std::vector<size_t> summand_vertices;
};

// Minimal cover via the top: P = (+)_v P(v)^{dim top_v}.
SyzygyData projective_cover(const Rep& m);

struct ExtSpace {
  Rep a, m;
  Rep omega;
  size_t dim = 0;
  std::vector<RepMap> hom_omega_basis;  // basis of Hom(OmegaA, m)
  std::vector<RepMap> hom_cover_basis;  // basis of Hom(P, m)
  QuotientSpace quot;                   // Hom(OmegaA,m) coords -> Ext coords
};

ExtSpace ext1(const Rep& a, const Rep& m);
// Same computation against an explicitly given (possibly non-minimal) cover.
ExtSpace ext1_with_syzygy(const SyzygyData& syz, const Rep& m);

// Class of a cocycle phi in Hom(OmegaA, m).
MatrixModP ext_class(const ExtSpace& e, const RepMap& phi);
// Canonical representative of an Ext class.
RepMap ext_representative(const ExtSpace& e, const MatrixModP& coords);

struct StableHomSpace {
  Rep b, a;
  size_t dim = 0;
  std::vector<RepMap> hom_basis;  // basis of Hom(b, a)
  QuotientSpace quot;             // Hom coords -> stable coords
};

StableHomSpace stable_hom(const Rep& b, const Rep& a);
StableHomSpace stable_hom_with_syzygy(const Rep& b, const SyzygyData& syz_a);
MatrixModP stable_class(const StableHomSpace& s, const RepMap& f);

struct CoverLift {
  RepMap on_covers;  // fP : P_B -> P_A with pi_A o fP = f o pi_B
  RepMap on_omegas;  // Omega f : Omega B -> Omega A
};
CoverLift lift_through_covers(const SyzygyData& syz_b, const SyzygyData& syz_a, const RepMap& f);

// Witness g: B -> P_A with pi_A o g = f, when one exists.
std::optional<RepMap> factors_through_projective(const SyzygyData& syz_a, const RepMap& f);
bool factors_through_projective(const RepMap& f);

// Solves x in Hom(b, to) with after o x = target, subject to intertwining;
// nullopt when inconsistent. This is the workhorse behind lifts and
// projective factorizations.
std::optional<RepMap> solve_through(const RepMap& after, const RepMap& target);
// Solves x with x o before = target.
std::optional<RepMap> solve_past(const RepMap& before, const RepMap& target);

}  // namespace quivhom
