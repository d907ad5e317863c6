#pragma once

// The Fitting decomposition of an endomorphism of a finite-length module:
// A = Ker f^n (+) Im f^n once both chains of canonical subobjects stabilize,
// with f nilpotent on the kernel part and invertible on the image part.

#include "quivhom/rep.hpp"

namespace quivhom {

struct FittingResult {
  RepMap f;
  size_t n = 0;         // stabilization index
  SubRep kernel_part;   // Ker f^n
  SubRep image_part;    // Im f^n
  Rep kernel_rep;
  Rep image_rep;
  RepMap q;             // K (+) I -> A, an isomorphism
  RepMap q_inverse;     // A -> K (+) I
  RepMap f_on_kernel;   // restriction, nilpotent with (f|K)^n = 0
  RepMap f_on_image;    // restriction, an isomorphism
};

// Smallest n >= 0 with Ker f^n = Ker f^{n+1} and Im f^n = Im f^{n+1} as
// canonical subobjects; at most the total dimension of the module.
size_t fitting_index(const RepMap& f);

FittingResult fitting_decomposition(const RepMap& f);

}  // namespace quivhom
