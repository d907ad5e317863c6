#include "quivhom/hilton_rees.hpp"

#include "order_mod.hpp"

namespace quivhom {

InducedExtMap induced_ext_map(HomCache& cache, const RepMap& f, const Rep& m) {
  if (!(f.from().algebra() == m.algebra())) throw_input("induced_ext_map: algebra mismatch");
  const ExtSpace& ext_a = cache.ext(f.to(), m);
  const ExtSpace& ext_b = cache.ext(f.from(), m);
  const CoverLift& lift = cache.lift(f);
  MatrixModP out(ext_b.dim, ext_a.dim, m.algebra().field());
  for (size_t j = 0; j < ext_a.dim; ++j) {
    MatrixModP unit(ext_a.dim, 1, m.algebra().field());
    unit.set(j, 0, 1);
    RepMap phi = ext_representative(ext_a, unit);
    MatrixModP col = ext_class(ext_b, compose(phi, lift.on_omegas));
    for (size_t r = 0; r < ext_b.dim; ++r) out.set(r, j, col.at(r, 0));
  }
  return InducedExtMap{f, m, std::move(out)};
}

MatrixModP induced_ext_map_cov(HomCache& cache, const Rep& b, const RepMap& g) {
  const ExtSpace& ext_x = cache.ext(b, g.from());
  const ExtSpace& ext_y = cache.ext(b, g.to());
  MatrixModP out(ext_y.dim, ext_x.dim, b.algebra().field());
  for (size_t j = 0; j < ext_x.dim; ++j) {
    MatrixModP unit(ext_x.dim, 1, b.algebra().field());
    unit.set(j, 0, 1);
    RepMap phi = ext_representative(ext_x, unit);
    MatrixModP col = ext_class(ext_y, compose(g, phi));
    for (size_t r = 0; r < ext_y.dim; ++r) out.set(r, j, col.at(r, 0));
  }
  return out;
}

ConnectingClass connecting_class(HomCache& cache, const RepMap& f) {
  if (!(f.from().algebra() == f.to().algebra())) throw_input("connecting_class: algebra mismatch");
  const SyzygyData& syz_a = cache.syzygy(f.to());
  const CoverLift& lift = cache.lift(f);
  const ExtSpace& ext_b_omega = cache.ext(f.from(), syz_a.omega);
  return ConnectingClass{f, ext_class(ext_b_omega, lift.on_omegas)};
}

bool is_stably_idempotent(HomCache& cache, const RepMap& f) {
  if (!f.is_endo()) throw_input("is_stably_idempotent: not an endomorphism");
  const StableHomSpace& s = cache.stable(f.from(), f.from());
  return stable_class(s, compose(f, f) - f).is_zero();
}

StablePower stable_power_idempotent(HomCache& cache, const RepMap& u) {
  if (!u.is_endo()) throw_input("stable_power_idempotent: not an endomorphism");
  const StableHomSpace& s = cache.stable(u.from(), u.from());
  const FieldPrime p = u.from().algebra().field();
  const size_t d = s.dim;

  // right multiplication by the stable class of u, on stable coordinates
  MatrixModP l(d, d, p);
  for (size_t i = 0; i < d; ++i) {
    RepMap rep_i = RepMap::zero(u.from(), u.from());
    for (size_t j = 0; j < s.hom_basis.size(); ++j) {
      uint32_t c = s.quot.section.at(j, i);
      if (c) rep_i = rep_i + s.hom_basis[j].scaled(c);
    }
    MatrixModP col = stable_class(s, compose(rep_i, u));
    for (size_t r = 0; r < d; ++r) l.set(r, i, col.at(r, 0));
  }
  MatrixModP x = stable_class(s, u);
  uint64_t m = stable_power_index(l, x);
  return StablePower{power(u, m), m};
}

}  // namespace quivhom
