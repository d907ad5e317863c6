#include "quivhom/homological.hpp"

#include "proj_sum.hpp"

namespace quivhom {

SyzygyData projective_cover(const Rep& m) {
  const AlgebraTable& a = m.algebra();
  const FieldPrime p = a.field();
  SubRep rad = radical(m);
  std::vector<QuotientSpace> top;
  for (size_t v = 0; v < a.vertex_count(); ++v)
    top.push_back(quotient_by_span(m.dim(v), rad.basis[v], p));

  std::vector<size_t> summands;
  std::vector<MatrixModP> gens;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    for (size_t j = 0; j < top[v].dim; ++j) {
      summands.push_back(v);
      MatrixModP g(m.dim(v), 1, p);
      for (size_t r = 0; r < m.dim(v); ++r) g.set(r, 0, top[v].section.at(r, j));
      gens.push_back(std::move(g));
    }
  }
  ProjSum ps = projective_sum(m.algebra_ptr(), summands);
  RepMap pi = proj_sum_map(ps, m, gens);
  if (!is_epi(pi)) throw_contract("projective cover: lifted generators do not cover");
  KernelResult k = kernel(pi);
  Rep cover = ps.rep;
  return SyzygyData{m,        std::move(cover),       std::move(pi),
                    std::move(k.rep), std::move(k.inclusion), std::move(summands)};
}

ExtSpace ext1_with_syzygy(const SyzygyData& syz, const Rep& m) {
  const FieldPrime p = m.algebra().field();
  ExtSpace e{syz.target, m,  syz.omega, 0, hom_basis(syz.omega, m),
             hom_basis(syz.cover, m), QuotientSpace{}};
  std::vector<RepMap> restricted;
  restricted.reserve(e.hom_cover_basis.size());
  for (const RepMap& phi : e.hom_cover_basis) restricted.push_back(compose(phi, syz.iota));
  MatrixModP r = hom_coords_batch(e.hom_omega_basis, restricted, p);
  e.quot = quotient_by_span(e.hom_omega_basis.size(), r, p);
  e.dim = e.quot.dim;
  return e;
}

ExtSpace ext1(const Rep& a, const Rep& m) {
  if (!(a.algebra() == m.algebra())) throw_input("ext1: algebra mismatch");
  return ext1_with_syzygy(projective_cover(a), m);
}

MatrixModP ext_class(const ExtSpace& e, const RepMap& phi) {
  MatrixModP coords = hom_coords(e.hom_omega_basis, phi);
  return e.quot.projection * coords;
}

RepMap ext_representative(const ExtSpace& e, const MatrixModP& coords) {
  MatrixModP rep_coords = e.quot.section * coords;
  RepMap acc = RepMap::zero(e.omega, e.m);
  for (size_t i = 0; i < e.hom_omega_basis.size(); ++i)
    acc = acc + e.hom_omega_basis[i].scaled(rep_coords.at(i, 0));
  return acc;
}

StableHomSpace stable_hom_with_syzygy(const Rep& b, const SyzygyData& syz_a) {
  const FieldPrime p = b.algebra().field();
  StableHomSpace s{b, syz_a.target, 0, hom_basis(b, syz_a.target), QuotientSpace{}};
  std::vector<RepMap> through;
  for (const RepMap& g : hom_basis(b, syz_a.cover)) through.push_back(compose(syz_a.pi, g));
  MatrixModP t = hom_coords_batch(s.hom_basis, through, p);
  s.quot = quotient_by_span(s.hom_basis.size(), t, p);
  s.dim = s.quot.dim;
  return s;
}

StableHomSpace stable_hom(const Rep& b, const Rep& a) {
  if (!(a.algebra() == b.algebra())) throw_input("stable_hom: algebra mismatch");
  return stable_hom_with_syzygy(b, projective_cover(a));
}

MatrixModP stable_class(const StableHomSpace& s, const RepMap& f) {
  return s.quot.projection * hom_coords(s.hom_basis, f);
}

CoverLift lift_through_covers(const SyzygyData& syz_b, const SyzygyData& syz_a, const RepMap& f) {
  const AlgebraTable& alg = f.from().algebra();
  // The generators of P_B land in A through f o pi_B; pulling them back
  // through pi_A per vertex (pi_A is epi) and extending by Yoneda gives the
  // lift on covers.
  RepMap fpib = compose(f, syz_b.pi);
  ProjSum ps = resum(f.from().algebra_ptr(), syz_b.cover, syz_b.summand_vertices);
  std::vector<MatrixModP> top_images = generator_images(ps, fpib);
  std::vector<MatrixModP> gens;
  for (size_t k = 0; k < ps.summand_vertices.size(); ++k) {
    size_t v = ps.summand_vertices[k];
    auto back = solve(syz_a.pi.block(v), top_images[k]);
    if (!back) throw_contract("lift_through_covers: cover is not epi");
    gens.push_back(std::move(*back));
  }
  RepMap fp = proj_sum_map(ps, syz_a.cover, gens);
  auto omega_f = solve_through(syz_a.iota, compose(fp, syz_b.iota));
  if (!omega_f) throw_contract("lift_through_covers: restriction misses the syzygy");
  return CoverLift{std::move(fp), std::move(*omega_f)};
}

std::optional<RepMap> solve_through(const RepMap& after, const RepMap& target) {
  // unknown x : target.from() -> after.from() with after o x = target
  const Rep& src = target.from();
  const Rep& mid = after.from();
  if (!(after.to() == target.to())) throw_contract("solve_through: codomain mismatch");
  const AlgebraTable& a = src.algebra();
  const FieldPrime p = a.field();
  std::vector<size_t> offset(a.vertex_count() + 1, 0);
  for (size_t v = 0; v < a.vertex_count(); ++v) offset[v + 1] = offset[v] + mid.dim(v) * src.dim(v);
  const size_t unknowns = offset[a.vertex_count()];

  size_t eq = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    eq += mid.dim(ar.target) * src.dim(ar.source);
  }
  for (size_t v = 0; v < a.vertex_count(); ++v) eq += after.to().dim(v) * src.dim(v);

  MatrixModP sys(eq, unknowns, p);
  MatrixModP rhs(eq, 1, p);
  size_t row = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    const MatrixModP& sa = src.arrow(i);
    const MatrixModP& ma = mid.arrow(i);
    for (size_t r = 0; r < mid.dim(ar.target); ++r)
      for (size_t c = 0; c < src.dim(ar.source); ++c) {
        for (size_t k = 0; k < src.dim(ar.target); ++k) {
          size_t idx = offset[ar.target] + r * src.dim(ar.target) + k;
          sys.set(row, idx, p.add(sys.at(row, idx), sa.at(k, c)));
        }
        for (size_t k = 0; k < mid.dim(ar.source); ++k) {
          size_t idx = offset[ar.source] + k * src.dim(ar.source) + c;
          sys.set(row, idx, p.sub(sys.at(row, idx), ma.at(r, k)));
        }
        ++row;
      }
  }
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    const MatrixModP& av = after.block(v);
    for (size_t r = 0; r < av.rows(); ++r)
      for (size_t c = 0; c < src.dim(v); ++c) {
        for (size_t k = 0; k < mid.dim(v); ++k) {
          size_t idx = offset[v] + k * src.dim(v) + c;
          sys.set(row, idx, p.add(sys.at(row, idx), av.at(r, k)));
        }
        rhs.set(row, 0, target.block(v).at(r, c));
        ++row;
      }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    MatrixModP b(mid.dim(v), src.dim(v), p);
    for (size_t r = 0; r < mid.dim(v); ++r)
      for (size_t c = 0; c < src.dim(v); ++c) b.set(r, c, sol->at(offset[v] + r * src.dim(v) + c, 0));
    blocks.push_back(std::move(b));
  }
  return RepMap(src, mid, std::move(blocks));
}

std::optional<RepMap> solve_past(const RepMap& before, const RepMap& target) {
  // unknown x : before.to() -> target.to() with x o before = target
  const Rep& mid = before.to();
  const Rep& dst = target.to();
  if (!(before.from() == target.from())) throw_contract("solve_past: domain mismatch");
  const AlgebraTable& a = mid.algebra();
  const FieldPrime p = a.field();
  std::vector<size_t> offset(a.vertex_count() + 1, 0);
  for (size_t v = 0; v < a.vertex_count(); ++v) offset[v + 1] = offset[v] + dst.dim(v) * mid.dim(v);
  const size_t unknowns = offset[a.vertex_count()];

  size_t eq = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    eq += dst.dim(ar.target) * mid.dim(ar.source);
  }
  for (size_t v = 0; v < a.vertex_count(); ++v) eq += dst.dim(v) * before.from().dim(v);

  MatrixModP sys(eq, unknowns, p);
  MatrixModP rhs(eq, 1, p);
  size_t row = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    const MatrixModP& ma = mid.arrow(i);
    const MatrixModP& da = dst.arrow(i);
    for (size_t r = 0; r < dst.dim(ar.target); ++r)
      for (size_t c = 0; c < mid.dim(ar.source); ++c) {
        for (size_t k = 0; k < mid.dim(ar.target); ++k) {
          size_t idx = offset[ar.target] + r * mid.dim(ar.target) + k;
          sys.set(row, idx, p.add(sys.at(row, idx), ma.at(k, c)));
        }
        for (size_t k = 0; k < dst.dim(ar.source); ++k) {
          size_t idx = offset[ar.source] + k * mid.dim(ar.source) + c;
          sys.set(row, idx, p.sub(sys.at(row, idx), da.at(r, k)));
        }
        ++row;
      }
  }
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    const MatrixModP& bv = before.block(v);
    for (size_t r = 0; r < dst.dim(v); ++r)
      for (size_t c = 0; c < before.from().dim(v); ++c) {
        for (size_t k = 0; k < mid.dim(v); ++k) {
          size_t idx = offset[v] + r * mid.dim(v) + k;
          sys.set(row, idx, p.add(sys.at(row, idx), bv.at(k, c)));
        }
        rhs.set(row, 0, target.block(v).at(r, c));
        ++row;
      }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    MatrixModP b(dst.dim(v), mid.dim(v), p);
    for (size_t r = 0; r < dst.dim(v); ++r)
      for (size_t c = 0; c < mid.dim(v); ++c) b.set(r, c, sol->at(offset[v] + r * mid.dim(v) + c, 0));
    blocks.push_back(std::move(b));
  }
  return RepMap(mid, dst, std::move(blocks));
}

std::optional<RepMap> factors_through_projective(const SyzygyData& syz_a, const RepMap& f) {
  return solve_through(syz_a.pi, f);
}

bool factors_through_projective(const RepMap& f) {
  return factors_through_projective(projective_cover(f.to()), f).has_value();
}

}  // namespace quivhom
