#include "quivhom/transpose_tor.hpp"

#include "proj_sum.hpp"

namespace quivhom {

bool tables_opposite(const AlgebraTable& v, const AlgebraTable& w) {
  if (!(v.field() == w.field())) return false;
  if (v.quiver().vertices != w.quiver().vertices) return false;
  if (v.arrow_count() != w.arrow_count() || v.dim() != w.dim()) return false;
  for (size_t i = 0; i < v.arrow_count(); ++i) {
    const Arrow& av = v.quiver().arrows[i];
    const Arrow& aw = w.quiver().arrows[i];
    if (av.name != aw.name || av.source != aw.target || av.target != aw.source) return false;
  }
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = 0; j < v.dim(); ++j)
      if (v.mult(i, j) != w.mult(j, i)) return false;
  return true;
}

MinimalPresentation minimal_presentation(const Rep& a) {
  SyzygyData syz = projective_cover(a);
  SyzygyData syz_omega = projective_cover(syz.omega);
  RepMap d = compose(syz.iota, syz_omega.pi);
  return MinimalPresentation{a,
                             syz_omega.cover,
                             syz.cover,
                             std::move(d),
                             syz.pi,
                             syz.omega,
                             syz.iota,
                             syz_omega.pi,
                             syz.summand_vertices,
                             syz_omega.summand_vertices};
}

TransposeResult transpose_full(const MinimalPresentation& mp, const AlgebraPtr& opposite) {
  const AlgebraPtr& forward = mp.a.algebra_ptr();
  if (!tables_opposite(*forward, *opposite))
    throw_input("transpose: second table is not the opposite algebra");
  const AlgebraTable& alg = *forward;
  const FieldPrime p = alg.field();

  // Yoneda components of d : P1 -> P0, then the dual map P0* -> P1* keeps
  // the same coordinate vectors with summands swapped (word reversal is the
  // identity on basis indices).
  ProjSum ps1 = resum(forward, mp.p1, mp.p1_vertices);
  ProjSum ps0 = resum(forward, mp.p0, mp.p0_vertices);
  std::vector<MatrixModP> d_gens = generator_images(ps1, mp.d);

  ProjSum dual0 = projective_sum(opposite, mp.p0_vertices);
  ProjSum dual1 = projective_sum(opposite, mp.p1_vertices);
  std::vector<MatrixModP> dual_gens;
  for (size_t l = 0; l < mp.p0_vertices.size(); ++l) {
    size_t w = mp.p0_vertices[l];
    // generator of the l-th summand of P0* maps into (+)_k P_W(v_k) at w:
    // component k = the (k -> l) Yoneda entry of d
    MatrixModP img(dual1.rep.dim(w), 1, p);
    for (size_t k = 0; k < mp.p1_vertices.size(); ++k) {
      size_t v = mp.p1_vertices[k];
      const std::vector<size_t>& slots_v = alg.path_basis(w, v);  // classes w -> v over V
      const std::vector<size_t>& slots_w = opposite->path_basis(v, w);
      if (slots_v.size() != slots_w.size())
        throw_contract("transpose: opposite path basis mismatch");
      for (size_t c = 0; c < slots_v.size(); ++c) {
        uint32_t coeff = d_gens[k].at(ps0.offsets[l][v] + c, 0);
        img.set(dual1.offsets[k][w] + c, 0, coeff);
      }
    }
    dual_gens.push_back(std::move(img));
  }
  RepMap dual = proj_sum_map(dual0, dual1.rep, dual_gens);
  CokernelResult ck = cokernel(dual);
  return TransposeResult{std::move(ck.rep), std::move(dual), std::move(ck.projection)};
}

Rep transpose(const Rep& a, const AlgebraPtr& opposite) {
  return transpose_full(minimal_presentation(a), opposite).tr;
}

TensorSpace tensor(const Rep& m, const Rep& n) {
  if (!tables_opposite(m.algebra(), n.algebra()))
    throw_input("tensor: factors do not live over opposite algebras");
  const AlgebraTable& alg = m.algebra();
  const FieldPrime p = alg.field();
  const size_t nv = alg.vertex_count();
  std::vector<size_t> offsets(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v) offsets[v + 1] = offsets[v] + m.dim(v) * n.dim(v);
  const size_t big = offsets[nv];

  // balancing: (x.a) (x) y - x (x) (a.y) over every arrow of the first table
  size_t rel_count = 0;
  for (size_t i = 0; i < alg.arrow_count(); ++i) {
    const Arrow& ar = alg.quiver().arrows[i];
    rel_count += m.dim(ar.source) * n.dim(ar.target);
  }
  MatrixModP span(big, rel_count, p);
  size_t col = 0;
  for (size_t i = 0; i < alg.arrow_count(); ++i) {
    const Arrow& ar = alg.quiver().arrows[i];
    const MatrixModP& ma = m.arrow(i);   // m_s -> m_t
    const MatrixModP& na = n.arrow(i);   // n_t -> n_s over the opposite table
    size_t s = ar.source, t = ar.target;
    for (size_t xi = 0; xi < m.dim(s); ++xi)
      for (size_t yj = 0; yj < n.dim(t); ++yj) {
        for (size_t r = 0; r < m.dim(t); ++r)
          span.set(offsets[t] + r * n.dim(t) + yj, col, ma.at(r, xi));
        for (size_t k = 0; k < n.dim(s); ++k) {
          size_t idx = offsets[s] + xi * n.dim(s) + k;
          span.set(idx, col, p.sub(span.at(idx, col), na.at(k, yj)));
        }
        ++col;
      }
  }
  TensorSpace t{m, n, 0, offsets, quotient_by_span(big, span, p)};
  t.dim = t.quot.dim;
  return t;
}

MatrixModP tensor_pure(const TensorSpace& t, size_t v, const MatrixModP& x, const MatrixModP& y) {
  const FieldPrime p = t.m.algebra().field();
  if (x.rows() != t.m.dim(v) || y.rows() != t.n.dim(v)) throw_contract("tensor_pure: shape");
  MatrixModP big(t.offsets.back(), 1, p);
  for (size_t i = 0; i < x.rows(); ++i) {
    if (x.at(i, 0) == 0) continue;
    for (size_t j = 0; j < y.rows(); ++j)
      big.set(t.offsets[v] + i * y.rows() + j, 0, p.mul(x.at(i, 0), y.at(j, 0)));
  }
  return t.quot.projection * big;
}

MatrixModP tensor_induced_left(const TensorSpace& from, const TensorSpace& to, const RepMap& f) {
  if (!(from.m == f.from()) || !(to.m == f.to()) || !(from.n == to.n))
    throw_contract("tensor_induced_left: endpoint mismatch");
  const FieldPrime p = f.from().algebra().field();
  MatrixModP big(to.offsets.back(), from.offsets.back(), p);
  for (size_t v = 0; v < f.blocks().size(); ++v) {
    const MatrixModP& fv = f.block(v);
    size_t ndim = from.n.dim(v);
    for (size_t r = 0; r < fv.rows(); ++r)
      for (size_t i = 0; i < fv.cols(); ++i) {
        if (fv.at(r, i) == 0) continue;
        for (size_t j = 0; j < ndim; ++j)
          big.set(to.offsets[v] + r * ndim + j, from.offsets[v] + i * ndim + j, fv.at(r, i));
      }
  }
  return to.quot.projection * big * from.quot.section;
}

MatrixModP tensor_induced_right(const TensorSpace& from, const TensorSpace& to, const RepMap& g) {
  if (!(from.n == g.from()) || !(to.n == g.to()) || !(from.m == to.m))
    throw_contract("tensor_induced_right: endpoint mismatch");
  const FieldPrime p = g.from().algebra().field();
  MatrixModP big(to.offsets.back(), from.offsets.back(), p);
  for (size_t v = 0; v < g.blocks().size(); ++v) {
    const MatrixModP& gv = g.block(v);
    size_t n_from = from.n.dim(v);
    size_t n_to = to.n.dim(v);
    size_t mdim = from.m.dim(v);
    for (size_t i = 0; i < mdim; ++i)
      for (size_t k = 0; k < n_to; ++k)
        for (size_t j = 0; j < n_from; ++j) {
          if (gv.at(k, j) == 0) continue;
          big.set(to.offsets[v] + i * n_to + k, from.offsets[v] + i * n_from + j, gv.at(k, j));
        }
  }
  return to.quot.projection * big * from.quot.section;
}

TorSpace tor1_with_syzygy(const SyzygyData& syz, const Rep& n) {
  TensorSpace omega_t = tensor(syz.omega, n);
  TensorSpace cover_t = tensor(syz.cover, n);
  MatrixModP incl = tensor_induced_left(omega_t, cover_t, syz.iota);
  MatrixModP basis = kernel_basis(incl);
  TorSpace t{syz.target, n, basis.cols(), std::move(omega_t), std::move(cover_t), std::move(incl),
             std::move(basis)};
  return t;
}

TorSpace tor1_with_presentation(const MinimalPresentation& mp, const Rep& n) {
  TensorSpace omega_t = tensor(mp.omega, n);
  TensorSpace cover_t = tensor(mp.p0, n);
  MatrixModP incl = tensor_induced_left(omega_t, cover_t, mp.iota);
  MatrixModP basis = kernel_basis(incl);
  TorSpace t{mp.a, n, basis.cols(), std::move(omega_t), std::move(cover_t), std::move(incl),
             std::move(basis)};
  return t;
}

TorSpace tor1(const Rep& a, const Rep& n) {
  return tor1_with_presentation(minimal_presentation(a), n);
}

MatrixModP tor_induced_right(const TorSpace& from, const TorSpace& to, const RepMap& g) {
  MatrixModP big = tensor_induced_right(from.omega_tensor, to.omega_tensor, g);
  auto sol = solve(to.basis, big * from.basis);
  if (!sol) throw_contract("tor_induced_right: image escapes the kernel");
  return *sol;
}

MatrixModP tor_stable_iso(const MinimalPresentation& mp, const TransposeResult& tr,
                          const TorSpace& tor, const StableHomSpace& sh,
                          const AlgebraPtr& opposite) {
  const AlgebraTable& alg = mp.a.algebra();
  const FieldPrime p = alg.field();
  const Rep& n = tor.n;

  TensorSpace p1_t = tensor(mp.p1, n);
  MatrixModP pr = tensor_induced_left(p1_t, tor.omega_tensor, mp.pi_omega);

  // P1 (x) n is identified with (+)_k n_{v_k} by sending y in n_{v_k} to
  // (generator of summand k) (x) y.
  ProjSum ps1 = resum(mp.a.algebra_ptr(), mp.p1, mp.p1_vertices);
  std::vector<std::pair<size_t, size_t>> slots;  // (summand, n-basis index)
  for (size_t k = 0; k < mp.p1_vertices.size(); ++k)
    for (size_t j = 0; j < n.dim(mp.p1_vertices[k]); ++j) slots.emplace_back(k, j);
  MatrixModP theta(p1_t.dim, slots.size(), p);
  for (size_t c = 0; c < slots.size(); ++c) {
    auto [k, j] = slots[c];
    size_t v = mp.p1_vertices[k];
    MatrixModP gen(mp.p1.dim(v), 1, p);
    gen.set(ps1.offsets[k][v] + generator_position(alg, v), 0, 1);
    MatrixModP y(n.dim(v), 1, p);
    y.set(j, 0, 1);
    MatrixModP coords = tensor_pure(p1_t, v, gen, y);
    for (size_t r = 0; r < p1_t.dim; ++r) theta.set(r, c, coords.at(r, 0));
  }
  if (theta.rows() != theta.cols() || rank(theta) != theta.rows())
    throw_contract("tor_stable_iso: projective tensor identification failed");

  ProjSum dual1 = resum(opposite, tr.projection.from(), mp.p1_vertices);

  MatrixModP out(sh.dim, tor.dim, p);
  for (size_t c = 0; c < tor.dim; ++c) {
    // lift the Tor class into P1 (x) n, read it as generator images, build
    // the map P1* -> n and push it through the cokernel
    MatrixModP xi(tor.omega_tensor.dim, 1, p);
    for (size_t r = 0; r < tor.omega_tensor.dim; ++r) xi.set(r, 0, tor.basis.at(r, c));
    auto zeta = solve(pr, xi);
    if (!zeta) throw_contract("tor_stable_iso: cover tensor is not surjective");
    auto eta = solve(theta, *zeta);
    if (!eta) throw_contract("tor_stable_iso: identification not invertible");
    std::vector<MatrixModP> gen_images;
    size_t pos = 0;
    for (size_t k = 0; k < mp.p1_vertices.size(); ++k) {
      size_t v = mp.p1_vertices[k];
      MatrixModP y(n.dim(v), 1, p);
      for (size_t j = 0; j < n.dim(v); ++j) y.set(j, 0, eta->at(pos + j, 0));
      pos += n.dim(v);
      gen_images.push_back(std::move(y));
    }
    RepMap psi = proj_sum_map(dual1, n, gen_images);
    auto phi = solve_past(tr.projection, psi);
    if (!phi) throw_contract("tor_stable_iso: map does not kill the dual image");
    MatrixModP cls = stable_class(sh, *phi);
    for (size_t r = 0; r < sh.dim; ++r) out.set(r, c, cls.at(r, 0));
  }
  return out;
}

TorIsoReport tor_iso_check(const Rep& a, const Rep& n, const AlgebraPtr& opposite,
                           const std::vector<RepMap>& test_maps) {
  MinimalPresentation mp = minimal_presentation(a);
  TransposeResult tr = transpose_full(mp, opposite);
  TorSpace tor = tor1_with_presentation(mp, n);
  StableHomSpace sh = stable_hom(tr.tr, n);

  TorIsoReport report;
  report.tor_dim = tor.dim;
  report.stable_dim = sh.dim;
  report.dims_equal = tor.dim == sh.dim;
  if (!report.dims_equal) return report;

  MatrixModP iso = tor_stable_iso(mp, tr, tor, sh, opposite);
  report.iso_invertible = rank(iso) == tor.dim;

  for (const RepMap& g : test_maps) {
    if (!(g.from() == n)) throw_input("tor_iso_check: test map does not start at n");
    TorSpace tor2 = tor1_with_presentation(mp, g.to());
    StableHomSpace sh2 = stable_hom(tr.tr, g.to());
    if (tor2.dim != sh2.dim) {
      report.natural = false;
      break;
    }
    MatrixModP iso2 = tor_stable_iso(mp, tr, tor2, sh2, opposite);
    MatrixModP tor_g = tor_induced_right(tor, tor2, g);
    // stable side: phi -> g o phi
    MatrixModP st_g(sh2.dim, sh.dim, a.algebra().field());
    for (size_t j = 0; j < sh.dim; ++j) {
      RepMap rep_j = RepMap::zero(tr.tr, n);
      for (size_t i = 0; i < sh.hom_basis.size(); ++i) {
        uint32_t ccoef = sh.quot.section.at(i, j);
        if (ccoef) rep_j = rep_j + sh.hom_basis[i].scaled(ccoef);
      }
      MatrixModP col = stable_class(sh2, compose(g, rep_j));
      for (size_t r = 0; r < sh2.dim; ++r) st_g.set(r, j, col.at(r, 0));
    }
    if (!(iso2 * tor_g == st_g * iso)) {
      report.natural = false;
      break;
    }
  }
  report.pass = report.dims_equal && report.iso_invertible && report.natural;
  return report;
}

}  // namespace quivhom
