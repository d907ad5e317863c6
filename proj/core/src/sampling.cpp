#include "quivhom/sampling.hpp"

#include "proj_sum.hpp"

namespace quivhom {

Rep random_rep(Sampler& s, const AlgebraPtr& alg, size_t max_total_dim) {
  const AlgebraTable& a = *alg;
  const FieldPrime p = a.field();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<size_t> summands;
    for (size_t v = 0; v < a.vertex_count(); ++v) {
      uint32_t mult = s.uniform(3);
      for (uint32_t i = 0; i < mult; ++i) summands.push_back(v);
    }
    if (summands.empty()) summands.push_back(s.uniform(static_cast<uint32_t>(a.vertex_count())));
    ProjSum ps = projective_sum(alg, summands);
    Rep cur = ps.rep;
    // quotient by randomly generated submodules until small enough
    int shrink_rounds = 0;
    while (cur.total_dim() > max_total_dim && shrink_rounds < 64) {
      std::vector<MatrixModP> gens;
      for (size_t v = 0; v < a.vertex_count(); ++v) gens.emplace_back(cur.dim(v), 0, p);
      size_t v = s.uniform(static_cast<uint32_t>(a.vertex_count()));
      if (cur.dim(v) > 0) {
        MatrixModP g(cur.dim(v), 1, p);
        for (size_t r = 0; r < cur.dim(v); ++r) g.set(r, 0, s.field_element(p));
        gens[v] = std::move(g);
      }
      SubRep u = submodule_generated(cur, gens);
      if (u.total_dim() == 0) {
        ++shrink_rounds;
        continue;
      }
      cur = quotient(cur, u).rep;
      ++shrink_rounds;
    }
    if (cur.total_dim() > 0 && cur.total_dim() <= max_total_dim) return cur;
  }
  return simple_rep(alg, 0);
}

RepMap random_endo(Sampler& s, const Rep& a) { return random_map(s, a, a); }

RepMap random_map(Sampler& s, const Rep& from, const Rep& to) {
  std::vector<RepMap> basis = hom_basis(from, to);
  RepMap acc = RepMap::zero(from, to);
  for (const RepMap& b : basis) acc = acc + b.scaled(s.field_element(from.algebra().field()));
  return acc;
}

IsoTwist random_iso_twist(Sampler& s, const Rep& m) {
  const AlgebraTable& a = m.algebra();
  const FieldPrime p = a.field();
  std::vector<MatrixModP> conj;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    MatrixModP c(m.dim(v), m.dim(v), p);
    do {
      for (size_t r = 0; r < m.dim(v); ++r)
        for (size_t cidx = 0; cidx < m.dim(v); ++cidx) c.set(r, cidx, s.field_element(p));
    } while (rank(c) != m.dim(v));
    conj.push_back(std::move(c));
  }
  std::vector<MatrixModP> arrows;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    MatrixModP inv = *solve(conj[ar.source], MatrixModP::identity(m.dim(ar.source), p));
    arrows.push_back(conj[ar.target] * m.arrow(i) * inv);
  }
  Rep twisted(m.algebra_ptr(), m.dims(), std::move(arrows));
  RepMap iso(m, twisted, conj);
  return IsoTwist{std::move(twisted), std::move(iso)};
}

SubRep random_submodule(Sampler& s, const Rep& m) {
  const AlgebraTable& a = m.algebra();
  const FieldPrime p = a.field();
  std::vector<MatrixModP> gens;
  size_t count = s.uniform(3);
  for (size_t v = 0; v < a.vertex_count(); ++v) gens.emplace_back(m.dim(v), 0, p);
  for (size_t i = 0; i < count; ++i) {
    size_t v = s.uniform(static_cast<uint32_t>(a.vertex_count()));
    if (m.dim(v) == 0) continue;
    MatrixModP g(m.dim(v), 1, p);
    for (size_t r = 0; r < m.dim(v); ++r) g.set(r, 0, s.field_element(p));
    gens[v] = MatrixModP::hstack(gens[v], g);
  }
  return submodule_generated(m, gens);
}

std::vector<BatteryEntry> default_battery(const AlgebraPtr& alg, uint64_t seed,
                                          size_t random_count, size_t random_max_dim) {
  std::vector<BatteryEntry> battery;
  const AlgebraTable& a = *alg;
  for (size_t v = 0; v < a.vertex_count(); ++v)
    battery.push_back({"S(" + a.quiver().vertices[v] + ")", simple_rep(alg, v)});
  for (size_t v = 0; v < a.vertex_count(); ++v)
    battery.push_back({"P(" + a.quiver().vertices[v] + ")", projective_rep(alg, v)});
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    SyzygyData syz = projective_cover(simple_rep(alg, v));
    if (syz.omega.total_dim() > 0)
      battery.push_back({"OmegaS(" + a.quiver().vertices[v] + ")", syz.omega});
  }
  Sampler s(seed);
  for (size_t i = 0; i < random_count; ++i)
    battery.push_back({"rand" + std::to_string(i), random_rep(s, alg, random_max_dim)});
  return battery;
}

}  // namespace quivhom
