#include "proj_sum.hpp"

namespace quivhom {

ProjSum projective_sum(const AlgebraPtr& alg, const std::vector<size_t>& vertices) {
  const AlgebraTable& a = *alg;
  const size_t nv = a.vertex_count();
  std::vector<size_t> dims(nv, 0);
  std::vector<std::vector<size_t>> offsets(vertices.size(), std::vector<size_t>(nv, 0));
  std::vector<Rep> parts;
  for (size_t k = 0; k < vertices.size(); ++k) {
    parts.push_back(projective_rep(alg, vertices[k]));
    for (size_t w = 0; w < nv; ++w) {
      offsets[k][w] = dims[w];
      dims[w] += parts[k].dim(w);
    }
  }
  std::vector<MatrixModP> arrows;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    MatrixModP m(dims[ar.target], dims[ar.source], a.field());
    for (size_t k = 0; k < vertices.size(); ++k) {
      const MatrixModP& pa = parts[k].arrow(i);
      for (size_t r = 0; r < pa.rows(); ++r)
        for (size_t c = 0; c < pa.cols(); ++c)
          m.set(offsets[k][ar.target] + r, offsets[k][ar.source] + c, pa.at(r, c));
    }
    arrows.push_back(std::move(m));
  }
  Rep rep(alg, std::move(dims), std::move(arrows));
  return ProjSum{std::move(rep), vertices, std::move(offsets)};
}

ProjSum resum(const AlgebraPtr& alg, const Rep& cover, const std::vector<size_t>& vertices) {
  const AlgebraTable& a = *alg;
  const size_t nv = a.vertex_count();
  std::vector<size_t> fill(nv, 0);
  std::vector<std::vector<size_t>> offsets;
  for (size_t k = 0; k < vertices.size(); ++k) {
    std::vector<size_t> offs(nv, 0);
    for (size_t w = 0; w < nv; ++w) {
      offs[w] = fill[w];
      fill[w] += a.path_basis(vertices[k], w).size();
    }
    offsets.push_back(std::move(offs));
  }
  return ProjSum{cover, vertices, std::move(offsets)};
}

size_t generator_position(const AlgebraTable& a, size_t v) {
  const std::vector<size_t>& pb = a.path_basis(v, v);
  for (size_t k = 0; k < pb.size(); ++k)
    if (pb[k] == a.idempotent_index(v)) return k;
  throw_contract("projective without its idempotent class");
}

RepMap proj_sum_map(const ProjSum& ps, const Rep& m, const std::vector<MatrixModP>& gen_images) {
  const AlgebraTable& a = m.algebra();
  const size_t nv = a.vertex_count();
  std::vector<MatrixModP> blocks;
  for (size_t w = 0; w < nv; ++w) blocks.emplace_back(m.dim(w), ps.rep.dim(w), a.field());
  for (size_t k = 0; k < ps.summand_vertices.size(); ++k) {
    size_t v = ps.summand_vertices[k];
    for (size_t w = 0; w < nv; ++w) {
      const std::vector<size_t>& pb = a.path_basis(v, w);
      for (size_t c = 0; c < pb.size(); ++c) {
        MatrixModP img = m.word_action(a.basis(pb[c]).word, v) * gen_images[k];
        for (size_t r = 0; r < m.dim(w); ++r)
          blocks[w].set(r, ps.offsets[k][w] + c, img.at(r, 0));
      }
    }
  }
  return RepMap(ps.rep, m, std::move(blocks));
}

std::vector<MatrixModP> generator_images(const ProjSum& ps, const RepMap& f) {
  const AlgebraTable& a = f.from().algebra();
  std::vector<MatrixModP> out;
  for (size_t k = 0; k < ps.summand_vertices.size(); ++k) {
    size_t v = ps.summand_vertices[k];
    size_t pos = ps.offsets[k][v] + generator_position(a, v);
    MatrixModP g(f.to().dim(v), 1, a.field());
    for (size_t r = 0; r < g.rows(); ++r) g.set(r, 0, f.block(v).at(r, pos));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace quivhom
