#include "quivhom/fitting.hpp"

namespace quivhom {

namespace {

SubRep kernel_sub(const RepMap& f) {
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < f.blocks().size(); ++v) span.push_back(kernel_basis(f.block(v)));
  return make_subrep(f.from(), span);
}

SubRep image_sub(const RepMap& f) {
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < f.blocks().size(); ++v) span.push_back(f.block(v));
  return make_subrep(f.to(), span);
}

// Restriction of an endomorphism to an invariant subobject, in its basis.
RepMap restrict_endo(const RepMap& f, const SubRepEmbedding& e) {
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < f.blocks().size(); ++v) {
    auto sol = solve(e.sub.basis[v], f.block(v) * e.sub.basis[v]);
    if (!sol) throw_contract("restrict_endo: subobject not invariant");
    blocks.push_back(*sol);
  }
  return RepMap(e.rep, e.rep, std::move(blocks));
}

}  // namespace

size_t fitting_index(const RepMap& f) {
  if (!f.is_endo()) throw_input("fitting_index: not an endomorphism");
  const Rep& a = f.from();
  SubRep ker = zero_subrep(a);
  SubRep img = full_subrep(a);
  RepMap fpow = RepMap::identity(a);
  size_t n = 0;
  for (;;) {
    fpow = compose(f, fpow);
    SubRep ker_next = kernel_sub(fpow);
    SubRep img_next = image_sub(fpow);
    if (ker_next == ker && img_next == img) return n;
    ker = std::move(ker_next);
    img = std::move(img_next);
    ++n;
    if (n > a.total_dim())
      throw_contract("fitting_index: chain did not stabilize within the dimension bound");
  }
}

FittingResult fitting_decomposition(const RepMap& f) {
  if (!f.is_endo()) throw_input("fitting_decomposition: not an endomorphism");
  const Rep& a = f.from();
  size_t n = fitting_index(f);
  RepMap fn = power(f, n);
  SubRep k = kernel_sub(fn);
  SubRep i = image_sub(fn);

  if (sub_intersect(k, i).total_dim() != 0)
    throw_contract("fitting: kernel and image parts intersect");
  if (!(sub_add(k, i) == full_subrep(a))) throw_contract("fitting: parts do not span");

  SubRepEmbedding ke = embed(k);
  SubRepEmbedding ie = embed(i);
  DirectSum ds = direct_sum(ke.rep, ie.rep);
  RepMap q = compose(ke.inclusion, ds.projections[0]) + compose(ie.inclusion, ds.projections[1]);
  if (!is_iso(q)) throw_contract("fitting: q is not an isomorphism");
  std::vector<MatrixModP> inv_blocks;
  for (size_t v = 0; v < q.blocks().size(); ++v) {
    auto sol = solve(q.block(v), MatrixModP::identity(a.dim(v), a.algebra().field()));
    inv_blocks.push_back(*sol);
  }
  RepMap q_inv(a, ds.rep, std::move(inv_blocks));

  RepMap fk = restrict_endo(f, ke);
  RepMap fi = restrict_endo(f, ie);
  bool nilpotent = true;
  {
    RepMap fkn = power(fk, n);
    for (const MatrixModP& b : fkn.blocks())
      if (!b.is_zero()) nilpotent = false;
  }
  if (!nilpotent) throw_contract("fitting: restriction to the kernel part is not nilpotent");
  if (!is_iso(fi)) throw_contract("fitting: restriction to the image part is not invertible");

  return FittingResult{f,  n,  std::move(k),        std::move(i),       std::move(ke.rep),
                       std::move(ie.rep), std::move(q), std::move(q_inv), std::move(fk), std::move(fi)};
}

}  // namespace quivhom
