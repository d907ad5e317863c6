#include "quivhom/rep.hpp"

#include <string>

namespace quivhom {

namespace {

void check_same_algebra(const Rep& a, const Rep& b, const char* what) {
  if (!(a.algebra() == b.algebra())) throw_input(std::string(what) + ": algebra mismatch");
}

}  // namespace

Rep::Rep(AlgebraPtr algebra, std::vector<size_t> dims, std::vector<MatrixModP> arrow_mats)
    : alg_(std::move(algebra)), dims_(std::move(dims)), arrow_mats_(std::move(arrow_mats)) {
  const AlgebraTable& a = *alg_;
  if (dims_.size() != a.vertex_count()) throw_input("rep: dims size != vertex count");
  if (arrow_mats_.size() != a.arrow_count()) throw_input("rep: arrow matrix count mismatch");
  for (size_t i = 0; i < arrow_mats_.size(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    if (arrow_mats_[i].rows() != dims_[ar.target] || arrow_mats_[i].cols() != dims_[ar.source])
      throw_input("rep: arrow matrix shape mismatch for " + ar.name);
    if (!(arrow_mats_[i].field() == a.field())) throw_input("rep: modulus mismatch");
  }
  // Relations must act as zero, i.e. the action of path words must factor
  // through the algebra table. Checking every (basis class, arrow) extension
  // against the multiplication table is enough: by induction on word length
  // it forces action(word) = action(class of word) for every word, and then
  // every relation acts as the zero class does.
  std::vector<MatrixModP> acts;
  acts.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) acts.push_back(word_action(a.basis(i).word, a.basis(i).source));
  for (size_t i = 0; i < a.dim(); ++i) {
    const BasisPath& bi = a.basis(i);
    for (size_t ai = 0; ai < a.arrow_count(); ++ai) {
      const Arrow& ar = a.quiver().arrows[ai];
      if (bi.target != ar.source) continue;
      MatrixModP lhs = arrow_mats_[ai] * acts[i];
      const std::vector<uint32_t>& prod = a.mult(i, a.arrow_basis_index(ai));
      MatrixModP rhs(dims_[ar.target], dims_[bi.source], a.field());
      for (size_t k = 0; k < prod.size(); ++k)
        if (prod[k]) rhs = rhs + acts[k].scaled(prod[k]);
      if (!(lhs == rhs))
        throw_input("rep: relation violated extending basis class " + std::to_string(i) +
                    " by arrow " + ar.name);
    }
  }
}

Rep Rep::zero(AlgebraPtr algebra) {
  std::vector<size_t> dims(algebra->vertex_count(), 0);
  std::vector<MatrixModP> mats;
  for (size_t i = 0; i < algebra->arrow_count(); ++i)
    mats.emplace_back(0, 0, algebra->field());
  return Rep(std::move(algebra), std::move(dims), std::move(mats));
}

size_t Rep::total_dim() const {
  size_t t = 0;
  for (size_t d : dims_) t += d;
  return t;
}

MatrixModP Rep::word_action(const std::vector<size_t>& word, size_t source_vertex) const {
  MatrixModP m = MatrixModP::identity(dims_[source_vertex], alg_->field());
  for (size_t a : word) m = arrow_mats_[a] * m;
  return m;
}

MatrixModP Rep::element_action(const std::vector<uint32_t>& coords, size_t source_vertex,
                               size_t target_vertex) const {
  MatrixModP acc(dims_[target_vertex], dims_[source_vertex], alg_->field());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const BasisPath& b = alg_->basis(i);
    if (b.source != source_vertex || b.target != target_vertex)
      throw_contract("element_action: coordinate outside the (source,target) component");
    acc = acc + word_action(b.word, b.source).scaled(coords[i]);
  }
  return acc;
}

RepMap::RepMap(Rep from, Rep to, std::vector<MatrixModP> blocks)
    : from_(std::move(from)), to_(std::move(to)), blocks_(std::move(blocks)) {
  check_same_algebra(from_, to_, "rep map");
  const AlgebraTable& a = from_.algebra();
  if (blocks_.size() != a.vertex_count()) throw_input("rep map: block count mismatch");
  for (size_t v = 0; v < blocks_.size(); ++v)
    if (blocks_[v].rows() != to_.dim(v) || blocks_[v].cols() != from_.dim(v))
      throw_input("rep map: block shape mismatch at vertex " + a.quiver().vertices[v]);
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    if (!(blocks_[ar.target] * from_.arrow(i) == to_.arrow(i) * blocks_[ar.source]))
      throw_input("rep map: does not intertwine arrow " + ar.name);
  }
}

RepMap RepMap::zero(const Rep& from, const Rep& to) {
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < from.algebra().vertex_count(); ++v)
    blocks.emplace_back(to.dim(v), from.dim(v), from.algebra().field());
  return RepMap(from, to, std::move(blocks));
}

RepMap RepMap::identity(const Rep& m) {
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < m.algebra().vertex_count(); ++v)
    blocks.push_back(MatrixModP::identity(m.dim(v), m.algebra().field()));
  return RepMap(m, m, std::move(blocks));
}

RepMap RepMap::operator+(const RepMap& rhs) const {
  if (!(from_ == rhs.from_) || !(to_ == rhs.to_)) throw_contract("rep map sum: endpoint mismatch");
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + rhs.blocks_[v]);
  return RepMap(from_, to_, std::move(blocks));
}

RepMap RepMap::operator-(const RepMap& rhs) const {
  if (!(from_ == rhs.from_) || !(to_ == rhs.to_)) throw_contract("rep map difference: endpoint mismatch");
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] - rhs.blocks_[v]);
  return RepMap(from_, to_, std::move(blocks));
}

RepMap RepMap::scaled(uint32_t s) const {
  std::vector<MatrixModP> blocks;
  for (const MatrixModP& b : blocks_) blocks.push_back(b.scaled(s));
  return RepMap(from_, to_, std::move(blocks));
}

RepMap compose(const RepMap& g, const RepMap& f) {
  if (!(f.to() == g.from())) throw_contract("compose: endpoint mismatch");
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
  return RepMap(f.from(), g.to(), std::move(blocks));
}

RepMap power(const RepMap& endo, uint64_t e) {
  if (!endo.is_endo()) throw_contract("power: not an endomorphism");
  RepMap acc = RepMap::identity(endo.from());
  RepMap b = endo;
  while (e) {
    if (e & 1) acc = compose(acc, b);
    b = compose(b, b);
    e >>= 1;
  }
  return acc;
}

size_t SubRep::total_dim() const {
  size_t t = 0;
  for (const MatrixModP& b : basis) t += b.cols();
  return t;
}

SubRep make_subrep(const Rep& ambient, const std::vector<MatrixModP>& span_cols) {
  const AlgebraTable& a = ambient.algebra();
  if (span_cols.size() != a.vertex_count()) throw_input("subrep: span per vertex required");
  std::vector<MatrixModP> basis;
  for (size_t v = 0; v < span_cols.size(); ++v) {
    if (span_cols[v].rows() != ambient.dim(v)) throw_input("subrep: span shape mismatch");
    basis.push_back(column_space_canonical(span_cols[v]));
  }
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    if (!span_contains(basis[ar.target], ambient.arrow(i) * basis[ar.source]))
      throw_input("subrep: not stable under arrow " + ar.name);
  }
  return SubRep{ambient, std::move(basis)};
}

SubRepEmbedding embed(const SubRep& s) {
  const AlgebraTable& a = s.ambient.algebra();
  std::vector<size_t> dims;
  for (const MatrixModP& b : s.basis) dims.push_back(b.cols());
  std::vector<MatrixModP> arrows;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    auto sol = solve(s.basis[ar.target], s.ambient.arrow(i) * s.basis[ar.source]);
    if (!sol) throw_contract("embed: subrep lost arrow stability");
    arrows.push_back(*sol);
  }
  Rep rep(s.ambient.algebra_ptr(), std::move(dims), std::move(arrows));
  RepMap incl(rep, s.ambient, s.basis);
  return SubRepEmbedding{s, std::move(rep), std::move(incl)};
}

SubRep full_subrep(const Rep& m) {
  std::vector<MatrixModP> basis;
  for (size_t v = 0; v < m.dims().size(); ++v)
    basis.push_back(MatrixModP::identity(m.dim(v), m.algebra().field()));
  return SubRep{m, std::move(basis)};
}

SubRep zero_subrep(const Rep& m) {
  std::vector<MatrixModP> basis;
  for (size_t v = 0; v < m.dims().size(); ++v)
    basis.emplace_back(m.dim(v), 0, m.algebra().field());
  return SubRep{m, std::move(basis)};
}

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
  check_same_algebra(m, n, "hom");
  const AlgebraTable& a = m.algebra();
  const FieldPrime p = a.field();
  // Unknowns: entries of the per-vertex blocks X_v (n.dim(v) x m.dim(v)),
  // vertex-major, row-major within a block.
  std::vector<size_t> offset(a.vertex_count() + 1, 0);
  for (size_t v = 0; v < a.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const size_t unknowns = offset[a.vertex_count()];

  size_t eq_count = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    eq_count += n.dim(ar.target) * m.dim(ar.source);
  }
  MatrixModP sys(eq_count, unknowns, p);
  size_t row = 0;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    const MatrixModP& ma = m.arrow(i);
    const MatrixModP& na = n.arrow(i);
    // X_t * m_a - n_a * X_s = 0, one equation per (r, c)
    for (size_t r = 0; r < n.dim(ar.target); ++r) {
      for (size_t c = 0; c < m.dim(ar.source); ++c) {
        for (size_t k = 0; k < m.dim(ar.target); ++k)
          sys.set(row, offset[ar.target] + r * m.dim(ar.target) + k, ma.at(k, c));
        for (size_t k = 0; k < n.dim(ar.source); ++k) {
          size_t idx = offset[ar.source] + k * m.dim(ar.source) + c;
          sys.set(row, idx, p.sub(sys.at(row, idx), na.at(r, k)));
        }
        ++row;
      }
    }
  }
  MatrixModP null = kernel_basis(sys);
  std::vector<RepMap> out;
  for (size_t j = 0; j < null.cols(); ++j) {
    std::vector<MatrixModP> blocks;
    for (size_t v = 0; v < a.vertex_count(); ++v) {
      MatrixModP b(n.dim(v), m.dim(v), p);
      for (size_t r = 0; r < n.dim(v); ++r)
        for (size_t c = 0; c < m.dim(v); ++c) b.set(r, c, null.at(offset[v] + r * m.dim(v) + c, j));
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

namespace {

MatrixModP stack_blocks(const RepMap& f) {
  MatrixModP v(0, 1, f.from().algebra().field());
  for (size_t w = 0; w < f.blocks().size(); ++w) {
    const MatrixModP& b = f.block(w);
    MatrixModP part(b.rows() * b.cols(), 1, b.field());
    for (size_t r = 0; r < b.rows(); ++r)
      for (size_t c = 0; c < b.cols(); ++c) part.set(r * b.cols() + c, 0, b.at(r, c));
    v = MatrixModP::vstack(v, part);
  }
  return v;
}

}  // namespace

MatrixModP hom_coords(const std::vector<RepMap>& basis, const RepMap& f) {
  return hom_coords_batch(basis, {f}, f.from().algebra().field());
}

MatrixModP hom_coords_batch(const std::vector<RepMap>& basis, const std::vector<RepMap>& maps,
                            const FieldPrime& p) {
  size_t total = 0;
  const RepMap* shape = !maps.empty() ? &maps[0] : (!basis.empty() ? &basis[0] : nullptr);
  if (shape)
    for (const MatrixModP& b : shape->blocks()) total += b.rows() * b.cols();
  MatrixModP bmat(total, basis.size(), p);
  for (size_t j = 0; j < basis.size(); ++j) {
    MatrixModP col = stack_blocks(basis[j]);
    for (size_t r = 0; r < col.rows(); ++r) bmat.set(r, j, col.at(r, 0));
  }
  MatrixModP tmat(total, maps.size(), p);
  for (size_t j = 0; j < maps.size(); ++j) {
    MatrixModP col = stack_blocks(maps[j]);
    for (size_t r = 0; r < col.rows(); ++r) tmat.set(r, j, col.at(r, 0));
  }
  auto sol = solve(bmat, tmat);
  if (!sol) throw_contract("hom_coords: map not in the span of the basis");
  return *sol;
}

RepMap hom_from_coords(const Rep& m, const Rep& n, const MatrixModP& coords) {
  std::vector<RepMap> basis = hom_basis(m, n);
  if (coords.rows() != basis.size() || coords.cols() != 1) throw_contract("hom_from_coords: shape");
  RepMap acc = RepMap::zero(m, n);
  for (size_t i = 0; i < basis.size(); ++i) acc = acc + basis[i].scaled(coords.at(i, 0));
  return acc;
}

KernelResult kernel(const RepMap& f) {
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < f.blocks().size(); ++v) span.push_back(kernel_basis(f.block(v)));
  SubRep s = make_subrep(f.from(), span);
  SubRepEmbedding e = embed(s);
  return KernelResult{std::move(e.sub), std::move(e.rep), std::move(e.inclusion)};
}

ImageResult image(const RepMap& f) {
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < f.blocks().size(); ++v) span.push_back(f.block(v));
  SubRep s = make_subrep(f.to(), span);
  SubRepEmbedding e = embed(s);
  // alpha with beta o alpha = f, solved in the canonical basis
  std::vector<MatrixModP> alpha_blocks;
  for (size_t v = 0; v < f.blocks().size(); ++v) {
    auto sol = solve(s.basis[v], f.block(v));
    if (!sol) throw_contract("image: factorization failed");
    alpha_blocks.push_back(*sol);
  }
  RepMap alpha(f.from(), e.rep, std::move(alpha_blocks));
  return ImageResult{std::move(e.sub), std::move(e.rep), std::move(alpha), std::move(e.inclusion)};
}

CokernelResult cokernel(const RepMap& f) {
  const Rep& n = f.to();
  const AlgebraTable& a = n.algebra();
  const FieldPrime p = a.field();
  std::vector<QuotientSpace> quo;
  for (size_t v = 0; v < a.vertex_count(); ++v)
    quo.push_back(quotient_by_span(n.dim(v), f.block(v), p));
  std::vector<size_t> dims;
  for (const QuotientSpace& q : quo) dims.push_back(q.dim);
  std::vector<MatrixModP> arrows;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    arrows.push_back(quo[ar.target].projection * n.arrow(i) * quo[ar.source].section);
  }
  Rep c(n.algebra_ptr(), std::move(dims), std::move(arrows));
  std::vector<MatrixModP> proj_blocks;
  for (size_t v = 0; v < a.vertex_count(); ++v) proj_blocks.push_back(quo[v].projection);
  RepMap proj(n, c, std::move(proj_blocks));
  return CokernelResult{std::move(c), std::move(proj)};
}

DirectSum direct_sum(const Rep& m, const Rep& n) {
  check_same_algebra(m, n, "direct sum");
  const AlgebraTable& a = m.algebra();
  const FieldPrime p = a.field();
  std::vector<size_t> dims;
  for (size_t v = 0; v < a.vertex_count(); ++v) dims.push_back(m.dim(v) + n.dim(v));
  std::vector<MatrixModP> arrows;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    MatrixModP blockmat(dims[ar.target], dims[ar.source], p);
    for (size_t r = 0; r < m.dim(ar.target); ++r)
      for (size_t c = 0; c < m.dim(ar.source); ++c) blockmat.set(r, c, m.arrow(i).at(r, c));
    for (size_t r = 0; r < n.dim(ar.target); ++r)
      for (size_t c = 0; c < n.dim(ar.source); ++c)
        blockmat.set(m.dim(ar.target) + r, m.dim(ar.source) + c, n.arrow(i).at(r, c));
    arrows.push_back(std::move(blockmat));
  }
  Rep sum(m.algebra_ptr(), dims, std::move(arrows));
  std::vector<MatrixModP> i1, i2, p1, p2;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    MatrixModP inj1(dims[v], m.dim(v), p), inj2(dims[v], n.dim(v), p);
    MatrixModP pr1(m.dim(v), dims[v], p), pr2(n.dim(v), dims[v], p);
    for (size_t r = 0; r < m.dim(v); ++r) {
      inj1.set(r, r, 1);
      pr1.set(r, r, 1);
    }
    for (size_t r = 0; r < n.dim(v); ++r) {
      inj2.set(m.dim(v) + r, r, 1);
      pr2.set(r, m.dim(v) + r, 1);
    }
    i1.push_back(std::move(inj1));
    i2.push_back(std::move(inj2));
    p1.push_back(std::move(pr1));
    p2.push_back(std::move(pr2));
  }
  std::vector<RepMap> inj{RepMap(m, sum, std::move(i1)), RepMap(n, sum, std::move(i2))};
  std::vector<RepMap> prj{RepMap(sum, m, std::move(p1)), RepMap(sum, n, std::move(p2))};
  return DirectSum{std::move(sum), std::move(inj), std::move(prj)};
}

SubRep sub_intersect(const SubRep& s, const SubRep& t) {
  if (!(s.ambient == t.ambient)) throw_input("sub_intersect: ambient mismatch");
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < s.basis.size(); ++v) {
    const MatrixModP& bs = s.basis[v];
    const MatrixModP& bt = t.basis[v];
    // columns (x, y) with bs*x = bt*y; the intersection is bs * x
    MatrixModP neg = bt.scaled(bs.field().neg(1));
    MatrixModP stacked = MatrixModP::hstack(bs, neg);
    MatrixModP null = kernel_basis(stacked);
    MatrixModP xs = null.block(0, 0, bs.cols(), null.cols());
    span.push_back(bs * xs);
  }
  return make_subrep(s.ambient, span);
}

SubRep sub_add(const SubRep& s, const SubRep& t) {
  if (!(s.ambient == t.ambient)) throw_input("sub_add: ambient mismatch");
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < s.basis.size(); ++v)
    span.push_back(MatrixModP::hstack(s.basis[v], t.basis[v]));
  return make_subrep(s.ambient, span);
}

PushoutResult pushout(const RepMap& a, const RepMap& b) {
  if (!(a.from() == b.from())) throw_input("pushout: source mismatch");
  DirectSum ds = direct_sum(a.to(), b.to());
  RepMap diff = compose(ds.injections[0], a) - compose(ds.injections[1], b);
  CokernelResult ck = cokernel(diff);
  RepMap d = compose(ck.projection, ds.injections[0]);
  RepMap c = compose(ck.projection, ds.injections[1]);
  return PushoutResult{std::move(ck.rep), std::move(c), std::move(d)};
}

bool is_mono(const RepMap& f) {
  for (size_t v = 0; v < f.blocks().size(); ++v)
    if (rank(f.block(v)) != f.from().dim(v)) return false;
  return true;
}

bool is_epi(const RepMap& f) {
  for (size_t v = 0; v < f.blocks().size(); ++v)
    if (rank(f.block(v)) != f.to().dim(v)) return false;
  return true;
}

bool is_iso(const RepMap& f) { return is_mono(f) && is_epi(f); }

Rep simple_rep(const AlgebraPtr& alg, size_t vertex) {
  if (vertex >= alg->vertex_count()) throw_input("simple_rep: vertex out of range");
  std::vector<size_t> dims(alg->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<MatrixModP> mats;
  for (size_t i = 0; i < alg->arrow_count(); ++i) {
    const Arrow& ar = alg->quiver().arrows[i];
    mats.emplace_back(dims[ar.target], dims[ar.source], alg->field());
  }
  return Rep(alg, std::move(dims), std::move(mats));
}

Rep projective_rep(const AlgebraPtr& alg, size_t vertex) {
  if (vertex >= alg->vertex_count()) throw_input("projective_rep: vertex out of range");
  const AlgebraTable& a = *alg;
  // coordinates at vertex w = path basis classes from `vertex` to w, in
  // basis order; arrows act by extending the path
  std::vector<std::vector<size_t>> coords(a.vertex_count());
  std::vector<size_t> position(a.dim(), 0);
  for (size_t w = 0; w < a.vertex_count(); ++w) {
    coords[w] = a.path_basis(vertex, w);
    for (size_t k = 0; k < coords[w].size(); ++k) position[coords[w][k]] = k;
  }
  std::vector<size_t> dims;
  for (size_t w = 0; w < a.vertex_count(); ++w) dims.push_back(coords[w].size());
  std::vector<MatrixModP> mats;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    MatrixModP m(dims[ar.target], dims[ar.source], a.field());
    size_t arrow_class = a.arrow_basis_index(i);
    for (size_t k = 0; k < coords[ar.source].size(); ++k) {
      const std::vector<uint32_t>& prod = a.mult(coords[ar.source][k], arrow_class);
      for (size_t bi = 0; bi < prod.size(); ++bi) {
        if (prod[bi] == 0) continue;
        m.set(position[bi], k, prod[bi]);
      }
    }
    mats.push_back(std::move(m));
  }
  return Rep(alg, std::move(dims), std::move(mats));
}

SubRep radical(const Rep& m) {
  const AlgebraTable& a = m.algebra();
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < a.vertex_count(); ++v) span.emplace_back(m.dim(v), 0, a.field());
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    span[ar.target] = MatrixModP::hstack(span[ar.target], m.arrow(i));
  }
  return make_subrep(m, span);
}

SubRep submodule_generated(const Rep& ambient, const std::vector<MatrixModP>& cols) {
  const AlgebraTable& a = ambient.algebra();
  std::vector<MatrixModP> span;
  for (size_t v = 0; v < a.vertex_count(); ++v) span.push_back(column_space_canonical(cols[v]));
  for (;;) {
    std::vector<MatrixModP> grown = span;
    for (size_t i = 0; i < a.arrow_count(); ++i) {
      const Arrow& ar = a.quiver().arrows[i];
      grown[ar.target] = MatrixModP::hstack(grown[ar.target], ambient.arrow(i) * span[ar.source]);
    }
    bool stable = true;
    for (size_t v = 0; v < grown.size(); ++v) {
      grown[v] = column_space_canonical(grown[v]);
      if (!(grown[v] == span[v])) stable = false;
    }
    span = std::move(grown);
    if (stable) break;
  }
  return make_subrep(ambient, span);
}

CokernelResult quotient(const Rep& m, const SubRep& s) {
  if (!(s.ambient == m)) throw_input("quotient: subrep not of this rep");
  SubRepEmbedding e = embed(s);
  return cokernel(e.inclusion);
}

}  // namespace quivhom
