#include "quivhom/algebra.hpp"

#include <algorithm>
#include <map>

namespace quivhom {

size_t Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  throw_input("unknown vertex: " + label);
}

size_t Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw_input("unknown arrow: " + name);
}

namespace {

void validate_quiver(const Quiver& q) {
  for (size_t i = 0; i < q.vertices.size(); ++i)
    for (size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j]) throw_input("duplicate vertex label: " + q.vertices[i]);
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw_input("arrow endpoint out of range: " + a.name);
    for (size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[j].name == a.name) throw_input("duplicate arrow name: " + a.name);
  }
}

bool word_composable(const Quiver& q, const std::vector<size_t>& word) {
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (q.arrows[word[i]].target != q.arrows[word[i + 1]].source) return false;
  return true;
}

void validate_relations(const Quiver& q, const RelationSet& r) {
  if (r.nilpotency_bound < 2) throw_input("nilpotency_bound must be >= 2");
  for (const Relation& rel : r.relations) {
    if (rel.empty()) throw_input("empty relation");
    bool have_ends = false;
    size_t src = 0, tgt = 0;
    for (const RelationTerm& t : rel) {
      if (t.word.size() < 2) throw_input("relation term shorter than two arrows (ideal not admissible)");
      for (size_t a : t.word)
        if (a >= q.arrows.size()) throw_input("relation references unknown arrow");
      if (!word_composable(q, t.word)) throw_input("non-composable relation term");
      size_t s = q.arrows[t.word.front()].source;
      size_t e = q.arrows[t.word.back()].target;
      if (!have_ends) {
        src = s;
        tgt = e;
        have_ends = true;
      } else if (s != src || e != tgt) {
        throw_input("relation terms do not share source and target");
      }
    }
  }
}

// Paths ordered by length then lexicographically on arrow indices.
struct PathKey {
  bool operator()(const std::vector<size_t>& a, const std::vector<size_t>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

AlgebraTable::AlgebraTable(FieldPrime p, Quiver quiver, std::vector<BasisPath> basis,
                           std::vector<std::vector<uint32_t>> mult, size_t nilpotency_bound)
    : p_(p),
      quiver_(std::move(quiver)),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      nilpotency_bound_(nilpotency_bound),
      idempotent_index_(quiver_.vertices.size(), 0),
      arrow_basis_index_(quiver_.arrows.size(), 0) {
  size_t nv = quiver_.vertices.size();
  by_source_target_.assign(nv * nv, {});
  for (size_t i = 0; i < basis_.size(); ++i) {
    const BasisPath& b = basis_[i];
    by_source_target_[b.source * nv + b.target].push_back(i);
    if (b.word.empty()) idempotent_index_[b.source] = i;
    if (b.word.size() == 1) arrow_basis_index_[b.word[0]] = i;
  }
}

const std::vector<size_t>& AlgebraTable::path_basis(size_t source, size_t target) const {
  size_t nv = quiver_.vertices.size();
  if (source >= nv || target >= nv) throw_input("path_basis: vertex out of range");
  return by_source_target_[source * nv + target];
}

bool AlgebraTable::operator==(const AlgebraTable& other) const {
  return p_ == other.p_ && quiver_.vertices == other.quiver_.vertices &&
         quiver_.arrows == other.quiver_.arrows && basis_ == other.basis_ && mult_ == other.mult_;
}

AlgebraTable build_algebra(const Quiver& q, const RelationSet& r, FieldPrime p) {
  validate_quiver(q);
  validate_relations(q, r);
  const size_t bound = r.nilpotency_bound;

  // Enumerate all composable path words of length < bound, in (length, lex)
  // order. Vertex idempotents are the length-0 words.
  std::vector<BasisPath> words;
  std::map<std::vector<size_t>, size_t, PathKey> word_index;  // only length >= 1
  std::vector<size_t> idempotent_pos(q.vertices.size());
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    idempotent_pos[v] = words.size();
    words.push_back(BasisPath{{}, v, v});
  }
  size_t level_begin = 0, level_end = words.size();
  for (size_t len = 1; len < bound; ++len) {
    size_t next_begin = words.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != words[i].target) continue;
        std::vector<size_t> w = words[i].word;
        w.push_back(a);
        words.push_back(BasisPath{w, words[i].source, q.arrows[a].target});
      }
    }
    // lex order within the level (extension order is already lex because the
    // previous level is lex-sorted and arrows are appended in index order)
    level_begin = next_begin;
    level_end = words.size();
    if (level_begin == level_end) break;  // no longer paths exist
  }
  for (size_t i = 0; i < words.size(); ++i)
    if (!words[i].word.empty()) word_index[words[i].word] = i;

  const size_t nwords = words.size();

  // The ideal span: every product u * rho * w of a relation generator rho
  // with path words u, w, truncated at the nilpotency bound.
  std::vector<std::vector<uint32_t>> ideal_vecs;
  for (const Relation& rel : r.relations) {
    size_t rel_src = q.arrows[rel.front().word.front()].source;
    size_t rel_tgt = q.arrows[rel.front().word.back()].target;
    for (size_t ui = 0; ui < nwords; ++ui) {
      if (words[ui].target != rel_src) continue;
      for (size_t wi = 0; wi < nwords; ++wi) {
        if (words[wi].source != rel_tgt) continue;
        std::vector<uint32_t> vec(nwords, 0);
        bool nonzero = false;
        for (const RelationTerm& t : rel) {
          std::vector<size_t> w = words[ui].word;
          w.insert(w.end(), t.word.begin(), t.word.end());
          w.insert(w.end(), words[wi].word.begin(), words[wi].word.end());
          if (w.size() >= bound) continue;  // zero past the bound
          auto it = word_index.find(w);
          if (it == word_index.end()) throw_input("internal: missing path word");
          vec[it->second] = p.add(vec[it->second], p.reduce(static_cast<int64_t>(t.coeff)));
          nonzero = true;
        }
        if (nonzero) ideal_vecs.push_back(std::move(vec));
      }
    }
  }

  MatrixModP span(nwords, ideal_vecs.size(), p);
  for (size_t j = 0; j < ideal_vecs.size(); ++j)
    for (size_t i = 0; i < nwords; ++i) span.set(i, j, ideal_vecs[j][i]);
  QuotientSpace quo = quotient_by_span(nwords, span, p);

  // Surviving words are the non-pivot coordinates; vertices and arrows always
  // survive because every ideal vector is supported on words of length >= 2.
  std::vector<size_t> survivors;
  {
    size_t pi = 0;
    for (size_t c = 0; c < nwords; ++c) {
      if (pi < quo.pivots.size() && quo.pivots[pi] == c) {
        ++pi;
      } else {
        survivors.push_back(c);
      }
    }
  }
  std::vector<BasisPath> basis;
  basis.reserve(survivors.size());
  for (size_t s : survivors) basis.push_back(words[s]);

  const size_t dim = basis.size();
  std::vector<std::vector<uint32_t>> mult(dim * dim, std::vector<uint32_t>(dim, 0));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      if (basis[i].target != basis[j].source) continue;  // product is zero
      std::vector<size_t> w = basis[i].word;
      w.insert(w.end(), basis[j].word.begin(), basis[j].word.end());
      if (w.size() >= bound) continue;
      size_t wi;
      if (w.empty()) {
        wi = idempotent_pos[basis[i].source];
      } else {
        auto it = word_index.find(w);
        if (it == word_index.end()) throw_input("internal: missing product word");
        wi = it->second;
      }
      // normal form of the concatenated word, expressed on the survivors
      MatrixModP unit(nwords, 1, p);
      unit.set(wi, 0, 1);
      MatrixModP coords = quo.projection * unit;
      for (size_t k = 0; k < dim; ++k) mult[i * dim + j][k] = coords.at(k, 0);
    }
  }

  return AlgebraTable(p, q, std::move(basis), std::move(mult), bound);
}

std::vector<size_t> path_basis(const AlgebraTable& a, const std::string& source,
                               const std::string& target) {
  size_t s = a.quiver().vertex_index(source);
  size_t t = a.quiver().vertex_index(target);
  return a.path_basis(s, t);
}

AlgebraTable opposite_algebra(const AlgebraTable& a) {
  Quiver q;
  q.vertices = a.quiver().vertices;
  for (const Arrow& ar : a.quiver().arrows) q.arrows.push_back(Arrow{ar.name, ar.target, ar.source});
  std::vector<BasisPath> basis;
  basis.reserve(a.dim());
  for (const BasisPath& b : a.basis()) {
    std::vector<size_t> w(b.word.rbegin(), b.word.rend());
    basis.push_back(BasisPath{std::move(w), b.target, b.source});
  }
  const size_t dim = a.dim();
  std::vector<std::vector<uint32_t>> mult(dim * dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) mult[i * dim + j] = a.mult(j, i);
  return AlgebraTable(a.field(), std::move(q), std::move(basis), std::move(mult),
                      a.nilpotency_bound());
}

}  // namespace quivhom
