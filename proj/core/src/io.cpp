#include "quivhom/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

namespace quivhom {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw_input("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw_input(where + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw_input(where + ": unknown field \"" + it.key() + "\"");
}

const json& field(const json& j, const std::string& name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) throw_input(where + ": missing field \"" + name + "\"");
  return *it;
}

std::string resolve(const std::string& base_file, const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p.lexically_normal().string();
  return (std::filesystem::path(base_file).parent_path() / p).lexically_normal().string();
}

MatrixModP matrix_from_json(const json& j, size_t rows, size_t cols, FieldPrime p,
                            const std::string& where) {
  if (!j.is_array()) throw_input(where + ": expected an array of rows");
  if (j.size() != rows) throw_input(where + ": expected " + std::to_string(rows) + " rows");
  MatrixModP m(rows, cols, p);
  for (size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw_input(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) +
                  " entries");
    for (size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) throw_input(where + ": entries must be integers");
      m.set(r, c, p.reduce(row[c].get<int64_t>()));
    }
  }
  return m;
}

json matrix_to_json(const MatrixModP& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rep_body(const Rep& r) {
  const AlgebraTable& a = r.algebra();
  json dims = json::object();
  for (size_t v = 0; v < a.vertex_count(); ++v) dims[a.quiver().vertices[v]] = r.dim(v);
  json arrows = json::object();
  for (size_t i = 0; i < a.arrow_count(); ++i)
    arrows[a.quiver().arrows[i].name] = matrix_to_json(r.arrow(i));
  return json{{"dims", std::move(dims)}, {"arrows", std::move(arrows)}};
}

Rep rep_from_body(const json& j, const AlgebraPtr& alg, const std::string& where) {
  const AlgebraTable& a = *alg;
  const json& dims_j = field(j, "dims", where);
  if (!dims_j.is_object()) throw_input(where + ": \"dims\" must be an object");
  std::vector<size_t> dims(a.vertex_count(), 0);
  std::set<std::string> seen;
  for (auto it = dims_j.begin(); it != dims_j.end(); ++it) {
    size_t v = a.quiver().vertex_index(it.key());
    if (!it->is_number_integer() || it->get<int64_t>() < 0)
      throw_input(where + ": dims[\"" + it.key() + "\"] must be a nonnegative integer");
    dims[v] = it->get<size_t>();
    seen.insert(it.key());
  }
  for (const std::string& v : a.quiver().vertices)
    if (!seen.count(v)) throw_input(where + ": missing dims entry for vertex \"" + v + "\"");
  const json& arrows_j = field(j, "arrows", where);
  if (!arrows_j.is_object()) throw_input(where + ": \"arrows\" must be an object");
  for (auto it = arrows_j.begin(); it != arrows_j.end(); ++it) a.quiver().arrow_index(it.key());
  std::vector<MatrixModP> mats;
  for (size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& ar = a.quiver().arrows[i];
    auto it = arrows_j.find(ar.name);
    if (it == arrows_j.end()) throw_input(where + ": missing arrow matrix \"" + ar.name + "\"");
    mats.push_back(matrix_from_json(*it, dims[ar.target], dims[ar.source], a.field(),
                                    where + ": arrows[\"" + ar.name + "\"]"));
  }
  return Rep(alg, std::move(dims), std::move(mats));
}

}  // namespace

AlgebraPtr FileCache::load_algebra(const std::string& path, bool opposite) {
  std::string canon = std::filesystem::weakly_canonical(path).string();
  auto key = std::make_pair(canon, opposite);
  auto hit = tables_.find(key);
  if (hit != tables_.end()) return hit->second;

  json j = parse_file(path);
  const std::string where = "algebra file " + path;
  reject_unknown(j, {"prime", "nilpotency_bound", "vertices", "arrows", "relations"}, where);

  const json& prime_j = field(j, "prime", where);
  if (!prime_j.is_number_integer()) throw_input(where + ": \"prime\" must be an integer");
  FieldPrime p(prime_j.get<uint32_t>());

  Quiver q;
  for (const json& v : field(j, "vertices", where)) {
    if (!v.is_string()) throw_input(where + ": vertex labels must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  for (const json& a : field(j, "arrows", where)) {
    reject_unknown(a, {"name", "source", "target"}, where + ": arrow");
    q.arrows.push_back(Arrow{field(a, "name", where).get<std::string>(),
                             q.vertex_index(field(a, "source", where).get<std::string>()),
                             q.vertex_index(field(a, "target", where).get<std::string>())});
  }

  RelationSet rels;
  const json& nb = field(j, "nilpotency_bound", where);
  if (!nb.is_number_integer() || nb.get<int64_t>() < 2)
    throw_input(where + ": \"nilpotency_bound\" must be an integer >= 2");
  rels.nilpotency_bound = nb.get<size_t>();
  for (const json& rel_j : field(j, "relations", where)) {
    Relation rel;
    if (!rel_j.is_array()) throw_input(where + ": each relation must be an array of terms");
    for (const json& term : rel_j) {
      reject_unknown(term, {"coeff", "path"}, where + ": relation term");
      RelationTerm t;
      const json& coeff = field(term, "coeff", where + ": relation term");
      if (!coeff.is_number_integer()) throw_input(where + ": relation coeff must be an integer");
      t.coeff = p.reduce(coeff.get<int64_t>());
      for (const json& aname : field(term, "path", where + ": relation term"))
        t.word.push_back(q.arrow_index(aname.get<std::string>()));
      rel.push_back(std::move(t));
    }
    rels.relations.push_back(std::move(rel));
  }

  auto table = std::make_shared<const AlgebraTable>(build_algebra(q, rels, p));
  if (opposite) table = std::make_shared<const AlgebraTable>(opposite_algebra(*table));
  tables_.emplace(std::move(key), table);
  return table;
}

FileCache::LoadedRep FileCache::load_rep(const std::string& path) {
  json j = parse_file(path);
  const std::string where = "module file " + path;
  reject_unknown(j, {"algebra", "dims", "arrows", "opposite"}, where);
  std::string alg_rel = field(j, "algebra", where).get<std::string>();
  bool opposite = false;
  if (j.contains("opposite")) {
    if (!j["opposite"].is_boolean()) throw_input(where + ": \"opposite\" must be a boolean");
    opposite = j["opposite"].get<bool>();
  }
  AlgebraPtr alg = load_algebra(resolve(path, alg_rel), opposite);
  return LoadedRep{rep_from_body(j, alg, where), alg_rel, opposite};
}

FileCache::LoadedRepMap FileCache::load_rep_map(const std::string& path) {
  json j = parse_file(path);
  const std::string where = "morphism file " + path;
  reject_unknown(j, {"from", "to", "blocks"}, where);
  LoadedRep from = load_rep(resolve(path, field(j, "from", where).get<std::string>()));
  LoadedRep to = load_rep(resolve(path, field(j, "to", where).get<std::string>()));
  if (!(from.rep.algebra() == to.rep.algebra()))
    throw_input(where + ": endpoints live over different algebras");
  const AlgebraTable& a = from.rep.algebra();
  const json& blocks_j = field(j, "blocks", where);
  if (!blocks_j.is_object()) throw_input(where + ": \"blocks\" must be an object");
  for (auto it = blocks_j.begin(); it != blocks_j.end(); ++it) a.quiver().vertex_index(it.key());
  std::vector<MatrixModP> blocks;
  for (size_t v = 0; v < a.vertex_count(); ++v) {
    const std::string& label = a.quiver().vertices[v];
    auto it = blocks_j.find(label);
    if (it == blocks_j.end()) throw_input(where + ": missing block for vertex \"" + label + "\"");
    blocks.push_back(matrix_from_json(*it, to.rep.dim(v), from.rep.dim(v), a.field(),
                                      where + ": blocks[\"" + label + "\"]"));
  }
  return LoadedRepMap{RepMap(from.rep, to.rep, std::move(blocks)), from.algebra_path,
                      from.opposite};
}

std::string rep_to_json(const Rep& r, const std::string& algebra_path, bool opposite) {
  json j = rep_body(r);
  j["algebra"] = algebra_path;
  if (opposite) j["opposite"] = true;
  return j.dump(2) + "\n";
}

std::string rep_map_to_json(const RepMap& f, const std::string& from_path,
                            const std::string& to_path) {
  const AlgebraTable& a = f.from().algebra();
  json blocks = json::object();
  for (size_t v = 0; v < a.vertex_count(); ++v)
    blocks[a.quiver().vertices[v]] = matrix_to_json(f.block(v));
  json j{{"from", from_path}, {"to", to_path}, {"blocks", std::move(blocks)}};
  return j.dump(2) + "\n";
}

namespace {

json blocks_body(const RepMap& f) {
  const AlgebraTable& a = f.from().algebra();
  json blocks = json::object();
  for (size_t v = 0; v < a.vertex_count(); ++v)
    blocks[a.quiver().vertices[v]] = matrix_to_json(f.block(v));
  return json{{"blocks", std::move(blocks)}};
}

}  // namespace

std::string certificate_to_json(const SummandCertificate& cert, const VerifyReport* verification,
                                const std::string& algebra_path, bool opposite) {
  json chain = json::array();
  for (const ChainStep& st : cert.steps) {
    chain.push_back(json{{"rep", rep_body(st.a)},
                         {"endo", blocks_body(st.f)},
                         {"alpha", blocks_body(st.alpha)},
                         {"beta", blocks_body(st.beta)}});
  }
  json j{{"backend", backend_name(cert.backend)},
         {"algebra", algebra_path},
         {"opposite", opposite},
         {"chain", std::move(chain)},
         {"b", rep_body(cert.b)},
         {"final_endo", blocks_body(cert.final_endo)},
         {"inclusion", blocks_body(cert.inclusion)},
         {"terminal_flag", cert.terminal_flag}};
  if (verification) {
    json rows = json::array();
    for (const VerifyRow& row : verification->rows) {
      rows.push_back(json{{"name", row.name},
                          {"dim_G_A", row.dim_g_a},
                          {"rank_e", row.rank_e},
                          {"dim_G_B", row.dim_g_b},
                          {"pass", row.pass}});
    }
    j["verification"] = json{{"pass", verification->pass}, {"battery", std::move(rows)}};
  }
  return j.dump(2) + "\n";
}

Rep rep_from_json_text(const std::string& text, const AlgebraPtr& alg) {
  json j = json::parse(text);
  reject_unknown(j, {"algebra", "dims", "arrows", "opposite"}, "module text");
  return rep_from_body(j, alg, "module text");
}

}  // namespace quivhom
