#include "quivhom/cache.hpp"

namespace quivhom {

std::string rep_key(const Rep& r) {
  std::string key;
  key.reserve(64);
  for (size_t d : r.dims()) {
    key += std::to_string(d);
    key += ',';
  }
  key += '|';
  for (size_t a = 0; a < r.algebra().arrow_count(); ++a) {
    const MatrixModP& m = r.arrow(a);
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) {
        key += std::to_string(m.at(i, j));
        key += ',';
      }
    key += ';';
  }
  return key;
}

const SyzygyData& HomCache::syzygy(const Rep& a) {
  std::string key = rep_key(a);
  auto it = syzygies_.find(key);
  if (it == syzygies_.end()) it = syzygies_.emplace(std::move(key), projective_cover(a)).first;
  return it->second;
}

const ExtSpace& HomCache::ext(const Rep& a, const Rep& m) {
  auto key = std::make_pair(rep_key(a), rep_key(m));
  auto it = exts_.find(key);
  if (it == exts_.end()) it = exts_.emplace(std::move(key), ext1_with_syzygy(syzygy(a), m)).first;
  return it->second;
}

const StableHomSpace& HomCache::stable(const Rep& b, const Rep& a) {
  auto key = std::make_pair(rep_key(b), rep_key(a));
  auto it = stables_.find(key);
  if (it == stables_.end())
    it = stables_.emplace(std::move(key), stable_hom_with_syzygy(b, syzygy(a))).first;
  return it->second;
}

std::string rep_map_key(const RepMap& f) {
  std::string key = rep_key(f.from());
  key += '>';
  key += rep_key(f.to());
  key += '>';
  for (const MatrixModP& b : f.blocks()) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) {
        key += std::to_string(b.at(i, j));
        key += ',';
      }
    key += ';';
  }
  return key;
}

const CoverLift& HomCache::lift(const RepMap& f) {
  std::string key = rep_map_key(f);
  auto it = lifts_.find(key);
  if (it == lifts_.end())
    it = lifts_.emplace(std::move(key),
                        lift_through_covers(syzygy(f.from()), syzygy(f.to()), f))
             .first;
  return it->second;
}

}  // namespace quivhom
