#pragma once

// Read-after-build cache for the homological data attached to
// representations of one fixed algebra: syzygies, Ext spaces and stable Hom
// spaces, keyed by the raw bytes of the representations involved.

#include <map>
#include <string>

#include "quivhom/homological.hpp"

namespace quivhom {

std::string rep_key(const Rep& r);

class HomCache {
 public:
  explicit HomCache(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra_ptr() const { return alg_; }

  const SyzygyData& syzygy(const Rep& a);
  const ExtSpace& ext(const Rep& a, const Rep& m);
  const StableHomSpace& stable(const Rep& b, const Rep& a);
  const CoverLift& lift(const RepMap& f);

 private:
  AlgebraPtr alg_;
  std::map<std::string, SyzygyData> syzygies_;
  std::map<std::pair<std::string, std::string>, ExtSpace> exts_;
  std::map<std::pair<std::string, std::string>, StableHomSpace> stables_;
  std::map<std::string, CoverLift> lifts_;
};

std::string rep_map_key(const RepMap& f);

}  // namespace quivhom
