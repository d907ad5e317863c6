#pragma once

// JSON interchange: algebra, module and morphism files plus certificate
// emission. Integer entries only, matrices row-major, object keys sorted on
// output; unknown fields are rejected. Paths inside a file resolve relative
// to the directory of the file that names them.

#include <map>
#include <string>

#include "quivhom/realize.hpp"

namespace quivhom {

class FileCache {
 public:
  // opposite = true loads the opposite table of the algebra at the path.
  AlgebraPtr load_algebra(const std::string& path, bool opposite = false);

  struct LoadedRep {
    Rep rep;
    std::string algebra_path;  // as written in the file
    bool opposite = false;
  };
  LoadedRep load_rep(const std::string& path);

  struct LoadedRepMap {
    RepMap map;
    std::string algebra_path;
    bool opposite = false;
  };
  LoadedRepMap load_rep_map(const std::string& path);

 private:
  std::map<std::pair<std::string, bool>, AlgebraPtr> tables_;
};

std::string rep_to_json(const Rep& r, const std::string& algebra_path, bool opposite);
std::string rep_map_to_json(const RepMap& f, const std::string& from_path,
                            const std::string& to_path);
std::string certificate_to_json(const SummandCertificate& cert, const VerifyReport* verification,
                                const std::string& algebra_path, bool opposite);

// Parse a rep from JSON text against an already-loaded algebra (used by the
// round-trip tests; file loading goes through FileCache).
Rep rep_from_json_text(const std::string& text, const AlgebraPtr& alg);

}  // namespace quivhom
