#pragma once

#include "quivhom/selftest.hpp"

namespace quivhom::testing {

inline Fixture fixture(const std::string& name, uint32_t prime = 101) {
  for (Fixture& fx : fixture_corpus(prime))
    if (fx.name == name) return fx;
  throw_input("unknown fixture: " + name);
}

inline MatrixModP mat(std::vector<std::vector<int64_t>> rows, uint32_t prime) {
  return MatrixModP::from_rows(rows, FieldPrime(prime));
}

}  // namespace quivhom::testing
