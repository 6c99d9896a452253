#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

#include "orbitcode/code.hpp"
#include "orbitcode/galois.hpp"
#include "orbitcode/orbits.hpp"
#include "orbitcode/polyring.hpp"

namespace testutil {

struct Fixture {
  std::unique_ptr<orbitcode::TowerField> field;
  std::unique_ptr<orbitcode::LocationSet> locations;

  const orbitcode::TowerField& fld() const { return *field; }
  const orbitcode::LocationSet& loc() const { return *locations; }
};

inline Fixture make_fixture(std::int64_t p, std::int64_t k, std::int64_t m) {
  Fixture fx;
  fx.field = std::make_unique<orbitcode::TowerField>(
      orbitcode::TowerField::build(orbitcode::FieldParams::make(p, k, m)));
  fx.locations = std::make_unique<orbitcode::LocationSet>(
      orbitcode::enumerate_orbits(*fx.field));
  return fx;
}

inline orbitcode::Felt sym(const orbitcode::TowerField& fld, std::int64_t s) {
  return fld.subfield_element(s);
}

inline orbitcode::PolyF poly_of(const orbitcode::TowerField& fld,
                                std::initializer_list<std::int64_t> symbols) {
  std::vector<orbitcode::Felt> coeffs;
  for (std::int64_t s : symbols) coeffs.push_back(fld.subfield_element(s));
  return orbitcode::PolyF(std::move(coeffs));
}

inline orbitcode::Word word_of(const orbitcode::TowerField& fld,
                               std::initializer_list<std::int64_t> symbols) {
  orbitcode::Word w;
  for (std::int64_t s : symbols) w.push_back(fld.subfield_element(s));
  return w;
}

// The six parameter sets used across the integration checks.
inline std::vector<std::array<std::int64_t, 3>> test_grid() {
  return {{{2, 1, 3}}, {{2, 1, 5}}, {{3, 1, 2}}, {{3, 1, 4}}, {{2, 2, 3}}, {{5, 1, 2}}};
}

}  // namespace testutil
