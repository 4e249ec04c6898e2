#include "negcurv/catalog.hpp"

#include "negcurv/errors.hpp"

namespace negcurv {

namespace {

StructureConstants make_abelian2() {
  return StructureConstants(2, {"e1", "e2"});
}

StructureConstants make_axb() {
  StructureConstants g(2, {"e1", "e2"});
  g.set_bracket(0, 1, 1, 1.0);  // [e1, e2] = e2
  return g;
}

StructureConstants make_heisenberg3() {
  StructureConstants g(3, {"e1", "e2", "e3"});
  g.set_bracket(0, 1, 2, 1.0);  // [e1, e2] = e3
  return g;
}

StructureConstants make_rot3() {
  StructureConstants g(3, {"y", "e1", "e2"});
  g.set_bracket(0, 1, 2, 1.0);   // [y, e1] = e2
  g.set_bracket(0, 2, 1, -1.0);  // [y, e2] = -e1
  return g;
}

StructureConstants make_heintze_heis4() {
  StructureConstants g(4, {"y", "e1", "e2", "e3"});
  g.set_bracket(0, 1, 1, 1.0);  // [y, e1] = e1
  g.set_bracket(0, 2, 2, 1.0);  // [y, e2] = e2
  g.set_bracket(0, 3, 3, 2.0);  // [y, e3] = 2 e3
  g.set_bracket(1, 2, 3, 1.0);  // [e1, e2] = e3
  return g;
}

StructureConstants make_rh(int n) {
  std::vector<std::string> labels = {"y"};
  for (int i = 1; i < n; ++i) labels.push_back("e" + std::to_string(i));
  StructureConstants g(n, labels);
  for (int i = 1; i < n; ++i) g.set_bracket(0, i, i, 1.0);  // [y, e_i] = e_i
  return g;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"abelian2", make_abelian2(), false, {},
                     "abelian plane; flat, codimension condition fails"});
  entries.push_back({"axb", make_axb(), true, {{1.0}},
                     "affine line ax+b; hyperbolic plane model"});
  entries.push_back({"heisenberg3", make_heisenberg3(), false, {},
                     "Heisenberg algebra; derived subalgebra has codimension 2"});
  entries.push_back({"rot3", make_rot3(), false, {{{0.0, 1.0}, {0.0, -1.0}}},
                     "rotation semidirect product; purely imaginary spectrum"});
  entries.push_back({"heintze_heis4", make_heintze_heis4(), true, {{1.0, 1.0}, {2.0}},
                     "Heisenberg extension; complex-hyperbolic type"});
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::complex<double>> ones(n - 1, 1.0);
    entries.push_back({"rh" + std::to_string(n), make_rh(n), true, {ones},
                       "real hyperbolic space model, constant curvature -1"});
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw InputError("catalog: no entry named '" + name + "'");
}

}  // namespace negcurv
