#ifndef NEGCURV_CATALOG_HPP
#define NEGCURV_CATALOG_HPP

#include <complex>
#include <string>
#include <vector>

#include "negcurv/lie_algebra.hpp"

namespace negcurv {

struct CatalogEntry {
  std::string name;
  StructureConstants algebra;
  bool expected_heintze;
  // expected graded spectra for the codimension-one entries, one list per
  // l^l / l^{l+1}; empty when the codimension condition fails
  std::vector<std::vector<std::complex<double>>> expected_graded;
  std::string note;
};

/// Built-in fixture algebras. The same data ships as JSON files under
/// data/catalog for the file-based interfaces.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace negcurv

#endif
