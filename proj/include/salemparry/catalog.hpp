#ifndef SALEMPARRY_CATALOG_HPP
#define SALEMPARRY_CATALOG_HPP

#include <string>
#include <vector>

#include "salemparry/cells.hpp"

namespace salem {

struct CatalogEntry {
  std::string name;
  IntPolynomial r;
};

/// The R and L polynomials whose cells make up the catalogs: `size` is 23
/// (R1..R18, L1..L5) or 40 (additionally R19..R33, L6, L7).
std::vector<CatalogEntry> builtin_entries(int size);

/// Cells derived from builtin_entries(size), in the same order.
std::vector<PeriodCell> builtin_cells(int size);

}  // namespace salem

#endif
