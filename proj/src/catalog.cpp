#include "salemparry/catalog.hpp"

namespace salem {

namespace {

struct RawEntry {
  const char* name;
  std::initializer_list<long> coeffs;
};

// Coefficient lists, constant term first.
const RawEntry kFirst[] = {
    {"R1", {1}},
    {"R2", {1, 1}},
    {"R3", {1, 0, 1}},
    {"R4", {1, 2, 1}},
    {"R5", {1, 1, 1, 1}},
    {"R6", {1, 2, 2, 1}},
    {"R7", {1, -1, 1, -1, 1}},
    {"R8", {1, 2, 2, 2, 2, 1}},
    {"R9", {1, 1, -1, -1, 1, 1}},
    {"R10", {1, 0, 2, 0, 2, 0, 1}},
    {"R11", {1, 1, 1, 2, 1, 1, 1}},
    {"R12", {1, 1, 1, 2, 2, 1, 1, 1}},
    {"R13", {1, 1, 2, 2, 2, 2, 1, 1}},
    {"R14", {1, 2, 1, -1, -1, 1, 2, 1}},
    {"R15", {1, 0, 1, -1, 1, -1, 1, 0, 1}},
    {"R16", {1, -2, 2, -1, 1, -2, 3, -2, 1, -1, 2, -2, 1}},
    {"R17", {1, 3, 4, 3, 1}},
    {"R18", {1, 3, 4, 2, -2, -4, -2, 2, 4, 3, 1}},
    {"L1", {1, 0, -1, 1, 1, -1, 0, 1}},
    {"L2", {1, -1, 0, 1, 0, -1, 1}},
    {"L3", {1, 0, -1, 1, 0, 0, 1, -1, 0, 1}},
    {"L4", {1, -2, 2, 0, -2, 3, -2, 0, 2, -2, 1}},
    {"L5", {1, -1, 0, 1, 0, 0, -1, 1, 1, -1, 0, 0, 1, 0, -1, 1}},
};

const RawEntry kSecond[] = {
    {"R19", {1, 3, 5, 5, 3, 1}},
    {"R20", {1, 3, 5, 6, 5, 3, 1}},
    {"R21", {1, 3, 5, 6, 6, 5, 3, 1}},
    {"R22", {1, 3, 5, 6, 6, 6, 6, 5, 3, 1}},
    {"R23", {1, 3, 4, 4, 4, 4, 3, 1}},
    {"R24", {1, 3, 4, 3, 2, 3, 4, 3, 1}},
    {"R25", {1, 1, 1, 2, 2, 2, 2, 1, 1, 1}},
    {"R26", {1, 1, 1, 2, 2, 2, 3, 2, 2, 2, 1, 1, 1}},
    {"R27", {1, 4, 8, 11, 11, 8, 4, 1}},
    {"R28", {1, 1, 2, 2, 2, 3, 2, 2, 2, 1, 1}},
    {"R29", {1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1, 1}},
    {"R30", {1, 1, 2, 3, 3, 4, 4, 4, 4, 3, 3, 2, 1, 1}},
    {"R31", {1, 0, 2, -1, 2, -2, 2, -2, 2, -1, 2, 0, 1}},
    {"R32", {1, 2, 2, 2, 3, 3, 2, 2, 2, 1}},
    {"R33", {1, 2, 2, 3, 4, 4, 4, 4, 3, 2, 2, 1}},
    {"L6", {1, -3, 5, -5, 3, 0, -2, 2, 0, -2, 3, -2, 0, 2, -2, 0, 3, -5, 5, -3, 1}},
    {"L7", {1, -3, 6, -8, 8, -5, 0, 5, -7, 5, 0, -5, 8, -8, 6, -3, 1}},
};

}  // namespace

std::vector<CatalogEntry> builtin_entries(int size) {
  if (size != 23 && size != 40) throw DomainError("builtin catalogs have 23 or 40 cells");
  std::vector<CatalogEntry> out;
  for (const auto& e : kFirst) out.push_back({e.name, int_poly(e.coeffs)});
  if (size == 40)
    for (const auto& e : kSecond) out.push_back({e.name, int_poly(e.coeffs)});
  return out;
}

std::vector<PeriodCell> builtin_cells(int size) {
  std::vector<PeriodCell> cells;
  for (const auto& e : builtin_entries(size)) cells.push_back(derive_cell(e.r, e.name));
  return cells;
}

}  // namespace salem
