#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcm/classpoly.hpp"
#include "rcm/cyclotomic.hpp"
#include "rcm/orderunits.hpp"

namespace rcm {

/// Data directory: RCM_DATA_DIR env var, else the compiled-in source path.
std::string data_dir();

struct GoldenPolyRow {
  long n = 0;
  long class_number = 0;
  std::string status = "ok";  // ok | typo-fixed | shortcut-excluded
  std::string note;
  std::optional<long> printed_n;
  std::vector<std::pair<mpz_class, mpz_class>> coeffs;  // descending (u, v)
};

std::vector<GoldenPolyRow> golden_table(PolyKind kind);

struct GoldenImage {
  int target = 0;
  RootOfUnity coeff;
};

struct GoldenGenerator {
  std::optional<OrderElem> elem;  // null until pinned
  std::optional<long> order;
  std::vector<GoldenImage> images;  // rows g0..g3
};

struct GoldenActionTable {
  int residue = 0;  // 19, or residue mod 72 for the other three
  std::vector<long> test_n;
  std::vector<GoldenGenerator> generators;
};

GoldenActionTable golden_table1();
std::vector<GoldenActionTable> golden_sec4_tables();

struct Sec5Example {
  long n = 259;
  mpz_class p, m;
  PolyZ q259;  // ascending
  mpz_class root, C1, C2, j1, j2, a, b;
};

Sec5Example golden_sec5();

struct UnitGroupGolden {
  std::vector<long> residue19_test_n;
  long group_order_72 = 0;
  std::vector<long> mod9_factors_19;
  std::vector<long> mod8_factors_19;
  std::string mod9_printed_form;
  struct Residue3Row {
    int residue_mod_72;
    long test_n;
    std::vector<long> mod9_factors;
    std::vector<long> mod8_factors;
  };
  std::vector<Residue3Row> residue3;
};

UnitGroupGolden golden_unit_groups();

}  // namespace rcm
