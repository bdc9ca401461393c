#include "rcm/goldendata.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef RCM_DATA_DIR
#define RCM_DATA_DIR "data"
#endif

namespace rcm {

namespace {

nlohmann::json load(const std::string& name) {
  std::string path = data_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("golden data file not found: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

GoldenGenerator parse_generator(const nlohmann::json& g) {
  GoldenGenerator out;
  if (!g.at("s").is_null()) {
    out.elem = OrderElem{g.at("s").get<long>(), g.at("t").get<long>()};
  }
  if (g.contains("order") && !g.at("order").is_null()) out.order = g.at("order").get<long>();
  for (const auto& im : g.at("images")) {
    GoldenImage gi;
    gi.target = im.at("target").get<int>();
    gi.coeff = RootOfUnity{im.at("sign").get<int>(), im.at("zeta").get<int>()};
    out.images.push_back(gi);
  }
  return out;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("RCM_DATA_DIR")) return env;
  return RCM_DATA_DIR;
}

std::vector<GoldenPolyRow> golden_table(PolyKind kind) {
  std::string file;
  switch (kind) {
    case PolyKind::pn: file = "table_pn.json"; break;
    case PolyKind::qn: file = "table_qn.json"; break;
    case PolyKind::g2pow12: file = "table_g2_12.json"; break;
    case PolyKind::g2pow6: file = "table_g2_6.json"; break;
  }
  nlohmann::json j = load(file);
  std::vector<GoldenPolyRow> rows;
  for (const auto& r : j.at("rows")) {
    GoldenPolyRow row;
    row.n = r.at("n").get<long>();
    row.class_number = r.at("class_number").get<long>();
    row.status = r.value("status", "ok");
    row.note = r.value("note", "");
    if (r.contains("printed_n")) row.printed_n = r.at("printed_n").get<long>();
    for (const auto& c : r.at("coeffs")) {
      if (c.is_string()) {
        row.coeffs.push_back({mpz_class(c.get<std::string>()), mpz_class(0)});
      } else {
        row.coeffs.push_back({mpz_class(c.at("u").get<std::string>()),
                              mpz_class(c.at("v").get<std::string>())});
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GoldenActionTable golden_table1() {
  nlohmann::json j = load("table_actions.json");
  GoldenActionTable t;
  const auto& t1 = j.at("table1");
  t.residue = t1.at("residue").get<int>();
  for (const auto& n : t1.at("test_n")) t.test_n.push_back(n.get<long>());
  for (const auto& g : t1.at("generators")) t.generators.push_back(parse_generator(g));
  return t;
}

std::vector<GoldenActionTable> golden_sec4_tables() {
  nlohmann::json j = load("table_actions.json");
  std::vector<GoldenActionTable> out;
  for (const auto& sec : j.at("sec4")) {
    GoldenActionTable t;
    t.residue = sec.at("residue_mod_72").get<int>();
    t.test_n.push_back(sec.at("test_n").get<long>());
    for (const auto& g : sec.at("columns")) t.generators.push_back(parse_generator(g));
    out.push_back(std::move(t));
  }
  return out;
}

Sec5Example golden_sec5() {
  nlohmann::json j = load("sec5_example.json");
  Sec5Example e;
  e.n = j.at("n").get<long>();
  e.p = mpz_class(j.at("p").get<std::string>());
  e.m = mpz_class(j.at("m").get<std::string>());
  std::vector<mpz_class> desc;
  for (const auto& c : j.at("q259_coeffs")) desc.push_back(mpz_class(c.get<std::string>()));
  e.q259.assign(desc.rbegin(), desc.rend());
  e.root = mpz_class(j.at("root").get<std::string>());
  e.C1 = mpz_class(j.at("C1").get<std::string>());
  e.C2 = mpz_class(j.at("C2").get<std::string>());
  e.j1 = mpz_class(j.at("j1").get<std::string>());
  e.j2 = mpz_class(j.at("j2").get<std::string>());
  e.a = mpz_class(j.at("a").get<std::string>());
  e.b = mpz_class(j.at("b").get<std::string>());
  return e;
}

UnitGroupGolden golden_unit_groups() {
  nlohmann::json j = load("unit_groups.json");
  UnitGroupGolden g;
  const auto& r19 = j.at("residue19");
  for (const auto& n : r19.at("test_n")) g.residue19_test_n.push_back(n.get<long>());
  g.group_order_72 = r19.at("group_order_72").get<long>();
  for (const auto& f : r19.at("mod9_invariant_factors")) g.mod9_factors_19.push_back(f.get<long>());
  for (const auto& f : r19.at("mod8_invariant_factors")) g.mod8_factors_19.push_back(f.get<long>());
  g.mod9_printed_form = r19.at("mod9_matches_printed_form").get<std::string>();
  for (const auto& row : j.at("residue3")) {
    UnitGroupGolden::Residue3Row r;
    r.residue_mod_72 = row.at("residue_mod_72").get<int>();
    r.test_n = row.at("test_n").get<long>();
    for (const auto& f : row.at("mod9_invariant_factors")) r.mod9_factors.push_back(f.get<long>());
    for (const auto& f : row.at("mod8_invariant_factors")) r.mod8_factors.push_back(f.get<long>());
    g.residue3.push_back(std::move(r));
  }
  return g;
}

}  // namespace rcm
