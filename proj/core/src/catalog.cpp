#include "deza/catalog.hpp"

namespace deza {

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

Graph complement_of_cubes(std::size_t s) {
  std::vector<Graph> parts(s, hypercube(3));
  return complement(disjoint_union(parts));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"petersen", "Kneser graph K(5,2)", petersen,
               "v=10 k=3 values={0,1} deza=(10,3,1,0) srg=(10,3,0,1) strictly-deza=no "
               "diameter=2",
               "ddg=-", std::nullopt});
  c.push_back({"complement-petersen", "complement of the Petersen graph",
               [] { return complement(petersen()); },
               "v=10 k=6 values={3,4} deza=(10,6,4,3) srg=(10,6,3,4) strictly-deza=no "
               "diameter=2",
               "ddg=-", std::nullopt});
  c.push_back({"rook-3x3", "K3 x K3 rook graph", [] { return grid(3, 3); },
               "v=9 k=4 values={1,2} deza=(9,4,2,1) srg=(9,4,1,2) strictly-deza=no "
               "diameter=2",
               "ddg=-", std::nullopt});
  c.push_back({"hypercube-3", "binary cube H(3,2)", [] { return hypercube(3); },
               "v=8 k=3 values={0,2} deza=(8,3,2,0) srg=- strictly-deza=no diameter=3",
               "ddg=(8,3,2,0,2,4)", std::nullopt});
  c.push_back({"hypercube-4", "binary cube H(4,2)", [] { return hypercube(4); },
               "v=16 k=4 values={0,2} deza=(16,4,2,0) srg=- strictly-deza=no diameter=4",
               "ddg=-", std::nullopt});
  c.push_back({"fano-incidence", "point-line incidence graph of the Fano plane",
               fano_incidence,
               "v=14 k=3 values={0,1} deza=(14,3,1,0) srg=- strictly-deza=no diameter=3",
               "ddg=(14,3,1,0,2,7)", std::nullopt});
  c.push_back({"fano-non-incidence", "point-line non-incidence graph of the Fano plane",
               fano_non_incidence,
               "v=14 k=4 values={0,2} deza=(14,4,2,0) srg=- strictly-deza=no diameter=3",
               "ddg=(14,4,2,0,2,7)", std::nullopt});
  c.push_back({"grid-4x2", "K4 x K2 grid", [] { return grid(4, 2); },
               "v=8 k=4 values={0,2} deza=(8,4,2,0) srg=- strictly-deza=yes diameter=2",
               "ddg=(8,4,0,2,4,2)", std::string("(8,4,2,0,2,4)")});
  for (std::size_t s = 1; s <= 3; ++s) {
    const std::size_t v = 8 * s;
    const std::size_t base = 8 * (s - 1);
    std::string deza = "(" + std::to_string(v) + "," + std::to_string(base + 4) + "," +
                       std::to_string(base + 2) + "," + std::to_string(base) + ")";
    std::string values = s == 1 ? "{0,2}"
                                : "{" + std::to_string(base) + "," +
                                      std::to_string(base + 2) + "}";
    c.push_back({"complement-" + std::to_string(s) + (s == 1 ? "-cube" : "-cubes"),
                 "complement of " + std::to_string(s) + " disjoint copies of H(3,2)",
                 [s] { return complement_of_cubes(s); },
                 "v=" + std::to_string(v) + " k=" + std::to_string(base + 4) +
                     " values=" + values + " deza=" + deza +
                     " srg=- strictly-deza=yes diameter=2",
                 s == 1 ? "ddg=(8,4,0,2,4,2)" : "ddg=-", std::nullopt});
  }
  return c;
}

}  // namespace

std::string classification_summary(const ClassificationReport& r) {
  std::string out = "v=" + std::to_string(r.v);
  out += " k=" + (r.regular ? std::to_string(*r.regular) : std::string("-"));
  out += " values={" + join(r.common_values) + "}";
  out += " deza=" + (r.deza ? to_string(*r.deza) : std::string("-"));
  out += " srg=" + (r.srg ? to_string(*r.srg) : std::string("-"));
  out += std::string(" strictly-deza=") + (r.strictly_deza ? "yes" : "no");
  out += " diameter=" + (r.diameter ? std::to_string(*r.diameter) : std::string("inf"));
  return out;
}

std::string ddg_summary(const DdgDetection& d) {
  if (!d.proper) return "ddg=-";
  return "ddg=" + to_string(d.proper->params);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

}  // namespace deza
