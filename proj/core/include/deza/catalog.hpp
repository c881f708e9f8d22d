#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deza/classify.hpp"
#include "deza/ddg.hpp"
#include "deza/graph.hpp"

namespace deza {

/// One-line classification summary, e.g.
/// "v=8 k=4 values={0,2} deza=(8,4,2,0) srg=- strictly-deza=yes diameter=2".
std::string classification_summary(const ClassificationReport& report);

/// "ddg=(v,k,l1,l2,m,n)" for a proper DDG, "ddg=-" otherwise.
std::string ddg_summary(const DdgDetection& detection);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<Graph()> build;
  std::string expected_classification;
  std::string expected_ddg;
  /// Reference DDG parameter string recorded for this graph when it differs
  /// from the computed one.
  std::optional<std::string> listed_ddg;
};

/// Named graphs in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// nullptr when no entry has that name.
const CatalogEntry* find_catalog_entry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace deza
