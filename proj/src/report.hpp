#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tree.hpp"

namespace gt {

struct ReportInstance {
  int n = 0;
  std::string canon;
  std::string edges;     // "0-1 1-2 ..."
  std::string matching;  // same shape; empty when not applicable
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> witnesses;  // labelling documents
};

/// Outcome of a search run. Serialized forms depend only on the inputs:
/// timing stays in elapsed_seconds and never reaches the text or JSON
/// renderings, which are byte-stable across runs and worker counts.
struct SearchReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> summary;
  std::vector<ReportInstance> instances;
  double elapsed_seconds = 0.0;
};

std::string report_text(const SearchReport& r);
std::string report_json(const SearchReport& r);

std::string edge_string(const Tree& t);
std::string pair_string(const std::vector<std::pair<int, int>>& pairs);

}  // namespace gt
