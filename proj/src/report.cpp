#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace gt {

std::string edge_string(const Tree& t) { return pair_string(t.edges); }

std::string pair_string(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (auto [u, v] : pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string report_text(const SearchReport& r) {
  std::string out = "# gracetree report\n";
  out += "kind: " + r.kind + "\n";
  for (const auto& [k, v] : r.params) out += "param " + k + ": " + v + "\n";
  out += "instances: " + std::to_string(r.instances.size()) + "\n";
  for (const auto& line : r.summary) out += "summary: " + line + "\n";
  for (size_t i = 0; i < r.instances.size(); ++i) {
    const auto& ins = r.instances[i];
    out += "instance " + std::to_string(i + 1) + ": n=" + std::to_string(ins.n) +
           " canon=" + ins.canon + "\n";
    out += "  edges: " + ins.edges + "\n";
    if (!ins.matching.empty()) out += "  matching: " + ins.matching + "\n";
    out += "  verdict: " + ins.verdict + "\n";
    for (const auto& [k, v] : ins.facts) out += "  " + k + ": " + v + "\n";
    for (const auto& w : ins.witnesses) {
      // labelling documents are flattened to "v:label" pairs for the text form
      std::string flat;
      std::istringstream ws(w);
      std::string line;
      while (std::getline(ws, line)) {
        if (line.empty() || line == "L") continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) continue;
        if (!flat.empty()) flat += ' ';
        flat += line.substr(0, sp) + ":" + line.substr(sp + 1);
      }
      out += "  witness: " + flat + "\n";
    }
  }
  return out;
}

std::string report_json(const SearchReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["summary"] = r.summary;
  nlohmann::json instances = nlohmann::json::array();
  for (size_t i = 0; i < r.instances.size(); ++i) {
    const auto& ins = r.instances[i];
    nlohmann::json o;
    o["index"] = i + 1;
    o["n"] = ins.n;
    o["canon"] = ins.canon;
    o["edges"] = ins.edges;
    if (!ins.matching.empty()) o["matching"] = ins.matching;
    o["verdict"] = ins.verdict;
    nlohmann::json facts = nlohmann::json::object();
    for (const auto& [k, v] : ins.facts) facts[k] = v;
    o["facts"] = facts;
    o["witnesses"] = ins.witnesses;
    instances.push_back(o);
  }
  j["instances"] = instances;
  return j.dump(2) + "\n";
}

}  // namespace gt
