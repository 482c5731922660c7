#include "rainbow/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rainbow {

EdgeColouredGraph read_text(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> seen;  // (u,v) -> first line
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (n >= 0) throw ParseError(line_no, "repeated header");
      if (!(ls >> n) || n < 0) throw ParseError(line_no, "bad vertex count");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before header");
      Edge e;
      if (!(ls >> e.u >> e.v >> e.colour)) throw ParseError(line_no, "bad edge record");
      if (e.u == e.v) throw ParseError(line_no, "loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw ParseError(line_no, "vertex id out of range");
      if (e.colour <= 0) throw ParseError(line_no, "colour must be positive");
      auto key = std::minmax(e.u, e.v);
      auto [it, fresh] = seen.emplace(key, line_no);
      if (!fresh)
        throw ParseError(line_no, "duplicate edge, first seen at line " +
                                      std::to_string(it->second));
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing content '" + rest + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing header");
  return EdgeColouredGraph(n, std::move(edges));
}

EdgeColouredGraph read_text(const std::string& text) {
  std::istringstream in(text);
  return read_text(in);
}

std::string write_text(const EdgeColouredGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& e : g.edges()) {
    out << "e " << e.u << " " << e.v << " " << e.colour << "\n";
  }
  return out.str();
}

EdgeColouredGraph graph_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& row : j.at("edges")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("edge entry must be [u, v, colour]");
    edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  return EdgeColouredGraph(n, std::move(edges));
}

nlohmann::json graph_to_json(const EdgeColouredGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

EdgeColouredGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
  }
  return read_text(in);
}

void save_graph(const EdgeColouredGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    out << graph_to_json(g).dump(2) << "\n";
  } else {
    out << write_text(g);
  }
}

}  // namespace rainbow
