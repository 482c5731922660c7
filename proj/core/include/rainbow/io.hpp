#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "rainbow/graph.hpp"

namespace rainbow {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

// Text format, one record per line:
//   n <count>
//   e <u> <v> <colour>
// '#' starts a comment; blank lines are ignored. Loops, duplicate pairs and
// out-of-range ids are rejected at parse time with their line number.
EdgeColouredGraph read_text(std::istream& in);
EdgeColouredGraph read_text(const std::string& text);
std::string write_text(const EdgeColouredGraph& g);

// JSON equivalent: {"n": <count>, "edges": [[u, v, colour], ...]}
EdgeColouredGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const EdgeColouredGraph& g);

// Dispatches on the ".json" extension; anything else is the text format.
EdgeColouredGraph load_graph(const std::string& path);
void save_graph(const EdgeColouredGraph& g, const std::string& path);

}  // namespace rainbow
