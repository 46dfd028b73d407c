#pragma once

#include <string>

#include "labelling.hpp"
#include "tree.hpp"

namespace gt {

// Edge-list document: first significant line is the vertex count, then one
// "u v" line per edge. '#' starts a comment; blank lines and CRLF endings
// are accepted.
Tree parse_tree(const std::string& text);
std::string tree_text(const Tree& t);

// Matching document: header "M <count>", then one "u v" line per pair.
Matching parse_matching(const std::string& text);
std::string matching_text(const Matching& m);

// Labelling document: header "L", then one "vertex label" line per vertex.
Labelling parse_labelling(const std::string& text);
std::string labelling_text(const Labelling& f);

// Graphviz rendering. Vertices are captioned with their labels when a
// labelling is supplied; matching edges are drawn bold.
std::string export_dot(const Tree& t, const Labelling* f, const Matching* m);

}  // namespace gt
