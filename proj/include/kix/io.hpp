#pragma once

#include <iosfwd>
#include <string>

#include "kix/coloring.hpp"
#include "kix/graph.hpp"

namespace kix {

// Text graph format, one graph per file:
//   kix-graph 1
//   V E
//   edge <id> <u> <v>     (E lines)
//   rot <v> <e1> <e2> ...  (V lines, cyclic order)
// Comments start with '#'. Edge ids must be 0..E-1.
PlaneMultigraph parse_graph(std::istream& in);
PlaneMultigraph parse_graph_string(const std::string& text);
PlaneMultigraph load_graph(const std::string& path);
std::string print_graph(const PlaneMultigraph& g);
void save_graph(const PlaneMultigraph& g, const std::string& path);

// Coloring text format:
//   palette <t>
//   color <edge-id> <c>    (one line per colored edge)
PartialColoring parse_coloring(std::istream& in, const PlaneMultigraph& g);
PartialColoring parse_coloring_string(const std::string& text, const PlaneMultigraph& g);
PartialColoring load_coloring(const std::string& path, const PlaneMultigraph& g);
std::string print_coloring(const PartialColoring& phi);

}  // namespace kix
