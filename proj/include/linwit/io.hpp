#pragma once
// Text formats shared by the CLI and the library:
//   pseudogrid spec  "pseudogrid <a> <b>" + edge/vertex override lines
//   graph dump       "graph <n> <m>" + "e <u> <v>" per edge, 0-based ids
//   colouring        "colouring <n> <c>" + "<vertex> <colour>" lines
//   witness report   header + path ids + telemetry line

#include <iosfwd>
#include <string>
#include <vector>

#include "linwit/colouring.hpp"
#include "linwit/pseudogrid.hpp"
#include "linwit/witness.hpp"

namespace linwit {

void write_spec(std::ostream& os, const PseudogridSpec& spec);
PseudogridSpec read_spec(std::istream& is);

void write_graph(std::ostream& os, const std::vector<std::vector<int>>& adj);
std::vector<std::vector<int>> read_graph(std::istream& is);

void write_colouring(std::ostream& os, const Colouring& col);
Colouring read_colouring(std::istream& is);

void write_witness(std::ostream& os, const WitnessReport& report);
WitnessReport read_witness(std::istream& is);

// File wrappers; throw std::runtime_error with the path on I/O failure.
void save_text(const std::string& path, const std::string& contents);
std::string load_text(const std::string& path);

} // namespace linwit
