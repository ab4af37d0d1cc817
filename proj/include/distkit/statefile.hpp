#pragma once

#include <filesystem>
#include <string>

#include "distkit/densmat.hpp"

namespace distkit {

// State file schema, version 1:
//   {"version":1,"dims":[dA,dB],"matrix":[[[re,im],...],...]}
// with one row array per matrix row and [re, im] pairs for entries. Floats
// are serialized with the shortest representation that round-trips binary64,
// so serialization is byte-stable.

std::string serialize_state(const BipartiteState& s);

// Parses and fully validates (schema, finiteness, density-matrix invariants).
BipartiteState parse_state(const std::string& text, double tol = kDefaultTol);

void write_state_file(const std::filesystem::path& path, const BipartiteState& s);
BipartiteState read_state_file(const std::filesystem::path& path, double tol = kDefaultTol);

// Shortest round-trip decimal form of a double (used for CSV output too).
std::string format_double(double x);

} // namespace distkit
