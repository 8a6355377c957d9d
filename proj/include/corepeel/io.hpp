#pragma once

#include <string>

#include "corepeel/graph.hpp"

namespace corepeel {

// Loads a SNAP edge-list file; paths ending in ".gz" are decompressed.
// Throws std::runtime_error on I/O failure and ParseError on bad lines.
Graph load_edge_list_file(const std::string& path);

}  // namespace corepeel
