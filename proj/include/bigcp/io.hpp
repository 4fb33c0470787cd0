#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bigcp/graph.hpp"

namespace bigcp {

/// Text graph format:
///   # comment
///   p <n>
///   e <u> <v>        (0-based; repeats are parallel edges, u == v a loop)
///   c <v> <color>    (optional; when any vertex is colored, uncolored ones get 0)
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Multigraph& g);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace bigcp
