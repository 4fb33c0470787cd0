#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "bigcp/errors.hpp"
#include "bigcp/io.hpp"

namespace bigcp {

namespace {

template <class T>
T parse_number(std::string_view tok, int line) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<std::pair<int, Color>> colors;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].starts_with('#')) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "p") {
      if (tok.size() != 2) throw ParseError(where + "expected 'p <n>'");
      if (n) throw ParseError(where + "duplicate header");
      n = parse_number<int>(tok[1], line_no);
      if (*n < 0) throw ParseError(where + "negative vertex count");
      continue;
    }
    if (!n) throw ParseError(where + "record before the 'p <n>' header");
    auto vertex = [&](std::string_view t) {
      const int v = parse_number<int>(t, line_no);
      if (v < 0 || v >= *n) throw ParseError(where + "vertex id out of range");
      return v;
    };
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(where + "expected 'e <u> <v>'");
      edges.push_back({vertex(tok[1]), vertex(tok[2])});
    } else if (tok[0] == "c") {
      if (tok.size() != 3) throw ParseError(where + "expected 'c <v> <color>'");
      colors.push_back({vertex(tok[1]), parse_number<Color>(tok[2], line_no)});
    } else {
      throw ParseError(where + "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError("missing 'p <n>' header");
  std::vector<Color> vc;
  if (!colors.empty()) {
    vc.assign(*n, 0);
    for (auto [v, c] : colors) vc[v] = c;
  }
  return Multigraph(*n, std::move(edges), std::move(vc));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (g.has_vertex_colors()) {
    for (int v = 0; v < g.num_vertices(); ++v) out << "c " << v << ' ' << g.vertex_color(v) << '\n';
  }
  return out.str();
}

}  // namespace bigcp
