#include <json.hpp>

#include "bigcp/errors.hpp"
#include "bigcp/io.hpp"
#include "bigcp/parameters.hpp"

namespace bigcp {

using nlohmann::json;

namespace {

Complex read_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError(where + ": expected a number or [re, im]");
}

json write_complex(Complex z) { return json::array({z.real(), z.imag()}); }

SpinMatrix read_matrix(const json& j, int k, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != k)
    throw ParseError(where + ": expected " + std::to_string(k) + " rows");
  SpinMatrix m{k, {}};
  for (int i = 0; i < k; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != k)
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(k) +
                       " entries");
    for (int c = 0; c < k; ++c) m.entries.push_back(read_complex(j[i][c], where));
  }
  return m;
}

json write_matrix(const SpinMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.k; ++i) {
    json row = json::array();
    for (int j = 0; j < m.k; ++j) row.push_back(write_complex(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int read_k(const json& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc["k"].is_number_integer())
    throw ParseError("model file needs an integer \"k\"");
  const int k = doc["k"].get<int>();
  if (k < 1) throw ParseError("\"k\" must be at least 1");
  return k;
}

int parse_vertex(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw ParseError(where + ": bad vertex id '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(where + ": bad vertex id '" + s + "'");
  }
}

EdgeSignature read_signature(const json& j, int k, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  EdgeSignature s;
  if (j.contains("default")) s.fallback = read_complex(j["default"], where + ".default");
  if (j.contains("entries")) {
    if (!j["entries"].is_array()) throw ParseError(where + ".entries: expected an array");
    for (const auto& e : j["entries"]) {
      if (!e.is_object() || !e.contains("counts") || !e.contains("value"))
        throw ParseError(where + ".entries: each entry needs \"counts\" and \"value\"");
      const auto& c = e["counts"];
      if (!c.is_array() || static_cast<int>(c.size()) != k)
        throw ParseError(where + ".entries: counts must have length " + std::to_string(k));
      std::vector<int> counts;
      for (const auto& x : c) {
        if (!x.is_number_integer() || x.get<int>() < 0)
          throw ParseError(where + ".entries: counts must be nonnegative integers");
        counts.push_back(x.get<int>());
      }
      s.values[counts] = read_complex(e["value"], where + ".entries.value");
    }
  }
  return s;
}

json write_signature(const EdgeSignature& s) {
  json j = json::object();
  if (s.fallback) j["default"] = write_complex(*s.fallback);
  json entries = json::array();
  for (const auto& [counts, value] : s.values)
    entries.push_back({{"counts", counts}, {"value", write_complex(value)}});
  j["entries"] = entries;
  return j;
}

}  // namespace

SpinSystem parse_spin_system(std::string_view json_text) {
  const json doc = parse_json(json_text);
  SpinSystem s;
  s.k = read_k(doc);
  s.default_matrix =
      doc.contains("default") ? read_matrix(doc["default"], s.k, "default") : SpinMatrix::ones(s.k);
  if (doc.contains("edges")) {
    if (!doc["edges"].is_object()) throw ParseError("\"edges\" must be an object");
    for (const auto& [key, value] : doc["edges"].items()) {
      const auto dash = key.find('-');
      if (dash == std::string::npos) throw ParseError("edge key '" + key + "' is not 'u-v'");
      const int u = parse_vertex(key.substr(0, dash), "edges");
      const int v = parse_vertex(key.substr(dash + 1), "edges");
      s.edge_matrices[std::minmax(u, v)] = read_matrix(value, s.k, "edges." + key);
    }
  }
  return s;
}

EdgeColoringSystem parse_edge_coloring_system(std::string_view json_text) {
  const json doc = parse_json(json_text);
  EdgeColoringSystem s;
  s.k = read_k(doc);
  s.shared = read_signature(doc, s.k, "model");
  if (doc.contains("per_vertex")) {
    if (!doc["per_vertex"].is_object()) throw ParseError("\"per_vertex\" must be an object");
    for (const auto& [key, value] : doc["per_vertex"].items()) {
      s.per_vertex[parse_vertex(key, "per_vertex")] =
          read_signature(value, s.k, "per_vertex." + key);
    }
  }
  return s;
}

SpinSystem read_spin_file(const std::filesystem::path& path) {
  return parse_spin_system(read_text_file(path));
}

EdgeColoringSystem read_edge_coloring_file(const std::filesystem::path& path) {
  return parse_edge_coloring_system(read_text_file(path));
}

std::string format_spin_system(const SpinSystem& s) {
  json doc = {{"k", s.k}, {"default", write_matrix(s.default_matrix)}};
  json edges = json::object();
  for (const auto& [key, m] : s.edge_matrices)
    edges[std::to_string(key.first) + "-" + std::to_string(key.second)] = write_matrix(m);
  doc["edges"] = edges;
  return doc.dump(2);
}

std::string format_edge_coloring_system(const EdgeColoringSystem& s) {
  json doc = write_signature(s.shared);
  doc["k"] = s.k;
  if (!s.per_vertex.empty()) {
    json pv = json::object();
    for (const auto& [v, sig] : s.per_vertex) pv[std::to_string(v)] = write_signature(sig);
    doc["per_vertex"] = pv;
  }
  return doc.dump(2);
}

}  // namespace bigcp
