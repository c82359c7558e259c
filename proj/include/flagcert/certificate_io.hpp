// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON certificate format and report serialisation.
//
//   { "name": str,
//     "template": {"parts": [a, b]},
//     "target": GRAPH,
//     "classes": [GRAPH, ...],                       (optional)
//     "base": {"4": "1/6", ...},
//     "families": [{"root_edge_color": "R"|"B", "flags": [FLAG, ...],
//                   "matrix": [[RAT, ...], ...]}],
//     "bound": RAT,
//     "strict_base": bool }                           (optional, default true)
//
//   GRAPH = {"n": int, "edges": [[u, v, "R"|"B"], ...]}, u < v, pairs strictly
//           increasing; FLAG = GRAPH plus "roots": [r1, r2]; RAT = canonical
//           "p/q" or integer string.
//
// Unknown keys are rejected. Every error names the offending JSON path.

#ifndef FLAGCERT_CERTIFICATE_IO_HPP_
#define FLAGCERT_CERTIFICATE_IO_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flagcert/certificate.hpp"

namespace flagcert {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline void expect_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                        std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) throw SchemaError(path, "missing field \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) throw SchemaError(path, "unknown field \"" + key + "\"");
  }
}

inline int read_int(const Json& j, const std::string& path, int lo, int hi) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) {
    throw SchemaError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

inline Rational read_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "rational must be a string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

inline Color read_color(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "colour must be \"R\" or \"B\"");
  const auto s = j.get<std::string>();
  if (s == "R") return Color::Red;
  if (s == "B") return Color::Blue;
  throw SchemaError(path, "colour must be \"R\" or \"B\", got \"" + s + "\"");
}

/// Vertex counts in files are bounded well above anything the engine uses.
inline constexpr int kMaxFileVertices = 64;

inline ColoredGraph read_graph_body(const Json& j, const std::string& path) {
  const int n = read_int(j.at("n"), path + ".n", 0, kMaxFileVertices);
  const auto& edges = j.at("edges");
  if (!edges.is_array()) throw SchemaError(path + ".edges", "expected an array");
  ColoredGraph g(n);
  std::pair<int, int> previous{-1, -1};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string ep = path + ".edges[" + std::to_string(k) + "]";
    const auto& e = edges[k];
    if (!e.is_array() || e.size() != 3) throw SchemaError(ep, "edge must be [u, v, colour]");
    const int u = read_int(e[0], ep + "[0]", 0, n - 1);
    const int v = read_int(e[1], ep + "[1]", 0, n - 1);
    if (u >= v) throw SchemaError(ep, "edge endpoints must satisfy u < v");
    if (std::pair{u, v} <= previous) throw SchemaError(ep, "edge pairs must be strictly increasing");
    previous = {u, v};
    g.set_edge(u, v, read_color(e[2], ep + "[2]"));
  }
  return g;
}

inline ColoredGraph read_graph(const Json& j, const std::string& path) {
  expect_keys(j, path, {"n", "edges"});
  return read_graph_body(j, path);
}

inline Flag read_flag(const Json& j, const std::string& path) {
  expect_keys(j, path, {"n", "edges", "roots"});
  auto g = read_graph_body(j, path);
  const auto& roots = j.at("roots");
  if (!roots.is_array()) throw SchemaError(path + ".roots", "expected an array");
  if (roots.size() > kMaxRoots) throw SchemaError(path + ".roots", "at most two roots are supported");
  std::vector<Vertex> r;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const int v = read_int(roots[k], path + ".roots[" + std::to_string(k) + "]", 0, g.n() - 1);
    for (Vertex w : r) {
      if (w == v) throw SchemaError(path + ".roots", "duplicate root " + std::to_string(v));
    }
    r.push_back(v);
  }
  return Flag(std::move(g), std::move(r));
}

inline Json write_graph(const ColoredGraph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, std::string(1, color_letter(e.color))}));
  j["edges"] = std::move(edges);
  return j;
}

inline Json write_flag(const Flag& f) {
  Json j = write_graph(f.graph);
  j["roots"] = f.roots;
  return j;
}

}  // namespace detail

inline Certificate certificate_from_json(const Json& j) {
  using namespace detail;
  expect_keys(j, "$", {"name", "template", "target", "base", "families", "bound"}, {"classes", "strict_base"});
  Certificate cert;
  if (!j["name"].is_string()) throw SchemaError("$.name", "expected a string");
  cert.name = j["name"].get<std::string>();

  expect_keys(j["template"], "$.template", {"parts"});
  const auto& parts = j["template"]["parts"];
  if (!parts.is_array() || parts.size() != 2) throw SchemaError("$.template.parts", "expected [a, b]");
  cert.template_parts = {read_int(parts[0], "$.template.parts[0]", 1, kMaxSearchVertices),
                         read_int(parts[1], "$.template.parts[1]", 1, kMaxSearchVertices)};
  if (cert.template_parts[0] + cert.template_parts[1] > kMaxSearchVertices) {
    throw SchemaError("$.template.parts", "template larger than " + std::to_string(kMaxSearchVertices) + " vertices");
  }
  if (cert.template_parts[0] * cert.template_parts[1] > kMaxTemplateEdges) {
    throw SchemaError("$.template.parts", "template has more than " + std::to_string(kMaxTemplateEdges) + " edges");
  }

  cert.target = read_graph(j["target"], "$.target");

  if (j.contains("classes")) {
    const auto& cls = j["classes"];
    if (!cls.is_array()) throw SchemaError("$.classes", "expected an array");
    std::vector<ColoredGraph> classes;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      classes.push_back(read_graph(cls[k], "$.classes[" + std::to_string(k) + "]"));
    }
    cert.classes = std::move(classes);
  }

  const auto& base = j["base"];
  if (!base.is_object()) throw SchemaError("$.base", "expected an object keyed by class index");
  for (const auto& [key, value] : base.items()) {
    const std::string bp = "$.base[\"" + key + "\"]";
    int l = 0;
    const bool digits = !key.empty() && key.size() <= 4 && key.front() != '0' &&
                        key.find_first_not_of("0123456789") == std::string::npos;
    if (digits) l = std::stoi(key);
    if (l < 1) throw SchemaError(bp, "class index must be a positive integer");
    const auto v = read_rational(value, bp);
    if (v.sign() < 0) throw SchemaError(bp, "base coefficients must be nonnegative");
    cert.base[l] = v;
  }

  const auto& families = j["families"];
  if (!families.is_array()) throw SchemaError("$.families", "expected an array");
  for (std::size_t f = 0; f < families.size(); ++f) {
    const std::string fp = "$.families[" + std::to_string(f) + "]";
    expect_keys(families[f], fp, {"root_edge_color", "flags", "matrix"});
    FlagFamily family;
    family.root_edge_color = read_color(families[f]["root_edge_color"], fp + ".root_edge_color");
    const auto& flags = families[f]["flags"];
    if (!flags.is_array()) throw SchemaError(fp + ".flags", "expected an array");
    for (std::size_t k = 0; k < flags.size(); ++k) {
      family.flags.push_back(read_flag(flags[k], fp + ".flags[" + std::to_string(k) + "]"));
    }
    const auto& matrix = families[f]["matrix"];
    if (!matrix.is_array()) throw SchemaError(fp + ".matrix", "expected an array of rows");
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      const std::string rp = fp + ".matrix[" + std::to_string(r) + "]";
      if (!matrix[r].is_array()) throw SchemaError(rp, "expected an array");
      RationalVector row;
      for (std::size_t c = 0; c < matrix[r].size(); ++c) {
        row.push_back(read_rational(matrix[r][c], rp + "[" + std::to_string(c) + "]"));
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() != family.flags.size()) {
      throw SchemaError(fp + ".matrix", "matrix has " + std::to_string(rows.size()) + " rows for " +
                                            std::to_string(family.flags.size()) + " flags");
    }
    try {
      family.matrix = SymMatrix(rows);
    } catch (const std::exception& e) {
      throw SchemaError(fp + ".matrix", e.what());
    }
    cert.families.push_back(std::move(family));
  }

  cert.bound = read_rational(j["bound"], "$.bound");
  if (j.contains("strict_base")) {
    if (!j["strict_base"].is_boolean()) throw SchemaError("$.strict_base", "expected a boolean");
    cert.strict_base = j["strict_base"].get<bool>();
  }
  return cert;
}

/// Parses certificate text; syntax errors become SchemaError with the byte offset.
inline Certificate load_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$ (byte " + std::to_string(e.byte) + ")", "malformed JSON");
  }
  return certificate_from_json(j);
}

inline Json certificate_to_json(const Certificate& cert) {
  using namespace detail;
  Json j;
  j["name"] = cert.name;
  j["template"] = {{"parts", cert.template_parts}};
  j["target"] = write_graph(cert.target);
  if (cert.classes) {
    Json cls = Json::array();
    for (const auto& g : *cert.classes) cls.push_back(write_graph(g));
    j["classes"] = std::move(cls);
  }
  Json base = Json::object();
  for (const auto& [l, v] : cert.base) base[std::to_string(l)] = v.to_string();
  j["base"] = std::move(base);
  Json families = Json::array();
  for (const auto& family : cert.families) {
    Json fj;
    fj["root_edge_color"] = std::string(1, color_letter(family.root_edge_color));
    Json flags = Json::array();
    for (const auto& f : family.flags) flags.push_back(write_flag(f));
    fj["flags"] = std::move(flags);
    Json matrix = Json::array();
    for (const auto& row : family.matrix.rows()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      matrix.push_back(std::move(r));
    }
    fj["matrix"] = std::move(matrix);
    families.push_back(std::move(fj));
  }
  j["families"] = std::move(families);
  j["bound"] = cert.bound.to_string();
  if (!cert.strict_base) j["strict_base"] = false;
  return j;
}

inline std::string save_certificate(const Certificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

}  // namespace flagcert

#endif  // FLAGCERT_CERTIFICATE_IO_HPP_
