// Copyright 2026 The nclp Authors. All Rights Reserved.
//
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

// JSON readers and writers. Every reader error names the offending path,
// e.g. "$.entries[1][0].blocks[0]: expected an array of rows".
//
//   Algebra  {"blocks": [{"dim": 2, "weight": 1.0}, ...]}   weight defaults to 1
//   Element  {"algebra": A, "blocks": [[[re, im] | re, ...], ...]}
//   Grid     {"n": 2, "algebra": A, "entries": [[Element, ...], ...]}
//            {"kind": "matrix-units", "algebra": A, "n": 2, "transposed": false, "block": 0}
//   Map      {"dom": A, "cod": A, "matrix": [[c, ...], ...], "provenance": "transpose"}
//            or a constructor {"kind": ..., ...}, see read_map.

#ifndef NCLP_JSON_IO_HPP_
#define NCLP_JSON_IO_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nclp/algebra.hpp"
#include "nclp/grid.hpp"
#include "nclp/lp_map.hpp"
#include "nclp/maps.hpp"
#include "nclp/vector_valued.hpp"
#include "nclp/yeadon.hpp"

namespace nclp {

using json = nlohmann::json;

// Malformed input; the message starts with the JSON path.
class json_error : public structural_error {
 public:
  using structural_error::structural_error;
};

namespace detail {

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& value() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw json_error(path_ + ": " + what); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing key '") + key + "'");
    return Reader(j_.at(key), path_ + "." + key);
  }

  Reader at(std::size_t i) const {
    if (!j_.is_array()) fail("expected an array");
    if (i >= j_.size()) fail("index " + std::to_string(i) + " out of range");
    return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    return j_.get<double>();
  }

  int integer() const {
    if (!j_.is_number()) fail("expected an integer");
    const double v = j_.get<double>();
    if (std::floor(v) != v) fail("expected an integer");
    return static_cast<int>(v);
  }

  bool boolean() const {
    if (!j_.is_boolean()) fail("expected true or false");
    return j_.get<bool>();
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  cplx complex() const {
    if (j_.is_number()) return {j_.get<double>(), 0.0};
    if (j_.is_array() && j_.size() == 2) return {at(std::size_t{0}).number(), at(std::size_t{1}).number()};
    fail("expected a number or [re, im]");
  }

  // Rethrows library errors with this node's path.
  template <typename F>
  auto guard(F f) const -> decltype(f()) {
    try {
      return f();
    } catch (const json_error&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
};

inline Mat read_matrix(const Reader& r) {
  const std::size_t rows = r.size();
  if (rows == 0) r.fail("expected a nonempty array of rows");
  const std::size_t cols = r.at(std::size_t{0}).size();
  Mat m = Mat::Zero(Eigen::Index(rows), Eigen::Index(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Reader row = r.at(i);
    if (row.size() != cols) row.fail("rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) m(Eigen::Index(i), Eigen::Index(j)) = row.at(j).complex();
  }
  return m;
}

inline Algebra read_algebra(const Reader& r) {
  const Reader blocks = r.at("blocks");
  std::vector<Block> out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Reader b = blocks.at(k);
    const int dim = b.at("dim").integer();
    const double weight = b.has("weight") ? b.at("weight").number() : 1.0;
    out.push_back({dim, weight});
  }
  return r.guard([&] { return Algebra(std::move(out)); });
}

inline Element read_element(const Reader& r, const Algebra* fallback = nullptr) {
  Algebra a;
  if (r.has("algebra")) {
    a = read_algebra(r.at("algebra"));
  } else if (fallback) {
    a = *fallback;
  } else {
    r.fail("missing key 'algebra'");
  }
  const Reader blocks = r.at("blocks");
  std::vector<Mat> mats;
  for (std::size_t k = 0; k < blocks.size(); ++k) mats.push_back(read_matrix(blocks.at(k)));
  return r.guard([&] { return Element(a, std::move(mats)); });
}

inline GridElement read_grid(const Reader& r) {
  const Algebra a = read_algebra(r.at("algebra"));
  const int n = r.at("n").integer();
  if (n < 1) r.at("n").fail("grid size must be >= 1");
  if (r.has("kind")) {
    const std::string kind = r.at("kind").string();
    if (kind != "matrix-units") r.at("kind").fail("unknown grid kind '" + kind + "'");
    const bool tr = r.has("transposed") && r.at("transposed").boolean();
    const int block = r.has("block") ? r.at("block").integer() : 0;
    if (block < 0 || std::size_t(block) >= a.num_blocks()) r.at("block").fail("no such block");
    return r.guard([&] { return matrix_unit_grid(a, n, tr, std::size_t(block)); });
  }
  const Reader rows = r.at("entries");
  if (rows.size() != std::size_t(n)) rows.fail("expected " + std::to_string(n) + " rows");
  std::vector<Element> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Reader row = rows.at(i);
    if (row.size() != std::size_t(n)) row.fail("expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < row.size(); ++j) {
      Element e = read_element(row.at(j), &a);
      if (!(e.algebra() == a)) row.at(j).fail("entry algebra differs from the grid algebra");
      entries.push_back(std::move(e));
    }
  }
  return r.guard([&] { return GridElement(a, n, std::move(entries)); });
}

inline Algebra read_algebra_or_n(const Reader& r) {
  if (r.has("algebra")) return read_algebra(r.at("algebra"));
  const int n = r.at("n").integer();
  return r.guard([&] { return Algebra::matrices(n); });
}

inline LpMap read_map(const Reader& r);

inline IsometrySpec read_isometry_spec(const Reader& r) {
  IsometrySpec spec;
  spec.dom = read_algebra_or_n(r);
  spec.p = r.at("p").number();
  const Reader parts = r.at("parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Reader part = parts.at(i);
    IsometryPart ip;
    ip.anti = part.has("anti") && part.at("anti").boolean();
    ip.b = read_element(part.at("b"));
    spec.parts.push_back(std::move(ip));
  }
  if (r.has("unitary")) spec.unitary = read_element(r.at("unitary"));
  return spec;
}

// Constructor kinds:
//   identity | transpose          {"n"} or {"algebra"}
//   conjugation                   {"a": Element, "b": Element}
//   tensor-embed                  {"dom": A, "b": Element}
//   direct-sum | stack | compose  {"first": Map, "second": Map}  (compose: first o second)
//   scale                         {"c": number or [re, im], "map": Map}
//   amplify                       {"map": Map, "m": int}
//   projection                    {"algebra": A, "first": k, "count": c}
//   isometry                      {"n" | "algebra", "p", "parts": [{"anti": bool, "b": Element}], "unitary"?}
inline LpMap read_map_kind(const Reader& r) {
  const std::string kind = r.at("kind").string();
  if (kind == "identity") return identity_map(read_algebra_or_n(r));
  if (kind == "transpose") return transpose_map(read_algebra_or_n(r));
  if (kind == "conjugation") {
    const Element a = read_element(r.at("a")), b = read_element(r.at("b"));
    return r.guard([&] { return conjugation_map(a, b); });
  }
  if (kind == "tensor-embed") return embed_tensor(read_algebra(r.at("dom")), read_element(r.at("b")));
  if (kind == "direct-sum" || kind == "stack" || kind == "compose") {
    const LpMap s = read_map(r.at("first")), t = read_map(r.at("second"));
    return r.guard([&] {
      if (kind == "direct-sum") return direct_sum_map(s, t);
      if (kind == "stack") return stack_maps(s, t);
      return compose(s, t);
    });
  }
  if (kind == "scale") return scale(r.at("c").complex(), read_map(r.at("map")));
  if (kind == "amplify") {
    const LpMap t = read_map(r.at("map"));
    const int m = r.at("m").integer();
    return r.guard([&] { return amplify_sp(t, m); });
  }
  if (kind == "projection") {
    const Algebra a = read_algebra(r.at("algebra"));
    const int first = r.at("first").integer(), count = r.at("count").integer();
    if (first < 0 || count < 1) r.fail("bad block range");
    return r.guard([&] { return summand_projection(a, std::size_t(first), std::size_t(count)); });
  }
  if (kind == "isometry") {
    const IsometrySpec spec = read_isometry_spec(r);
    return r.guard([&] { return generate_isometry(spec).map; });
  }
  r.at("kind").fail("unknown map kind '" + kind + "'");
}

inline LpMap read_map(const Reader& r) {
  if (r.has("kind")) return read_map_kind(r);
  const Algebra dom = read_algebra(r.at("dom"));
  const Algebra cod = read_algebra(r.at("cod"));
  const Mat m = read_matrix(r.at("matrix"));
  Provenance prov = Provenance::kNone;
  if (r.has("provenance")) {
    const Reader pr = r.at("provenance");
    prov = pr.guard([&] { return provenance_from_string(pr.string()); });
  }
  return r.guard([&] { return LpMap(dom, cod, m, prov); });
}

}  // namespace detail

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw json_error(std::string("$: ") + e.what());
  }
}

inline Algebra algebra_from_json(const json& j) { return detail::read_algebra(detail::Reader(j, "$")); }
inline Element element_from_json(const json& j) { return detail::read_element(detail::Reader(j, "$")); }
inline GridElement grid_from_json(const json& j) { return detail::read_grid(detail::Reader(j, "$")); }
inline LpMap map_from_json(const json& j) { return detail::read_map(detail::Reader(j, "$")); }
inline IsometrySpec isometry_spec_from_json(const json& j) {
  return detail::read_isometry_spec(detail::Reader(j, "$"));
}

inline json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const Algebra& a) {
  json blocks = json::array();
  for (const Block& b : a.blocks()) blocks.push_back({{"dim", b.dim}, {"weight", b.weight}});
  return {{"blocks", std::move(blocks)}};
}

inline json to_json(const Element& x) {
  json blocks = json::array();
  for (const Mat& b : x.blocks()) blocks.push_back(to_json(b));
  return {{"algebra", to_json(x.algebra())}, {"blocks", std::move(blocks)}};
}

inline json to_json(const GridElement& g) {
  json rows = json::array();
  for (int i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.n(); ++j) {
      json e = to_json(g(i, j));
      e.erase("algebra");
      row.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", g.n()}, {"algebra", to_json(g.algebra())}, {"entries", std::move(rows)}};
}

inline json to_json(const LpMap& t) {
  return {{"dom", to_json(t.dom())},
          {"cod", to_json(t.cod())},
          {"matrix", to_json(t.matrix())},
          {"provenance", std::string(to_string(t.provenance()))}};
}

inline json to_json(const Check& c) { return {{"name", c.name}, {"defect", c.defect}, {"pass", c.pass}}; }

inline json to_json(const YeadonTriple& t) {
  return {{"w", to_json(t.w)}, {"B", to_json(t.b)}, {"J", to_json(t.j)},
          {"e", to_json(t.e)}, {"f", to_json(t.f)}, {"verdict", std::string(to_string(t.verdict))}};
}

inline json to_json(const Extraction& ex) {
  json checks = json::array();
  for (const Check& c : ex.checks) checks.push_back(to_json(c));
  json out = {{"separating", ex.triple.has_value()}, {"checks", std::move(checks)}, {"consistent", ex.consistent}};
  if (ex.triple) {
    out["verdict"] = std::string(to_string(ex.triple->verdict));
    out["triple"] = to_json(*ex.triple);
  } else {
    out["verdict"] = std::string(to_string(Verdict::kNotSeparating));
    out["failure"] = ex.failure;
  }
  if (ex.witness)
    out["witness"] = {{"x", to_json(ex.witness->x)}, {"y", to_json(ex.witness->y)}, {"violation", ex.witness->violation}};
  return out;
}

inline json to_json(const GateReport& g) {
  json assertions = json::array();
  for (const Check& c : g.assertions) assertions.push_back({{"name", c.name}, {"pass", c.pass}});
  return {{"verdict", std::string(to_string(g.verdict))},
          {"s1_2", g.s1_2},
          {"amp2", g.amp2},
          {"assertions", std::move(assertions)},
          {"pass", g.pass}};
}

inline json to_json(const Factorization& f) {
  auto family = [](const std::vector<Element>& v, int rows, int cols) {
    json out = json::array();
    for (int i = 0; i < rows; ++i) {
      json row = json::array();
      for (int k = 0; k < cols; ++k) row.push_back(to_json(v[std::size_t(i * cols + k)]));
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"m", f.m}, {"a", family(f.a, f.n, f.m)}, {"b", family(f.b, f.m, f.n)}};
}

}  // namespace nclp

#endif  // NCLP_JSON_IO_HPP_
