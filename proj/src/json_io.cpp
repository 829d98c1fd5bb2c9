// Copyright 2026 The cpstar Authors
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

#include "cpstar/json_io.hpp"

#include <fstream>

namespace cpstar {

namespace {

[[noreturn]] void fail(const std::string& what) { throw JsonFormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t size_value(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::size_t size_field(const Json& j, const char* key) {
  return size_value(field(j, key), key);
}

std::vector<std::size_t> index_list(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) fail(std::string(key) + " must be an array");
  std::vector<std::size_t> out;
  for (const Json& v : a) out.push_back(size_value(v, key));
  return out;
}

// Carrier of an algebra: an integer, or a set object {"size", "labels"}.
std::size_t carrier_size(const Json& j) {
  if (j.is_object()) return finset_from_json(j).size();
  return size_value(j, "carrier");
}

template <class M>
FrobeniusAlgebra<M> algebra_parts(const Json& j, M (*parse)(const Json&)) {
  const std::size_t n = carrier_size(field(j, "carrier"));
  M mult = parse(field(j, "mult"));
  M unit = parse(field(j, "unit"));
  M z = Category<M>::identity(n);
  if (j.contains("normaliser") && !j.at("normaliser").is_null()) {
    z = parse(j.at("normaliser"));
  }
  FrobeniusAlgebra<M> alg{n, std::move(mult), std::move(unit), std::move(z)};
  try {
    check_shapes(alg);
  } catch (const DimensionError& e) {
    fail(e.what());
  }
  return alg;
}

template <class M>
Json algebra_json(const FrobeniusAlgebra<M>& alg) {
  return Json{{"backend", std::string(Category<M>::name)},
              {"carrier", alg.carrier},
              {"mult", to_json(alg.mult)},
              {"unit", to_json(alg.unit)},
              {"normaliser", to_json(alg.normaliser)}};
}

}  // namespace

Json to_json(const FinSet& s) {
  Json j{{"size", s.size()}};
  if (s.labels()) j["labels"] = *s.labels();
  return j;
}

Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [i, k] : r.pairs()) pairs.push_back({i, k});
  Json j{{"src", r.src()}, {"dst", r.dst()}, {"pairs", pairs}};
  if (r.src_set().labels()) j["src_labels"] = *r.src_set().labels();
  if (r.dst_set().labels()) j["dst_labels"] = *r.dst_set().labels();
  return j;
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const Complex& c : m.entries()) entries.push_back({c.real(), c.imag()});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const FrobeniusAlgebra<Relation>& alg) { return algebra_json(alg); }
Json to_json(const FrobeniusAlgebra<Matrix>& alg) { return algebra_json(alg); }

Json to_json(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return to_json(a); }, alg);
}

Json to_json(const Per& per) {
  Json pairs = Json::array();
  for (const auto& [i, k] : per.relation().pairs()) pairs.push_back({i, k});
  return Json{{"base", per.base()}, {"pairs", pairs}};
}

Json to_json(const CpmPer& per) {
  Json j = to_json(per.per());
  j["x_size"] = per.x_size();
  return j;
}

Json to_json(const SumObject& s) { return Json{{"summands", s.summands}}; }

Json to_json(const Groupoid& g) {
  const std::size_t n = g.morphisms();
  Json comp = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = g.then(a, b);
      if (c == Groupoid::kUndefined) {
        row.push_back(-1);
      } else {
        row.push_back(c);
      }
    }
    comp.push_back(row);
  }
  Json j{{"objects", g.objects}, {"morphisms", n}, {"dom", g.dom},
         {"cod", g.cod},         {"comp", comp},    {"inv", g.inv},
         {"ids", g.ids}};
  if (!g.morphism_labels.empty()) j["labels"] = g.morphism_labels;
  if (!g.name.empty()) j["name"] = g.name;
  return j;
}

Json to_json(const Report& r) {
  Json details = Json::array();
  for (const CheckResult& c : r.checks()) {
    Json d{{"check", c.name}, {"pass", c.pass}};
    if (c.residual) d["residual"] = *c.residual;
    details.push_back(d);
  }
  return Json{{"pass", r.pass()}, {"details", details}};
}

FinSet finset_from_json(const Json& j) {
  if (j.is_number_integer()) return FinSet(size_value(j, "size"));
  const std::size_t n = size_field(j, "size");
  if (!j.contains("labels") || j.at("labels").is_null()) return FinSet(n);
  try {
    return FinSet(n, j.at("labels").get<std::vector<std::string>>());
  } catch (const Json::exception& e) {
    fail(std::string("labels: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Relation relation_from_json(const Json& j) {
  FinSet src = finset_from_json(field(j, "src"));
  FinSet dst = finset_from_json(field(j, "dst"));
  if (j.contains("src_labels")) {
    src = finset_from_json(Json{{"size", src.size()},
                                {"labels", j.at("src_labels")}});
  }
  if (j.contains("dst_labels")) {
    dst = finset_from_json(Json{{"size", dst.size()},
                                {"labels", j.at("dst_labels")}});
  }
  Relation r(src, dst);
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("pairs must be an array");
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2) fail("each pair must be [i, j]");
    const std::size_t a = size_value(p[0], "pair index");
    const std::size_t b = size_value(p[1], "pair index");
    if (a >= r.src() || b >= r.dst()) fail("pair index out of range");
    r.insert(a, b);
  }
  return r;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows * cols) {
    fail("entries must list rows*cols values");
  }
  std::vector<Complex> entries;
  entries.reserve(e.size());
  for (const Json& v : e) {
    if (v.is_number()) {
      entries.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() &&
               v[1].is_number()) {
      entries.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      fail("matrix entry must be a number or [re, im]");
    }
  }
  try {
    return Matrix(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& ex) {
    fail(ex.what());
  }
}

AnyAlgebra algebra_from_json(const Json& j) {
  const Json& b = field(j, "backend");
  if (!b.is_string()) fail("backend must be a string");
  const std::string backend = b.get<std::string>();
  if (backend == "rel") return algebra_parts<Relation>(j, relation_from_json);
  if (backend == "fhilb") return algebra_parts<Matrix>(j, matrix_from_json);
  fail("unknown backend \"" + backend + "\"");
}

Per per_from_json(const Json& j) {
  const std::size_t base = size_field(j, "base");
  Relation r =
      relation_from_json(Json{{"src", base}, {"dst", base}, {"pairs", field(j, "pairs")}});
  try {
    return Per(std::move(r));
  } catch (const PreconditionError& e) {
    fail(e.what());
  }
}

CpmPer cpm_per_from_json(const Json& j) {
  const std::size_t x = size_field(j, "x_size");
  const std::size_t base = size_field(j, "base");
  if (base != x * x) fail("base must equal x_size squared");
  Relation r =
      relation_from_json(Json{{"src", base}, {"dst", base}, {"pairs", field(j, "pairs")}});
  try {
    return CpmPer(x, std::move(r));
  } catch (const PreconditionError& e) {
    fail(e.what());
  }
}

SumObject sum_object_from_json(const Json& j) {
  const Json& s = field(j, "summands");
  if (!s.is_array()) fail("summands must be an array");
  SumObject out;
  for (const Json& v : s) {
    out.summands.push_back(v.is_object() ? finset_from_json(v).size()
                                         : size_value(v, "summand"));
  }
  return out;
}

Groupoid groupoid_from_json(const Json& j) {
  Groupoid g;
  g.objects = size_field(j, "objects");
  const std::size_t n = size_field(j, "morphisms");
  g.dom = index_list(j, "dom");
  g.cod = index_list(j, "cod");
  g.inv = index_list(j, "inv");
  g.ids = index_list(j, "ids");
  if (g.dom.size() != n || g.cod.size() != n || g.inv.size() != n) {
    fail("dom, cod and inv must have one entry per morphism");
  }
  if (g.ids.size() != g.objects) fail("ids must have one entry per object");
  const Json& comp = field(j, "comp");
  if (!comp.is_array() || comp.size() != n) fail("comp must be n rows");
  for (const Json& row : comp) {
    if (!row.is_array() || row.size() != n) fail("comp must be n×n");
    for (const Json& v : row) {
      if (v.is_number_integer() && v.get<long long>() == -1) {
        g.comp.push_back(Groupoid::kUndefined);
      } else {
        g.comp.push_back(size_value(v, "comp entry"));
      }
    }
  }
  if (j.contains("labels")) {
    g.morphism_labels = j.at("labels").get<std::vector<std::string>>();
  }
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  if (!groupoid_check(g)) fail("groupoid axioms fail");
  return g;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace cpstar
