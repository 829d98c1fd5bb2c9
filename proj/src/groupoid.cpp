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

#include "cpstar/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cpstar/cp.hpp"
#include "cpstar/errors.hpp"
#include "cpstar/per.hpp"

namespace cpstar {

// ---------------------------------------------------------------------------
// Groups

Group cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order 0");
  Group g{"Z" + std::to_string(n), n, std::vector<std::size_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  }
  return g;
}

// Element r^k s^e is encoded k + n·e.
Group dihedral_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral_group: n = 0");
  const std::size_t order = 2 * n;
  Group g{"D" + std::to_string(n), order,
          std::vector<std::size_t>(order * order)};
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x % n, e = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y % n, f = y / n;
      const std::size_t rot = e == 0 ? (k + l) % n : (k + n - l) % n;
      g.table[x * order + y] = rot + n * ((e + f) % 2);
    }
  }
  return g;
}

// Element a^k x^e with a of order 2n, x² = a^n, x a x⁻¹ = a⁻¹; encoded
// k + 2n·e.
Group dicyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dicyclic_group: n = 0");
  const std::size_t m = 2 * n, order = 4 * n;
  Group g{n == 2 ? "Q8" : "Dic" + std::to_string(n), order,
          std::vector<std::size_t>(order * order)};
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x % m, e = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t l = y % m, f = y / m;
      std::size_t out;
      if (e == 0) {
        out = (k + l) % m + m * f;
      } else if (f == 0) {
        out = (k + m - l) % m + m;
      } else {
        out = (k + m - l + n) % m;
      }
      g.table[x * order + y] = out;
    }
  }
  return g;
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t order = a.order * b.order;
  Group g{a.name + "x" + b.name, order,
          std::vector<std::size_t>(order * order)};
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      g.table[x * order + y] = a.mul(x / b.order, y / b.order) * b.order +
                               b.mul(x % b.order, y % b.order);
    }
  }
  return g;
}

const std::vector<Group>& groups_of_order(std::size_t order) {
  static const std::vector<std::vector<Group>> table = [] {
    std::vector<std::vector<Group>> t(kMaxTabulatedGroupOrder + 1);
    for (std::size_t n = 1; n <= kMaxTabulatedGroupOrder; ++n) {
      t[n].push_back(cyclic_group(n));
    }
    const Group z2 = cyclic_group(2), z3 = cyclic_group(3);
    const Group z4 = cyclic_group(4);
    t[4].push_back(direct_product(z2, z2));
    t[6].push_back(dihedral_group(3));
    t[8].push_back(direct_product(z4, z2));
    t[8].push_back(direct_product(direct_product(z2, z2), z2));
    t[8].push_back(dihedral_group(4));
    t[8].push_back(dicyclic_group(2));
    t[9].push_back(direct_product(z3, z3));
    t[10].push_back(dihedral_group(5));
    return t;
  }();
  if (order == 0 || order > kMaxTabulatedGroupOrder) {
    throw std::out_of_range("groups_of_order: order " + std::to_string(order) +
                            " not tabulated");
  }
  return table[order];
}

// ---------------------------------------------------------------------------
// Groupoids

namespace {

constexpr std::size_t kU = Groupoid::kUndefined;

// Fills inv from comp and ids.
void fill_inverses(Groupoid& g) {
  const std::size_t n = g.morphisms();
  g.inv.assign(n, kU);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.dom[a] == g.cod[b] && g.dom[b] == g.cod[a] &&
          g.then(a, b) == g.ids[g.cod[a]]) {
        g.inv[a] = b;
        break;
      }
    }
  }
}

}  // namespace

Report groupoid_check(const Groupoid& g) {
  Report r;
  const std::size_t n = g.morphisms();
  const std::size_t k = g.objects;
  bool shapes = g.cod.size() == n && g.comp.size() == n * n &&
                g.ids.size() == k && g.inv.size() == n;
  for (std::size_t i = 0; shapes && i < n; ++i) {
    shapes = g.dom[i] < k && g.cod[i] < k && g.inv[i] < n;
  }
  for (std::size_t x = 0; shapes && x < k; ++x) shapes = g.ids[x] < n;
  r.add("shapes", shapes);
  if (!shapes) return r;

  bool pattern = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = g.then(a, b);
      if (g.composable(a, b)) {
        pattern = pattern && c < n && g.dom[c] == g.dom[b] &&
                  g.cod[c] == g.cod[a];
      } else {
        pattern = pattern && c == kU;
      }
    }
  }
  r.add("composition-defined-exactly-on-composable-pairs", pattern);
  if (!pattern) return r;

  bool identities = true;
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t e = g.ids[x];
    identities = identities && g.dom[e] == x && g.cod[e] == x;
  }
  for (std::size_t a = 0; identities && a < n; ++a) {
    identities = g.then(a, g.ids[g.dom[a]]) == a &&
                 g.then(g.ids[g.cod[a]], a) == a;
  }
  r.add("identities", identities);

  bool assoc = true;
  for (std::size_t a = 0; assoc && a < n; ++a) {
    for (std::size_t b = 0; assoc && b < n; ++b) {
      if (!g.composable(a, b)) continue;
      for (std::size_t c = 0; assoc && c < n; ++c) {
        if (!g.composable(b, c)) continue;
        assoc = g.then(g.then(a, b), c) == g.then(a, g.then(b, c));
      }
    }
  }
  r.add("associativity", assoc);

  bool inverses = true;
  for (std::size_t a = 0; inverses && a < n; ++a) {
    const std::size_t i = g.inv[a];
    inverses = g.dom[i] == g.cod[a] && g.cod[i] == g.dom[a] &&
               g.then(i, a) == g.ids[g.dom[a]] &&
               g.then(a, i) == g.ids[g.cod[a]];
  }
  r.add("inverses", inverses);
  return r;
}

Groupoid trivial_groupoid() { return indiscrete_groupoid(1); }

Groupoid group_groupoid(const Group& group) {
  Groupoid g;
  const std::size_t n = group.order;
  g.objects = 1;
  g.dom.assign(n, 0);
  g.cod.assign(n, 0);
  g.comp = group.table;
  g.ids = {0};
  g.name = group.name;
  fill_inverses(g);
  return g;
}

Groupoid indiscrete_groupoid(std::size_t k) {
  Groupoid g;
  const std::size_t n = k * k;
  g.objects = k;
  g.dom.resize(n);
  g.cod.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    g.cod[m] = m / k;
    g.dom[m] = m % k;
  }
  g.comp.assign(n * n, kU);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.dom[a] == g.cod[b]) g.comp[a * n + b] = g.cod[a] * k + g.dom[b];
    }
  }
  g.ids.resize(k);
  g.inv.resize(n);
  for (std::size_t x = 0; x < k; ++x) g.ids[x] = x * k + x;
  for (std::size_t m = 0; m < n; ++m) g.inv[m] = g.dom[m] * k + g.cod[m];
  g.name = "I" + std::to_string(k);
  return g;
}

Groupoid discrete_groupoid(std::size_t k) {
  Groupoid g;
  g.objects = k;
  for (std::size_t x = 0; x < k; ++x) {
    g.dom.push_back(x);
    g.cod.push_back(x);
    g.ids.push_back(x);
    g.inv.push_back(x);
  }
  g.comp.assign(k * k, kU);
  for (std::size_t x = 0; x < k; ++x) g.comp[x * k + x] = x;
  g.name = "Disc" + std::to_string(k);
  return g;
}

Groupoid product_groupoid(const Groupoid& a, const Groupoid& b) {
  Groupoid g;
  const std::size_t na = a.morphisms(), nb = b.morphisms();
  const std::size_t n = na * nb;
  g.objects = a.objects * b.objects;
  g.dom.resize(n);
  g.cod.resize(n);
  g.inv.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t ma = m / nb, mb = m % nb;
    g.dom[m] = a.dom[ma] * b.objects + b.dom[mb];
    g.cod[m] = a.cod[ma] * b.objects + b.cod[mb];
    g.inv[m] = a.inv[ma] * nb + b.inv[mb];
  }
  g.comp.assign(n * n, kU);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t ca = a.then(x / nb, y / nb);
      const std::size_t cb = b.then(x % nb, y % nb);
      if (ca != kU && cb != kU) g.comp[x * n + y] = ca * nb + cb;
    }
  }
  g.ids.resize(g.objects);
  for (std::size_t o = 0; o < g.objects; ++o) {
    g.ids[o] = a.ids[o / b.objects] * nb + b.ids[o % b.objects];
  }
  g.name = a.name + " x " + b.name;
  return g;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  Groupoid g;
  const std::size_t na = a.morphisms(), nb = b.morphisms();
  const std::size_t n = na + nb;
  g.objects = a.objects + b.objects;
  g.dom = a.dom;
  g.cod = a.cod;
  g.inv = a.inv;
  g.ids = a.ids;
  for (std::size_t m = 0; m < nb; ++m) {
    g.dom.push_back(b.dom[m] + a.objects);
    g.cod.push_back(b.cod[m] + a.objects);
    g.inv.push_back(b.inv[m] + na);
  }
  for (std::size_t x = 0; x < b.objects; ++x) g.ids.push_back(b.ids[x] + na);
  g.comp.assign(n * n, kU);
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < na; ++y) g.comp[x * n + y] = a.then(x, y);
  }
  for (std::size_t x = 0; x < nb; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t c = b.then(x, y);
      g.comp[(x + na) * n + (y + na)] = c == kU ? kU : c + na;
    }
  }
  if (!a.morphism_labels.empty() && !b.morphism_labels.empty()) {
    g.morphism_labels = a.morphism_labels;
    g.morphism_labels.insert(g.morphism_labels.end(),
                             b.morphism_labels.begin(),
                             b.morphism_labels.end());
  }
  if (a.morphisms() == 0) {
    g.name = b.name;
  } else if (b.morphisms() == 0) {
    g.name = a.name;
  } else {
    g.name = a.name + " + " + b.name;
  }
  return g;
}

Groupoid relabel(const Groupoid& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.morphisms();
  if (perm.size() != n) throw DimensionError("relabel: permutation size");
  std::vector<bool> hit(n, false);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) throw std::invalid_argument("relabel: not a bijection");
    hit[p] = true;
  }
  Groupoid out;
  out.objects = g.objects;
  out.dom.resize(n);
  out.cod.resize(n);
  out.inv.resize(n);
  out.comp.assign(n * n, kU);
  for (std::size_t m = 0; m < n; ++m) {
    out.dom[perm[m]] = g.dom[m];
    out.cod[perm[m]] = g.cod[m];
    out.inv[perm[m]] = perm[g.inv[m]];
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = g.then(a, b);
      if (c != kU) out.comp[perm[a] * n + perm[b]] = perm[c];
    }
  }
  out.ids.resize(g.objects);
  for (std::size_t x = 0; x < g.objects; ++x) out.ids[x] = perm[g.ids[x]];
  out.name = g.name;
  if (!g.morphism_labels.empty()) {
    out.morphism_labels.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
      out.morphism_labels[perm[m]] = g.morphism_labels[m];
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Groupoid& a,
                                                         const Groupoid& b) {
  const std::size_t n = a.morphisms();
  if (n != b.morphisms() || a.objects != b.objects) return std::nullopt;

  // Identities first, so the object bijection is fixed early.
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < n; ++m) {
    if (a.is_identity(m)) order.push_back(m);
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (!a.is_identity(m)) order.push_back(m);
  }

  std::vector<std::size_t> f(n, kU), obj(a.objects, kU);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> obj_from(b.objects, kU);

  auto bind_object = [&](std::size_t x, std::size_t y,
                         std::vector<std::size_t>& bound) {
    if (obj[x] == kU) {
      if (obj_from[y] != kU) return false;
      obj[x] = y;
      obj_from[y] = x;
      bound.push_back(x);
      return true;
    }
    return obj[x] == y;
  };

  auto full_check = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t c = a.then(x, y);
        const std::size_t d = b.then(f[x], f[y]);
        if ((c == kU) != (d == kU)) return false;
        if (c != kU && f[c] != d) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    if (pos == n) return full_check();
    const std::size_t m = order[pos];
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || a.is_identity(m) != b.is_identity(t)) continue;
      std::vector<std::size_t> bound;
      bool ok = bind_object(a.dom[m], b.dom[t], bound) &&
                bind_object(a.cod[m], b.cod[t], bound);
      if (ok) {
        f[m] = t;
        used[t] = true;
        for (std::size_t q = 0; ok && q <= pos; ++q) {
          const std::size_t u = order[q];
          for (auto [x, y] : {std::pair{m, u}, std::pair{u, m}}) {
            const std::size_t c = a.then(x, y);
            if (c == kU || f[c] == kU) continue;
            if (b.then(f[x], f[y]) != f[c]) {
              ok = false;
              break;
            }
          }
        }
        if (ok && search(pos + 1)) return true;
        used[t] = false;
        f[m] = kU;
      }
      for (std::size_t x : bound) {
        obj_from[obj[x]] = kU;
        obj[x] = kU;
      }
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return f;
}

FrobeniusAlgebra<Relation> groupoid_to_algebra(const Groupoid& g) {
  if (!groupoid_check(g)) {
    throw PreconditionError("groupoid_to_algebra: invalid groupoid");
  }
  const std::size_t n = g.morphisms();
  Relation mult(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = g.then(a, b);
      if (c != kU) mult.insert(a * n + b, c);
    }
  }
  Relation unit(1, n);
  for (std::size_t x = 0; x < g.objects; ++x) unit.insert(0, g.ids[x]);
  return {n, std::move(mult), std::move(unit), Relation::identity(n)};
}

namespace {

struct ComponentType {
  std::size_t objects;  // k
  const Group* group;
  std::size_t size() const { return objects * objects * group->order; }
};

std::vector<ComponentType> component_types(std::size_t max_size,
                                           bool groups_allowed) {
  std::vector<ComponentType> types;
  for (std::size_t k = 1; k * k <= max_size; ++k) {
    const std::size_t max_order = groups_allowed ? max_size / (k * k) : 1;
    for (std::size_t order = 1; order <= max_order; ++order) {
      for (const Group& grp : groups_of_order(order)) {
        types.push_back({k, &grp});
      }
    }
  }
  return types;
}

Groupoid component(const ComponentType& t) {
  if (t.group->order == 1) return indiscrete_groupoid(t.objects);
  if (t.objects == 1) return group_groupoid(*t.group);
  return product_groupoid(indiscrete_groupoid(t.objects),
                          group_groupoid(*t.group));
}

// Multisets of component types (non-decreasing type index) of total size n.
std::vector<Groupoid> unions_of(std::size_t n, bool groups_allowed) {
  const std::vector<ComponentType> types = component_types(n, groups_allowed);
  std::vector<Groupoid> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t left) {
    if (left == 0) {
      Groupoid g = discrete_groupoid(0);
      for (std::size_t i : chosen) g = disjoint_union(g, component(types[i]));
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t i = start; i < types.size(); ++i) {
      if (types[i].size() > left) continue;
      chosen.push_back(i);
      rec(i, left - types[i].size());
      chosen.pop_back();
    }
  };
  rec(0, n);
  return out;
}

}  // namespace

std::vector<Groupoid> enumerate_groupoids(std::size_t n) {
  return unions_of(n, true);
}

std::vector<Groupoid> indiscrete_unions(std::size_t n) {
  return unions_of(n, false);
}

Groupoid nine_morphism_groupoid() {
  // (cod, dom) of each morphism in the documented order; objects a, b, c.
  const std::pair<std::size_t, std::size_t> arrows[9] = {
      {0, 0}, {1, 1}, {2, 2}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 0}, {0, 2}};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t m = 0; m < 9; ++m) index[arrows[m]] = m;
  Groupoid g;
  g.objects = 3;
  for (const auto& [c, d] : arrows) {
    g.cod.push_back(c);
    g.dom.push_back(d);
  }
  g.comp.assign(81, kU);
  for (std::size_t x = 0; x < 9; ++x) {
    for (std::size_t y = 0; y < 9; ++y) {
      if (g.dom[x] == g.cod[y]) {
        g.comp[x * 9 + y] = index.at({g.cod[x], g.dom[y]});
      }
    }
  }
  g.ids = {0, 1, 2};
  for (std::size_t m = 0; m < 9; ++m) {
    g.inv.push_back(index.at({arrows[m].second, arrows[m].first}));
  }
  g.morphism_labels = {"id_a", "id_b", "id_c", "f",    "f^-1",
                       "g",    "g^-1", "h",    "h^-1"};
  g.name = "I3";
  return g;
}

Relation counterexample_R() {
  Relation r(9, 9);
  for (std::size_t m = 0; m < 7; ++m) r.insert(m, m);
  return r;
}

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Tries every bijection σ from the classes of R to Mor(H); S = {(x, σ[x])}.
std::optional<Relation> splitting_onto(const Relation& r, const Groupoid& g,
                                       const Groupoid& h, SearchMode mode) {
  const Per per(r);
  const auto classes = quotient(per);
  const auto idx = class_index(per);
  const std::size_t k = classes.size();
  if (h.morphisms() != k) return std::nullopt;

  std::vector<std::size_t> sigma(k, kNoClass);
  auto build = [&] {
    Relation s(g.morphisms(), h.morphisms());
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t x : classes[c]) s.insert(x, sigma[c]);
    }
    return s;
  };
  auto verify = [&](const Relation& s) {
    const Relation sd = dagger(s);
    return compose(sd, s) == r &&
           compose(s, sd) == Relation::identity(h.morphisms()) &&
           is_cpstar_rel_groupoid(s, g, h) && is_cpstar_rel_groupoid(sd, h, g);
  };

  if (mode == SearchMode::kExhaustive) {
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
      Relation s = build();
      if (verify(s)) return s;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
  }

  // Class of g⁻¹ and of id_dom(g) for a representative g; kNoClass when the
  // morphism lies outside Dom(R), which rules out any splitting.
  std::vector<std::size_t> inv_class(k), dom_class(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t x = classes[c].front();
    inv_class[c] = idx[g.inv[x]];
    dom_class[c] = idx[g.ids[g.dom[x]]];
    if (inv_class[c] == kNoClass || dom_class[c] == kNoClass) {
      return std::nullopt;
    }
  }

  std::vector<bool> used(k, false);
  auto consistent = [&](std::size_t c) {
    const std::size_t y = sigma[c];
    const std::size_t ic = inv_class[c], dc = dom_class[c];
    if (sigma[ic] != kNoClass && sigma[ic] != h.inv[y]) return false;
    if (sigma[dc] != kNoClass && sigma[dc] != h.ids[h.dom[y]]) return false;
    for (std::size_t e = 0; e < k; ++e) {
      if (sigma[e] == kNoClass) continue;
      if (inv_class[e] == c && h.inv[sigma[e]] != y) return false;
      if (dom_class[e] == c && h.ids[h.dom[sigma[e]]] != y) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t c) {
    if (c == k) return verify(build());
    for (std::size_t y = 0; y < k; ++y) {
      if (used[y]) continue;
      sigma[c] = y;
      used[y] = true;
      if (consistent(c) && search(c + 1)) return true;
      used[y] = false;
      sigma[c] = kNoClass;
    }
    return false;
  };
  if (search(0)) return build();
  return std::nullopt;
}

}  // namespace

SplittingSearch search_dagger_splitting(const Relation& r, const Groupoid& g,
                                        SearchMode mode) {
  if (r.src() != g.morphisms() || r.dst() != g.morphisms()) {
    throw DimensionError("search_dagger_splitting: R must be Mor(G) -> Mor(G)");
  }
  if (!per_check(r) || !is_cpstar_rel_groupoid(r, g, g)) {
    throw PreconditionError(
        "search_dagger_splitting: R is not a dagger idempotent in CP*[Rel]");
  }
  const std::size_t k = quotient(Per(r)).size();
  SplittingSearch result;
  for (const Groupoid& h : enumerate_groupoids(k)) {
    ++result.groupoids_searched;
    result.candidate_bijections += factorial(k);
    if (auto s = splitting_onto(r, g, h, mode)) {
      result.found = true;
      result.target = h;
      result.splitting = std::move(*s);
      return result;
    }
  }
  return result;
}

bool verify_no_dagger_splitting(const Relation& r, const Groupoid& g,
                                SearchMode mode) {
  return !search_dagger_splitting(r, g, mode).found;
}

}  // namespace cpstar
