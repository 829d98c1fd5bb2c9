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

#include "cpstar/per.hpp"

#include <algorithm>
#include <functional>

#include "cpstar/errors.hpp"

namespace cpstar {

bool per_check(const Relation& r) {
  if (r.src() != r.dst()) return false;
  if (dagger(r) != r) return false;
  return compose(r, r).subset_of(r);
}

Per::Per(Relation r) : rel_(std::move(r)) {
  if (!per_check(rel_)) {
    throw PreconditionError("relation is not a partial equivalence relation");
  }
}

std::vector<std::vector<std::size_t>> quotient(const Per& per) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(per.base(), false);
  for (std::size_t x = 0; x < per.base(); ++x) {
    if (seen[x] || !per.in_domain(x)) continue;
    std::vector<std::size_t> cls = per.relation().image(x);
    for (std::size_t y : cls) seen[y] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> class_index(const Per& per) {
  std::vector<std::size_t> idx(per.base(), kNoClass);
  const auto classes = quotient(per);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t x : classes[c]) idx[x] = c;
  }
  return idx;
}

Relation per_split(const Per& per) {
  const auto classes = quotient(per);
  Relation r(classes.size(), per.base());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t x : classes[c]) r.insert(c, x);
  }
  return r;
}

bool split_iso_rel(const Per& a, const Per& b) {
  return quotient(a).size() == quotient(b).size();
}

bool cpm_per_check(std::size_t x_size, const Relation& r) {
  if (r.src() != x_size * x_size || !per_check(r)) return false;
  auto enc = [x_size](std::size_t x, std::size_t y) { return x * x_size + y; };
  for (const auto& [p, q] : r.pairs()) {
    const std::size_t x = p / x_size, xp = p % x_size;
    const std::size_t y = q / x_size, yp = q % x_size;
    if (!r.contains(enc(xp, x), enc(yp, y))) return false;
    if (!r.contains(enc(x, x), enc(y, y))) return false;
  }
  return true;
}

CpmPer::CpmPer(std::size_t x_size, Relation r)
    : x_size_(x_size), per_(r) {
  if (!cpm_per_check(x_size, r)) {
    throw PreconditionError("relation is not a PER on X×X closed under swap "
                            "and diagonal");
  }
}

bool cpm_per_is_unital(const CpmPer& c) {
  for (std::size_t x = 0; x < c.x_size(); ++x) {
    if (!c.per().in_domain(c.pair(x, x))) return false;
  }
  return true;
}

namespace {

// For each class: the class of the swapped pair and of the diagonal pair of
// its least representative. Well defined on every representative because of
// the swap/diagonal closure of a CpmPer.
struct ClassStructure {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> index;
  std::vector<std::size_t> swapped;
  std::vector<std::size_t> diagonal;
  std::vector<bool> contains_diagonal_pair;
};

ClassStructure class_structure(const CpmPer& c) {
  ClassStructure s;
  s.classes = quotient(c.per());
  s.index = class_index(c.per());
  const std::size_t n = c.x_size();
  for (const auto& cls : s.classes) {
    const std::size_t x = cls.front() / n, xp = cls.front() % n;
    s.swapped.push_back(s.index[c.pair(xp, x)]);
    s.diagonal.push_back(s.index[c.pair(x, x)]);
    bool diag = false;
    for (std::size_t p : cls) diag = diag || (p / n == p % n);
    s.contains_diagonal_pair.push_back(diag);
  }
  return s;
}

bool is_bijection(const std::vector<std::size_t>& f, std::size_t size) {
  if (f.size() != size) return false;
  std::vector<bool> hit(size, false);
  for (std::size_t v : f) {
    if (v >= size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool satisfies_quotient_condition(const CpmPer& a, const CpmPer& b,
                                  const std::vector<std::size_t>& alpha) {
  const ClassStructure sa = class_structure(a);
  const ClassStructure sb = class_structure(b);
  if (sa.classes.size() != sb.classes.size()) return false;
  if (!is_bijection(alpha, sa.classes.size())) return false;
  const std::size_t na = a.x_size(), nb = b.x_size();
  for (std::size_t i = 0; i < sa.classes.size(); ++i) {
    const std::size_t j = alpha[i];
    for (std::size_t p : sa.classes[i]) {
      const std::size_t x = p / na, xp = p % na;
      for (std::size_t q : sb.classes[j]) {
        const std::size_t y = q / nb, yp = q % nb;
        if (alpha[sa.index[a.pair(xp, x)]] != sb.index[b.pair(yp, y)]) {
          return false;
        }
        if (alpha[sa.index[a.pair(x, x)]] != sb.index[b.pair(y, y)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> split_iso_cpm_rel(const CpmPer& a,
                                                          const CpmPer& b) {
  const ClassStructure sa = class_structure(a);
  const ClassStructure sb = class_structure(b);
  const std::size_t k = sa.classes.size();
  if (k != sb.classes.size()) return std::nullopt;

  std::vector<std::size_t> alpha(k, kNoClass);
  std::vector<bool> used(k, false);
  auto consistent = [&](std::size_t i) {
    const std::size_t j = alpha[i];
    if (sa.contains_diagonal_pair[i] != sb.contains_diagonal_pair[j]) {
      return false;
    }
    const std::size_t si = sa.swapped[i], di = sa.diagonal[i];
    if (alpha[si] != kNoClass && alpha[si] != sb.swapped[j]) return false;
    if (alpha[di] != kNoClass && alpha[di] != sb.diagonal[j]) return false;
    // The constraints also bind i when it is the swap or diagonal of an
    // earlier class.
    for (std::size_t e = 0; e < k; ++e) {
      if (alpha[e] == kNoClass) continue;
      if (sa.swapped[e] == i && sb.swapped[alpha[e]] != j) return false;
      if (sa.diagonal[e] == i && sb.diagonal[alpha[e]] != j) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == k) return satisfies_quotient_condition(a, b, alpha);
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      alpha[i] = j;
      used[j] = true;
      if (consistent(i) && search(i + 1)) return true;
      used[j] = false;
      alpha[i] = kNoClass;
    }
    return false;
  };
  if (search(0)) return alpha;
  return std::nullopt;
}

bool satisfies_image_condition(const CpmPer& c, const Groupoid& g,
                               const std::vector<std::size_t>& beta) {
  const ClassStructure s = class_structure(c);
  if (g.morphisms() != s.classes.size()) return false;
  if (!is_bijection(beta, s.classes.size())) return false;
  const std::size_t n = c.x_size();
  for (std::size_t m = 0; m < g.morphisms(); ++m) {
    for (std::size_t p : s.classes[beta[m]]) {
      const std::size_t x = p / n, xp = p % n;
      if (beta[g.inv[m]] != s.index[c.pair(xp, x)]) return false;
      if (beta[g.ids[g.dom[m]]] != s.index[c.pair(x, x)]) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> f_image_test(const CpmPer& c,
                                                     const Groupoid& g) {
  const ClassStructure s = class_structure(c);
  const std::size_t k = s.classes.size();
  if (g.morphisms() != k) return std::nullopt;

  // Identities first: they can only land on classes of diagonal pairs.
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < k; ++m) {
    if (g.is_identity(m)) order.push_back(m);
  }
  for (std::size_t m = 0; m < k; ++m) {
    if (!g.is_identity(m)) order.push_back(m);
  }

  std::vector<std::size_t> beta(k, kNoClass);
  std::vector<bool> used(k, false);
  auto consistent = [&](std::size_t m) {
    const std::size_t q = beta[m];
    if (g.is_identity(m) && !s.contains_diagonal_pair[q]) return false;
    const std::size_t mi = g.inv[m];
    const std::size_t md = g.ids[g.dom[m]];
    if (beta[mi] != kNoClass && beta[mi] != s.swapped[q]) return false;
    if (beta[md] != kNoClass && beta[md] != s.diagonal[q]) return false;
    for (std::size_t e = 0; e < k; ++e) {
      if (beta[e] == kNoClass) continue;
      if (g.inv[e] == m && s.swapped[beta[e]] != q) return false;
      if (g.ids[g.dom[e]] == m && s.diagonal[beta[e]] != q) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    if (pos == k) return satisfies_image_condition(c, g, beta);
    const std::size_t m = order[pos];
    for (std::size_t q = 0; q < k; ++q) {
      if (used[q]) continue;
      beta[m] = q;
      used[q] = true;
      if (consistent(m) && search(pos + 1)) return true;
      used[q] = false;
      beta[m] = kNoClass;
    }
    return false;
  };
  if (search(0)) return beta;
  return std::nullopt;
}

CpmPer per_counterexample() {
  constexpr std::size_t n = 3;
  Relation r(n * n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((x == 0 && y == 2) || (x == 2 && y == 0)) continue;
      r.insert(x * n + y, x * n + y);
    }
  }
  return CpmPer(n, std::move(r));
}

}  // namespace cpstar
