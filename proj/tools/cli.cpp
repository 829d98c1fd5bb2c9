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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "cpstar/biproduct.hpp"
#include "cpstar/cp.hpp"
#include "cpstar/functors.hpp"
#include "cpstar/groupoid.hpp"
#include "cpstar/json_io.hpp"
#include "cpstar/per.hpp"

namespace cpstar::cli {

namespace {

struct Outcome {
  Report report;
  Json output;                     // null when the command has no payload
  std::vector<std::string> notes;  // human-readable witness data
};

struct Options {
  bool json = false;
  double tol = 1e-9;
};

void print(const std::string& command, const Outcome& o, const Options& opt,
           std::ostream& out) {
  if (opt.json) {
    Json j = to_json(o.report);
    j["command"] = command;
    if (!o.output.is_null()) j["output"] = o.output;
    if (!o.notes.empty()) j["notes"] = o.notes;
    out << j.dump(2) << "\n";
    return;
  }
  out << command << ": " << (o.report.pass() ? "PASS" : "FAIL") << "\n";
  for (const CheckResult& c : o.report.checks()) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (c.residual) out << " (residual " << *c.residual << ")";
    out << "\n";
  }
  for (const std::string& n : o.notes) out << "  " << n << "\n";
  if (!o.output.is_null()) out << o.output.dump(2) << "\n";
}

template <class M>
Report algebra_report(const FrobeniusAlgebra<M>& alg, Tolerance tol) {
  Report r = check_dagger_frobenius(alg, tol);
  r.append(check_normalisable(alg, tol));
  r.append(check_alternative_forms(alg, tol));
  return r;
}

template <class M>
FrobeniusAlgebra<M> validated_normal(const FrobeniusAlgebra<M>& alg,
                                     Tolerance tol) {
  FrobeniusAlgebra<M> v = FrobeniusAlgebra<M>::validated(
      alg.carrier, alg.mult, alg.unit, alg.normaliser, tol);
  return normalise(v, tol).first;
}

// ---------------------------------------------------------------------------

Outcome cmd_check_frobenius(const std::string& path, Tolerance tol) {
  const AnyAlgebra alg = algebra_from_json(read_json_file(path));
  Outcome o;
  std::visit([&](const auto& a) { o.report = algebra_report(a, tol); }, alg);
  return o;
}

template <class M>
Outcome cp_check_impl(const M& f, const FrobeniusAlgebra<M>& a,
                      const FrobeniusAlgebra<M>& b, Tolerance tol) {
  const auto na = validated_normal(a, tol);
  const auto nb = validated_normal(b, tol);
  if (dom(f) != na.carrier || cod(f) != nb.carrier) {
    throw JsonFormatError("morphism is not typed between the two carriers");
  }
  Outcome o;
  o.report.add("cpstar-morphism", is_cpstar_morphism(f, na, nb, tol));
  return o;
}

Outcome cmd_cp_check(const std::string& fpath, const std::string& apath,
                     const std::string& bpath, Tolerance tol) {
  const AnyAlgebra a = algebra_from_json(read_json_file(apath));
  const AnyAlgebra b = algebra_from_json(read_json_file(bpath));
  if (a.index() != b.index()) throw JsonFormatError("backends differ");
  const Json fj = read_json_file(fpath);
  if (std::holds_alternative<FrobeniusAlgebra<Relation>>(a)) {
    return cp_check_impl(relation_from_json(fj),
                         std::get<FrobeniusAlgebra<Relation>>(a),
                         std::get<FrobeniusAlgebra<Relation>>(b), tol);
  }
  return cp_check_impl(matrix_from_json(fj),
                       std::get<FrobeniusAlgebra<Matrix>>(a),
                       std::get<FrobeniusAlgebra<Matrix>>(b), tol);
}

Outcome cmd_functor_F(const std::string& path, Tolerance tol) {
  const AnyAlgebra alg = algebra_from_json(read_json_file(path));
  Outcome o;
  std::visit(
      [&](const auto& a) {
        using M = std::decay_t<decltype(a.mult)>;
        const auto n = validated_normal(a, tol);
        const FImage<M> img = functor_F_object(n, tol);
        const M& p = img.projection;
        o.report.add("dagger-idempotent", is_dagger_idempotent(p, tol));
        o.report.add("completely-positive", is_cp(p, n.carrier, n.carrier, tol));
        o.report.add("unital", is_unital(p, n.carrier, n.carrier, tol));
        if constexpr (std::is_same_v<M, Relation>) {
          const CpmPer c(n.carrier, p);
          o.output = to_json(c);
          o.notes.push_back("quotient size " +
                            std::to_string(quotient(c.per()).size()));
        } else {
          o.output = Json{{"m", n.carrier}, {"projection", to_json(p)}};
        }
      },
      alg);
  return o;
}

std::pair<Matrix, std::size_t> load_projection(const std::string& path) {
  const Json j = read_json_file(path);
  Matrix p = matrix_from_json(j.contains("projection") ? j.at("projection") : j);
  const auto m = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(p.rows()))));
  if (j.contains("m") && j.at("m").get<std::size_t>() != m) {
    throw JsonFormatError("m does not match the projection size");
  }
  if (m * m != p.rows() || !p.square()) {
    throw JsonFormatError("projection must be m²×m²");
  }
  return {std::move(p), m};
}

Outcome cmd_functor_G(const std::string& path, Tolerance tol) {
  auto [p, m] = load_projection(path);
  Outcome o;
  try {
    const GImage img = functor_G_fhilb(p, m, tol);
    o.report = algebra_report(img.algebra, tol);
    o.output = to_json(img.algebra);
  } catch (const PreconditionError& e) {
    o.report.add("precondition", false);
    o.notes.push_back(e.what());
  }
  return o;
}

Outcome cmd_roundtrip(const std::string& path, Tolerance tol) {
  auto [p, m] = load_projection(path);
  Outcome o;
  try {
    const RoundTrip rt = round_trip_witnesses(p, m, tol);
    const std::size_t r = rt.image.algebra.carrier;
    o.report = algebra_report(rt.image.algebra, tol);
    const Matrix gf = compose(rt.g, rt.f), fg = compose(rt.f, rt.g);
    o.report.add("g-after-f-equals-p", approx_equal(gf, p, tol),
                 max_abs_diff(gf, p));
    o.report.add("f-after-g-equals-FG(p)",
                 approx_equal(fg, rt.fg_projection, tol),
                 max_abs_diff(fg, rt.fg_projection));
    o.report.add("f-completely-positive", is_cp_fhilb(rt.f, m, r, tol));
    o.report.add("g-completely-positive", is_cp_fhilb(rt.g, r, m, tol));
    o.report.add("f-split-morphism",
                 split_morphism_check(rt.f, p, rt.fg_projection, tol));
    o.report.add("g-split-morphism",
                 split_morphism_check(rt.g, rt.fg_projection, p, tol));
    o.notes.push_back("range dimension " + std::to_string(r));
  } catch (const PreconditionError& e) {
    o.report.add("precondition", false);
    o.notes.push_back(e.what());
  }
  return o;
}

Outcome cmd_split_search(const std::string& path, bool exhaustive) {
  const Json j = read_json_file(path);
  const Groupoid g = groupoid_from_json(j.at("groupoid"));
  const Relation r = relation_from_json(j.at("relation"));
  const SplittingSearch s = search_dagger_splitting(
      r, g, exhaustive ? SearchMode::kExhaustive : SearchMode::kPruned);
  Outcome o;
  o.report.add("splitting-found", s.found);
  o.notes.push_back("groupoids searched " +
                    std::to_string(s.groupoids_searched) + ", candidates " +
                    std::to_string(s.candidate_bijections));
  Json out{{"found", s.found},
           {"groupoids_searched", s.groupoids_searched},
           {"candidate_bijections", s.candidate_bijections}};
  if (s.target) out["target"] = to_json(*s.target);
  if (s.splitting) out["splitting"] = to_json(*s.splitting);
  o.output = out;
  return o;
}

template <class M>
Outcome biproduct_impl(const FrobeniusAlgebra<M>& a0,
                       const FrobeniusAlgebra<M>& b0, Tolerance tol) {
  const auto a = validated_normal(a0, tol);
  const auto b = validated_normal(b0, tol);
  const FrobeniusAlgebra<M> s = oplus_algebra(a, b, tol);
  Outcome o;
  o.report = algebra_report(s, tol);
  o.report.add("normal", is_normal(s, tol));
  const StructuralMorphisms<M> sm = structural_morphisms(a, b);
  auto hom = [&](const char* name, const M& f, const FrobeniusAlgebra<M>& x,
                 const FrobeniusAlgebra<M>& y) {
    o.report.add(std::string(name) + "-star-homomorphism",
                 check_star_homomorphism(f, x, y, tol));
    o.report.add(std::string(name) + "-cpstar-morphism",
                 is_cpstar_morphism(f, x, y, tol));
  };
  hom("inj-a", sm.inj_a, a, s);
  hom("inj-b", sm.inj_b, b, s);
  hom("proj-a", sm.proj_a, s, a);
  hom("proj-b", sm.proj_b, s, b);
  o.output = to_json(s);
  return o;
}

Outcome cmd_biproduct(const std::string& apath, const std::string& bpath,
                      Tolerance tol) {
  const AnyAlgebra a = algebra_from_json(read_json_file(apath));
  const AnyAlgebra b = algebra_from_json(read_json_file(bpath));
  if (a.index() != b.index()) throw JsonFormatError("backends differ");
  if (std::holds_alternative<FrobeniusAlgebra<Relation>>(a)) {
    return biproduct_impl(std::get<FrobeniusAlgebra<Relation>>(a),
                          std::get<FrobeniusAlgebra<Relation>>(b), tol);
  }
  return biproduct_impl(std::get<FrobeniusAlgebra<Matrix>>(a),
                        std::get<FrobeniusAlgebra<Matrix>>(b), tol);
}

Outcome counterexample_rel_nosplit() {
  const Groupoid g = nine_morphism_groupoid();
  const Relation r = counterexample_R();
  Outcome o;
  o.report.add("R-dagger-idempotent", is_dagger_idempotent(r));
  o.report.add("R-cpstar-morphism", is_cpstar_rel_groupoid(r, g, g));
  const SplittingSearch s =
      search_dagger_splitting(r, g, SearchMode::kExhaustive);
  o.report.add("no-dagger-splitting", !s.found);
  o.notes.push_back("no splitting among " +
                    std::to_string(s.candidate_bijections) +
                    " candidates (" + std::to_string(s.groupoids_searched) +
                    " groupoids with 7 morphisms)");
  o.output = Json{{"groupoid", to_json(g)}, {"relation", to_json(r)}};
  return o;
}

Outcome counterexample_rel_unital_image() {
  const CpmPer c = per_counterexample();
  Outcome o;
  o.report.add("split-condition", cpm_per_check(c.x_size(), c.per().relation()));
  o.report.add("unital", cpm_per_is_unital(c));
  const std::size_t k = quotient(c.per()).size();
  o.report.add("seven-classes", k == 7);
  std::size_t tested = 0, matched = 0;
  for (const Groupoid& g : enumerate_groupoids(k)) {
    ++tested;
    if (f_image_test(c, g)) ++matched;
  }
  o.report.add("not-an-F-image", matched == 0);
  o.notes.push_back("no F-image among " + std::to_string(tested) +
                    " groupoids with 7 morphisms");
  o.output = to_json(c);
  return o;
}

Outcome counterexample_fhilb_noncontractive() {
  const Matrix p = noncontractive_projection();
  const Matrix a = noncontractive_weight();
  Outcome o;
  o.report.add("dagger-idempotent", is_dagger_idempotent(p, Tolerance(1e-12)),
               std::max(max_abs_diff(dagger(p), p),
                        max_abs_diff(compose(p, p), p)));
  o.report.add("completely-positive", is_cp_fhilb(p, 2, 2));
  const double norm = operator_norm(apply_map(p, Matrix::identity(2)));
  const double expected = 0.5 + std::sqrt(2.0) / 2.0;
  o.report.add("norm-of-p(1)", std::abs(norm - expected) <= 1e-9,
               std::abs(norm - expected));
  o.report.add("not-contractive", norm > 1.0);
  o.report.add("not-unital", !is_unital(p, 2, 2));
  std::ostringstream s;
  s << "||p(1)|| = " << norm << " > 1, Tr(a) = " << a.trace().real();
  o.notes.push_back(s.str());
  o.output = Json{{"projection", to_json(p)}, {"a", to_json(a)}};
  return o;
}

Outcome cmd_enumerate(std::size_t n) {
  const std::vector<Groupoid> gs = enumerate_groupoids(n);
  Outcome o;
  o.report.add("enumerated", true);
  o.notes.push_back(std::to_string(gs.size()) + " groupoids with " +
                    std::to_string(n) + " morphisms");
  Json list = Json::array();
  for (const Groupoid& g : gs) {
    o.notes.push_back(g.name.empty() ? "(empty)" : g.name);
    list.push_back(to_json(g));
  }
  o.output = Json{{"count", gs.size()}, {"groupoids", list}};
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Categorical constructions over relations and matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_option("--tol", opt.tol, "Numeric tolerance for FHilb checks")
      ->check(CLI::NonNegativeNumber);

  std::string p1, p2, p3;
  std::function<Outcome(Tolerance)> action;
  std::string command;
  bool quiet_output = false;

  auto* check = app.add_subcommand("check-frobenius", "Check algebra axioms");
  check->add_option("algebra", p1)->required()->check(CLI::ExistingFile);
  check->callback([&] {
    command = "check-frobenius";
    action = [&](Tolerance t) { return cmd_check_frobenius(p1, t); };
  });

  auto* cp = app.add_subcommand("cp-check", "Check the CP* morphism condition");
  cp->add_option("morphism", p1)->required()->check(CLI::ExistingFile);
  cp->add_option("source", p2)->required()->check(CLI::ExistingFile);
  cp->add_option("target", p3)->required()->check(CLI::ExistingFile);
  cp->callback([&] {
    command = "cp-check";
    action = [&](Tolerance t) { return cmd_cp_check(p1, p2, p3, t); };
  });

  std::string which;
  auto* functor = app.add_subcommand("functor", "Apply F, G or the round trip");
  functor->add_option("which", which)
      ->required()
      ->check(CLI::IsMember({"F", "G", "roundtrip"}));
  functor->add_option("input", p1)->required()->check(CLI::ExistingFile);
  functor->callback([&] {
    command = "functor " + which;
    action = [&](Tolerance t) {
      if (which == "F") return cmd_functor_F(p1, t);
      if (which == "G") return cmd_functor_G(p1, t);
      return cmd_roundtrip(p1, t);
    };
  });

  bool exhaustive = false;
  auto* split = app.add_subcommand(
      "split-search", "Search for a dagger splitting of R on a groupoid");
  split->add_option("input", p1, "JSON with \"groupoid\" and \"relation\"")
      ->required()
      ->check(CLI::ExistingFile);
  split->add_flag("--exhaustive", exhaustive, "Check every bijection in full");
  split->callback([&] {
    command = "split-search";
    action = [&](Tolerance) { return cmd_split_search(p1, exhaustive); };
  });

  auto* bip = app.add_subcommand("biproduct", "Direct sum of two algebras");
  bip->add_option("first", p1)->required()->check(CLI::ExistingFile);
  bip->add_option("second", p2)->required()->check(CLI::ExistingFile);
  bip->callback([&] {
    command = "biproduct";
    action = [&](Tolerance t) { return cmd_biproduct(p1, p2, t); };
  });

  std::string name;
  auto* ce = app.add_subcommand("counterexample", "Reproduce a counterexample");
  ce->add_option("name", name)
      ->required()
      ->check(CLI::IsMember(
          {"rel-nosplit", "rel-unital-image", "fhilb-noncontractive"}));
  ce->callback([&] {
    command = "counterexample " + name;
    action = [&](Tolerance) {
      if (name == "rel-nosplit") return counterexample_rel_nosplit();
      if (name == "rel-unital-image") return counterexample_rel_unital_image();
      return counterexample_fhilb_noncontractive();
    };
  });

  std::size_t count = 0;
  auto* en = app.add_subcommand("enumerate-groupoids",
                                "Groupoids with N morphisms up to isomorphism");
  en->add_option("N", count)->required();
  en->add_flag("--brief", quiet_output, "Omit the groupoid tables");
  en->callback([&] {
    command = "enumerate-groupoids";
    action = [&](Tolerance) { return cmd_enumerate(count); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    Outcome o = action(Tolerance(opt.tol));
    if (quiet_output) o.output = nullptr;
    print(command, o, opt, out);
    return o.report.pass() ? kExitPass : kExitFail;
  } catch (const JsonFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace cpstar::cli
