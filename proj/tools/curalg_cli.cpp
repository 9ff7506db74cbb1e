#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "curalg/algebra_io.hpp"
#include "curalg/catalog.hpp"
#include "curalg/cochain.hpp"
#include "curalg/derivations.hpp"
#include "curalg/forms.hpp"
#include "curalg/graded.hpp"
#include "curalg/report.hpp"

using namespace curalg;

namespace {

struct Options {
  std::string lie;
  std::string assoc;
  std::string g;
  std::string module = "trivial";
  std::string cond = "jacobi_sum_zero";
  std::string sym = "any";
  std::string path;
  std::size_t n = 2;
  std::size_t max_degree = 6;
  std::size_t loop = 0;
  std::uint64_t seed = 0;
  bool json = false;
  bool lambda = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const Options& o, const Json& doc, bool verdict) {
  if (o.json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << render_text(doc);
  return verdict ? 0 : 1;
}

int emit_error(const Options& o, Json err) {
  if (o.json) std::cout << Json{{"error", err}}.dump(2) << '\n';
  std::cerr << "error: " << err["message"].get<std::string>() << '\n';
  return 2;
}

LieAlgebra need_lie(const Options& o) {
  if (o.lie.empty()) throw UsageError("--L is required");
  return catalog::lie_from_descriptor(o.lie);
}

AssocAlgebra need_assoc(const Options& o) {
  if (o.assoc.empty()) throw UsageError("--A is required");
  return catalog::assoc_from_descriptor(o.assoc);
}

// --L alone, or the current algebra L (x) A when --A is also given.
LieAlgebra lie_or_current(const Options& o) {
  auto lie = need_lie(o);
  if (o.assoc.empty()) return lie;
  return current(lie, need_assoc(o)).algebra();
}

LieModule::Kind parse_module(const std::string& s) {
  if (s == "trivial") return LieModule::Kind::trivial;
  if (s == "adjoint") return LieModule::Kind::adjoint;
  if (s == "coadjoint") return LieModule::Kind::coadjoint;
  throw UsageError("unknown module '" + s + "' (trivial, adjoint, coadjoint)");
}

int run_algebra(const Options& o, bool show) {
  std::optional<AnyAlgebra> alg;
  if (!o.path.empty()) {
    alg = parse_algebra_file(o.path);
  } else if (!o.lie.empty()) {
    alg = catalog::lie_from_descriptor(o.lie);
  } else if (!o.assoc.empty()) {
    alg = catalog::assoc_from_descriptor(o.assoc);
  } else {
    throw UsageError("give an algebra file, --L or --A");
  }
  Json doc = std::visit([](const auto& a) { return to_json(a); }, *alg);
  if (show) return emit(o, doc, true);
  Json summary{{"valid", true}, {"kind", doc["kind"]}, {"dim", doc["dim"]}};
  return emit(o, summary, true);
}

int run_cohomology(const Options& o) {
  const auto lie = lie_or_current(o);
  const auto module = module_build(parse_module(o.module), lie);
  const auto r = cohomology(lie, module, o.n);
  return emit(o, to_json(r, lie.name(), o.module), true);
}

int run_forms(const Options& o) {
  const auto cond = parse_form_condition(o.cond);
  const auto sym = parse_symmetry_filter(o.sym);
  if (!o.lie.empty()) {
    const auto lie = lie_or_current(o);
    return emit(o, to_json(condition_space(lie, cond, sym), lie.name()), true);
  }
  const auto assoc = need_assoc(o);
  return emit(o, to_json(condition_space(assoc, cond, sym), assoc.name()), true);
}

int run_derivations(const Options& o) {
  if (o.loop != 0) {
    const auto d = sl2_loop_derivation(o.loop);
    return emit(o, to_json(d), d.identity_holds && d.nondecomposable);
  }
  if (o.lambda) {
    Json doc = Json::object();
    if (!o.lie.empty()) {
      const auto lie = need_lie(o);
      doc["L"] = lie.name();
      doc["first"] = to_json(lambda_candidates(lie, PencilKind::first, o.seed));
      doc["second"] = to_json(lambda_candidates(lie, PencilKind::second, o.seed));
    } else {
      const auto assoc = need_assoc(o);
      doc["A"] = assoc.name();
      doc["first"] = to_json(lambda_candidates(assoc, PencilKind::first, o.seed));
      doc["second"] = to_json(lambda_candidates(assoc, PencilKind::second, o.seed));
    }
    return emit(o, doc, true);
  }
  const auto lie = lie_or_current(o);
  const auto der = derivation_space(lie);
  const auto inner = inner_derivations(lie);
  Json doc{{"L", lie.name()}, {"der_dim", der.dim()}, {"inner_dim", inner.dim()}, {"outer_dim", der.dim() - inner.dim()},
           {"inner_in_der", der.space.contains(inner.space)}};
  doc["derivations"] = to_json(der, lie.name());
  return emit(o, doc, der.space.contains(inner.space));
}

int run_antiderivations(const Options& o) {
  const auto lie = lie_or_current(o);
  return emit(o, to_json(antiderivations(lie), lie.name()), true);
}

int run_sequence(const Options& o) {
  const auto lie = need_lie(o);
  std::optional<BilinearForm> form;
  LieAlgebra target = lie;
  if (!o.assoc.empty()) {
    const auto assoc = need_assoc(o);
    const auto c = current(lie, assoc);
    const auto kl = killing_form(lie);
    const auto ra = residue_form(assoc);
    Matrix g(c.dim(), c.dim());
    for (std::size_t a = 0; a < c.dim(); ++a)
      for (std::size_t b = 0; b < c.dim(); ++b) {
        const auto [i, p] = c.split(a);
        const auto [j, q] = c.split(b);
        g(a, b) = kl.matrix(i, j) * ra.matrix(p, q);
      }
    form = BilinearForm::classify(g);
    target = c.algebra();
  } else {
    const auto kl = killing_form(lie);
    if (is_nondegenerate(kl.matrix)) form = kl;
  }
  const auto r = sequence_maps(target, form);
  return emit(o, to_json(r), r.ok());
}

int run_verify(const Options& o, const std::string& which) {
  const auto lie = need_lie(o);
  const auto assoc = need_assoc(o);
  if (which == "h2") {
    const auto r = verify_h2_decomposition(lie, assoc);
    return emit(o, to_json(r), r.ok());
  }
  if (which == "forms") {
    const auto r = verify_forms_decomposition(lie, assoc);
    return emit(o, to_json(r), r.ok());
  }
  const auto r = verify_der_decomposition(lie, assoc, o.seed);
  return emit(o, to_json(r), r.ok());
}

int run_larsson(const Options& o) {
  const std::string desc = !o.g.empty() ? o.g : o.lie;
  if (desc.empty()) throw UsageError("--g is required");
  const auto r = larsson_report(catalog::lie_from_descriptor(desc), o.max_degree);
  return emit(o, to_json(r), r.verdict);
}

int run_hc1(const Options& o) {
  if (!o.assoc.empty()) {
    const auto assoc = need_assoc(o);
    const auto space = hc1_space(assoc);
    return emit(o, to_json(space, assoc.name()), true);
  }
  if (o.max_degree < 2) throw UsageError("--max-degree must be at least 2");
  Json sum_zero = Json::object(), cyclic = Json::object();
  bool vanishes = true;
  for (std::size_t d = 2; d <= o.max_degree; ++d) {
    const auto s = graded_form_dims(FormCondition::jacobi_sum_zero, SymmetryFilter::skew, d);
    sum_zero[std::to_string(d)] = s;
    cyclic[std::to_string(d)] = graded_form_dims(FormCondition::cyclic, SymmetryFilter::skew, d);
    vanishes = vanishes && s == 0;
  }
  Json doc{{"A", "tK[t]"},
           {"max_degree", o.max_degree},
           {"sum_zero_skew", std::move(sum_zero)},
           {"cyclic_skew", std::move(cyclic)},
           {"hc1_vanishes", vanishes}};
  return emit(o, doc, vanishes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on current Lie algebras L (x) A"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "Seed for random pencil projections");

  auto add_la = [&](CLI::App* sub) {
    sub->add_option("--L", o.lie, "Lie algebra: sl2, slN, abelian:N, heis3, sum:sl2+sl3 or a JSON file");
    sub->add_option("--A", o.assoc, "Associative algebra: tpoly:N, tpoly1:N, zero:N or a JSON file");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--seed", o.seed, "Seed for random pencil projections");
  };

  auto* algebra = app.add_subcommand("algebra", "Show or validate an algebra");
  algebra->require_subcommand(1);
  auto* show = algebra->add_subcommand("show", "Print structure constants");
  auto* validate = algebra->add_subcommand("validate", "Validate the axioms");
  for (auto* s : {show, validate}) {
    add_la(s);
    s->add_option("file", o.path, "JSON algebra file");
  }

  auto* cohom = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  add_la(cohom);
  cohom->add_option("--module", o.module, "trivial, adjoint or coadjoint");
  cohom->add_option("--n", o.n, "Degree (1..3)");

  auto* forms = app.add_subcommand("forms", "Bilinear forms under a condition");
  add_la(forms);
  forms->add_option("--cond", o.cond, "any, jacobi_sum_zero, cyclic, radical, invariant");
  forms->add_option("--sym", o.sym, "any, symmetric, skew");

  auto* der = app.add_subcommand("derivations", "Derivation algebra");
  add_la(der);
  der->add_flag("--lambda", o.lambda, "Report the pencil lambda candidates");
  der->add_option("--loop", o.loop, "sl(2) (x) tK[t]/(t^N) example derivation with this N");

  auto* anti = app.add_subcommand("antiderivations", "Antiderivations");
  add_la(anti);

  auto* seq = app.add_subcommand("sequence", "Maps u, v, w and exactness");
  add_la(seq);

  auto* verify = app.add_subcommand("verify", "Decomposition theorems");
  verify->require_subcommand(1);
  std::string which;
  for (const char* name : {"h2", "forms", "der"}) {
    auto* s = verify->add_subcommand(name, std::string("Decomposition check: ") + name);
    add_la(s);
    s->callback([&which, name] { which = name; });
  }

  auto* larsson = app.add_subcommand("larsson", "Graded H^2 of g (x) tK[t]");
  add_la(larsson);
  larsson->add_option("--g", o.g, "Semisimple catalog algebra");
  larsson->add_option("--max-degree", o.max_degree, "Largest degree");

  auto* hc1 = app.add_subcommand("hc1", "Skew sum-zero forms");
  add_la(hc1);
  hc1->add_option("--max-degree", o.max_degree, "Largest degree of the tK[t] table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (show->parsed()) return run_algebra(o, true);
    if (validate->parsed()) return run_algebra(o, false);
    if (cohom->parsed()) return run_cohomology(o);
    if (forms->parsed()) return run_forms(o);
    if (der->parsed()) return run_derivations(o);
    if (anti->parsed()) return run_antiderivations(o);
    if (seq->parsed()) return run_sequence(o);
    if (verify->parsed()) return run_verify(o, which);
    if (larsson->parsed()) return run_larsson(o);
    if (hc1->parsed()) return run_hc1(o);
  } catch (const AxiomViolation& e) {
    Json witness = Json::array();
    for (auto i : e.witness()) witness.push_back(i + 1);
    return emit_error(o, Json{{"kind", "axiom"},
                              {"axiom", std::string(axiom_name(e.axiom()))},
                              {"witness", std::move(witness)},
                              {"message", e.what()}});
  } catch (const AlgebraFormatError& e) {
    return emit_error(o, Json{{"kind", "format"}, {"where", e.where()}, {"message", e.what()}});
  } catch (const std::exception& e) {
    return emit_error(o, Json{{"kind", "usage"}, {"message", e.what()}});
  }
  return 2;
}
