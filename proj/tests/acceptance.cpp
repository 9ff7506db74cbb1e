// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (rational arithmetic, subspace equality); the time budgets are the
// only tolerances and are printed next to the measured time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curalg/catalog.hpp"
#include "curalg/derivations.hpp"
#include "curalg/forms.hpp"
#include "curalg/graded.hpp"
#include "oracle.hpp"

using namespace curalg;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) out.fail("over time budget");
  if (!out.pass) ++failures;
  std::printf("%s  criterion %2d  %-44s  %7.2fs / %.0fs\n", out.pass ? "PASS" : "FAIL", id, title, secs, budget_s);
  for (const auto& n : out.notes) std::printf("        %s\n", n.c_str());
  std::fflush(stdout);
}

const char* lie_grid[] = {"sl2", "sl3", "heis3", "abelian:4"};
const char* assoc_grid[] = {"tpoly:2", "tpoly:3", "tpoly:4", "tpoly1:3", "zero:2"};

void decomposition_grid(Outcome& out, DecompositionReport (*verify)(const LieAlgebra&, const AssocAlgebra&)) {
  for (const char* l : lie_grid)
    for (const char* a : assoc_grid) {
      auto r = verify(catalog::lie_from_descriptor(l), catalog::assoc_from_descriptor(a));
      std::ostringstream s;
      s << l << " x " << a << ": target " << r.target.dim() << ", span " << r.span.dim()
        << (r.span_in_target ? "" : ", span not inside target") << (r.target_in_span ? "" : ", target not inside span");
      out.expect(r.ok(), s.str());
    }
}

std::vector<std::size_t> h_column(const LarssonReport& r) {
  std::vector<std::size_t> h;
  for (const auto& d : r.degrees) h.push_back(d.h);
  return h;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Perturbs structure constants (keeping the table anti/commutative) until it
// breaks Jacobi or associativity. A single change to an abelian table can
// never break Jacobi, so up to three changes accumulate before restarting.
StructureTable perturb(const StructureTable& base, bool lie, std::mt19937_64& rng) {
  const auto n = base.dim();
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (;;) {
    StructureTable t = base;
    for (int change = 0; change < 3; ++change) {
      std::size_t i, j;
      int p;
      do {
        i = idx(rng);
        j = idx(rng);
        p = num(rng);
      } while ((lie && i == j) || p == 0);
      const auto k = idx(rng);
      Scalar delta(p, den(rng));
      delta.canonicalize();
      Vector row(n), mirror(n);
      for (const auto& term : t.product(i, j)) row[term.index] = term.coeff;
      for (const auto& term : t.product(j, i)) mirror[term.index] = term.coeff;
      row[k] += delta;
      mirror[k] += lie ? -delta : delta;
      t.set(i, j, row);
      if (i != j) t.set(j, i, mirror);
      auto tensor = oracle::tensor(t);
      bool broken = false;
      for (std::size_t x = 0; x < n && !broken; ++x)
        for (std::size_t y = 0; y < n && !broken; ++y)
          for (std::size_t z = 0; z < n && !broken; ++z)
            broken = oracle::nonzero(lie ? oracle::jacobiator(tensor, x, y, z) : oracle::associator(tensor, x, y, z));
      if (broken) return t;
    }
  }
}

}  // namespace

int main() {
  std::printf("acceptance: exact rational arithmetic, subspace equality (tolerance 0)\n");

  criterion(1, "h2 decomposition on the 4 x 5 grid", 60, [](Outcome& out) {
    decomposition_grid(out, verify_h2_decomposition);
  });

  criterion(2, "forms decomposition on the 4 x 5 grid", 60, [](Outcome& out) {
    decomposition_grid(out, verify_forms_decomposition);
  });

  criterion(3, "der decomposition, sl2/sl3 x tpoly:2..4", 300, [](Outcome& out) {
    for (const char* l : {"sl2", "sl3"})
      for (std::size_t n : {2u, 3u, 4u}) {
        auto r = verify_der_decomposition(catalog::lie_from_descriptor(l), catalog::truncated_poly(n, false));
        std::ostringstream s;
        s << l << " x tpoly:" << n << ": Der " << r.der.dim() << ", span " << r.span.dim()
          << (r.generators_are_derivations ? "" : ", a generator is not a derivation");
        out.expect(r.ok(), s.str());
      }
  });

  criterion(4, "graded H2 of g (x) tK[t]", 120, [](Outcome& out) {
    struct Case {
      const char* g;
      std::size_t max;
      std::vector<std::size_t> h;
    };
    for (const auto& c : {Case{"sl2", 6, {0, 5, 0, 0, 0}}, Case{"sl3", 6, {20, 0, 0, 0, 0}},
                          Case{"sum:sl2+sl3", 5, {44, 5, 0, 0}}}) {
      auto r = larsson_report(catalog::lie_from_descriptor(c.g), c.max);
      const auto h = h_column(r);
      out.expect(h == c.h, std::string(c.g) + ": got " + join(h) + ", want " + join(c.h));
      out.expect(r.verdict, std::string(c.g) + ": verdict false");
    }
    auto f = sl2_degree_three_forms();
    out.expect(f.symmetric_psi.size() == 5 && f.complements_coboundaries, "sl2 degree-3 basis is not 5 complementary forms");
    bool rel = f.relation_holds;
    for (const auto& psi : f.symmetric_psi) rel = rel && psi(0, 2) * 2 == psi(1, 1);
    out.expect(rel, "psi(e-,e+) = psi(h,h)/2 fails");
  });

  criterion(5, "HC1 components of tK[t], degrees 2..8", 10, [](Outcome& out) {
    for (std::size_t d = 2; d <= 8; ++d) {
      const auto sz = graded_form_dims(FormCondition::jacobi_sum_zero, SymmetryFilter::skew, d);
      const auto cy = graded_form_dims(FormCondition::cyclic, SymmetryFilter::skew, d);
      out.expect(sz == 0, "sum-zero skew degree " + std::to_string(d) + " = " + std::to_string(sz));
      const std::size_t want = d == 3 ? 1 : d >= 4 ? 0 : cy;
      out.expect(cy == want, "cyclic skew degree " + std::to_string(d) + " = " + std::to_string(cy));
    }
  });

  criterion(6, "antiderivation and form lemmas", 10, [](Outcome& out) {
    out.expect(antiderivations(catalog::sl(3)).dim() == 0, "antiderivations(sl3) nonzero");
    const auto s5 = condition_space(catalog::sl(2), FormCondition::jacobi_sum_zero, SymmetryFilter::symmetric).dim();
    out.expect(s5 == 5, "symmetric sum-zero forms on sl2: " + std::to_string(s5));
    for (unsigned n : {2u, 3u})
      out.expect(condition_space(catalog::sl(n), FormCondition::cyclic, SymmetryFilter::skew).dim() == 0,
                 "skew cyclic forms on sl" + std::to_string(n) + " nonzero");
  });

  criterion(7, "exact sequence u, v, w", 30, [](Outcome& out) {
    auto check = [&](const std::string& name, const SequenceReport& r) {
      out.expect(r.vu_zero && r.wv_zero, name + ": composed maps do not vanish");
      out.expect(r.exact_at_h1, name + ": ker v != im u");
      out.expect(r.exact_at_b, name + ": im v != ker w");
      out.expect(r.ok(), name + ": report not ok");
    };
    auto sl2 = catalog::sl(2);
    auto r2 = sequence_maps(sl2, killing_form(sl2));
    check("sl2", r2);
    out.expect(r2.h2() == 0 && r2.h1() == 0 && r2.b_forms == 1 && r2.h3() == 1,
               "sl2 dims (H2,H1,B,H3) != (0,0,1,1)");
    out.expect(r2.ker_w == 0 && r2.im_v == 0, "sl2: w not injective on B(L)/im v");
    auto sl3 = catalog::sl(3);
    check("sl3", sequence_maps(sl3, killing_form(sl3)));

    auto a = catalog::truncated_poly(3, false);
    auto c = current(sl2, a);
    auto k = killing_form(sl2).matrix;
    auto res = residue_form(a).matrix;
    Matrix prod(c.dim(), c.dim());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t q = 0; q < a.dim(); ++q) prod(c.index(i, p), c.index(j, q)) = k(i, j) * res(p, q);
    auto rc = sequence_maps(c.algebra(), BilinearForm::classify(prod));
    check("sl2 x tpoly:3", rc);
  });

  criterion(8, "sl2 loop derivation, N = 6", 5, [](Outcome& out) {
    auto d = sl2_loop_derivation(6);
    out.expect(d.identity_holds, "derivation identity fails below degree 6");
    out.expect(d.nondecomposable && d.minor.has_value(), "no nonzero 2x2 minor");
    // independent evaluation of the identity on all pairs of total degree < 6
    const auto& c = d.algebra;
    const auto n = c.dim();
    const auto& deg = *c.degrees();
    auto t = oracle::tensor(c.algebra().table());
    auto coords = map_coordinates(d.map);
    bool holds = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (deg[x] + deg[y] >= 6) continue;
        auto X = oracle::unit(n, x), Y = oracle::unit(n, y);
        auto lhs = oracle::apply_map(coords, n, oracle::mul(t, X, Y));
        auto rhs = oracle::add(oracle::mul(t, oracle::apply_map(coords, n, X), Y),
                               oracle::mul(t, X, oracle::apply_map(coords, n, Y)));
        holds = holds && lhs == rhs;
      }
    out.expect(holds, "oracle finds a pair violating the identity");
    if (d.minor) {
      // the minor itself, read off the flattened (sl2 maps) x (t-maps) tensor
      const auto na = c.assoc_factor().dim();
      auto entry = [&](std::size_t r, std::size_t col) {
        const auto i = r / 3, j = r % 3, p = col / na, q = col % na;
        return d.map(c.index(j, q), c.index(i, p));
      };
      const auto& m = *d.minor;
      const Scalar det = entry(m[0], m[2]) * entry(m[1], m[3]) - entry(m[0], m[3]) * entry(m[1], m[2]);
      out.expect(det != 0, "reported minor vanishes");
    }
  });

  criterion(9, "graded dims stable at order d + 3", 120, [](Outcome& out) {
    for (const char* g : {"sl2", "sl3", "sum:sl2+sl3"}) {
      auto lie = catalog::lie_from_descriptor(g);
      const std::size_t max = std::string(g) == "sum:sl2+sl3" ? 5 : 6;
      for (std::size_t d = 2; d <= max; ++d) {
        const auto a = graded_h2(lie, d, d + 1), b = graded_h2(lie, d, d + 3);
        out.expect(a.z == b.z && a.b == b.b && a.h == b.h, std::string(g) + " degree " + std::to_string(d));
      }
    }
    for (std::size_t d = 2; d <= 8; ++d)
      for (auto cond : {FormCondition::jacobi_sum_zero, FormCondition::cyclic})
        out.expect(graded_form_dims(cond, SymmetryFilter::skew, d, d + 1) ==
                       graded_form_dims(cond, SymmetryFilter::skew, d, d + 3),
                   std::string(condition_name(cond)) + " degree " + std::to_string(d));
  });

  criterion(10, "100 broken tables rejected with true witnesses", 10, [](Outcome& out) {
    std::mt19937_64 rng(0xC0FFEE);
    const std::vector<LieAlgebra> lies{catalog::sl(2), catalog::sl(3), catalog::heisenberg3(), catalog::abelian(3)};
    const std::vector<AssocAlgebra> assocs{catalog::truncated_poly(4, false), catalog::truncated_poly(3, true),
                                           catalog::zero_mult(3)};
    int rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const bool lie = trial % 2 == 0;
      const auto& base = lie ? lies[static_cast<std::size_t>(trial / 2) % lies.size()].table()
                             : assocs[static_cast<std::size_t>(trial / 2) % assocs.size()].table();
      auto t = perturb(base, lie, rng);
      std::vector<std::string> labels(t.dim(), "b");
      try {
        if (lie)
          LieAlgebra(labels, t);
        else
          AssocAlgebra(labels, t, false);
        out.fail("trial " + std::to_string(trial) + " accepted");
      } catch (const AxiomViolation& e) {
        const auto& w = e.witness();
        const bool right_axiom = e.axiom() == (lie ? Axiom::jacobi : Axiom::associativity);
        const auto tensor = oracle::tensor(t);
        const bool true_witness =
            w.size() == 3 &&
            oracle::nonzero(lie ? oracle::jacobiator(tensor, w[0], w[1], w[2]) : oracle::associator(tensor, w[0], w[1], w[2]));
        if (right_axiom && true_witness)
          ++rejected;
        else
          out.fail("trial " + std::to_string(trial) + ": wrong axiom or witness");
      }
    }
    out.expect(rejected == 100, std::to_string(rejected) + "/100 rejected correctly");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
