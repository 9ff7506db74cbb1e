#include "curalg/cochain.hpp"

#include <algorithm>
#include <stdexcept>

#include "curalg/parallel.hpp"

namespace curalg {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LieModule::LieModule(const LieAlgebra& lie, std::vector<Matrix> action, Kind kind)
    : action_(std::move(action)), kind_(kind) {
  if (action_.size() != lie.dim()) throw std::invalid_argument("one action matrix per basis element required");
  dim_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrices must be square of equal size");
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      Matrix lhs(dim_, dim_);
      for (const auto& t : lie.bracket(i, j)) lhs = lhs + t.coeff * action_[t.index];
      if (lhs != action_[i] * action_[j] - action_[j] * action_[i])
        throw AxiomViolation(Axiom::representation, {i, j}, "module action");
    }
}

LieModule module_build(LieModule::Kind kind, const LieAlgebra& lie, std::size_t trivial_dim) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    switch (kind) {
      case LieModule::Kind::trivial: action.emplace_back(trivial_dim, trivial_dim); break;
      case LieModule::Kind::adjoint: action.push_back(lie.ad(i)); break;
      case LieModule::Kind::coadjoint: action.push_back(Scalar(-1) * lie.ad(i).transpose()); break;
      case LieModule::Kind::custom: throw std::invalid_argument("custom modules are built from explicit matrices");
    }
  }
  return LieModule(lie, std::move(action), kind);
}

CochainIndex::CochainIndex(std::size_t n, std::size_t k) : n_(n), k_(k), count_(binomial(n, k)) {
  binom_.assign(n + 1, std::vector<std::size_t>(k + 1, 0));
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= k; ++b) binom_[a][b] = binomial(a, b);
  tuples_.reserve(count_ * k);
  if (k > n) return;
  std::vector<std::uint32_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<std::uint32_t>(i);
  while (true) {
    tuples_.insert(tuples_.end(), t.begin(), t.end());
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

std::size_t CochainIndex::rank(std::span<const std::uint32_t> tuple) const {
  // Lexicographic rank: count the subsets that precede `tuple`.
  std::size_t r = 0;
  std::size_t prev = 0;
  for (std::size_t pos = 0; pos < k_; ++pos) {
    for (std::size_t v = prev; v < tuple[pos]; ++v) r += binom_[n_ - v - 1][k_ - pos - 1];
    prev = tuple[pos] + 1;
  }
  return r;
}

SparseRow ce_differential_row(const LieAlgebra& lie, const LieModule& module, const CochainIndex& columns,
                              std::span<const std::uint32_t> tuple, std::size_t m) {
  const std::size_t n = columns.k();
  const std::size_t dm = module.dim();
  RowBuilder row;
  std::vector<std::uint32_t> rest;
  rest.reserve(n);

  // Action terms.
  for (std::size_t i = 0; i <= n; ++i) {
    rest.clear();
    for (std::size_t a = 0; a <= n; ++a)
      if (a != i) rest.push_back(tuple[a]);
    const std::size_t base = columns.rank(rest) * dm;
    const Matrix& rho = module.action(tuple[i]);
    const bool negative = i % 2 == 1;
    for (std::size_t mm = 0; mm < dm; ++mm) {
      const Scalar& c = rho(m, mm);
      if (sgn(c) == 0) continue;
      row.add(base + mm, negative ? Scalar(-c) : c);
    }
  }

  // Bracket terms.
  std::vector<std::uint32_t> merged(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      rest.clear();
      for (std::size_t a = 0; a <= n; ++a)
        if (a != i && a != j) rest.push_back(tuple[a]);
      const bool base_negative = (i + j) % 2 == 1;
      for (const auto& term : lie.bracket(tuple[i], tuple[j])) {
        const auto k = term.index;
        if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
        // Sort (k, rest...) and track the sign of moving k into place.
        const auto pos = static_cast<std::size_t>(std::lower_bound(rest.begin(), rest.end(), k) - rest.begin());
        std::copy(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(pos), merged.begin());
        merged[pos] = k;
        std::copy(rest.begin() + static_cast<std::ptrdiff_t>(pos), rest.end(),
                  merged.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        const bool negative = base_negative != (pos % 2 == 1);
        row.add(columns.rank(merged) * dm + m, negative ? Scalar(-term.coeff) : term.coeff);
      }
    }
  return row.take();
}

namespace {

void check_degree(std::size_t n) {
  if (n > 3) throw std::invalid_argument("cochain degree above 3 is not supported");
}

}  // namespace

LinearSystem ce_cocycle_system(const LieAlgebra& lie, const LieModule& module, std::size_t n) {
  check_degree(n);
  if (module.lie_dim() != lie.dim()) throw std::invalid_argument("module does not belong to this Lie algebra");
  const CochainIndex cols(lie.dim(), n);
  const CochainIndex rows(lie.dim(), n + 1);
  const std::size_t dm = module.dim();
  LinearSystem system(cols.size() * dm);
  auto equations = parallel_rows(rows.size(), [&](std::size_t r, std::vector<SparseRow>& out) {
    for (std::size_t m = 0; m < dm; ++m) out.push_back(ce_differential_row(lie, module, cols, rows.tuple(r), m));
  });
  for (auto& e : equations) system.add(std::move(e));
  return system;
}

Matrix ce_differential(const LieAlgebra& lie, const LieModule& module, std::size_t n) {
  check_degree(n);
  if (module.lie_dim() != lie.dim()) throw std::invalid_argument("module does not belong to this Lie algebra");
  const CochainIndex cols(lie.dim(), n);
  const CochainIndex rows(lie.dim(), n + 1);
  const std::size_t dm = module.dim();
  Matrix d(rows.size() * dm, cols.size() * dm);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t m = 0; m < dm; ++m)
      for (const auto& e : ce_differential_row(lie, module, cols, rows.tuple(r), m)) d(r * dm + m, e.col) = e.value;
  return d;
}

bool differential_squares_to_zero(const LieAlgebra& lie, const LieModule& module, std::size_t n) {
  if (n == 0) return true;
  const auto outer = ce_cocycle_system(lie, module, n);
  const Matrix inner = ce_differential(lie, module, n - 1);
  for (const auto& row : outer.rows())
    for (std::size_t c = 0; c < inner.cols(); ++c) {
      Scalar s = 0;
      for (const auto& e : row)
        if (sgn(inner(e.col, c)) != 0) s += e.value * inner(e.col, c);
      if (sgn(s) != 0) return false;
    }
  return true;
}

CochainSpaceResult cohomology(const LieAlgebra& lie, const LieModule& module, std::size_t n) {
  if (n < 1 || n > 3) throw std::invalid_argument("cohomology degree must be 1, 2 or 3");
  if (!differential_squares_to_zero(lie, module, n)) throw std::logic_error("d o d != 0");
  auto z = ce_cocycle_system(lie, module, n).solve();
  const Matrix prev = ce_differential(lie, module, n - 1);
  auto b = Subspace::span(prev.transpose());
  if (!z.contains(b)) throw std::logic_error("coboundaries are not cocycles");
  const std::size_t h = z.dim() - b.dim();
  return CochainSpaceResult{n, z.ambient(), std::move(z), std::move(b), h};
}

Vector skew_form_from_cochain(std::span<const Scalar> cochain, std::size_t n) {
  const CochainIndex pairs(n, 2);
  if (cochain.size() != pairs.size()) throw std::invalid_argument("cochain length mismatch");
  Vector form(n * n);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto t = pairs.tuple(r);
    form[t[0] * n + t[1]] = cochain[r];
    form[t[1] * n + t[0]] = -cochain[r];
  }
  return form;
}

Vector cochain_from_skew_form(std::span<const Scalar> form, std::size_t n) {
  const CochainIndex pairs(n, 2);
  if (form.size() != n * n) throw std::invalid_argument("form length mismatch");
  Vector c(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto t = pairs.tuple(r);
    c[r] = form[t[0] * n + t[1]];
  }
  return c;
}

Subspace skew_forms_from_cochains(const Subspace& cochains, std::size_t n) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < cochains.dim(); ++i) gens.push_back(skew_form_from_cochain(cochains.basis().row(i), n));
  return Subspace::span(gens, n * n);
}

}  // namespace curalg
