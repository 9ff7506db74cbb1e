#include "curalg/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace curalg {

namespace {

std::string triple_text(const std::vector<std::size_t>& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i] + 1;
  out << ")";
  return out.str();
}

// Accumulates sum_k coeff * (x_m * x_k terms) into a dense vector.
void add_product(const StructureTable& t, std::size_t m, std::size_t k, const Scalar& coeff, Vector& out) {
  for (const auto& term : t.product(m, k)) out[term.index] += coeff * term.coeff;
}

// (x_i x_j) x_k as a dense vector.
Vector left_nested(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
  Vector out(t.dim());
  for (const auto& term : t.product(i, j)) add_product(t, term.index, k, term.coeff, out);
  return out;
}

// x_i (x_j x_k) as a dense vector.
Vector right_nested(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
  Vector out(t.dim());
  for (const auto& term : t.product(j, k)) add_product(t, i, term.index, term.coeff, out);
  return out;
}

Terms terms_from(std::span<const Scalar> coords) {
  Terms terms;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) terms.push_back({static_cast<std::uint32_t>(k), coords[k]});
  return terms;
}

}  // namespace

Scalar StructureTable::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return 0;
}

void StructureTable::set(std::size_t i, std::size_t j, std::span<const Scalar> coords) {
  if (coords.size() != dim_) throw std::invalid_argument("structure constant vector has wrong length");
  table_[i * dim_ + j] = terms_from(coords);
}

void StructureTable::set(std::size_t i, std::size_t j, Terms terms) {
  Vector dense(dim_);
  for (const auto& t : terms) {
    if (t.index >= dim_) throw std::out_of_range("structure constant index out of range");
    dense[t.index] += t.coeff;
  }
  set(i, j, dense);
}

Vector StructureTable::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("operand length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : product(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

bool StructureTable::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Terms& t) { return t.empty(); });
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::anticommutativity: return "anticommutativity";
    case Axiom::jacobi: return "jacobi";
    case Axiom::commutativity: return "commutativity";
    case Axiom::associativity: return "associativity";
    case Axiom::unit: return "unit";
    case Axiom::representation: return "representation";
    case Axiom::symmetry: return "symmetry";
    case Axiom::invariance: return "invariance";
    case Axiom::nondegeneracy: return "nondegeneracy";
  }
  return "unknown";
}

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<std::size_t> witness, const std::string& detail)
    : std::runtime_error(std::string(axiom_name(axiom)) + " violated at " + triple_text(witness) +
                         (detail.empty() ? "" : ": " + detail)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

std::optional<std::vector<std::size_t>> find_anticommutativity_violation(const StructureTable& t) {
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!t.product(i, i).empty()) return std::vector<std::size_t>{i, i};
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto& a = t.product(i, j);
      const auto& b = t.product(j, i);
      if (a.size() != b.size()) return std::vector<std::size_t>{i, j};
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].index != b[k].index || a[k].coeff != -b[k].coeff) return std::vector<std::size_t>{i, j};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_jacobi_violation(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = left_nested(t, i, j, k);
        const Vector b = left_nested(t, j, k, i);
        const Vector c = left_nested(t, k, i, j);
        for (std::size_t m = 0; m < n; ++m) sum[m] += b[m] + c[m];
        if (!is_zero(sum)) return std::vector<std::size_t>{i, j, k};
      }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_commutativity_violation(const StructureTable& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      if (t.product(i, j) != t.product(j, i)) return std::vector<std::size_t>{i, j};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_associativity_violation(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (left_nested(t, i, j, k) != right_nested(t, i, j, k)) return std::vector<std::size_t>{i, j, k};
  return std::nullopt;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureTable bracket, std::string name)
    : labels_(std::move(labels)), table_(std::move(bracket)), name_(std::move(name)) {
  if (labels_.size() != table_.dim()) throw std::invalid_argument("label count does not match dimension");
  if (auto w = find_anticommutativity_violation(table_)) throw AxiomViolation(Axiom::anticommutativity, *w, name_);
  if (auto w = find_jacobi_violation(table_)) throw AxiomViolation(Axiom::jacobi, *w, name_);
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& t : bracket(i, j)) m(t.index, j) = t.coeff;
  return m;
}

LieAlgebra& LieAlgebra::set_sl_summands(std::vector<unsigned> ranks) {
  sl_summands_ = std::move(ranks);
  return *this;
}

AssocAlgebra::AssocAlgebra(std::vector<std::string> labels, StructureTable product, bool unital,
                           std::optional<std::vector<int>> degrees, std::string name)
    : labels_(std::move(labels)), table_(std::move(product)), name_(std::move(name)), degrees_(std::move(degrees)) {
  const std::size_t n = table_.dim();
  if (labels_.size() != n) throw std::invalid_argument("label count does not match dimension");
  if (degrees_ && degrees_->size() != n) throw std::invalid_argument("degree count does not match dimension");
  if (auto w = find_commutativity_violation(table_)) throw AxiomViolation(Axiom::commutativity, *w, name_);
  if (auto w = find_associativity_violation(table_)) throw AxiomViolation(Axiom::associativity, *w, name_);
  if (!unital) return;
  // Solve e * x_j = x_j for all j: unknowns e_0..e_{n-1} plus a homogenising s.
  LinearSystem system(n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      RowBuilder row;
      for (std::size_t i = 0; i < n; ++i) row.add(i, table_.coefficient(i, j, k));
      if (j == k) row.add(n, Scalar(-1));
      system.add(row.take());
    }
  const auto solutions = system.solve();
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    const auto v = solutions.basis().row(r);
    if (sgn(v[n]) == 0) continue;
    Vector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = v[i] / v[n];
    unit_ = std::move(e);
    return;
  }
  throw AxiomViolation(Axiom::unit, {}, "no two-sided identity exists" + (name_.empty() ? "" : " in " + name_));
}

AssocAlgebra& AssocAlgebra::set_truncation_order(std::size_t n) {
  if (n < 2 || dim() != n - 1) throw std::invalid_argument("truncation order inconsistent with dimension");
  truncation_order_ = n;
  return *this;
}

CurrentAlgebra::CurrentAlgebra(LieAlgebra lie, AssocAlgebra assoc)
    : lie_(std::move(lie)),
      assoc_(std::move(assoc)),
      algebra_([&] {
        const std::size_t nl = lie_.dim();
        const std::size_t na = assoc_.dim();
        StructureTable t(nl * na);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < nl; ++i)
          for (std::size_t p = 0; p < na; ++p) labels.push_back(lie_.labels()[i] + "*" + assoc_.labels()[p]);
        for (std::size_t i = 0; i < nl; ++i)
          for (std::size_t p = 0; p < na; ++p)
            for (std::size_t j = 0; j < nl; ++j)
              for (std::size_t q = 0; q < na; ++q) {
                Terms terms;
                for (const auto& c : lie_.bracket(i, j))
                  for (const auto& m : assoc_.product(p, q))
                    terms.push_back({static_cast<std::uint32_t>(c.index * na + m.index), c.coeff * m.coeff});
                std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
                t.set(i * na + p, j * na + q, std::move(terms));
              }
        std::string name = lie_.name().empty() && assoc_.name().empty() ? "" : lie_.name() + "(x)" + assoc_.name();
        return LieAlgebra(std::move(labels), std::move(t), std::move(name));
      }()) {
  if (assoc_.degrees()) {
    std::vector<int> deg;
    for (std::size_t i = 0; i < lie_.dim(); ++i)
      for (std::size_t p = 0; p < assoc_.dim(); ++p) deg.push_back((*assoc_.degrees())[p]);
    degrees_ = std::move(deg);
  }
}

CurrentAlgebra current(const LieAlgebra& lie, const AssocAlgebra& assoc) { return CurrentAlgebra(lie, assoc); }

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::skew: return "skew";
    case Symmetry::none: return "none";
  }
  return "none";
}

BilinearForm BilinearForm::classify(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("bilinear form matrix must be square");
  const Matrix t = m.transpose();
  Symmetry s = Symmetry::none;
  if (t == m) {
    s = Symmetry::symmetric;
  } else if (t == Scalar(-1) * m) {
    s = Symmetry::skew;
  }
  return BilinearForm{std::move(m), s};
}

Scalar BilinearForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  return dot(x, apply(matrix, y));
}

Subspace derived_subalgebra(const LieAlgebra& lie) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      Vector v(lie.dim());
      for (const auto& t : lie.bracket(i, j)) v[t.index] = t.coeff;
      gens.push_back(std::move(v));
    }
  return Subspace::span(gens, lie.dim());
}

namespace {

// {z : z * x_j = 0 for all j}.
Subspace left_annihilator(const StructureTable& t) {
  const std::size_t n = t.dim();
  LinearSystem system(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      RowBuilder row;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& term : t.product(i, j))
          if (term.index == k) row.add(i, term.coeff);
      system.add(row.take());
    }
  return system.solve();
}

}  // namespace

Subspace center_lie(const LieAlgebra& lie) { return left_annihilator(lie.table()); }

Subspace annihilator_assoc(const AssocAlgebra& assoc) { return left_annihilator(assoc.table()); }

Subspace square_assoc(const AssocAlgebra& assoc) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < assoc.dim(); ++i)
    for (std::size_t j = i; j < assoc.dim(); ++j) {
      Vector v(assoc.dim());
      for (const auto& t : assoc.product(i, j)) v[t.index] = t.coeff;
      gens.push_back(std::move(v));
    }
  return Subspace::span(gens, assoc.dim());
}

BilinearForm killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(lie.ad(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  if (!is_invariant(lie, k)) throw std::logic_error("Killing form failed the invariance check");
  return BilinearForm{std::move(k), Symmetry::symmetric};
}

BilinearForm residue_form(const AssocAlgebra& assoc) {
  const auto order = assoc.truncation_order();
  if (!order) throw std::invalid_argument("residue form needs the non-unital truncated polynomial algebra tK[t]/(t^n)");
  const std::size_t n = *order;
  Matrix m(n - 1, n - 1);
  // Basis element p is t^{p+1}.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (i + j == n) m(i - 1, j - 1) = 1;
  auto form = BilinearForm::classify(std::move(m));
  if (form.symmetry != Symmetry::symmetric || !is_nondegenerate(form.matrix) || !is_invariant(assoc, form.matrix))
    throw std::logic_error("residue form failed its symmetry/nondegeneracy/invariance checks");
  return form;
}

bool is_invariant(const LieAlgebra& lie, const Matrix& form) {
  const std::size_t n = lie.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar s = 0;
        for (const auto& t : lie.bracket(x, y)) s += t.coeff * form(t.index, z);
        for (const auto& t : lie.bracket(x, z)) s += t.coeff * form(y, t.index);
        if (sgn(s) != 0) return false;
      }
  return true;
}

bool is_invariant(const AssocAlgebra& assoc, const Matrix& form) {
  const std::size_t n = assoc.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar s = 0;
        for (const auto& t : assoc.product(a, b)) s += t.coeff * form(t.index, c);
        for (const auto& t : assoc.product(b, c)) s -= t.coeff * form(a, t.index);
        if (sgn(s) != 0) return false;
      }
  return true;
}

bool is_nondegenerate(const Matrix& form) {
  return form.rows() == form.cols() && rref(form).rank() == form.rows();
}

}  // namespace curalg
