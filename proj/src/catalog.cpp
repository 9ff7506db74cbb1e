#include "curalg/catalog.hpp"

#include <charconv>
#include <stdexcept>
#include <variant>

#include "curalg/algebra_io.hpp"

namespace curalg::catalog {

namespace {

Matrix unit_matrix(unsigned n, unsigned i, unsigned j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::size_t parse_count(std::string_view text, std::string_view descriptor) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw std::invalid_argument("bad size in algebra descriptor '" + std::string(descriptor) + "'");
  return value;
}

}  // namespace

LieAlgebra from_matrices(std::vector<std::string> labels, const std::vector<Matrix>& basis, std::string name) {
  const std::size_t d = basis.size();
  if (d == 0) return LieAlgebra(std::move(labels), StructureTable(0), std::move(name));
  const std::size_t side = basis[0].rows();
  // Columns are the flattened basis matrices; solving against them gives coordinates.
  Matrix columns(side * side, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < side; ++r)
      for (std::size_t c = 0; c < side; ++c) columns(r * side + c, k) = basis[k](r, c);

  StructureTable table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      Matrix augmented(side * side, d + 1);
      for (std::size_t r = 0; r < side * side; ++r) {
        for (std::size_t k = 0; k < d; ++k) augmented(r, k) = columns(r, k);
        augmented(r, d) = comm(r / side, r % side);
      }
      const auto echelon = rref(augmented);
      if (echelon.rank() != d || (echelon.rank() > 0 && echelon.pivots.back() == d))
        throw std::invalid_argument("matrix basis is dependent or not closed under commutators");
      Vector coords(d);
      for (std::size_t r = 0; r < echelon.rank(); ++r) coords[echelon.pivots[r]] = echelon.reduced(r, d);
      table.set(i, j, coords);
    }
  return LieAlgebra(std::move(labels), std::move(table), std::move(name));
}

LieAlgebra sl(unsigned n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  std::vector<std::string> labels;
  std::vector<Matrix> basis;
  if (n == 2) {
    Matrix em(2, 2), h(2, 2), ep(2, 2);
    em(1, 0) = Scalar(-1, 2);
    h(0, 0) = Scalar(1, 2);
    h(1, 1) = Scalar(-1, 2);
    ep(0, 1) = 1;
    labels = {"e-", "h", "e+"};
    basis = {em, h, ep};
  } else {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < i; ++j) {
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        basis.push_back(unit_matrix(n, i, j));
      }
    for (unsigned i = 0; i + 1 < n; ++i) {
      labels.push_back("h" + std::to_string(i + 1));
      basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
    }
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        basis.push_back(unit_matrix(n, i, j));
      }
  }
  auto algebra = from_matrices(std::move(labels), basis, "sl" + std::to_string(n));
  algebra.set_sl_summands({n});
  return algebra;
}

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), StructureTable(n), "abelian:" + std::to_string(n));
}

LieAlgebra heisenberg3() {
  StructureTable t(3);
  t.set(0, 1, Terms{{2, Scalar(1)}});
  t.set(1, 0, Terms{{2, Scalar(-1)}});
  return LieAlgebra({"x", "y", "z"}, std::move(t), "heis3");
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  StructureTable t(total);
  std::vector<std::string> labels;
  std::string name = "sum:";
  std::vector<unsigned> ranks;
  bool all_sl = true;
  std::size_t offset = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const auto& p = parts[s];
    const std::string prefix = p.name().empty() ? "s" + std::to_string(s + 1) : p.name();
    for (const auto& l : p.labels()) labels.push_back(prefix + "." + l);
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) {
        Terms shifted;
        for (const auto& term : p.bracket(i, j))
          shifted.push_back({static_cast<std::uint32_t>(term.index + offset), term.coeff});
        t.set(i + offset, j + offset, std::move(shifted));
      }
    offset += p.dim();
    name += (s ? "+" : "") + p.name();
    if (p.sl_summands()) {
      ranks.insert(ranks.end(), p.sl_summands()->begin(), p.sl_summands()->end());
    } else {
      all_sl = false;
    }
  }
  LieAlgebra sum(std::move(labels), std::move(t), std::move(name));
  if (all_sl) sum.set_sl_summands(std::move(ranks));
  return sum;
}

AssocAlgebra truncated_poly(std::size_t n, bool unital) {
  if (unital ? n < 1 : n < 2) throw std::invalid_argument("truncated polynomial algebra would be zero-dimensional");
  const std::size_t low = unital ? 0 : 1;
  const std::size_t dim = n - low;
  StructureTable t(dim);
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t a = low; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a));
    degrees.push_back(static_cast<int>(a));
  }
  for (std::size_t a = low; a < n; ++a)
    for (std::size_t b = low; b < n; ++b)
      if (a + b < n) t.set(a - low, b - low, Terms{{static_cast<std::uint32_t>(a + b - low), Scalar(1)}});
  AssocAlgebra algebra(std::move(labels), std::move(t), unital, std::move(degrees),
                       (unital ? "tpoly1:" : "tpoly:") + std::to_string(n));
  if (!unital) algebra.set_truncation_order(n);
  return algebra;
}

AssocAlgebra zero_mult(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return AssocAlgebra(std::move(labels), StructureTable(n), false, std::nullopt, "zero:" + std::to_string(n));
}

LieAlgebra lie_from_descriptor(std::string_view d) {
  if (d == "heis3") return heisenberg3();
  if (d.starts_with("abelian:")) return abelian(parse_count(d.substr(8), d));
  if (d.starts_with("sum:")) {
    std::vector<LieAlgebra> parts;
    std::string_view rest = d.substr(4);
    while (!rest.empty()) {
      const auto plus = rest.find('+');
      parts.push_back(lie_from_descriptor(rest.substr(0, plus)));
      if (plus == std::string_view::npos) break;
      rest = rest.substr(plus + 1);
    }
    if (parts.empty()) throw std::invalid_argument("empty direct sum descriptor");
    return direct_sum(parts);
  }
  if (d.starts_with("sl") && d.size() > 2 && d.find_first_not_of("0123456789", 2) == std::string_view::npos)
    return sl(static_cast<unsigned>(parse_count(d.substr(2), d)));
  auto parsed = parse_algebra_file(std::string(d));
  if (auto* lie = std::get_if<LieAlgebra>(&parsed)) return std::move(*lie);
  throw std::invalid_argument("'" + std::string(d) + "' describes an associative algebra, expected a Lie algebra");
}

AssocAlgebra assoc_from_descriptor(std::string_view d) {
  if (d.starts_with("tpoly:")) return truncated_poly(parse_count(d.substr(6), d), false);
  if (d.starts_with("tpoly1:")) return truncated_poly(parse_count(d.substr(7), d), true);
  if (d.starts_with("zero:")) return zero_mult(parse_count(d.substr(5), d));
  auto parsed = parse_algebra_file(std::string(d));
  if (auto* assoc = std::get_if<AssocAlgebra>(&parsed)) return std::move(*assoc);
  throw std::invalid_argument("'" + std::string(d) + "' describes a Lie algebra, expected an associative algebra");
}

}  // namespace curalg::catalog
