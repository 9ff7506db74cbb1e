#include "curalg/pencil.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "curalg/echelon.hpp"

namespace curalg {

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pick = c;
    while (pick < n && sgn(m(pick, c)) == 0) ++pick;
    if (pick == n) return 0;
    if (pick != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(pick, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Scalar evaluate(const Polynomial& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolation needs matching point lists");
  // Newton divided differences, then expand the nested form.
  std::vector<Scalar> coef(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k]);
  Polynomial p(n, Scalar(0));
  for (std::size_t k = n; k-- > 0;) {
    // p = p * (x - xs[k]) + coef[k]
    Polynomial next(n, Scalar(0));
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += p[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= xs[k] * p[i];
    next[0] += coef[k];
    p = std::move(next);
  }
  return p;
}

namespace {

constexpr std::size_t kDivisorCap = 20000;

void trim(Polynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Prime factorization by trial division; a leftover cofactor is kept as a
// single factor and `exact` cleared if it is not (probably) prime.
std::map<mpz_class, unsigned> factorize(mpz_class n, bool& exact) {
  std::map<mpz_class, unsigned> f;
  n = abs(n);
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; d += (d == 2 ? 1 : 2))
    while (n % d == 0) {
      ++f[mpz_class(d)];
      n /= d;
    }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) == 0) exact = false;
    ++f[n];
  }
  return f;
}

std::vector<mpz_class> divisors(const mpz_class& n, bool& exact) {
  std::vector<mpz_class> out{1};
  for (const auto& [prime, mult] : factorize(n, exact)) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
      if (out.size() > kDivisorCap) {
        exact = false;
        return out;
      }
    }
  }
  return out;
}

// Divides p by (x - r), assuming r is a root.
Polynomial deflate(const Polynomial& p, const Scalar& r) {
  Polynomial q(p.size() - 1);
  Scalar carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

RationalRoots rational_roots(Polynomial p) {
  RationalRoots out;
  trim(p);
  if (p.size() <= 1) return out;

  std::vector<Scalar> found;
  while (sgn(p.front()) == 0) {
    p.erase(p.begin());
    if (found.empty()) found.push_back(0);
  }

  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class a0 = Scalar(p.front() * lcm_den).get_num();
  const mpz_class an = Scalar(p.back() * lcm_den).get_num();

  bool exact = true;
  const auto ps = divisors(a0, exact);
  const auto qs = divisors(an, exact);
  std::vector<Scalar> candidates;
  for (const auto& num : ps)
    for (const auto& den : qs) {
      Scalar c(num, den);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& c : candidates) {
    if (p.size() <= 1) break;
    if (sgn(evaluate(p, c)) != 0) continue;
    found.push_back(c);
    while (p.size() > 1 && sgn(evaluate(p, c)) == 0) p = deflate(p, c);
  }
  std::sort(found.begin(), found.end());
  out.roots = std::move(found);
  out.remaining_degree = p.size() - 1;
  out.exhaustive = exact;
  return out;
}

Subspace pencil_kernel(const Matrix& m1, const Matrix& m2, const Scalar& lambda) {
  return kernel_basis(m1 - lambda * m2);
}

const LambdaSolution* PencilCandidates::find(const Scalar& lambda) const {
  for (const auto& s : solutions)
    if (s.lambda == lambda) return &s;
  return nullptr;
}

namespace {

Polynomial pencil_determinant(const Matrix& a1, const Matrix& a2) {
  const std::size_t n = a1.cols();
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(determinant(a1 - xs.back() * a2));
  }
  auto p = interpolate(xs, ys);
  trim(p);
  return p;
}

void add_solution(std::vector<LambdaSolution>& sols, const Matrix& m1, const Matrix& m2, const Scalar& lambda) {
  for (const auto& s : sols)
    if (s.lambda == lambda) return;
  auto space = pencil_kernel(m1, m2, lambda);
  if (space.dim() > 0) sols.push_back({lambda, std::move(space)});
}

std::optional<bool> projection_check(const Matrix& m1, const Matrix& m2, std::uint64_t seed,
                                     const std::vector<LambdaSolution>& expected) {
  const std::size_t n = m1.cols();
  if (n == 0 || n > 16 || m1.rows() < n) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::optional<std::vector<Scalar>> common;
  for (int round = 0; round < 3; ++round) {
    Matrix p(n, m1.rows());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m1.rows(); ++j) p(i, j) = entry(rng);
    const auto poly = pencil_determinant(p * m1, p * m2);
    if (poly.empty()) continue;  // unlucky projection
    auto roots = rational_roots(poly).roots;
    if (!common) {
      common = std::move(roots);
    } else {
      std::vector<Scalar> keep;
      std::set_intersection(common->begin(), common->end(), roots.begin(), roots.end(), std::back_inserter(keep));
      common = std::move(keep);
    }
  }
  if (!common) return std::nullopt;
  std::vector<Scalar> verified;
  for (const auto& r : *common)
    if (pencil_kernel(m1, m2, r).dim() > 0) verified.push_back(r);
  std::vector<Scalar> want;
  for (const auto& s : expected) want.push_back(s.lambda);
  return verified == want;
}

}  // namespace

PencilCandidates pencil_candidates(const Matrix& m1, const Matrix& m2, std::uint64_t seed,
                                   const std::vector<Scalar>& forced) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw std::invalid_argument("pencil matrices differ in shape");
  const std::size_t n = m1.cols();
  PencilCandidates out;

  // A regular pencil fails to be injective at no more than n points.
  std::optional<Scalar> sigma;
  std::size_t smallest = n;
  for (std::size_t k = 0; k < n + 2; ++k) {
    Scalar s(static_cast<long>(3 + 2 * k), 7L);
    s.canonicalize();
    const auto ker = pencil_kernel(m1, m2, s);
    smallest = std::min(smallest, ker.dim());
    if (ker.dim() == 0) {
      sigma = s;
      break;
    }
  }
  if (!sigma) {
    out.degenerate = true;
    out.generic_dim = smallest;
    for (const auto& f : forced) add_solution(out.solutions, m1, m2, f);
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
    return out;
  }

  // Largest subspace U with M2 U inside M(sigma) U; it carries every
  // eigenvector, and M(sigma)^{-1} M2 restricts to an operator C on it.
  const Matrix ms = m1 - *sigma * m2;
  Subspace u = Subspace::full(n);
  for (;;) {
    auto next = preimage(m2, u, image(ms, u));
    if (next.dim() == u.dim()) break;
    u = std::move(next);
  }
  const std::size_t k = u.dim();
  if (k > 0) {
    const Matrix ut = u.basis().transpose();
    const Matrix b = ms * ut;
    const Matrix r = m2 * ut;
    Matrix aug(b.rows(), 2 * k);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < k; ++j) {
        aug(i, j) = b(i, j);
        aug(i, k + j) = r(i, j);
      }
    const auto ech = rref(aug);
    Matrix c(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c(i, j) = ech.reduced(i, k + j);

    std::vector<Scalar> xs, ys;
    for (std::size_t t = 0; t <= k; ++t) {
      xs.emplace_back(static_cast<long>(t));
      ys.push_back(determinant(xs.back() * Matrix::identity(k) - c));
    }
    const auto roots = rational_roots(interpolate(xs, ys));
    out.irrational_locus_degree = roots.remaining_degree;
    out.exhaustive = roots.exhaustive;
    // M2 d = theta M(sigma) d  <=>  M1 d = (sigma + 1/theta) M2 d.
    for (const auto& theta : roots.roots)
      if (sgn(theta) != 0) add_solution(out.solutions, m1, m2, *sigma + 1 / theta);
  }
  for (const auto& f : forced) add_solution(out.solutions, m1, m2, f);
  std::sort(out.solutions.begin(), out.solutions.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  out.projection_roots_agree = projection_check(m1, m2, seed, out.solutions);
  return out;
}

}  // namespace curalg
