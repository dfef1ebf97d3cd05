#include "chirality/exact/matrix.hpp"

#include <algorithm>
#include <utility>

namespace chirality::exact {
namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_target -= q * row_source
void subtract_row(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) m(target, j) -= q * m(source, j);
  }
}

bool row_is_zero(const IntMatrix& m, std::size_t i, std::size_t upto) {
  for (std::size_t j = 0; j < upto; ++j)
    if (m(i, j) != 0) return false;
  return true;
}

// Integer row echelon form pivoting only on the first `pivot_cols` columns.
// Row operations are unimodular and applied to full rows. Returns the number
// of pivot rows; rows at or beyond it vanish on the pivot columns. When
// `reduce_above` is set, entries above each pivot are brought into [0, pivot).
std::size_t integer_echelon(IntMatrix& a, std::size_t pivot_cols, bool reduce_above) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = row; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        if (best == a.rows() || abs(a(i, col)) < abs(a(best, col))) best = i;
      }
      if (best == a.rows()) break;
      swap_rows(a, row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
        subtract_row(a, i, row, q);
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
    }
    if (reduce_above) {
      for (std::size_t i = 0; i < row; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
        subtract_row(a, i, row, q);
      }
    }
    ++row;
  }
  return row;
}

std::vector<std::size_t> pivot_columns_of(const IntMatrix& hnf) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    std::size_t j = 0;
    while (j < hnf.cols() && hnf(i, j) == 0) ++j;
    if (j == hnf.cols()) throw std::invalid_argument("Hermite basis has a zero row");
    pivots.push_back(j);
  }
  return pivots;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<mpq_class> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

mpz_class determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      swap_rows(a, k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  RatMatrix h = to_rational(m);

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h(r, c) == 0) continue;
      const mpq_class u = h(r, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(c + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) += u * h(i, r);
    }
  }

  // p_k = (X - h_kk) p_{k-1} - sum_m h_{k-m,k} (prod_{j=k-m+1}^{k} h_{j,j-1}) p_{k-m-1}
  std::vector<RatPolynomial> p{RatPolynomial::constant(1)};
  const RatPolynomial x = RatPolynomial::monomial(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    RatPolynomial next = (x - RatPolynomial::constant(h(k, k))) * p[k];
    mpq_class prod = 1;
    for (std::size_t m2 = 1; m2 <= k; ++m2) {
      prod *= h(k - m2 + 1, k - m2);
      if (prod == 0) break;
      next = next - (h(k - m2, k) * prod) * p[k - m2];
    }
    p.push_back(std::move(next));
  }
  std::vector<mpz_class> coeffs;
  for (const auto& c : p.back().coefficients()) {
    if (c.get_den() != 1) throw std::logic_error("char_poly: non-integral coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

IntMatrix companion_matrix(const IntPolynomial& monic) {
  if (monic.degree() < 1 || monic.leading() != 1) {
    throw std::invalid_argument("companion_matrix: polynomial must be monic of degree >= 1");
  }
  const auto n = static_cast<std::size_t>(monic.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
  return c;
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const mpq_class inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const mpq_class f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rational_rank(const IntMatrix& m) { return rref(to_rational(m)).pivot_columns.size(); }

std::optional<std::vector<mpq_class>> rational_solve(const RatMatrix& a, const std::vector<mpq_class>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rational_solve: size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
  std::vector<mpq_class> x(a.cols(), mpq_class(0));
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) x[e.pivot_columns[r]] = e.reduced(r, a.cols());
  return x;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  require_square(m, "integer_inverse");
  const mpz_class d = determinant(m);
  if (abs(d) != 1) throw std::domain_error("integer_inverse: determinant is not +-1");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = e.reduced(i, n + j);
      if (v.get_den() != 1) throw std::logic_error("integer_inverse: non-integral entry");
      inv(i, j) = v.get_num();
    }
  return inv;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rank = integer_echelon(a, a.cols(), /*reduce_above=*/true);
  std::vector<mpz_class> e(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(rank * a.cols()));
  return IntMatrix(rank, a.cols(), std::move(e));
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t n = a.cols();
  // Rows of [A^T | I]; a unimodular echelon on the first r columns leaves the
  // kernel basis in the identity part of the rows that vanish on A^T.
  IntMatrix aug(n, r + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = a(j, i);
    aug(i, r + i) = 1;
  }
  const std::size_t rank = integer_echelon(aug, r, /*reduce_above=*/false);
  IntMatrix basis(n - rank, n);
  for (std::size_t i = rank; i < n; ++i) {
    if (!row_is_zero(aug, i, r)) throw std::logic_error("integer_kernel: echelon invariant broken");
    for (std::size_t j = 0; j < n; ++j) basis(i - rank, j) = aug(i, r + j);
  }
  return hermite_normal_form(basis);
}

std::optional<std::vector<mpz_class>> lattice_coordinates(const IntMatrix& hnf, const std::vector<mpz_class>& v) {
  if (v.size() != hnf.cols()) throw std::invalid_argument("lattice_coordinates: size mismatch");
  const auto pivots = pivot_columns_of(hnf);
  std::vector<mpz_class> rest = v;
  std::vector<mpz_class> coords(hnf.rows());
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    const mpz_class& p = hnf(i, pivots[i]);
    if (!mpz_divisible_p(rest[pivots[i]].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    coords[i] = rest[pivots[i]] / p;
    for (std::size_t j = 0; j < hnf.cols(); ++j) rest[j] -= coords[i] * hnf(i, j);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

void enumerate_lattice_box(const IntMatrix& hnf, const mpz_class& bound,
                           const std::function<void(const std::vector<mpz_class>&)>& visit,
                           const ProgressHook& progress) {
  const auto pivots = pivot_columns_of(hnf);
  const std::size_t k = hnf.rows();
  const std::size_t m = hnf.cols();
  std::vector<mpz_class> partial(m, mpz_class(0));
  std::uint64_t visited = 0;

  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    // Columns before this row's pivot are final once rows < i are chosen.
    const std::size_t settled = i < k ? pivots[i] : m;
    for (std::size_t j = 0; j < settled; ++j)
      if (abs(partial[j]) > bound) return;
    if (i == k) {
      ++visited;
      if (progress && visited % 4096 == 0 && !progress(visited)) throw Cancelled();
      visit(partial);
      return;
    }
    const mpz_class& h = hnf(i, pivots[i]);
    const mpz_class s = partial[pivots[i]];
    mpz_class lo = -bound - s;
    mpz_class hi = bound - s;
    mpz_cdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), h.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), h.get_mpz_t());
    for (mpz_class c = lo; c <= hi; ++c) {
      for (std::size_t j = 0; j < m; ++j)
        if (hnf(i, j) != 0) partial[j] += c * hnf(i, j);
      descend(i + 1);
      for (std::size_t j = 0; j < m; ++j)
        if (hnf(i, j) != 0) partial[j] -= c * hnf(i, j);
    }
  };
  descend(0);
}

IntMatrix intertwiner_lattice_hnf(const IntMatrix& f1, const IntMatrix& f2) {
  require_square(f1, "intertwiner_lattice");
  require_square(f2, "intertwiner_lattice");
  if (f1.rows() != f2.rows()) throw std::invalid_argument("intertwiner_lattice: size mismatch");
  const std::size_t n = f1.rows();
  // Unknown g_{ab} sits at index a*n + b; equation (i,j) is (G F1 - F2 G)_{ij} = 0.
  IntMatrix system(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        system(i * n + j, i * n + k) += f1(k, j);
        system(i * n + j, k * n + j) -= f2(i, k);
      }
  return integer_kernel(system);
}

IntMatrix unflatten(const std::vector<mpz_class>& row_major, std::size_t n) {
  return IntMatrix(n, n, row_major);
}

std::vector<IntMatrix> intertwiner_lattice(const IntMatrix& f1, const IntMatrix& f2) {
  const IntMatrix basis = intertwiner_lattice_hnf(f1, f2);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) out.push_back(unflatten(basis.row(i), f1.rows()));
  return out;
}

}  // namespace chirality::exact
