#pragma once

// Smith and Hermite normal forms over the integers, plus the lattice
// utilities built on them: integer kernels, saturation and integral solves.

#include <k3div/numeric.hpp>

namespace k3div {

/// left * input * right == diag, with left/right unimodular and the diagonal
/// entries d_1 | d_2 | ... nonnegative.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diag;
  IntMatrix right;

  std::size_t rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(diag.rows(), diag.cols());
    while (r < n && diag(r, r) != 0) ++r;
    return r;
  }

  IntVector diagonal() const {
    IntVector d;
    const std::size_t n = std::min(diag.rows(), diag.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(diag(i, i));
    return d;
  }
};

namespace detail {

inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += f * m(src, j);
}

inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += f * m(i, src);
}

}  // namespace detail

/// Pivots are chosen by minimal nonzero absolute value.
inline SmithDecomposition smith_normal_form(const IntMatrix& input) {
  using detail::add_col;
  using detail::add_row;
  using detail::tdiv;
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    a.swap_rows(t, i);
    left.swap_rows(t, i);
    a.swap_cols(t, j);
    right.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (bi == m || abs_of(a(i, j)) < abs_of(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    move_to(t, bi, bj);

    while (true) {
      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = tdiv(a(i, t), a(t, t));
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = tdiv(a(t, j), a(t, t));
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a(t, j) != 0) clear = false;
      }
      if (!clear) {
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs_of(a(i, t)) < abs_of(a(pi, pj))) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs_of(a(t, j)) < abs_of(a(pi, pj))) {
            pi = t;
            pj = j;
          }
        move_to(t, pi, pj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(a, t, bad, Integer(1));
      add_row(left, t, bad, Integer(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) left(t, j) = -left(t, j);
    }
  }
  return {std::move(left), std::move(a), std::move(right)};
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`:
/// upper echelon, positive pivots, entries above each pivot in [0, pivot).
/// Zero rows are dropped, so the result is a basis.
inline IntMatrix hermite_rows(IntMatrix a) {
  using detail::add_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool pivot = false;
    while (true) {
      std::size_t p = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (p == a.rows() || abs_of(a(i, c)) < abs_of(a(p, c)))) p = i;
      if (p == a.rows()) break;
      pivot = true;
      a.swap_rows(r, p);
      bool rest_zero = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        add_row(a, i, r, -detail::tdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) rest_zero = false;
      }
      if (rest_zero) break;
    }
    if (!pivot) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i)
      add_row(a, i, r, -detail::fdiv(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Hermite basis of the Z-module spanned by rational row vectors.
/// Returns the basis rows (rational) of that module.
inline RatMatrix hermite_rows(const RatMatrix& rows) {
  Integer d = common_denominator(rows);
  IntMatrix scaled(rows.rows(), rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j)
      scaled(i, j) = Rational(rows(i, j) * d).get_num();
  IntMatrix h = hermite_rows(std::move(scaled));
  RatMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = make_rational(h(i, j), d);
  return out;
}

/// Basis (as rows, in Hermite form) of { x in Z^n : a x = 0 }.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const std::size_t n = a.cols();
  IntMatrix k(n - r, n);
  for (std::size_t c = r; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(c - r, i) = snf.right(i, c);
  return hermite_rows(std::move(k));
}

struct Saturation {
  IntMatrix basis;  // rows: Hermite basis of (Q-span of input) cap Z^n
  Integer index;    // [saturation : span of input]
};

/// Saturation of the span of independent integral row vectors.
inline Saturation saturate(const IntMatrix& rows) {
  auto snf = smith_normal_form(rows);
  const std::size_t r = snf.rank();
  if (r != rows.rows()) throw Error("sub vectors are linearly dependent");
  auto rinv = inverse(to_rational(snf.right));
  IntMatrix full = to_integer(*rinv);
  IntMatrix b(r, rows.cols());
  Integer index = 1;
  for (std::size_t i = 0; i < r; ++i) {
    index *= snf.diag(i, i);
    for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = full(i, j);
  }
  return {hermite_rows(std::move(b)), index};
}

/// Integral solution of a x = b, decided through the Smith form of a.
inline std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error("right-hand side dimension mismatch");
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntVector lb(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) lb[i] += snf.left(i, j) * b[j];
  IntVector z(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < r) {
      if (lb[i] % snf.diag(i, i) != 0) return std::nullopt;
      z[i] = lb[i] / snf.diag(i, i);
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector x(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) x[i] += snf.right(i, j) * z[j];
  return x;
}

}  // namespace k3div
