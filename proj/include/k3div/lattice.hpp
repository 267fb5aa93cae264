#pragma once

// Integral quadratic lattices given by symmetric Gram matrices.
//
// Root lattices follow the negative-definite convention: the Gram matrix of
// A_n, D_n, E_n is the negated Cartan matrix, scaled on request.

#include <k3div/numeric.hpp>

#include <set>
#include <string>
#include <vector>

namespace k3div {

enum class Symbol { A, D, E, U };

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct InvariantsRecord {
  std::size_t rank = 0;
  Integer determinant = 1;
  Signature signature;
};

class Lattice {
 public:
  Lattice() = default;

  explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {})
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.square()) throw Error("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw Error("Gram matrix is not symmetric");
    if (labels_.empty()) {
      for (std::size_t i = 0; i < gram_.rows(); ++i)
        labels_.push_back("e" + std::to_string(i + 1));
    }
    if (labels_.size() != gram_.rows())
      throw Error("label count does not match the rank");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error("labels are not distinct");
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }

  Rational pair(const RatVector& u, const RatVector& v) const {
    check_length(u);
    check_length(v);
    return bilinear(to_rational(gram_), u, v);
  }

  Rational norm(const RatVector& v) const { return pair(v, v); }

  /// Pairings of v with every basis vector (G v).
  RatVector pairings(const RatVector& v) const {
    check_length(v);
    return multiply(to_rational(gram_), v);
  }

  void check_length(const RatVector& v) const {
    if (v.size() != rank())
      throw Error("vector length " + std::to_string(v.size()) +
                  " does not match lattice rank " + std::to_string(rank()));
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// Rational coordinates of a vector in a lattice's generator basis.
struct LatticeVector {
  RatVector coords;
};

namespace detail {

inline IntMatrix cartan(Symbol symbol, int n) {
  IntMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto link = [&c](int i, int j) {
    c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = -1;
    c(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -1;
  };
  for (int i = 0; i < n; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 2;
  switch (symbol) {
    case Symbol::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Symbol::D:
      // chain 1..n-1, node n attached to node n-2
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Symbol::E:
      // Bourbaki numbering: 1-3-4-5-...-n chain, node 2 attached to node 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Symbol::U:
      break;
  }
  return c;
}

}  // namespace detail

/// Standard root lattice (negative definite) or hyperbolic plane, scaled.
inline Lattice make_standard(Symbol symbol, int n, long scale = 1) {
  if (scale == 0) throw Error("scale must be nonzero");
  if (symbol == Symbol::U) {
    IntMatrix g(2, 2);
    g(0, 1) = scale;
    g(1, 0) = scale;
    return Lattice(std::move(g));
  }
  if (symbol == Symbol::A && n < 1) throw Error("A_n requires n >= 1");
  if (symbol == Symbol::D && n < 4) throw Error("D_n requires n >= 4");
  if (symbol == Symbol::E && (n < 6 || n > 8))
    throw Error("E_n requires n in {6, 7, 8}");
  IntMatrix c = detail::cartan(symbol, n);
  IntMatrix g(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) g(i, j) = -scale * c(i, j);
  return Lattice(std::move(g));
}

inline Lattice direct_sum(const std::vector<Lattice>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rank();
  IntMatrix g(total, total);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.rank(); ++i) {
      for (std::size_t j = 0; j < p.rank(); ++j)
        g(offset + i, offset + j) = p.gram()(i, j);
      labels.push_back(std::to_string(k + 1) + "." + p.labels()[i]);
    }
    offset += p.rank();
  }
  return Lattice(std::move(g), std::move(labels));
}

inline Lattice rescale(const Lattice& l, long n) {
  if (n == 0) throw Error("scale must be nonzero");
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
  return Lattice(std::move(g), l.labels());
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
/// When every remaining diagonal entry vanishes, a nonzero off-diagonal entry
/// a_ij is moved onto the diagonal by adding row/column j to row/column i.
inline Signature signature_of(const RatMatrix& input) {
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        sig.zero += static_cast<int>(n - k);
        return sig;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    a.swap_rows(k, p);
    a.swap_cols(k, p);
    Rational pivot = a(k, k);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = k; c < n; ++c) a(c, r) = a(r, c);
    }
  }
  return sig;
}

inline InvariantsRecord invariants(const Lattice& l) {
  InvariantsRecord rec;
  rec.rank = l.rank();
  rec.determinant = bareiss_determinant(l.gram());
  rec.signature = signature_of(to_rational(l.gram()));
  return rec;
}

/// Inverse Gram matrix; row i holds the i-th dual basis vector.
inline RatMatrix dual_gram(const Lattice& l) {
  auto inv = inverse(to_rational(l.gram()));
  if (!inv) throw Error("lattice is degenerate");
  return *inv;
}

/// True when v has integral pairing with every generator (v in L^dual).
inline bool in_dual(const Lattice& l, const RatVector& v) {
  for (const auto& q : l.pairings(v))
    if (!is_integral(q)) return false;
  return true;
}

/// Gram matrix of the vectors given as rows of `basis` (ambient coordinates).
inline RatMatrix restricted_gram(const Lattice& ambient, const RatMatrix& basis) {
  return basis * to_rational(ambient.gram()) * basis.transpose();
}

}  // namespace k3div
