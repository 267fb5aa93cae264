#pragma once

// Independent oracles and seeded generators shared by the unit tests and the
// acceptance binary. Every property returns nullopt on success or a message
// describing the first counterexample.

#include <k3div/k3div.hpp>

#include <functional>
#include <random>

namespace k3div::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Every x in Z^n with x.x == norm, by scanning the box |x_i| <= sqrt(|norm| |G^-1_ii|).
inline std::vector<IntVector> box_search(const Lattice& l, const Integer& norm) {
  const std::size_t n = l.rank();
  auto inv = inverse(to_rational(l.gram()));
  if (!inv) throw Error("box_search needs a nondegenerate lattice");
  IntVector bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = Rational(abs_of(norm)) * (*inv)(i, i);
    if (r < 0) r = -r;
    bound[i] = isqrt(floor_of(r));
  }
  std::vector<IntVector> out;
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    Integer q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += x[i] * l.gram()(i, j) * x[j];
    if (q == norm) out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < bound[k]) {
        ++x[k];
        for (std::size_t j = k + 1; j < n; ++j) x[j] = -bound[j];
        break;
      }
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (n == 0) return out;
  }
}

/// Test lattices of rank <= 4 used against the enumerator: standard ones and
/// random negative definite forms -B^T B.
inline std::vector<Lattice> small_definite_lattices(Rng& rng, std::size_t random_count) {
  std::vector<Lattice> out = {
      make_standard(Symbol::A, 1), make_standard(Symbol::A, 2), make_standard(Symbol::A, 3),
      make_standard(Symbol::A, 4), make_standard(Symbol::D, 4), make_standard(Symbol::A, 2, 3),
      direct_sum({make_standard(Symbol::A, 1), make_standard(Symbol::A, 2)}),
      direct_sum({make_standard(Symbol::A, 2), make_standard(Symbol::A, 2)}),
  };
  while (out.size() < 8 + random_count) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = uniform(rng, -2, 2);
    if (bareiss_determinant(b) == 0) continue;
    IntMatrix g = b.transpose() * b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = -g(i, j);
    out.emplace_back(std::move(g));
  }
  return out;
}

using PropertyResult = std::optional<std::string>;

inline PropertyResult enumerator_matches_box_search(Rng& rng, std::size_t random_count) {
  for (const auto& l : small_definite_lattices(rng, random_count))
    for (long norm : {-2L, -4L, -6L}) {
      auto fast = short_vectors(l, Integer(norm));
      auto slow = box_search(l, Integer(norm));
      if (fast != slow)
        return "rank " + std::to_string(l.rank()) + " norm " + std::to_string(norm) + ": enumerator " +
               std::to_string(fast.size()) + ", box search " + std::to_string(slow.size());
    }
  return std::nullopt;
}

struct Piece {
  std::string name;
  Lattice lattice;
};

inline Piece random_piece(Rng& rng) {
  switch (uniform(rng, 0, 7)) {
    case 0: {
      int n = static_cast<int>(uniform(rng, 1, 5));
      return {"A" + std::to_string(n), make_standard(Symbol::A, n)};
    }
    case 1: {
      int n = static_cast<int>(uniform(rng, 4, 6));
      return {"D" + std::to_string(n), make_standard(Symbol::D, n)};
    }
    case 2: {
      int n = static_cast<int>(uniform(rng, 6, 8));
      return {"E" + std::to_string(n), make_standard(Symbol::E, n)};
    }
    case 3: return {"U", make_standard(Symbol::U, 2)};
    case 4: return {"U(3)", make_standard(Symbol::U, 2, 3)};
    case 5: return {"A2(3)", make_standard(Symbol::A, 2, 3)};
    case 6: return {"E8(3)", make_standard(Symbol::E, 8, 3)};
    default: return {"A1", make_standard(Symbol::A, 1)};
  }
}

/// det and signature of random direct sums against the per-summand values.
inline PropertyResult det_signature_additive(Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    int k = static_cast<int>(uniform(rng, 1, 4));
    std::vector<Lattice> parts;
    std::string name;
    Integer det = 1;
    Signature sig;
    for (int i = 0; i < k; ++i) {
      auto p = random_piece(rng);
      name += (i ? "+" : "") + p.name;
      det *= bareiss_determinant(p.lattice.gram());
      auto s = signature_of(to_rational(p.lattice.gram()));
      sig.positive += s.positive;
      sig.negative += s.negative;
      sig.zero += s.zero;
      parts.push_back(std::move(p.lattice));
    }
    auto inv = invariants(direct_sum(parts));
    if (inv.determinant != det) return name + ": det " + to_string(inv.determinant) + " != " + to_string(det);
    if (!(inv.signature == sig)) return name + ": signature not additive";
  }
  return std::nullopt;
}

inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 2)) {
      case 0: {
        long f = uniform(rng, -2, 2);
        for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
        break;
      }
      case 1: u.swap_rows(i, j); break;
      default:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
    }
  }
  return u;
}

/// Smith invariants of M equal those of U M V for unimodular U, V.
inline PropertyResult smith_stable(Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, -6, 6);
    IntMatrix conj = random_unimodular(rng, r, 8) * m * random_unimodular(rng, c, 8);
    auto a = smith_normal_form(m), b = smith_normal_form(conj);
    if (a.diagonal() != b.diagonal()) return "trial " + std::to_string(t) + ": Smith diagonals differ";
    if (!(a.left * m * a.right == a.diag)) return "trial " + std::to_string(t) + ": L M R != D";
  }
  return std::nullopt;
}

/// Every glue construction the library ships, with its base.
inline std::vector<std::pair<std::string, GlueSpec>> shipped_glue_specs() {
  std::vector<std::pair<std::string, GlueSpec>> out;
  out.push_back({"6A2", {repeated(make_standard(Symbol::A, 2), 6), {a2_glue_vector(6)}}});
  out.push_back({"9A2", {repeated(make_standard(Symbol::A, 2), 9), {a2_glue_vector(9)}}});
  RatVector w = e6_glue_component();
  RatVector www;
  for (int i = 0; i < 3; ++i) www.insert(www.end(), w.begin(), w.end());
  out.push_back({"3E6", {repeated(make_standard(Symbol::E, 6), 3), {{www}}}});
  return out;
}

inline PropertyResult glue_determinant_law() {
  for (const auto& [name, spec] : shipped_glue_specs()) {
    auto r = glue(spec);
    Integer lhs = abs_of(bareiss_determinant(r.lattice.gram())) * r.index * r.index;
    Integer rhs = abs_of(bareiss_determinant(spec.base.gram()));
    if (lhs != rhs) return name + ": |det| index^2 = " + to_string(lhs) + ", |det base| = " + to_string(rhs);
  }
  return std::nullopt;
}

/// Closure of the closure is itself, at index 1.
inline PropertyResult closure_idempotent(Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    auto p = random_piece(rng);
    const Lattice& l = p.lattice;
    std::size_t n = l.rank();
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n, 3))));
    std::vector<LatticeVector> sub;
    IntMatrix rows(k, n);
    for (std::size_t i = 0; i < k; ++i) {
      long scale = uniform(rng, 1, 3);
      for (std::size_t j = 0; j < n; ++j) rows(i, j) = scale * uniform(rng, -2, 2);
    }
    if (rank_of(to_rational(rows)) != k) continue;
    for (std::size_t i = 0; i < k; ++i) {
      RatVector v;
      for (const auto& z : rows.row(i)) v.emplace_back(z);
      sub.push_back({v});
    }
    auto first = primitive_closure(l, sub);
    std::vector<LatticeVector> again;
    for (std::size_t i = 0; i < first.closure_basis.rows(); ++i) {
      RatVector v;
      for (const auto& z : first.closure_basis.row(i)) v.emplace_back(z);
      again.push_back({v});
    }
    auto second = primitive_closure(l, again);
    if (second.index != 1 || !(second.closure_basis == first.closure_basis))
      return p.name + ": closure is not idempotent";
  }
  return std::nullopt;
}

/// q(x + y) - q(x) - q(y) = 2 b(x, y) mod 2 on discriminant generators.
inline PropertyResult qvalue_bilinear() {
  std::vector<Lattice> ls = {make_standard(Symbol::A, 2), make_standard(Symbol::E, 6),
                             make_standard(Symbol::D, 4), parse_lattice_expression("U(3)+6A2"),
                             glued_a2(6).lattice, parse_lattice_expression("A2+E6+A1")};
  for (const auto& l : ls) {
    auto d = discriminant_group(l);
    for (std::size_t i = 0; i < d.generators.size(); ++i)
      for (std::size_t j = 0; j < d.generators.size(); ++j) {
        const auto& x = d.generators[i].coords;
        const auto& y = d.generators[j].coords;
        RatVector s(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k] + y[k];
        Rational lhs = disc_form_value(l, {s}) - disc_form_value(l, {x}) - disc_form_value(l, {y});
        Rational rhs = 2 * l.pair(x, y);
        if (!is_integral(Rational((lhs - rhs) / 2)))
          return "q is not bilinear on generators " + std::to_string(i) + ", " + std::to_string(j);
      }
  }
  return std::nullopt;
}

}  // namespace k3div::testing
