#pragma once

// Discriminant groups A_L = L^dual / L and their quadratic forms.

#include <k3div/lattice.hpp>
#include <k3div/normal_form.hpp>

namespace k3div {

struct DiscriminantData {
  IntVector invariant_factors;          // each > 1, in divisibility order
  std::vector<LatticeVector> generators;  // lifts in L^dual, order = factor
  std::vector<Rational> qvalues;        // g.g reduced into [0, 2)
  bool even = true;                     // qvalues are only meaningful for even L

  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
};

/// From G = L^-1 D R^-1 the dual lattice G^-1 Z^n equals R D^-1 Z^n, so the
/// columns of R divided by the Smith entries generate A_L.
inline DiscriminantData discriminant_group(const Lattice& l) {
  auto snf = smith_normal_form(l.gram());
  if (snf.rank() != l.rank()) throw Error("lattice is degenerate");
  DiscriminantData data;
  data.even = l.is_even();
  const RatMatrix gram = to_rational(l.gram());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const Integer& d = snf.diag(i, i);
    if (d == 1) continue;
    RatVector g(l.rank());
    for (std::size_t k = 0; k < l.rank(); ++k) g[k] = make_rational(snf.right(k, i), d);
    data.invariant_factors.push_back(d);
    data.qvalues.push_back(mod_positive(bilinear(gram, g, g), 2));
    data.generators.push_back({std::move(g)});
  }
  return data;
}

inline std::size_t p_length(const DiscriminantData& data, long p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  std::size_t count = 0;
  for (const auto& d : data.invariant_factors)
    if (d % p == 0) ++count;
  return count;
}

inline std::size_t p_length(const IntVector& factors, long p) {
  return p_length(DiscriminantData{factors, {}, {}, true}, p);
}

/// q(x) = x.x modulo 2 for x in the dual of an even lattice.
inline Rational disc_form_value(const Lattice& l, const LatticeVector& x) {
  if (!l.is_even()) throw Error("discriminant form requires an even lattice");
  if (!in_dual(l, x.coords)) throw Error("vector is not in the dual lattice");
  return mod_positive(l.norm(x.coords), 2);
}

}  // namespace k3div
