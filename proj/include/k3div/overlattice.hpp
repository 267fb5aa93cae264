#pragma once

// Overlattices from glue vectors, primitive closures, orthogonal complements
// and divisibility of lattice vectors.

#include <k3div/lattice.hpp>
#include <k3div/normal_form.hpp>

namespace k3div {

struct GlueSpec {
  Lattice base;
  std::vector<LatticeVector> vectors;  // rational coordinates in the base basis
};

struct GlueResult {
  Lattice lattice;
  Integer index;
  RatMatrix basis;  // rows: Hermite basis of the overlattice, base coordinates
};

/// Sublattice of an ambient lattice together with its basis (rows, ambient
/// coordinates).
struct EmbeddedLattice {
  Lattice lattice;
  IntMatrix basis;
};

struct EmbeddingResult {
  Lattice sublattice;
  Lattice closure;
  Integer index;
  Lattice complement;
  IntMatrix closure_basis;
  IntMatrix complement_basis;
};

struct DivisibilityResult {
  bool divisible = false;
  std::optional<LatticeVector> witness;
};

inline void validate_glue(const GlueSpec& spec) {
  const auto& base = spec.base;
  for (std::size_t i = 0; i < spec.vectors.size(); ++i) {
    const auto& v = spec.vectors[i].coords;
    base.check_length(v);
    if (!in_dual(base, v))
      throw Error("glue vector " + std::to_string(i + 1) +
                  " does not pair integrally with the base (not in the dual)");
    for (std::size_t j = 0; j < i; ++j)
      if (!is_integral(base.pair(v, spec.vectors[j].coords)))
        throw Error("glue vectors " + std::to_string(j + 1) + " and " +
                    std::to_string(i + 1) + " have non-integral pairing");
    Rational nv = base.norm(v);
    if (!is_integral(nv) || nv.get_num() % 2 != 0)
      throw Error("glue vector " + std::to_string(i + 1) + " has norm " +
                  to_string(nv) + ", overlattice would not be even");
  }
}

inline GlueResult glue(const GlueSpec& spec) {
  validate_glue(spec);
  const std::size_t n = spec.base.rank();
  RatMatrix gens(n + spec.vectors.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = 1;
  for (std::size_t k = 0; k < spec.vectors.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) gens(n + k, j) = spec.vectors[k].coords[j];
  RatMatrix basis = hermite_rows(gens);
  Rational det_basis = 1;
  for (std::size_t i = 0; i < n; ++i) det_basis *= basis(i, i);
  Rational idx = 1 / det_basis;
  if (!is_integral(idx)) throw Error("internal: non-integral overlattice index");
  IntMatrix gram = to_integer(restricted_gram(spec.base, basis));
  return {Lattice(std::move(gram)), idx.get_num(), std::move(basis)};
}

inline RatMatrix rows_of(const std::vector<LatticeVector>& vectors, std::size_t rank) {
  RatMatrix m(vectors.size(), rank);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].coords.size() != rank) throw Error("vector length does not match the rank");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = vectors[i].coords[j];
  }
  return m;
}

inline EmbeddedLattice orthogonal_complement(const Lattice& ambient,
                                             const std::vector<LatticeVector>& sub) {
  if (bareiss_determinant(ambient.gram()) == 0) throw Error("ambient lattice is degenerate");
  RatMatrix s = rows_of(sub, ambient.rank());
  if (rank_of(s) != sub.size()) throw Error("sub vectors are linearly dependent");
  RatMatrix eq = s * to_rational(ambient.gram());
  IntMatrix a(eq.rows(), eq.cols());
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    Integer d = common_denominator(RatVector(eq.row(i)));
    for (std::size_t j = 0; j < eq.cols(); ++j) a(i, j) = Rational(eq(i, j) * d).get_num();
  }
  IntMatrix k = sub.empty() ? IntMatrix::identity(ambient.rank()) : integer_kernel(a);
  IntMatrix gram = to_integer(restricted_gram(ambient, to_rational(k)));
  return {Lattice(std::move(gram)), std::move(k)};
}

inline EmbeddingResult primitive_closure(const Lattice& ambient,
                                         const std::vector<LatticeVector>& sub) {
  RatMatrix s = rows_of(sub, ambient.rank());
  IntMatrix si = to_integer(s);
  auto sat = saturate(si);
  IntMatrix sub_gram = to_integer(restricted_gram(ambient, s));
  IntMatrix closure_gram = to_integer(restricted_gram(ambient, to_rational(sat.basis)));
  std::vector<LatticeVector> closure_vectors;
  for (std::size_t i = 0; i < sat.basis.rows(); ++i) {
    RatVector v;
    for (const auto& z : sat.basis.row(i)) v.emplace_back(z);
    closure_vectors.push_back({std::move(v)});
  }
  auto comp = orthogonal_complement(ambient, closure_vectors);
  return {Lattice(std::move(sub_gram)), Lattice(std::move(closure_gram)), sat.index,
          std::move(comp.lattice), std::move(sat.basis), std::move(comp.basis)};
}

inline DivisibilityResult is_divisible(const Lattice& ambient, const LatticeVector& v,
                                       const Integer& n) {
  ambient.check_length(v.coords);
  if (n < 2) throw Error("divisor must be at least 2");
  DivisibilityResult res;
  RatVector w;
  for (const auto& c : v.coords) {
    if (!is_integral(c)) throw Error("vector is not integral in the ambient lattice");
    if (c.get_num() % n != 0) return res;
    w.emplace_back(c / Rational(n));
  }
  res.divisible = true;
  res.witness = LatticeVector{std::move(w)};
  return res;
}

}  // namespace k3div
