#pragma once

// Artin-invariant bounds from discriminant lengths, and invariant checks for
// decompositions of the Neron-Severi lattice Lambda_sigma of a supersingular
// K3 surface in characteristic 3.
//
// Only necessary invariants are certified (rank, signature, determinant,
// 3-elementarity, 3-length); isometry to Lambda_sigma itself is not tested.

#include <k3div/discriminant.hpp>
#include <k3div/expression.hpp>

namespace k3div {

struct BoundInput {
  long l3 = 0;
  long rank_L = 0;
  long ambient_rank = 22;
};

/// 2 sigma <= l(A_L) + l(A_{L^perp}) <= l3 + (ambient - rank L).
inline long artin_bound(const BoundInput& b) {
  if (b.l3 < 0) throw Error("l3 must be nonnegative");
  if (b.rank_L > b.ambient_rank) throw Error("rank exceeds the ambient rank");
  return (b.l3 + (b.ambient_rank - b.rank_L)) / 2;
}

struct SupersingularEntry {
  int sigma = 0;
  std::string decomposition;  // constructor expression
  std::string source;         // table key
};

/// Decompositions shipped with the library, keyed by table group.
///   ive6-*:  fibrations with two IV* fibres
///   l6-*:    around the index 3 overlattice L of 6A2
///   l9-*:    around the index 3 overlattice L9 of 9A2, and 3E6 / L'
///   a2-*:    ten A2 blocks without glue
inline const std::vector<SupersingularEntry>& lambda_table() {
  static const std::vector<SupersingularEntry> table = {
      {6, "U(3)+2E6+E8(3)", "ive6-sigma6"},
      {5, "U+2E6+E8(3)", "ive6-sigma5"},
      {4, "U(3)+2E6+4A2", "ive6-sigma4"},
      {3, "U+2E6+4A2", "ive6-sigma3"},
      {2, "U(3)+L'+A2", "ive6-sigma2"},
      {1, "U+L'+A2", "ive6-sigma1"},
      {7, "U(3)+L+E8(3)", "l6-sigma7"},
      {6, "U+L+E8(3)", "l6-sigma6"},
      {5, "U(3)+L9+A2", "l9-sigma5"},
      {4, "U+L9+A2", "l9-sigma4"},
      {3, "U(3)+3E6+A2", "l9-sigma3"},
      {2, "U+3E6+A2", "l9-sigma2"},
      {1, "U+L'+A2", "l9-sigma1"},
      {6, "U(3)+10A2", "a2-sigma6"},
  };
  return table;
}

struct LambdaCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct LambdaReport {
  SupersingularEntry entry;
  std::vector<LambdaCheck> checks;

  bool pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const LambdaCheck& c) { return c.pass; });
  }
};

inline LambdaReport verify_lambda_entry(const SupersingularEntry& e, const Lattice& l) {
  LambdaReport r{e, {}};
  auto add = [&](std::string name, std::string expected, std::string computed) {
    bool ok = expected == computed;
    r.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  };
  auto inv = invariants(l);
  add("rank", "22", std::to_string(inv.rank));
  add("signature", "(1,21)",
      "(" + std::to_string(inv.signature.positive) + "," + std::to_string(inv.signature.negative) + ")");
  Integer expected_det;
  mpz_ui_pow_ui(expected_det.get_mpz_t(), 3, 2 * static_cast<unsigned long>(e.sigma));
  add("|det|", to_string(expected_det), to_string(abs_of(inv.determinant)));
  if (inv.determinant == 0) {
    add("3-elementary", "yes", "degenerate");
    add("3-length", std::to_string(2 * e.sigma), "degenerate");
    return r;
  }
  auto data = discriminant_group(l);
  bool elementary = std::all_of(data.invariant_factors.begin(), data.invariant_factors.end(),
                                [](const Integer& d) { return d == 3; });
  add("3-elementary", "yes", elementary ? "yes" : "no");
  add("3-length", std::to_string(2 * e.sigma), std::to_string(p_length(data, 3)));
  return r;
}

inline LambdaReport verify_lambda_entry(const SupersingularEntry& e) {
  return verify_lambda_entry(e, parse_lattice_expression(e.decomposition));
}

inline std::vector<LambdaReport> lambda_entries(int sigma) {
  std::vector<LambdaReport> out;
  for (const auto& e : lambda_table())
    if (e.sigma == sigma) out.push_back(verify_lambda_entry(e));
  return out;
}

struct IndivisibilityCase {
  std::size_t omitted_block = 0;  // 0-based A2 block left out
  bool divisible = false;
};

/// In U(3) + 10A2 (coordinates: U(3) first, then e, e' per block), the sum over
/// nine blocks of (e + 2e') for every choice of the omitted block.
inline std::vector<IndivisibilityCase> ten_a2_indivisibility() {
  Lattice l = parse_lattice_expression("U(3)+10A2");
  std::vector<IndivisibilityCase> out;
  for (std::size_t skip = 0; skip < 10; ++skip) {
    RatVector v(l.rank(), Rational(0));
    for (std::size_t b = 0; b < 10; ++b) {
      if (b == skip) continue;
      v[2 + 2 * b] = 1;
      v[3 + 2 * b] = 2;
    }
    out.push_back({skip, is_divisible(l, {std::move(v)}, 3).divisible});
  }
  return out;
}

}  // namespace k3div
