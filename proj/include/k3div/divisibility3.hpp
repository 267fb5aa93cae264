#pragma once

// Numerical side of 3-divisible A2^n configurations on K3 surfaces in
// characteristic 3 and of the associated purely inseparable triple cover:
// coefficient classification, admissible n, the cohomology ledger, the
// <eta> degree budget, local Jacobian dimensions over F_3 and the verdict on
// the resolved cover.

#include <k3div/numeric.hpp>

#include <array>
#include <cctype>
#include <map>
#include <set>
#include <variant>

namespace k3div {

inline constexpr int kNsRankBound = 22;

// Rule keys used in traces and reports.
inline constexpr const char* kRuleRankBound = "rank-bound";
inline constexpr const char* kRuleIntegrality = "self-intersection-integrality";
inline constexpr const char* kRuleH1Nonnegative = "h1-nonnegative";

struct CoefficientPair {
  int a = 0;
  int a_prime = 0;

  friend auto operator<=>(const CoefficientPair&, const CoefficientPair&) = default;
};

/// Pairs (a, a') in [0,2]^2 \ {(0,0)} with -2a + a' = 0 and a - 2a' = 0 mod 3,
/// i.e. M.C and M.C' integral for M = (a C + a' C') / 3 on an A2 block.
inline std::set<CoefficientPair> classify_coefficients() {
  std::set<CoefficientPair> out;
  for (int a = 0; a <= 2; ++a)
    for (int ap = 0; ap <= 2; ++ap) {
      if (a == 0 && ap == 0) continue;
      if ((-2 * a + ap) % 3 == 0 && (a - 2 * ap) % 3 == 0) out.insert({a, ap});
    }
  return out;
}

struct RuleRejection {
  int n = 0;
  std::string reason;
};

struct RuleRecord {
  std::string key;
  std::string statement;
  std::vector<RuleRejection> rejected;
};

struct AdmissibleN {
  std::set<int> values;
  std::vector<RuleRecord> trace;
};

/// Candidate sizes n = 1..22 filtered, in order, by
///   rank:        2n <= 22, and n = 11 would make NS negative definite;
///   integrality: M.M = -2n/3 must be an (even) integer;
///   h1 >= 0:     h^1(M) = n/3 - 2.
/// Each candidate is charged to the first rule that rejects it.
inline AdmissibleN admissible_n(int ambient_rank = kNsRankBound) {
  AdmissibleN out;
  out.trace = {
      {kRuleRankBound, "2n <= rank NS and NS is hyperbolic, so n <= " +
                           std::to_string(ambient_rank / 2 - 1), {}},
      {kRuleIntegrality, "M.M = -2n/3 is an even integer, so 3 | n", {}},
      {kRuleH1Nonnegative, "h1(M) = n/3 - 2 >= 0", {}},
  };
  for (int n = 1; n <= ambient_rank; ++n) {
    if (2 * n > ambient_rank) {
      out.trace[0].rejected.push_back({n, std::to_string(2 * n) + " > " +
                                              std::to_string(ambient_rank) + " = rank NS"});
      continue;
    }
    if (2 * n == ambient_rank) {
      out.trace[0].rejected.push_back({n, "nA2 of full rank would make NS negative definite"});
      continue;
    }
    Rational msq = make_rational(-2 * n, 3);
    if (!is_integral(msq)) {
      out.trace[1].rejected.push_back({n, "M.M = " + to_string(msq) + " is not an integer"});
      continue;
    }
    Rational h1 = make_rational(n, 3) - 2;
    if (h1 < 0) {
      out.trace[2].rejected.push_back(
          {n, "h1 = " + std::to_string(n) + "/3 - 2 = " + to_string(h1) + " < 0"});
      continue;
    }
    out.values.insert(n);
  }
  return out;
}

enum class CurveOperation { Blowup, InseparablePullback };

/// blowup: (self_int, point multiplicity m) -> c - m^2.
/// insep_pullback: (cover degree d, multiplicity r, self_int c) -> d c / r^2,
/// from f*(C) = r C~ and f*C . f*C = d C^2.
inline long intersection_calculus(CurveOperation op, std::initializer_list<long> args) {
  std::vector<long> a(args);
  if (op == CurveOperation::Blowup) {
    if (a.size() != 2) throw Error("blowup takes (self_int, multiplicity)");
    return a[0] - a[1] * a[1];
  }
  if (a.size() != 3) throw Error("insep_pullback takes (degree, multiplicity, self_int)");
  if (a[1] == 0) throw Error("pullback multiplicity must be nonzero");
  long num = a[0] * a[2], den = a[1] * a[1];
  if (num % den != 0)
    throw Error("pullback self-intersection " + std::to_string(num) + "/" +
                std::to_string(den) + " is not an integer");
  return num / den;
}

struct BlowupSelfIntersections {
  long cbar = 0;    // proper transforms of C_i, C'_i after blowing up P_i
  long ebar = 0;    // exceptional curve E_i
  long ctilde = 0;  // curves over C_i, C'_i on the normalized cover
  long etilde = 0;  // curve over E_i on the normalized cover
};

struct CohomologyLedger {
  int n = 0;
  Rational m_square;            // M.M
  Rational h1_M;                // h^1(X, M)
  Rational l_square;            // L.L on the blown-up surface
  std::map<int, Integer> chi_L;  // chi(L^k) for k in {-2,-1,1,2}
  Integer chi_OY;
  Integer h1_OY;
  BlowupSelfIntersections selfints;
};

/// chi(L^k) on the blow-up X' by Riemann-Roch, with L.L = -5n/3,
/// L.K_{X'} = L.sum E_i = n and chi(O_{X'}) = 2:
///   chi(L^k) = (k^2 L.L - k n) / 2 + 2 = (-5 k^2 n - 3 k n) / 6 + 2.
inline Rational chi_line_power(int n, int k) {
  Rational lsq = make_rational(-5 * n, 3);
  return (Rational(k * k) * lsq - Rational(k * n)) / 2 + 2;
}

inline CohomologyLedger cohomology_ledger(int n) {
  if (n <= 0 || n % 3 != 0) throw Error("n must be a positive multiple of 3");
  CohomologyLedger led;
  led.n = n;
  led.m_square = make_rational(-2 * n, 3);
  led.h1_M = -(led.m_square / 2 + 2);  // h0 = h2 = 0, chi(M) = M.M/2 + 2
  led.l_square = make_rational(-5 * n, 3);
  for (int k : {-2, -1, 1, 2}) {
    Rational chi = chi_line_power(n, k);
    if (!is_integral(chi)) throw Error("internal: non-integral Euler characteristic");
    led.chi_L[k] = chi.get_num();
  }
  // f_* O_Y = O + L^-1 + L^-2
  led.chi_OY = 2 + led.chi_L[-1] + led.chi_L[-2];
  led.h1_OY = 2 - led.chi_OY;  // h0 = h2 = 1
  led.selfints.cbar = intersection_calculus(CurveOperation::Blowup, {-2, 1});
  led.selfints.ebar = intersection_calculus(CurveOperation::Blowup, {0, 1});
  led.selfints.ctilde = intersection_calculus(CurveOperation::InseparablePullback, {3, 3, led.selfints.cbar});
  led.selfints.etilde = intersection_calculus(CurveOperation::InseparablePullback, {3, 1, led.selfints.ebar});
  return led;
}

/// Closed forms, kept separate from the Riemann-Roch route above.
inline Rational closed_form_chi_OY(int n) { return make_rational(-8 * n, 3) + 6; }
inline Rational closed_form_h1_OY(int n) { return make_rational(8 * n, 3) - 4; }

struct EtaData {
  long b_square = 0;
  int n = 0;
  long degree = 0;
  bool valid = false;  // degree >= 0
};

/// deg <eta> = B^2 + 24 - 3n (Igusa: c2(X') = 24 + n).
inline EtaData eta_degree(long b_square, int n) {
  EtaData d{b_square, n, b_square + 24 - 3L * n, false};
  d.valid = d.degree >= 0;
  return d;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over F_3

class F3Poly {
 public:
  F3Poly() = default;

  static int reduce(long c) { return static_cast<int>(((c % 3) + 3) % 3); }

  void add_term(int x_exp, int y_exp, long coeff) {
    if (x_exp < 0 || y_exp < 0) throw Error("negative exponent");
    auto& c = terms_[{x_exp, y_exp}];
    c = reduce(c + coeff);
    if (c == 0) terms_.erase({x_exp, y_exp});
  }

  int coeff(int x_exp, int y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, int>& terms() const { return terms_; }

  F3Poly dx() const {
    F3Poly d;
    for (const auto& [e, c] : terms_)
      if (e.first > 0) d.add_term(e.first - 1, e.second, static_cast<long>(c) * e.first);
    return d;
  }

  F3Poly dy() const {
    F3Poly d;
    for (const auto& [e, c] : terms_)
      if (e.second > 0) d.add_term(e.first, e.second - 1, static_cast<long>(c) * e.second);
    return d;
  }

  /// Parses sums of terms like "x^2", "-y^4", "2x^3y", "x*y", "5" (coefficients
  /// are reduced mod 3).
  static F3Poly parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("empty polynomial");
    F3Poly p;
    std::size_t i = 0;
    auto read_int = [&](long& out) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) return false;
      out = std::stol(s.substr(start, i - start));
      return true;
    };
    while (i < s.size()) {
      long sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      long coeff = 1;
      bool has_coeff = read_int(coeff);
      if (has_coeff && i < s.size() && s[i] == '*') ++i;
      int ex = 0, ey = 0;
      bool has_var = false;
      while (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
        char v = s[i++];
        long e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (!read_int(e)) throw Error("missing exponent in polynomial '" + s + "'");
        }
        (v == 'x' ? ex : ey) += static_cast<int>(e);
        has_var = true;
        if (i < s.size() && s[i] == '*') ++i;
      }
      if (!has_coeff && !has_var) throw Error("malformed polynomial '" + s + "'");
      p.add_term(ex, ey, sign * coeff);
    }
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
      if (e.second > 0) mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
      if (mono.empty()) mono = std::to_string(c);
      else if (c != 1) mono = std::to_string(c) + mono;
      out += mono;
    }
    return out;
  }

 private:
  std::map<std::pair<int, int>, int> terms_;
};

inline constexpr int kDefaultTruncation = 12;

/// dim F3[x,y] / (f_x, f_y, m^t) via Gaussian elimination mod 3 on the
/// monomials of degree < t.
inline long truncated_jacobian_quotient(const F3Poly& f, int t) {
  if (t < 1) throw Error("truncation must be positive");
  std::map<std::pair<int, int>, std::size_t> column;
  for (int d = 0; d < t; ++d)
    for (int a = d; a >= 0; --a) column[{a, d - a}] = column.size();
  const std::size_t ncols = column.size();
  std::vector<std::vector<int>> rows;
  for (const F3Poly& g : {f.dx(), f.dy()}) {
    if (g.is_zero()) continue;
    for (int d = 0; d < t; ++d)
      for (int a = 0; a <= d; ++a) {
        std::vector<int> row(ncols, 0);
        bool any = false;
        for (const auto& [e, c] : g.terms()) {
          int ex = e.first + a, ey = e.second + (d - a);
          if (ex + ey >= t) continue;
          row[column.at({ex, ey})] = c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    int inv = rows[rank][c];  // 1 and 2 are their own inverses mod 3
    for (auto& v : rows[rank]) v = (v * inv) % 3;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      int factor = rows[r][c];
      for (std::size_t k = 0; k < ncols; ++k)
        rows[r][k] = F3Poly::reduce(rows[r][k] - static_cast<long>(factor) * rows[rank][k]);
    }
    ++rank;
  }
  return static_cast<long>(ncols - rank);
}

struct Infinite {
  friend bool operator==(const Infinite&, const Infinite&) = default;
};

using JacobianDimension = std::variant<long, Infinite>;

inline std::string to_string(const JacobianDimension& d) {
  return std::holds_alternative<Infinite>(d) ? "Infinite" : std::to_string(std::get<long>(d));
}

/// dim k[[x,y]] / (f_x, f_y). The truncated quotients grow with t and, once two
/// consecutive ones agree, m^{t-1} lies in the Jacobian ideal (Nakayama), so the
/// value is final; otherwise the quotient is reported as infinite.
inline JacobianDimension local_jacobian_dimension(const F3Poly& f,
                                                  int truncation = kDefaultTruncation) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (truncation < 2) throw Error("truncation must be at least 2");
  long lower = truncated_jacobian_quotient(f, truncation - 1);
  long upper = truncated_jacobian_quotient(f, truncation);
  if (lower != upper) return Infinite{};
  return upper;
}

// ---------------------------------------------------------------------------
// Verdict on the resolved triple cover

enum class Singularity { A2, E6, E8, Elliptic };
enum class CoverVerdict { K3, Rational, Invalid };

inline long jacobian_budget(Singularity s) {
  switch (s) {
    case Singularity::A2: return 1;
    case Singularity::E6: return 3;
    case Singularity::E8: return 4;
    case Singularity::Elliptic: return 6;
  }
  return 0;
}

inline std::string to_string(Singularity s) {
  switch (s) {
    case Singularity::A2: return "A2";
    case Singularity::E6: return "E6";
    case Singularity::E8: return "E8";
    case Singularity::Elliptic: return "Elliptic";
  }
  return "?";
}

inline std::string to_string(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::K3: return "K3";
    case CoverVerdict::Rational: return "Rational";
    case CoverVerdict::Invalid: return "Invalid";
  }
  return "?";
}

struct VerdictReport {
  CoverVerdict verdict = CoverVerdict::Invalid;
  long budget = 0;           // sum of local Jacobian dimensions
  long required = 0;         // deg <eta> when B = 0
  std::string reason;
};

/// With B = 0 the Jacobian dimensions must add up to deg <eta> = 6; rational
/// double points then give a K3 cover, an elliptic point a rational one.
/// B != 0 always gives a rational cover.
inline VerdictReport cover_verdict(bool b_is_zero, const std::vector<Singularity>& sings) {
  VerdictReport rep;
  for (auto s : sings) rep.budget += jacobian_budget(s);
  if (!b_is_zero) {
    rep.verdict = CoverVerdict::Rational;
    rep.reason = "B != 0";
    return rep;
  }
  rep.required = eta_degree(0, 6).degree;
  if (rep.budget != rep.required) {
    rep.verdict = CoverVerdict::Invalid;
    rep.reason = "Jacobian budget " + std::to_string(rep.budget) + " != deg<eta> = " +
                 std::to_string(rep.required);
    return rep;
  }
  bool elliptic = std::any_of(sings.begin(), sings.end(),
                              [](Singularity s) { return s == Singularity::Elliptic; });
  rep.verdict = elliptic ? CoverVerdict::Rational : CoverVerdict::K3;
  rep.reason = elliptic ? "elliptic singularity" : "rational double points only";
  return rep;
}

}  // namespace k3div
