#pragma once

// Fibration models used by the verification report, the tests and the CLI.
// The same models ship as JSON under data/models/.

#include <k3div/fibration.hpp>

namespace k3div::models {

inline std::string fibre_label(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

/// ell IV* fibres g1..g_ell and 10 - 3 ell IV fibres f1..; a section s meeting
/// C11 and E1; cusp curve.
inline FibrationSpec section_spec(int ell) {
  if (ell < 0 || ell > 3) throw Error("ell must lie in [0, 3]");
  FibrationSpec spec;
  SectionSpec s{"s", {}};
  for (int i = 1; i <= ell; ++i) {
    spec.fibres.push_back({FibreType::IVstar, fibre_label('g', i), ""});
    s.meets[fibre_label('g', i)] = "C11";
  }
  for (int i = 1; i <= 10 - 3 * ell; ++i) {
    spec.fibres.push_back({FibreType::IV, fibre_label('f', i), ""});
    s.meets[fibre_label('f', i)] = "E1";
  }
  spec.sections = {s};
  spec.cusp = true;
  return spec;
}

/// Ten IV fibres with E3 dropped, a trisection C of self-intersection `self`
/// meeting (E1,E2,E3) as (1,0,2) on fibres 1..k and (1,1,1) on the rest.
inline FibrationSpec trisection_spec(int k, long self) {
  FibrationSpec spec = ten_iv_spec(true);
  for (auto& f : spec.fibres) f.drop = "E3";
  MultisectionSpec c{"C", 3, self, {}};
  for (int i = 1; i <= kIvFibres; ++i)
    c.meets[fibre_label('f', i)] =
        i <= k ? std::map<std::string, long>{{"E1", 1}, {"E2", 0}, {"E3", 2}}
               : std::map<std::string, long>{{"E1", 1}, {"E2", 1}, {"E3", 1}};
  spec.multisections = {c};
  return spec;
}

/// 3-section: self-intersection -2, profile (1,0,2) on nine fibres.
inline FibrationSpec three_section_spec() { return trisection_spec(9, -2); }

/// Trisection of arithmetic genus one: self-intersection 0, profile (1,0,2) on six fibres.
inline FibrationSpec genus_one_trisection_spec() { return trisection_spec(6, 0); }

/// Ten IV fibres with E3 dropped, cusp curve and the glue class
/// D = (1/3) sum_{i<=n} (E1 + 2E2).
inline FibrationSpec ten_iv_glue_spec(int n) {
  FibrationSpec spec = ten_iv_spec(true);
  for (auto& f : spec.fibres) f.drop = "E3";
  spec.glue = {{"D", make_rational(1, 3) * iv_configuration(1, n, 1, 2)}};
  return spec;
}

/// `count` IV* fibres g1.., 10 - 3 count IV fibres f1.. and a zero section O
/// meeting C11 and E1. No cusp curve.
inline FibrationSpec ive6_spec(int count) {
  FibrationSpec spec = section_spec(count);
  spec.cusp = false;
  spec.sections.front().name = "O";
  return spec;
}

/// Six I3 fibres t1..t6, zero section O on T0, torsion section P on T1;
/// O.P = 0 is declared explicitly.
inline FibrationSpec torsion_section_spec() {
  FibrationSpec spec;
  SectionSpec o{"O", {}}, p{"P", {}};
  for (int i = 1; i <= 6; ++i) {
    spec.fibres.push_back({FibreType::I3, fibre_label('t', i), ""});
    o.meets[fibre_label('t', i)] = "T0";
    p.meets[fibre_label('t', i)] = "T1";
  }
  spec.sections = {o, p};
  spec.pairings = {{"O", "P", 0}};
  return spec;
}

/// sum over IV* fibres of sum_j (a Cj2 + b Cj1) for per-fibre weights (a, b).
inline DivisorClass ive6_arms(const std::vector<std::pair<long, long>>& weights) {
  DivisorClass c;
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (int j = 1; j <= 3; ++j) {
      std::string base = fibre_label('g', static_cast<int>(i + 1)) + ".C" + std::to_string(j);
      c[base + "2"] += weights[i].first;
      c[base + "1"] += weights[i].second;
    }
  return drop_zeros(c);
}

}  // namespace k3div::models
