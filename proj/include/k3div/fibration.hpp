#pragma once

// Numerical models of genus-one fibrations on K3 surfaces. A model lists the
// fibre components, sections, multisections, the general fibre F, the cusp
// curve xi and optional glue classes, together with their intersection table.
// Classes are compared by numerical equivalence on that table.

#include <k3div/divisibility3.hpp>
#include <k3div/lattice.hpp>
#include <k3div/normal_form.hpp>

#include <cctype>
#include <map>
#include <set>

namespace k3div {

inline constexpr std::size_t kNsRank = 22;

enum class FibreType { IV, IVstar, I3 };

inline std::string to_string(FibreType t) {
  switch (t) {
    case FibreType::IV: return "IV";
    case FibreType::IVstar: return "IV*";
    case FibreType::I3: return "I3";
  }
  return "?";
}

inline FibreType parse_fibre_type(std::string_view s) {
  if (s == "IV") return FibreType::IV;
  if (s == "IV*" || s == "IVstar") return FibreType::IVstar;
  if (s == "I3") return FibreType::I3;
  throw Error("unknown fibre type '" + std::string(s) + "'");
}

/// Dual graph of a reducible fibre. Component names:
///   IV:  E1 E2 E3 (concurrent lines)
///   IV*: Cj1 (multiplicity 1), Cj2 (multiplicity 2) on arm j, centre C (3)
///   I3:  T0 T1 T2 (triangle)
struct FibreLayout {
  std::vector<std::string> names;
  std::vector<long> multiplicity;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string default_drop;
  std::vector<long> cusp_pairing;  // empty when no cusp curve can exist

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  long pair(std::size_t i, std::size_t j) const {
    if (i == j) return -2;
    for (auto [a, b] : edges)
      if ((a == i && b == j) || (a == j && b == i)) return 1;
    return 0;
  }
};

inline FibreLayout fibre_layout(FibreType t) {
  switch (t) {
    case FibreType::IV:
      return {{"E1", "E2", "E3"}, {1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}, "E1", {1, 1, 1}};
    case FibreType::IVstar:
      return {{"C11", "C12", "C21", "C22", "C31", "C32", "C"},
              {1, 2, 1, 2, 1, 2, 3},
              {{0, 1}, {1, 6}, {2, 3}, {3, 6}, {4, 5}, {5, 6}},
              "C",
              {0, 0, 0, 0, 0, 0, 1}};
    case FibreType::I3:
      return {{"T0", "T1", "T2"}, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}, "T0", {}};
  }
  throw Error("unknown fibre type");
}

struct FibreSpec {
  FibreType type = FibreType::IV;
  std::string label;
  std::string drop;  // component left out of the basis; empty selects the default
};

struct SectionSpec {
  std::string name;
  std::map<std::string, std::string> meets;  // fibre label -> component
};

struct MultisectionSpec {
  std::string name;
  long degree = 0;
  long self = 0;
  std::map<std::string, std::map<std::string, long>> meets;  // fibre -> component -> count
};

struct PairingSpec {
  std::string a;
  std::string b;
  long value = 0;
};

/// Rational combination of named generators.
using DivisorClass = std::map<std::string, Rational>;

struct GlueClassSpec {
  std::string name;
  DivisorClass combination;
};

struct FibrationSpec {
  std::vector<FibreSpec> fibres;
  std::vector<SectionSpec> sections;
  std::vector<MultisectionSpec> multisections;
  bool cusp = false;
  std::vector<PairingSpec> pairings;          // between horizontal curves
  std::map<std::string, long> cusp_pairings;  // xi . horizontal curve, when known
  std::vector<GlueClassSpec> glue;
};

enum class GeneratorKind { Component, Section, Multisection, Fibre, Cusp, Glue };

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::Component;
  int fibre = -1;
  long multiplicity = 0;
};

inline constexpr const char* kFibreName = "F";
inline constexpr const char* kCuspName = "xi";

struct FibrationModel {
  FibrationSpec spec;
  std::vector<Generator> generators;
  IntMatrix gram;
  std::vector<std::size_t> basis;
  std::size_t fibre_class = 0;
  std::optional<std::size_t> cusp;
  std::map<std::string, long> cusp_prescribed;
  std::optional<DivisorClass> cusp_solution;  // basis coordinates, when xi had to be solved
  std::vector<std::string> assumptions;

  std::size_t size() const { return generators.size(); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return i;
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error("unknown generator '" + std::string(name) + "'");
    return *i;
  }

  RatVector vector_of(const DivisorClass& c) const {
    RatVector v(size(), Rational(0));
    for (const auto& [name, coeff] : c) v[index_of(name)] += coeff;
    return v;
  }

  RatVector pairings(const DivisorClass& c) const { return multiply(to_rational(gram), vector_of(c)); }

  Rational pair(const DivisorClass& a, const DivisorClass& b) const {
    return bilinear(to_rational(gram), vector_of(a), vector_of(b));
  }

  Rational norm(const DivisorClass& c) const { return pair(c, c); }

  std::vector<std::string> basis_names() const {
    std::vector<std::string> out;
    for (auto i : basis) out.push_back(generators[i].name);
    return out;
  }

  /// F as a vector over the generators.
  LatticeVector fclass() const {
    RatVector v(size(), Rational(0));
    v[fibre_class] = 1;
    return {std::move(v)};
  }

  /// Components of fibre i with multiplicities: the fibre-class expansion.
  DivisorClass fibre_expansion(std::size_t i) const {
    DivisorClass c;
    for (const auto& g : generators)
      if (g.kind == GeneratorKind::Component && g.fibre == static_cast<int>(i))
        c[g.name] = g.multiplicity;
    return c;
  }

  Lattice lattice() const {
    std::vector<std::string> labels;
    for (const auto& g : generators) labels.push_back(g.name);
    return Lattice(gram, labels);
  }
};

inline DivisorClass single(const std::string& name, const Rational& coeff = 1) {
  return {{name, coeff}};
}

inline DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
  for (const auto& [n, c] : b) {
    a[n] += c;
    if (a[n] == 0) a.erase(n);
  }
  return a;
}

inline DivisorClass operator*(const Rational& s, DivisorClass a) {
  for (auto it = a.begin(); it != a.end();) {
    it->second *= s;
    it = it->second == 0 ? a.erase(it) : std::next(it);
  }
  return a;
}

inline DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
  return std::move(a) + Rational(-1) * b;
}

inline DivisorClass drop_zeros(DivisorClass a) {
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

/// Numerical equivalence: equal pairings with every generator.
inline bool same_class(const FibrationModel& m, const DivisorClass& a, const DivisorClass& b) {
  return m.pairings(a) == m.pairings(b);
}

/// Terms in generator order, e.g. "-1/3 f1.E1 + C + 2 F".
inline std::string format_class(const FibrationModel& m, const DivisorClass& c) {
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (const auto& [name, coeff] : c)
    if (coeff != 0) terms.emplace_back(m.index_of(name), coeff);
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [i, coeff] : terms) {
    Rational a = abs(coeff);
    if (out.empty()) out += coeff < 0 ? "-" : "";
    else out += coeff < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + " ";
    out += m.generators[i].name;
  }
  return out;
}

namespace detail {

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  DivisorClass parse() {
    if (s_.empty()) throw Error("empty class expression");
    DivisorClass c = expression();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return drop_zeros(std::move(c));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("class expression '" + s_ + "': " + what);
  }

  bool at(char c) const { return i_ < s_.size() && s_[i_] == c; }

  DivisorClass expression() {
    DivisorClass total;
    bool first = true;
    while (i_ < s_.size() && !at(')')) {
      Rational sign = 1;
      if (at('+') || at('-')) {
        sign = at('-') ? -1 : 1;
        ++i_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total = std::move(total) + sign * term();
      first = false;
    }
    if (first) fail("empty sum");
    return total;
  }

  DivisorClass term() {
    Rational coeff = 1;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || at('/'))) ++i_;
      coeff = parse_rational(s_.substr(start, i_ - start));
      if (at('*')) ++i_;
    }
    if (at('(')) {
      ++i_;
      DivisorClass inner = expression();
      if (!at(')')) fail("missing ')'");
      ++i_;
      return coeff * std::move(inner);
    }
    if (i_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      if (coeff != 1 || (i_ > 0 && std::isdigit(static_cast<unsigned char>(s_[i_ - 1]))))
        fail("a coefficient needs a generator name");
      fail("expected a generator name");
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || at('_') ||
                              at('.') || at('\'')))
      ++i_;
    return single(s_.substr(start, i_ - start), coeff);
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses "2*f1.C12 - 1/3 F + xi" or "1/3*(f1.E1 + 2 f1.E2)".
inline DivisorClass parse_class(std::string_view text) { return detail::ClassParser(text).parse(); }

namespace detail {

struct CuspSolve {
  RatVector coords;  // over the basis
};

/// Solves <xi, g> = prescribed(g) over the basis; the remaining freedom must be
/// a single isotropic direction, fixed by xi^2 = -2.
inline CuspSolve solve_cusp(const IntMatrix& gram, const std::vector<std::size_t>& basis,
                            const std::vector<std::pair<std::size_t, long>>& prescribed) {
  const std::size_t k = basis.size();
  RatMatrix gb(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gb(a, b) = gram(basis[a], basis[b]);
  if (k > kNsRank || rank_of(gb) != k)
    throw Error("singular system: the basis is degenerate");
  RatMatrix a(prescribed.size(), k);
  RatVector rhs;
  for (std::size_t r = 0; r < prescribed.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = gram(prescribed[r].first, basis[c]);
    rhs.emplace_back(prescribed[r].second);
  }
  auto sol = solve_affine(a, rhs);
  if (!sol) throw Error("prescribed cusp pairings are inconsistent");
  RatVector x = sol->particular;
  if (sol->nullspace.size() == 1) {
    const RatVector& z = sol->nullspace.front();
    Rational qz = bilinear(gb, z, z);
    Rational lin = bilinear(gb, x, z);
    if (qz != 0 || lin == 0) throw Error("singular system: xi^2 = -2 does not fix the solution");
    Rational t = (Rational(-2) - bilinear(gb, x, x)) / (2 * lin);
    for (std::size_t c = 0; c < k; ++c) x[c] += t * z[c];
  } else if (sol->nullspace.size() > 1) {
    throw Error("singular system: " + std::to_string(sol->nullspace.size()) +
                " free directions in the cusp class");
  }
  if (bilinear(gb, x, x) != -2) throw Error("xi^2 = -2 is unsatisfiable over the rationals");
  return {std::move(x)};
}

}  // namespace detail

/// Assembles the intersection table. Sections must meet exactly one
/// multiplicity-one component in every fibre; multisections must have total
/// degree `degree` on every fibre. Undeclared pairings between horizontal
/// curves default to 0 and are recorded in `assumptions`.
inline FibrationModel build_ns_model(FibrationSpec spec) {
  FibrationModel m;
  std::vector<FibreLayout> layouts;
  std::map<std::string, std::size_t> fibre_index;
  std::map<std::string, GeneratorKind> taken{{kFibreName, GeneratorKind::Fibre},
                                             {kCuspName, GeneratorKind::Cusp}};
  for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
    auto& f = spec.fibres[i];
    if (f.label.empty()) f.label = "f" + std::to_string(i + 1);
    if (f.label.find('.') != std::string::npos)
      throw Error("fibre label '" + f.label + "' must not contain '.'");
    if (!fibre_index.emplace(f.label, i).second) throw Error("duplicate fibre label '" + f.label + "'");
    layouts.push_back(fibre_layout(f.type));
    if (f.drop.empty()) f.drop = layouts.back().default_drop;
    if (!layouts.back().find(f.drop))
      throw Error("fibre " + f.label + " has no component '" + f.drop + "' to drop");
  }

  // Generators: components, sections, multisections, F.
  std::vector<std::size_t> first_component;
  for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
    first_component.push_back(m.generators.size());
    const auto& lay = layouts[i];
    for (std::size_t k = 0; k < lay.names.size(); ++k)
      m.generators.push_back({spec.fibres[i].label + "." + lay.names[k], GeneratorKind::Component,
                              static_cast<int>(i), lay.multiplicity[k]});
  }
  auto claim = [&](const std::string& name, GeneratorKind kind) {
    if (name.empty()) throw Error("curve without a name");
    if (name.find('.') != std::string::npos || !taken.emplace(name, kind).second)
      throw Error("invalid or duplicate curve name '" + name + "'");
  };
  const std::size_t first_horizontal = m.generators.size();
  for (const auto& s : spec.sections) {
    claim(s.name, GeneratorKind::Section);
    m.generators.push_back({s.name, GeneratorKind::Section, -1, 0});
  }
  for (const auto& s : spec.multisections) {
    claim(s.name, GeneratorKind::Multisection);
    if (s.degree < 1) throw Error("multisection " + s.name + " needs a positive degree");
    m.generators.push_back({s.name, GeneratorKind::Multisection, -1, 0});
  }
  const std::size_t horizontals = m.generators.size() - first_horizontal;
  m.fibre_class = m.generators.size();
  m.generators.push_back({kFibreName, GeneratorKind::Fibre, -1, 0});

  std::size_t n = m.generators.size();
  m.gram = IntMatrix(n, n);
  auto set = [&](std::size_t i, std::size_t j, const Integer& v) {
    m.gram(i, j) = v;
    m.gram(j, i) = v;
  };
  for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
    const auto& lay = layouts[i];
    for (std::size_t a = 0; a < lay.names.size(); ++a)
      for (std::size_t b = a; b < lay.names.size(); ++b)
        set(first_component[i] + a, first_component[i] + b, lay.pair(a, b));
  }

  auto component_of = [&](const std::string& curve, const std::string& label,
                          const std::string& comp) -> std::size_t {
    auto it = fibre_index.find(label);
    if (it == fibre_index.end())
      throw Error(curve + " refers to unknown fibre '" + label + "'");
    auto k = layouts[it->second].find(comp);
    if (!k) throw Error(curve + " refers to unknown component '" + label + "." + comp + "'");
    return first_component[it->second] + *k;
  };

  for (std::size_t h = 0; h < spec.sections.size(); ++h) {
    const auto& s = spec.sections[h];
    const std::size_t gi = first_horizontal + h;
    for (const auto& [label, comp] : s.meets) {
      std::size_t c = component_of("section " + s.name, label, comp);
      if (m.generators[c].multiplicity != 1)
        throw Error("section " + s.name + " meets " + m.generators[c].name + " of multiplicity " +
                    std::to_string(m.generators[c].multiplicity));
      set(gi, c, 1);
    }
    for (const auto& f : spec.fibres)
      if (!s.meets.count(f.label))
        throw Error("section " + s.name + " has no incidence on fibre " + f.label);
    set(gi, gi, -2);
    set(gi, m.fibre_class, 1);
  }
  for (std::size_t h = 0; h < spec.multisections.size(); ++h) {
    const auto& s = spec.multisections[h];
    const std::size_t gi = first_horizontal + spec.sections.size() + h;
    for (const auto& [label, counts] : s.meets) {
      long total = 0;
      for (const auto& [comp, count] : counts) {
        std::size_t c = component_of("multisection " + s.name, label, comp);
        if (count < 0) throw Error("multisection " + s.name + " has a negative incidence");
        set(gi, c, count);
        total += count * m.generators[c].multiplicity;
      }
      if (total != s.degree)
        throw Error("multisection " + s.name + " has degree " + std::to_string(total) +
                    " on fibre " + label + ", expected " + std::to_string(s.degree));
    }
    for (const auto& f : spec.fibres)
      if (!s.meets.count(f.label))
        throw Error("multisection " + s.name + " has no incidence on fibre " + f.label);
    set(gi, gi, s.self);
    set(gi, m.fibre_class, s.degree);
  }

  auto horizontal_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t h = 0; h < horizontals; ++h)
      if (m.generators[first_horizontal + h].name == name) return first_horizontal + h;
    throw Error("'" + name + "' is not a section or multisection");
  };
  std::set<std::pair<std::size_t, std::size_t>> declared;
  for (const auto& p : spec.pairings) {
    std::size_t a = horizontal_index(p.a), b = horizontal_index(p.b);
    if (a == b) throw Error("self-intersections are not declared as pairings");
    if (!declared.insert(std::minmax(a, b)).second)
      throw Error("pairing " + p.a + "." + p.b + " declared twice");
    set(a, b, p.value);
  }
  for (std::size_t a = first_horizontal; a < first_horizontal + horizontals; ++a)
    for (std::size_t b = a + 1; b < first_horizontal + horizontals; ++b)
      if (!declared.count({a, b}))
        m.assumptions.push_back(m.generators[a].name + "." + m.generators[b].name +
                                " = 0 (not declared)");

  // Basis: one component dropped per fibre, horizontal curves, F.
  for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
    std::size_t dropped = *layouts[i].find(spec.fibres[i].drop);
    for (std::size_t k = 0; k < layouts[i].names.size(); ++k)
      if (k != dropped) m.basis.push_back(first_component[i] + k);
  }
  for (std::size_t h = 0; h < horizontals; ++h) m.basis.push_back(first_horizontal + h);
  m.basis.push_back(m.fibre_class);

  if (spec.cusp) {
    std::vector<std::pair<std::size_t, long>> prescribed;
    for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
      if (layouts[i].cusp_pairing.empty())
        throw Error("fibre " + spec.fibres[i].label + " of type " + to_string(spec.fibres[i].type) +
                    " cannot carry a cusp curve");
      for (std::size_t k = 0; k < layouts[i].names.size(); ++k)
        prescribed.emplace_back(first_component[i] + k, layouts[i].cusp_pairing[k]);
    }
    prescribed.emplace_back(m.fibre_class, 3);
    bool complete = true;
    for (std::size_t h = 0; h < horizontals; ++h) {
      auto it = spec.cusp_pairings.find(m.generators[first_horizontal + h].name);
      if (it == spec.cusp_pairings.end()) complete = false;
      else prescribed.emplace_back(first_horizontal + h, it->second);
    }
    for (const auto& entry : spec.cusp_pairings) horizontal_index(entry.first);
    for (const auto& [g, v] : prescribed) m.cusp_prescribed[m.generators[g].name] = v;

    std::vector<Integer> row(n, Integer(0));
    if (complete) {
      for (const auto& [g, v] : prescribed) row[g] = v;
    } else {
      auto solved = detail::solve_cusp(m.gram, m.basis, prescribed);
      DivisorClass coords;
      for (std::size_t c = 0; c < m.basis.size(); ++c)
        if (solved.coords[c] != 0) coords[m.generators[m.basis[c]].name] = solved.coords[c];
      m.cusp_solution = coords;
      for (std::size_t g = 0; g < n; ++g) {
        Rational p = 0;
        for (std::size_t c = 0; c < m.basis.size(); ++c) p += solved.coords[c] * m.gram(m.basis[c], g);
        if (!is_integral(p))
          throw Error("solved cusp class pairs non-integrally with " + m.generators[g].name);
        row[g] = p.get_num();
      }
      for (const auto& [g, v] : prescribed)
        if (row[g] != v) throw Error("internal: cusp solve does not reproduce " + m.generators[g].name);
    }
    IntMatrix grown(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grown(i, j) = m.gram(i, j);
    for (std::size_t g = 0; g < n; ++g) grown(g, n) = grown(n, g) = row[g];
    grown(n, n) = -2;
    m.gram = std::move(grown);
    m.cusp = n;
    m.generators.push_back({kCuspName, GeneratorKind::Cusp, -1, 0});
    if (horizontals == 0) m.basis.push_back(n);
    ++n;
  } else if (!spec.cusp_pairings.empty()) {
    throw Error("cusp pairings declared without a cusp curve");
  }

  for (const auto& glue : spec.glue) {
    claim(glue.name, GeneratorKind::Glue);
    RatVector v = m.vector_of(glue.combination);
    RatVector p = multiply(to_rational(m.gram), v);
    Rational self = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (!is_integral(p[g]))
        throw Error("glue class " + glue.name + " pairs to " + to_string(p[g]) + " with " +
                    m.generators[g].name);
      self += p[g] * v[g];
    }
    if (!is_integral(self) || self.get_num() % 2 != 0)
      throw Error("glue class " + glue.name + " has self-intersection " + to_string(self) +
                  ", not an even integer");
    IntMatrix grown(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grown(i, j) = m.gram(i, j);
    for (std::size_t g = 0; g < n; ++g) grown(g, n) = grown(n, g) = p[g].get_num();
    grown(n, n) = self.get_num();
    m.gram = std::move(grown);
    m.generators.push_back({glue.name, GeneratorKind::Glue, -1, 0});
    ++n;
  }

  if (m.gram(m.fibre_class, m.fibre_class) != 0) throw Error("F^2 != 0");
  for (std::size_t i = 0; i < spec.fibres.size(); ++i) {
    RatVector f = m.pairings(m.fibre_expansion(i));
    for (std::size_t g = 0; g < n; ++g)
      if (f[g] != m.gram(m.fibre_class, g))
        throw Error("fibre relation fails: fibre " + spec.fibres[i].label + " and F differ on " +
                    m.generators[g].name);
  }
  m.spec = std::move(spec);
  return m;
}

/// Coordinates of a class in the model basis (unique up to numerical
/// equivalence when the basis is independent).
inline DivisorClass basis_coordinates(const FibrationModel& m, const DivisorClass& c) {
  RatMatrix a(m.size(), m.basis.size());
  for (std::size_t g = 0; g < m.size(); ++g)
    for (std::size_t b = 0; b < m.basis.size(); ++b) a(g, b) = m.gram(g, m.basis[b]);
  auto sol = solve_affine(a, m.pairings(c));
  if (!sol) throw Error("class is not numerically in the span of the basis");
  if (!sol->nullspace.empty()) throw Error("model basis is dependent");
  DivisorClass out;
  for (std::size_t b = 0; b < m.basis.size(); ++b)
    if (sol->particular[b] != 0) out[m.generators[m.basis[b]].name] = sol->particular[b];
  return out;
}

/// Class of xi in the basis, recomputed from the prescribed pairings only.
inline DivisorClass solve_cusp_class(const FibrationModel& m) {
  if (!m.cusp) throw Error("model has no cusp curve");
  std::vector<std::size_t> basis;
  for (auto b : m.basis)
    if (b != *m.cusp) basis.push_back(b);
  if (basis.size() != m.basis.size()) return single(kCuspName);
  std::vector<std::pair<std::size_t, long>> prescribed;
  for (const auto& [name, v] : m.cusp_prescribed) prescribed.emplace_back(m.index_of(name), v);
  auto solved = detail::solve_cusp(m.gram, basis, prescribed);
  DivisorClass out;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (solved.coords[c] != 0) out[m.generators[basis[c]].name] = solved.coords[c];
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility

struct PairingIdentity {
  std::string generator;
  Rational d_pairing;
  Rational scaled_witness_pairing;  // n <x, g>
};

struct DivisibilityCertificate {
  bool divisible = false;
  Integer n = 3;
  std::optional<DivisorClass> witness;  // over the generators
  std::vector<PairingIdentity> identities;
  Rational d_square;
  Rational witness_square;
  bool verified = false;  // every identity and d^2 = n^2 x^2 hold
};

/// Decides d = n x for integral x over the generators, modulo numerical
/// equivalence, by Smith-form solvability of gram . x = gram . d / n.
/// This certifies divisibility relative to the declared generators.
inline DivisibilityCertificate check_divisor_divisibility(const FibrationModel& m,
                                                          const DivisorClass& d, long n = 3) {
  if (n < 2) throw Error("divisor must be at least 2");
  for (const auto& [name, c] : d)
    if (!is_integral(c)) throw Error("class coefficient of " + name + " is not integral");
  RatVector pf = m.pairings(single(kFibreName));
  if (std::all_of(pf.begin(), pf.end(), [](const Rational& q) { return q == 0; }))
    throw Error("degenerate pairing: the fibre class is numerically trivial (no horizontal curve)");
  DivisibilityCertificate cert;
  cert.n = n;
  RatVector pd = m.pairings(d);
  cert.d_square = m.norm(d);
  IntVector rhs;
  for (const auto& p : pd) {
    Rational q = p / n;
    if (!is_integral(q)) return cert;
    rhs.push_back(q.get_num());
  }
  auto x = solve_integral(m.gram, rhs);
  if (!x) return cert;
  DivisorClass w;
  for (std::size_t g = 0; g < m.size(); ++g)
    if ((*x)[g] != 0) w[m.generators[g].name] = Rational((*x)[g]);
  RatVector pw = m.pairings(w);
  cert.verified = true;
  for (std::size_t g = 0; g < m.size(); ++g) {
    cert.identities.push_back({m.generators[g].name, pd[g], n * pw[g]});
    if (pd[g] != n * pw[g]) cert.verified = false;
  }
  cert.witness_square = m.norm(w);
  if (cert.d_square != Rational(n * n) * cert.witness_square) cert.verified = false;
  cert.divisible = true;
  cert.witness = std::move(w);
  return cert;
}

// ---------------------------------------------------------------------------
// Ten IV fibres: two sections, trisections, residues

inline constexpr int kIvFibres = 10;

inline std::string iv_name(int fibre, int component) {
  return "f" + std::to_string(fibre) + ".E" + std::to_string(component);
}

/// sum over fibres in [from, to] of (a E1 + b E2).
inline DivisorClass iv_configuration(int from, int to, long a, long b) {
  DivisorClass c;
  for (int i = from; i <= to; ++i) {
    c[iv_name(i, 1)] += a;
    c[iv_name(i, 2)] += b;
  }
  return drop_zeros(c);
}

inline FibrationSpec ten_iv_spec(bool cusp) {
  FibrationSpec spec;
  for (int i = 1; i <= kIvFibres; ++i) spec.fibres.push_back({FibreType::IV, "f" + std::to_string(i), ""});
  spec.cusp = cusp;
  return spec;
}

struct GapConfiguration {
  std::string description;
  DivisorClass divisor;
  std::optional<bool> divisible;  // set when the model cross-check ran
};

struct GapVerdict {
  int m = 0;
  int disagreements = 0;        // 10 - m
  bool possible = false;        // 10 - m admissible
  Rational implied_section_pairing;  // s.s' forced by the two cusp expressions
  bool pairing_realizable = false;   // nonnegative integer
  std::vector<GapConfiguration> configurations;
};

/// Ten IV fibres, sections s (on E1 everywhere) and s' (on E1 over fibres 1..m,
/// on E2 elsewhere), with s.s' set to `ss`.
inline FibrationSpec two_section_spec(int m, long ss) {
  FibrationSpec spec = ten_iv_spec(false);
  SectionSpec s{"s", {}}, t{"s'", {}};
  for (int i = 1; i <= kIvFibres; ++i) {
    s.meets["f" + std::to_string(i)] = "E1";
    t.meets["f" + std::to_string(i)] = i <= m ? "E1" : "E2";
  }
  spec.sections = {s, t};
  spec.pairings = {{"s", "s'", ss}};
  return spec;
}

/// Comparing the two cusp expressions forces sum over the 10 - m disagreement
/// fibres of (2E1 + E2) to be 3-divisible, so 10 - m must be admissible.
inline GapVerdict section_gap_analysis(int m) {
  if (m == kIvFibres) throw Error("two distinct sections cannot meet the same component in every fibre");
  if (m < 0 || m > kIvFibres) throw Error("m must lie in [0, 9]");
  GapVerdict v;
  v.m = m;
  v.disagreements = kIvFibres - m;
  v.possible = admissible_n().values.count(v.disagreements) > 0;
  // s' = s + (1/3) sum (E1 - E2) over the disagreement fibres
  v.implied_section_pairing = Rational(-2) + make_rational(v.disagreements, 3);
  v.pairing_realizable = is_integral(v.implied_section_pairing) && v.implied_section_pairing >= 0;
  v.configurations = {
      {"sum_{i=" + std::to_string(m + 1) + "}^10 (E1 + 2E2)", iv_configuration(m + 1, kIvFibres, 1, 2), {}},
      {"sum_{i=" + std::to_string(m + 1) + "}^10 (2E1 + E2)", iv_configuration(m + 1, kIvFibres, 2, 1), {}},
  };
  if (is_integral(v.implied_section_pairing)) {
    auto model = build_ns_model(two_section_spec(m, v.implied_section_pairing.get_num().get_si()));
    for (auto& c : v.configurations) c.divisible = check_divisor_divisibility(model, c.divisor).divisible;
  }
  return v;
}

struct TrisectionReport {
  int n = 0;
  DivisorClass divisor;  // G = xi + D - 2F (n = 9) or D + xi - F (n = 6)
  Rational self;
  Rational fibre_degree;
  Rational h_degree;
  std::map<std::string, Rational> profile;  // pairing with every IV component
  std::vector<std::string> failures;        // empty when every expected value holds
};

/// For the divisible configuration sum_{i<=n}(E1 + 2E2) in a model with ten IV
/// fibres and a cusp curve, builds the trisection class and checks its
/// numerical profile: (1,0,2) on fibres 1..n, (1,1,1) elsewhere, degree 3 on F
/// and degree 4 against H = xi + F; self-intersection -2 (n = 9) or 0 (n = 6).
inline TrisectionReport trisection_class(const FibrationModel& model, int n) {
  if (n != 6 && n != 9) throw Error("trisection classes exist for n = 6 or 9");
  if (!model.cusp) throw Error("model has no cusp curve");
  for (int i = 1; i <= kIvFibres; ++i)
    for (int j = 1; j <= 3; ++j) model.index_of(iv_name(i, j));
  DivisorClass config = iv_configuration(1, n, 1, 2);
  if (!check_divisor_divisibility(model, config).divisible)
    throw Error("configuration " + format_class(model, config) + " is not divisible by 3");
  TrisectionReport r;
  r.n = n;
  DivisorClass d = make_rational(1, 3) * config;
  r.divisor = n == 9 ? single(kCuspName) + d - single(kFibreName, 2) : d + single(kCuspName) - single(kFibreName);
  r.self = model.norm(r.divisor);
  r.fibre_degree = model.pair(r.divisor, single(kFibreName));
  r.h_degree = model.pair(r.divisor, single(kCuspName) + single(kFibreName));
  auto expect = [&](const std::string& what, const Rational& got, long want) {
    if (got != want)
      r.failures.push_back(what + " = " + to_string(got) + ", expected " + std::to_string(want));
  };
  for (int i = 1; i <= kIvFibres; ++i)
    for (int j = 1; j <= 3; ++j) {
      Rational p = model.pair(r.divisor, single(iv_name(i, j)));
      r.profile[iv_name(i, j)] = p;
      long want = i <= n ? (j == 1 ? 1 : j == 2 ? 0 : 2) : 1;
      expect(iv_name(i, j), p, want);
    }
  expect("self-intersection", r.self, n == 9 ? -2 : 0);
  expect("F-degree", r.fibre_degree, 3);
  expect("H-degree", r.h_degree, 4);
  return r;
}

struct ResidueInput {
  std::vector<Rational> a;  // a_2 .. a_10
  std::vector<Rational> b;  // b_2 .. b_10
  Rational N;
};

struct ResidueVerdict {
  bool valid = false;     // integrality conditions hold
  int l = 0;              // support size, fibre 1 included
  bool absorbed = false;  // N not integral: a third of F moved into fibre 1
  Rational adjusted_N;
  bool admissible = false;  // valid and l admissible
  std::vector<std::string> reasons;
};

/// Trisection C = xi + (1/3)(E1 + 2E2)^(1) + sum_{i>=2} (a_i E1 + b_i E2) + N F.
/// Integral pairings force a_i, b_i, N in (1/3)Z, a_i + b_i in Z and
/// N - l/3 in Z with l - 1 = #{i : a_i not integral}.
inline ResidueVerdict residue_gate(const ResidueInput& in) {
  if (in.a.size() != kIvFibres - 1 || in.b.size() != kIvFibres - 1)
    throw Error("residue gate needs coefficients for fibres 2..10");
  ResidueVerdict v;
  auto third = [](const Rational& q) { return is_integral(q * 3); };
  v.valid = true;
  int fractional = 0;
  for (std::size_t i = 0; i < in.a.size(); ++i) {
    std::string fib = "fibre " + std::to_string(i + 2);
    if (!third(in.a[i]) || !third(in.b[i])) {
      v.valid = false;
      v.reasons.push_back(fib + ": coefficient outside (1/3)Z");
    }
    if (!is_integral(in.a[i] + in.b[i])) {
      v.valid = false;
      v.reasons.push_back(fib + ": a + b = " + to_string(Rational(in.a[i] + in.b[i])) + " not integral");
    }
    if (!is_integral(in.a[i])) ++fractional;
  }
  v.l = fractional + 1;
  if (!third(in.N)) {
    v.valid = false;
    v.reasons.push_back("N outside (1/3)Z");
  }
  if (!is_integral(in.N - make_rational(v.l, 3))) {
    v.valid = false;
    v.reasons.push_back("N - l/3 = " + to_string(Rational(in.N - make_rational(v.l, 3))) + " not integral");
  }
  v.adjusted_N = in.N;
  if (v.valid && !is_integral(in.N)) {
    v.absorbed = true;
    v.adjusted_N = floor_of(in.N);
  }
  v.admissible = v.valid && admissible_n().values.count(v.l) > 0;
  if (v.valid && !v.admissible) v.reasons.push_back("l = " + std::to_string(v.l) + " is not admissible");
  return v;
}

struct HyperplaneDegrees {
  Rational h_square;
  std::vector<std::pair<std::string, Rational>> degrees;  // generator order
};

/// Degrees against H = xi + F.
inline HyperplaneDegrees hyperplane_degrees(const FibrationModel& m) {
  if (!m.cusp) throw Error("model has no cusp curve");
  DivisorClass h = single(kCuspName) + single(kFibreName);
  HyperplaneDegrees out;
  out.h_square = m.norm(h);
  RatVector p = m.pairings(h);
  for (std::size_t g = 0; g < m.size(); ++g) out.degrees.emplace_back(m.generators[g].name, p[g]);
  return out;
}

}  // namespace k3div
