#pragma once

// Named glued lattices and the symbolic constructor syntax:
//   "A2", "E8(3)", "6A2", "U(3)+L+E8(3)", "U+L'+A2", ...
// Terms are joined by '+', carry an optional multiplicity prefix and an
// optional scale in parentheses. Glued pieces: L (alias L6) is the index 3
// overlattice of 6A2, L9 that of 9A2, and L' (alias Lp) that of 3E6.

#include <k3div/discriminant.hpp>
#include <k3div/overlattice.hpp>

#include <cctype>

namespace k3div {

/// The vector (1/3) sum (e_i + 2 e'_i) over the A2 blocks of nA2.
inline LatticeVector a2_glue_vector(std::size_t blocks) {
  RatVector v;
  for (std::size_t i = 0; i < blocks; ++i) {
    v.push_back(make_rational(1, 3));
    v.push_back(make_rational(2, 3));
  }
  return {std::move(v)};
}

inline Lattice repeated(const Lattice& part, std::size_t count) {
  return direct_sum(std::vector<Lattice>(count, part));
}

/// Index 3 overlattice of nA2 generated by (1/3) sum (e_i + 2 e'_i).
inline GlueResult glued_a2(std::size_t blocks) {
  return glue({repeated(make_standard(Symbol::A, 2), blocks), {a2_glue_vector(blocks)}});
}

/// The generator lift of A_{E6} used for the 3E6 glue (one per factor).
inline RatVector e6_glue_component() {
  auto data = discriminant_group(make_standard(Symbol::E, 6));
  return data.generators.front().coords;
}

/// Index 3 overlattice of 3E6 glued by the diagonal element (w, w, w) of
/// (A_{E6})^3, where w generates A_{E6}.
inline GlueResult glued_3e6() {
  RatVector w = e6_glue_component();
  RatVector v;
  for (int k = 0; k < 3; ++k) v.insert(v.end(), w.begin(), w.end());
  return glue({repeated(make_standard(Symbol::E, 6), 3), {{std::move(v)}}});
}

namespace detail {

inline Lattice parse_term(const std::string& term) {
  std::size_t i = 0;
  auto read_uint = [&](std::size_t& pos) -> std::optional<long> {
    std::size_t start = pos;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return std::stol(term.substr(start, pos - start));
  };
  long count = read_uint(i).value_or(1);
  if (count < 1) throw Error("multiplicity must be positive in '" + term + "'");
  if (i >= term.size()) throw Error("missing lattice symbol in '" + term + "'");
  char head = term[i++];
  Lattice base;
  switch (head) {
    case 'A':
    case 'D':
    case 'E': {
      auto n = read_uint(i);
      if (!n) throw Error("missing index in '" + term + "'");
      Symbol s = head == 'A' ? Symbol::A : head == 'D' ? Symbol::D : Symbol::E;
      base = make_standard(s, static_cast<int>(*n));
      break;
    }
    case 'U':
      base = make_standard(Symbol::U, 0);
      break;
    case 'L': {
      if (i < term.size() && (term[i] == '\'' || term[i] == 'p')) {
        ++i;
        base = glued_3e6().lattice;
        break;
      }
      auto n = read_uint(i).value_or(6);
      if (n != 6 && n != 9) throw Error("unknown glued lattice in '" + term + "'");
      base = glued_a2(static_cast<std::size_t>(n)).lattice;
      break;
    }
    default:
      throw Error("unknown lattice symbol '" + std::string(1, head) + "'");
  }
  if (i < term.size() && term[i] == '(') {
    auto close = term.find(')', i);
    if (close == std::string::npos || close + 1 != term.size())
      throw Error("malformed scale in '" + term + "'");
    Rational s = parse_rational(term.substr(i + 1, close - i - 1));
    if (!is_integral(s)) throw Error("scale must be an integer in '" + term + "'");
    base = rescale(base, s.get_num().get_si());
    i = close + 1;
  }
  if (i != term.size()) throw Error("trailing characters in '" + term + "'");
  return count == 1 ? base : repeated(base, static_cast<std::size_t>(count));
}

}  // namespace detail

/// Parses a '+'-joined constructor expression, left to right.
inline Lattice parse_lattice_expression(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty lattice expression");
  std::vector<Lattice> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = s.find('+', start);
    std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw Error("empty term in lattice expression");
    parts.push_back(detail::parse_term(term));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

}  // namespace k3div
