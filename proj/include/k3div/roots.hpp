#pragma once

// Short-vector enumeration in definite lattices (Fincke-Pohst over exact
// rationals) and ADE classification of the norm -2 root system.

#include <k3div/lattice.hpp>

#include <map>
#include <set>
#include <thread>

namespace k3div {

inline constexpr std::size_t kMaxEnumerationRank = 24;

struct AdeComponent {
  char type = 'A';
  int rank = 0;

  friend auto operator<=>(const AdeComponent&, const AdeComponent&) = default;
};

inline long ade_root_count(const AdeComponent& c) {
  switch (c.type) {
    case 'A': return static_cast<long>(c.rank) * (c.rank + 1);
    case 'D': return 2L * c.rank * (c.rank - 1);
    case 'E': return c.rank == 6 ? 72 : c.rank == 7 ? 126 : 240;
    default: throw Error("unknown ADE type");
  }
}

struct RootSystemReport {
  Integer norm = -2;
  std::size_t count = 0;
  std::vector<IntVector> vectors;   // lexicographically sorted
  std::vector<AdeComponent> ade;    // sorted multiset

  /// e.g. "3E6", "9A2", "A1+E8"; "0" for an empty root system.
  std::string ade_string() const {
    if (ade.empty()) return "0";
    std::map<AdeComponent, int> counts;
    for (const auto& c : ade) ++counts[c];
    std::string out;
    for (const auto& [c, k] : counts) {
      if (!out.empty()) out += "+";
      if (k > 1) out += std::to_string(k);
      out += c.type + std::to_string(c.rank);
    }
    return out;
  }
};

namespace detail {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2 for a positive definite form.
struct QuadraticDecomposition {
  std::vector<Rational> diag;
  RatMatrix mu;
};

inline QuadraticDecomposition decompose(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix q = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  QuadraticDecomposition d;
  d.mu = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d.diag.push_back(q(i, i));
    for (std::size_t j = i + 1; j < n; ++j) d.mu(i, j) = q(i, j);
  }
  return d;
}

inline std::optional<Rational> exact_sqrt(const Rational& t) {
  if (t < 0) return std::nullopt;
  Integer rn = isqrt(t.get_num()), rd = isqrt(t.get_den());
  if (rn * rn != t.get_num() || rd * rd != t.get_den()) return std::nullopt;
  return make_rational(rn, rd);
}

class Enumerator {
 public:
  Enumerator(const QuadraticDecomposition& dec, std::vector<IntVector>& out)
      : dec_(dec), n_(dec.diag.size()), x_(n_, Integer(0)), out_(out) {}

  Rational center(std::size_t i) const {
    Rational u = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) u += dec_.mu(i, j) * x_[j];
    return -u;
  }

  /// Integer candidates x with d_i (x - c)^2 <= budget.
  IntVector candidates(std::size_t i, const Rational& budget) const {
    Rational c = center(i);
    Rational t = budget / dec_.diag[i];
    Integer s = isqrt(floor_of(t));
    IntVector xs;
    for (Integer x = floor_of(c) - s - 1; x <= ceil_of(c) + s + 1; ++x) {
      Rational d = Rational(x) - c;
      if (d * d <= t) xs.push_back(x);
    }
    return xs;
  }

  void descend(std::size_t i, const Rational& budget) {
    Rational c = center(i);
    if (i == 0) {
      // Leaf: the last coordinate must use up the budget exactly.
      auto r = exact_sqrt(budget / dec_.diag[0]);
      if (!r) return;
      Rational lo = c - *r, hi = c + *r;
      if (is_integral(lo)) emit(lo.get_num());
      if (*r != 0 && is_integral(hi)) emit(hi.get_num());
      return;
    }
    for (const auto& x : candidates(i, budget)) step(i, x, c, budget);
  }

  void step(std::size_t i, const Integer& x, const Rational& c, const Rational& budget) {
    Rational d = Rational(x) - c;
    x_[i] = x;
    descend(i - 1, budget - dec_.diag[i] * d * d);
    x_[i] = 0;
  }

  void top(const Integer& x, const Rational& budget) {
    const std::size_t i = n_ - 1;
    if (i == 0) {
      Rational d = Rational(x);
      if (dec_.diag[0] * d * d == budget) {
        x_[0] = x;
        out_.push_back(x_);
        x_[0] = 0;
      }
      return;
    }
    step(i, x, center(i), budget);
  }

 private:
  void emit(const Integer& x0) {
    x_[0] = x0;
    out_.push_back(x_);
    x_[0] = 0;
  }

  const QuadraticDecomposition& dec_;
  std::size_t n_;
  IntVector x_;
  std::vector<IntVector>& out_;
};

}  // namespace detail

/// Sign of a definite lattice: +1 positive, -1 negative; throws otherwise.
inline int definite_sign(const Lattice& l) {
  auto sig = signature_of(to_rational(l.gram()));
  if (sig.zero == 0 && sig.negative == 0) return 1;
  if (sig.zero == 0 && sig.positive == 0) return -1;
  throw Error("lattice is not definite");
}

/// All v with v.v == norm, sorted lexicographically. The outermost level of
/// the search may be split across `workers` threads; the result does not
/// depend on the worker count.
inline std::vector<IntVector> short_vectors(const Lattice& l, const Integer& norm,
                                            unsigned workers = 1) {
  if (l.rank() > kMaxEnumerationRank)
    throw Error("enumeration is capped at rank " + std::to_string(kMaxEnumerationRank));
  const std::size_t n = l.rank();
  if (n == 0) return norm == 0 ? std::vector<IntVector>{IntVector{}} : std::vector<IntVector>{};
  const int sign = definite_sign(l);
  const Integer target = sign * norm;
  if (target < 0) throw Error("requested norm has the wrong sign for this lattice");

  RatMatrix a = to_rational(l.gram());
  if (sign < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
  const auto dec = detail::decompose(a);
  const Rational budget(target);

  std::vector<IntVector> probe;
  IntVector tops = detail::Enumerator(dec, probe).candidates(n - 1, budget);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tops.size())));

  std::vector<std::vector<IntVector>> partial(workers);
  auto run = [&](unsigned w) {
    detail::Enumerator e(dec, partial[w]);
    for (std::size_t k = w; k < tops.size(); k += workers) e.top(tops[k], budget);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::vector<IntVector> all;
  for (auto& p : partial) all.insert(all.end(), std::make_move_iterator(p.begin()),
                                     std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  return all;
}

namespace detail {

inline Integer dot(const IntVector& w, const IntVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// Dynkin type of a connected simply-laced diagram given as adjacency lists.
inline AdeComponent classify_diagram(const std::vector<std::vector<std::size_t>>& adj,
                                     const std::vector<std::size_t>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::size_t edges = 0;
  std::vector<std::size_t> branch;
  for (auto v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) throw Error("root diagram has a node of degree > 3");
    if (adj[v].size() == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges + 1 != nodes.size()) throw Error("root diagram is not a tree");
  if (branch.empty()) return {'A', n};
  if (branch.size() > 1) throw Error("root diagram has two branch points");
  std::vector<int> arms;
  for (auto start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw Error("root diagram is not of ADE type");
}

}  // namespace detail

/// Norm -2 vectors of a negative definite lattice and their ADE type.
/// Positive roots are those with positive value under the weight
/// x -> sum_k x_k B^k (B exceeding twice every coordinate), simple roots the
/// positive roots that are not a sum of two positive roots.
inline RootSystemReport root_decomposition(const Lattice& l, unsigned workers = 1) {
  if (definite_sign(l) != -1) throw Error("root decomposition requires a negative definite lattice");
  RootSystemReport rep;
  rep.norm = -2;
  rep.vectors = short_vectors(l, rep.norm, workers);
  rep.count = rep.vectors.size();

  Integer bound = 0;
  for (const auto& v : rep.vectors)
    for (const auto& c : v) bound = std::max(bound, abs_of(c));
  const Integer base = 2 * bound + 1;
  IntVector weight(l.rank());
  Integer p = 1;
  for (auto& w : weight) {
    w = p;
    p *= base;
  }
  std::vector<IntVector> positive;
  for (const auto& v : rep.vectors)
    if (detail::dot(weight, v) > 0) positive.push_back(v);
  std::set<IntVector> pos_set(positive.begin(), positive.end());
  std::vector<IntVector> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& q : positive) {
      if (q == r) continue;
      IntVector diff(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - q[i];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }

  const RatMatrix gram = to_rational(l.gram());
  auto to_rat = [](const IntVector& v) {
    RatVector r;
    for (const auto& c : v) r.emplace_back(c);
    return r;
  };
  std::vector<std::vector<std::size_t>> adj(simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      Rational ip = -bilinear(gram, to_rat(simple[i]), to_rat(simple[j]));
      if (ip == 0) continue;
      if (ip != -1) throw Error("simple roots with pairing other than 0 or -1");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  std::vector<bool> seen(simple.size(), false);
  for (std::size_t s = 0; s < simple.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    rep.ade.push_back(detail::classify_diagram(adj, comp));
  }
  std::sort(rep.ade.begin(), rep.ade.end());
  long total = 0;
  for (const auto& c : rep.ade) total += ade_root_count(c);
  if (static_cast<std::size_t>(total) != rep.count)
    throw Error("internal: ADE root count does not match the enumeration");
  return rep;
}

}  // namespace k3div
