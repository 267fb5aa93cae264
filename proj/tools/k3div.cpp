// k3div command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <k3div/k3div.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace k3div;

namespace {

enum class Format { Text, Json, Markdown };

struct Globals {
  bool json = false;
  bool md = false;
  bool quiet = false;

  Format format() const { return json ? Format::Json : md ? Format::Markdown : Format::Text; }
};

Json json_of(const Rational& q) {
  if (is_integral(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json json_of(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

template <class T>
Json json_row(const std::vector<T>& v) {
  Json row = Json::array();
  for (const auto& x : v) row.push_back(json_of(x));
  return row;
}

template <class T>
Json json_matrix(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_row(m.row(i)));
  return out;
}

template <class T>
std::string text_row(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

template <class T>
std::string text_matrix(const Matrix<T>& m, const std::string& indent = "  ") {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += indent + text_row(m.row(i)) + "\n";
  return out;
}

std::string signature_string(const Signature& s) {
  std::string out = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
  if (s.zero) out += " + " + std::to_string(s.zero) + " null";
  return out;
}

/// Prints `text` or `j` depending on the global format. Markdown falls back to
/// text for commands without a tabular report.
void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.quiet) return;
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::vector<LatticeVector> parse_vectors(const std::vector<std::string>& csv, std::size_t rank) {
  std::vector<LatticeVector> out;
  for (const auto& s : csv) {
    RatVector v = parse_rational_csv(s);
    if (v.size() != rank)
      throw Error("vector '" + s + "' has " + std::to_string(v.size()) + " entries, lattice rank is " +
                  std::to_string(rank));
    out.push_back({std::move(v)});
  }
  return out;
}

int cmd_info(const Globals& g, const std::string& source) {
  Lattice l = parse_lattice_source(source);
  auto inv = invariants(l);
  Json j = {{"rank", inv.rank},
            {"determinant", json_of(inv.determinant)},
            {"signature", {inv.signature.positive, inv.signature.negative, inv.signature.zero}},
            {"even", l.is_even()},
            {"gram", json_matrix(l.gram())}};
  std::string t = "rank        " + std::to_string(inv.rank) + "\ndeterminant " + to_string(inv.determinant) +
                  "\nsignature   " + signature_string(inv.signature) + "\neven        " +
                  (l.is_even() ? "yes" : "no") + "\n";
  emit(g, j, t);
  return 0;
}

int cmd_disc(const Globals& g, const std::string& source) {
  Lattice l = parse_lattice_source(source);
  auto d = discriminant_group(l);
  Json gens = Json::array();
  std::string t = "invariant factors [" + text_row(d.invariant_factors) + "]\norder " + to_string(d.order()) +
                  "\n2-length " + std::to_string(p_length(d, 2)) + "\n3-length " + std::to_string(p_length(d, 3)) +
                  "\n";
  for (std::size_t i = 0; i < d.generators.size(); ++i) {
    gens.push_back({{"order", json_of(d.invariant_factors[i])},
                    {"lift", json_row(d.generators[i].coords)},
                    {"q", to_string(d.qvalues[i])}});
    t += "g" + std::to_string(i + 1) + " order " + to_string(d.invariant_factors[i]) + "  q = " +
         to_string(d.qvalues[i]) + (d.even ? " mod 2" : " mod 1") + "  lift (" + text_row(d.generators[i].coords) +
         ")\n";
  }
  Json j = {{"invariant_factors", json_row(d.invariant_factors)},
            {"order", json_of(d.order())},
            {"p_length", {{"2", p_length(d, 2)}, {"3", p_length(d, 3)}}},
            {"even", d.even},
            {"generators", gens}};
  emit(g, j, t);
  return 0;
}

int cmd_glue(const Globals& g, const std::string& source, const std::vector<std::string>& vectors) {
  Lattice base = parse_lattice_source(source);
  auto r = glue({base, parse_vectors(vectors, base.rank())});
  Integer det = bareiss_determinant(r.lattice.gram());
  Json j = {{"index", json_of(r.index)},
            {"determinant", json_of(det)},
            {"gram", json_matrix(r.lattice.gram())},
            {"basis", json_matrix(r.basis)}};
  emit(g, j,
       "index       " + to_string(r.index) + "\ndeterminant " + to_string(det) + "\ngram\n" +
           text_matrix(r.lattice.gram()) + "basis (base coordinates)\n" + text_matrix(r.basis));
  return 0;
}

int cmd_closure(const Globals& g, const std::string& source, const std::vector<std::string>& vectors) {
  Lattice l = parse_lattice_source(source);
  auto r = primitive_closure(l, parse_vectors(vectors, l.rank()));
  Json j = {{"index", json_of(r.index)},
            {"closure_basis", json_matrix(r.closure_basis)},
            {"closure_gram", json_matrix(r.closure.gram())}};
  emit(g, j,
       "index " + to_string(r.index) + "\nclosure basis\n" + text_matrix(r.closure_basis) + "closure gram\n" +
           text_matrix(r.closure.gram()));
  return 0;
}

int cmd_complement(const Globals& g, const std::string& source, const std::vector<std::string>& vectors) {
  Lattice l = parse_lattice_source(source);
  auto r = orthogonal_complement(l, parse_vectors(vectors, l.rank()));
  auto inv = invariants(r.lattice);
  Json j = {{"rank", inv.rank},
            {"determinant", json_of(inv.determinant)},
            {"basis", json_matrix(r.basis)},
            {"gram", json_matrix(r.lattice.gram())}};
  emit(g, j,
       "rank " + std::to_string(inv.rank) + "\ndeterminant " + to_string(inv.determinant) + "\nbasis\n" +
           text_matrix(r.basis) + "gram\n" + text_matrix(r.lattice.gram()));
  return 0;
}

int cmd_roots(const Globals& g, const std::string& source, long norm, const std::string& dump, unsigned workers) {
  Lattice l = parse_lattice_source(source);
  std::vector<IntVector> vectors;
  std::string ade;
  if (norm == -2) {
    auto r = root_decomposition(l, workers);
    vectors = std::move(r.vectors);
    ade = r.ade_string();
  } else {
    vectors = short_vectors(l, Integer(norm), workers);
  }
  if (!dump.empty()) {
    std::ofstream out(dump);
    if (!out) throw Error("cannot write '" + dump + "'");
    for (const auto& v : vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << "\n";
    }
  }
  Json j = {{"norm", norm}, {"count", vectors.size()}};
  std::string t = "norm  " + std::to_string(norm) + "\ncount " + std::to_string(vectors.size()) + "\n";
  if (!ade.empty()) {
    j["ade"] = ade;
    t += "ade   " + ade + "\n";
  }
  emit(g, j, t);
  return 0;
}

int cmd_ledger(const Globals& g, int n) {
  auto l = cohomology_ledger(n);
  Json chi = Json::object();
  for (const auto& [k, v] : l.chi_L) chi[std::to_string(k)] = json_of(v);
  Json j = {{"n", l.n},
            {"M^2", json_of(l.m_square)},
            {"h1(M)", json_of(l.h1_M)},
            {"L^2", json_of(l.l_square)},
            {"chi(L^k)", chi},
            {"chi(O_Y)", json_of(l.chi_OY)},
            {"h1(O_Y)", json_of(l.h1_OY)},
            {"self_intersections",
             {{"Cbar", l.selfints.cbar}, {"Ebar", l.selfints.ebar}, {"Ctilde", l.selfints.ctilde},
              {"Etilde", l.selfints.etilde}}}};
  // The ledger is JSON in every format.
  if (!g.quiet) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_milnor(const Globals& g, const std::string& poly, int truncation) {
  F3Poly f = F3Poly::parse(poly);
  auto d = local_jacobian_dimension(f, truncation);
  Json j = {{"poly", f.to_string()}, {"truncation", truncation}, {"dimension", to_string(d)}};
  emit(g, j, f.to_string() + ": " + to_string(d) + "\n");
  return 0;
}

Json json_class(const FibrationModel& m, const DivisorClass& c) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto it = c.find(m.generators[i].name);
    if (it != c.end() && it->second != 0) out[it->first] = json_of(it->second);
  }
  return out;
}

int cmd_fib_solve(const Globals& g, const std::string& source) {
  auto m = load_fibration(source);
  if (!m.cusp) throw Error("model has no cusp curve");
  auto xi = solve_cusp_class(m);
  Json checks = Json::array();
  std::string t = "xi = " + format_class(m, xi) + "\n";
  bool ok = true;
  for (const auto& [name, v] : m.cusp_prescribed) {
    Rational got = m.pair(xi, single(name));
    ok = ok && got == v;
    checks.push_back({{"generator", name}, {"prescribed", v}, {"computed", json_of(got)}});
  }
  Rational sq = m.norm(xi);
  ok = ok && sq == -2;
  t += "xi^2 = " + to_string(sq) + "\nprescribed pairings " + (ok ? "reproduced" : "NOT reproduced") + " (" +
       std::to_string(m.cusp_prescribed.size()) + ")\n";
  for (const auto& a : m.assumptions) t += "assumption: " + a + "\n";
  Json j = {{"xi", json_class(m, xi)},
            {"xi_text", format_class(m, xi)},
            {"xi_square", json_of(sq)},
            {"checks", checks},
            {"assumptions", m.assumptions},
            {"ok", ok}};
  emit(g, j, t);
  return ok ? 0 : 1;
}

int cmd_fib_divis(const Globals& g, const std::string& source, const std::string& cls, long n) {
  auto m = load_fibration(source);
  auto c = check_divisor_divisibility(m, parse_class(cls), n);
  Json j = {{"divisible", c.divisible}, {"n", n}, {"d_square", json_of(c.d_square)}};
  std::string t = std::string(c.divisible ? "divisible" : "not divisible") + " by " + std::to_string(n) + "\n";
  if (c.divisible) {
    j["witness"] = json_class(m, *c.witness);
    j["witness_square"] = json_of(c.witness_square);
    j["verified"] = c.verified;
    t += "witness x = " + format_class(m, *c.witness) + "\nd^2 = " + to_string(c.d_square) +
         ", x^2 = " + to_string(c.witness_square) + "\ncertificate " + (c.verified ? "verified" : "FAILED") + "\n";
  }
  for (const auto& a : m.assumptions) t += "assumption: " + a + "\n";
  j["assumptions"] = m.assumptions;
  emit(g, j, t);
  return c.divisible && !c.verified ? 1 : 0;
}

int cmd_fib_gap(const Globals& g, int mcount) {
  auto v = section_gap_analysis(mcount);
  Json configs = Json::array();
  std::string t = "m = " + std::to_string(v.m) + ", disagreements " + std::to_string(v.disagreements) + ": " +
                  (v.possible ? "Possible" : "Impossible") + "\nimplied s.s' = " +
                  to_string(v.implied_section_pairing) + (v.pairing_realizable ? " (realizable)" : " (not realizable)") +
                  "\n";
  for (const auto& c : v.configurations) {
    Json cj = {{"description", c.description}};
    if (c.divisible) cj["divisible"] = *c.divisible;
    configs.push_back(cj);
    t += "  " + c.description +
         (c.divisible ? (*c.divisible ? ": divisible" : ": not divisible") : std::string(": not checked")) + "\n";
  }
  Json j = {{"m", v.m},
            {"disagreements", v.disagreements},
            {"possible", v.possible},
            {"implied_section_pairing", json_of(v.implied_section_pairing)},
            {"pairing_realizable", v.pairing_realizable},
            {"configurations", configs}};
  emit(g, j, t);
  return 0;
}

int cmd_fib_hdeg(const Globals& g, const std::string& source) {
  auto m = load_fibration(source);
  auto h = hyperplane_degrees(m);
  Json deg = Json::object();
  std::string t = "H = xi + F\nH^2 = " + to_string(h.h_square) + "\n";
  for (const auto& [name, d] : h.degrees) {
    deg[name] = json_of(d);
    t += "  H." + name + " = " + to_string(d) + "\n";
  }
  emit(g, {{"h_square", json_of(h.h_square)}, {"degrees", deg}}, t);
  return 0;
}

int cmd_lambda(const Globals& g, int sigma) {
  auto reports = lambda_entries(sigma);
  if (reports.empty()) throw Error("no shipped decomposition with sigma = " + std::to_string(sigma));
  Json arr = Json::array();
  std::string t;
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.pass();
    Json checks = Json::array();
    t += r.entry.source + "  " + r.entry.decomposition + "  " + (r.pass() ? "pass" : "FAIL") + "\n";
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
      t += "  " + c.name + ": " + c.computed + (c.pass ? "" : " (expected " + c.expected + ")") + "\n";
    }
    arr.push_back({{"key", r.entry.source},
                   {"sigma", r.entry.sigma},
                   {"decomposition", r.entry.decomposition},
                   {"checks", checks},
                   {"pass", r.pass()}});
  }
  emit(g, arr, t);
  return ok ? 0 : 1;
}

int cmd_bound(const Globals& g, long l3, long rank) {
  long s = artin_bound({l3, rank, 22});
  emit(g, {{"l3", l3}, {"rank", rank}, {"sigma_max", s}}, "sigma_max = " + std::to_string(s) + "\n");
  return 0;
}

int cmd_verify(const Globals& g, const std::string& section) {
  auto r = verify_paper(section.empty() ? std::nullopt : std::optional<std::string>(section));
  if (g.quiet) {
  } else if (g.format() == Format::Json) {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else if (g.format() == Format::Markdown) {
    std::cout << report_to_markdown(r);
  } else {
    std::cout << report_to_text(r);
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and fibration computations for 3-divisible configurations on K3 surfaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--md", g.md, "markdown output (verify-paper)");
  app.add_flag("-q,--quiet", g.quiet, "no output; exit code only");
  app.fallthrough();

  std::string source, dump, poly, cls, model, section;
  std::vector<std::string> vectors;
  long norm = -2, n_div = 3, l3 = 0, rank = 0;
  int n = 0, truncation = kDefaultTruncation, mcount = 0, sigma = 0;
  unsigned workers = 1;
  std::function<int()> action;

  auto lattice_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("lattice", source, "lattice JSON file, inline JSON or expression such as U(3)+6A2")->required();
    return c;
  };

  lattice_cmd("info", "rank, determinant, signature, parity")->callback([&] {
    action = [&] { return cmd_info(g, source); };
  });
  lattice_cmd("disc", "discriminant group, p-lengths and q-values")->callback([&] {
    action = [&] { return cmd_disc(g, source); };
  });
  auto* glue_c = lattice_cmd("glue", "overlattice generated by glue vectors");
  glue_c->add_option("--vector", vectors, "comma-separated rational coordinates")->required();
  glue_c->callback([&] { action = [&] { return cmd_glue(g, source, vectors); }; });
  auto* closure_c = lattice_cmd("closure", "primitive closure of a sublattice");
  closure_c->add_option("--vector", vectors, "sublattice generator (comma-separated)")->required();
  closure_c->callback([&] { action = [&] { return cmd_closure(g, source, vectors); }; });
  auto* comp_c = lattice_cmd("complement", "orthogonal complement of a sublattice");
  comp_c->add_option("--vector", vectors, "sublattice generator (comma-separated)")->required();
  comp_c->callback([&] { action = [&] { return cmd_complement(g, source, vectors); }; });
  auto* roots_c = lattice_cmd("roots", "vectors of a given norm in a definite lattice");
  roots_c->add_option("--norm", norm, "target norm")->default_val(-2);
  roots_c->add_option("--dump", dump, "write every vector to this file, one CSV row each");
  roots_c->add_option("--workers", workers, "enumeration threads")->default_val(1)->check(CLI::Range(1u, 256u));
  roots_c->callback([&] { action = [&] { return cmd_roots(g, source, norm, dump, workers); }; });

  auto* ledger_c = app.add_subcommand("ledger", "cohomology ledger of the triple cover (JSON)");
  ledger_c->add_option("--n", n, "configuration size")->required();
  ledger_c->callback([&] { action = [&] { return cmd_ledger(g, n); }; });

  auto* milnor_c = app.add_subcommand("milnor", "dim k[[x,y]]/(f_x, f_y) over F_3");
  milnor_c->add_option("--poly", poly, "polynomial such as x^2+y^4")->required();
  milnor_c->add_option("--truncation", truncation, "truncation degree")->default_val(kDefaultTruncation);
  milnor_c->callback([&] { action = [&] { return cmd_milnor(g, poly, truncation); }; });

  auto* fib = app.add_subcommand("fib", "quasi-elliptic fibration models");
  fib->require_subcommand(1);
  auto* solve_c = fib->add_subcommand("solve", "solve for the cusp class xi");
  solve_c->add_option("model", model, "fibration JSON file")->required();
  solve_c->callback([&] { action = [&] { return cmd_fib_solve(g, model); }; });
  auto* divis_c = fib->add_subcommand("divis", "n-divisibility of a divisor class");
  divis_c->add_option("model", model, "fibration JSON file")->required();
  divis_c->add_option("--class", cls, "class such as 2*g1.C12 + g1.C11")->required();
  divis_c->add_option("--n", n_div, "divisor")->default_val(3);
  divis_c->callback([&] { action = [&] { return cmd_fib_divis(g, model, cls, n_div); }; });
  auto* gap_c = fib->add_subcommand("gap", "two sections agreeing on m of ten IV fibres");
  gap_c->add_option("--m", mcount, "number of agreeing fibres")->required();
  gap_c->callback([&] { action = [&] { return cmd_fib_gap(g, mcount); }; });
  auto* hdeg_c = fib->add_subcommand("hdeg", "degrees against H = xi + F");
  hdeg_c->add_option("model", model, "fibration JSON file")->required();
  hdeg_c->callback([&] { action = [&] { return cmd_fib_hdeg(g, model); }; });

  auto* lambda_c = app.add_subcommand("lambda", "shipped decompositions of Lambda_sigma and their checks");
  lambda_c->add_option("--sigma", sigma, "Artin invariant")->required();
  lambda_c->callback([&] { action = [&] { return cmd_lambda(g, sigma); }; });

  auto* bound_c = app.add_subcommand("bound", "sigma_max from a 3-length and a rank");
  bound_c->add_option("--l3", l3, "3-length of the discriminant group")->required();
  bound_c->add_option("--rank", rank, "rank of the sublattice")->required();
  bound_c->callback([&] { action = [&] { return cmd_bound(g, l3, rank); }; });

  auto* verify_c = app.add_subcommand("verify-paper", "run every golden check");
  verify_c->add_option("--section", section, "divisibility, lattices, supersingular or fibration");
  verify_c->callback([&] { action = [&] { return cmd_verify(g, section); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
