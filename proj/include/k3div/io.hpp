#pragma once

// JSON and text input for lattices and fibration models.
//
// Lattice: {"rank": 2, "gram": [[0,1],[1,0]], "labels": ["a","b"]}, or a
// constructor expression such as "U(3)+6A2".
//
// Fibration:
//   {"fibres": [{"type": "IV"|"IV*"|"I3", "label": "f1", "drop": "E3"}, ...],
//    "sections": [{"name": "O", "meets": {"f1": "E1", ...}}, ...],
//    "multisections": [{"name": "C", "degree": 3, "self": -2,
//                       "meets": {"f1": {"E1": 1, "E3": 2}, ...}}, ...],
//    "cusp": true,
//    "drop": {"IV": "E3"},                       default drop per fibre type
//    "pairings": [{"a": "O", "b": "P", "value": 0}],
//    "cusp_pairings": {"s": 0},
//    "glue": [{"name": "D", "class": "1/3*(f1.E1 + 2 f1.E2 + ...)"}]}

#include <k3div/expression.hpp>
#include <k3div/fibration.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace k3div {

using Json = nlohmann::json;

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

inline Integer json_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (is_integral(q)) return q.get_num();
  }
  throw Error(where + ": expected an integer");
}

inline long json_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(where + ": expected an integer");
  return j.get<long>();
}

inline std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(where + ": expected a string");
  return j.get<std::string>();
}

inline bool looks_like_json(std::string_view s) {
  auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && (s[p] == '{' || s[p] == '[');
}

}  // namespace detail

inline Lattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw Error("lattice JSON must be an object");
  if (!j.contains("gram") || !j["gram"].is_array()) throw Error("lattice JSON needs a \"gram\" array");
  const auto& g = j["gram"];
  const std::size_t n = g.size();
  if (j.contains("rank") && detail::json_long(j["rank"], "rank") != static_cast<long>(n))
    throw Error("rank " + j["rank"].dump() + " does not match " + std::to_string(n) + " gram rows");
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n)
      throw Error("ragged gram: row " + std::to_string(i + 1) + " does not have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k)
      gram(i, k) = detail::json_integer(g[i][k], "gram[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw Error("\"labels\" must be an array");
    for (const auto& l : j["labels"]) labels.push_back(detail::json_string(l, "labels"));
  }
  return Lattice(std::move(gram), std::move(labels));
}

inline Json lattice_to_json(const Lattice& l) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(l.gram()(i, k).get_si());
    gram.push_back(std::move(row));
  }
  return {{"rank", l.rank()}, {"gram", std::move(gram)}, {"labels", l.labels()}};
}

/// A path to a JSON file, inline JSON, or a constructor expression.
inline Lattice parse_lattice_source(const std::string& source) {
  if (detail::looks_like_json(source)) return lattice_from_json(detail::parse_json(source));
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::string text = read_text_file(source);
    if (detail::looks_like_json(text)) return lattice_from_json(detail::parse_json(text));
    return parse_lattice_expression(text);
  }
  return parse_lattice_expression(source);
}

/// Comma-separated rationals, e.g. "1/3,2/3,0".
inline RatVector parse_rational_csv(const std::string& text) {
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw Error("empty vector");
  return v;
}

inline FibrationSpec fibration_from_json(const Json& j) {
  using detail::json_long;
  using detail::json_string;
  if (!j.is_object()) throw Error("fibration JSON must be an object");
  static const std::set<std::string> known = {"fibres", "sections", "multisections", "cusp", "drop",
                                              "pairings", "cusp_pairings", "glue", "name", "comment"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw Error("unknown fibration field \"" + key + "\"");
  FibrationSpec spec;
  std::map<FibreType, std::string> default_drop;
  if (j.contains("drop")) {
    if (!j["drop"].is_object()) throw Error("\"drop\" must map fibre types to components");
    for (const auto& [type, comp] : j["drop"].items())
      default_drop[parse_fibre_type(type)] = json_string(comp, "drop");
  }
  for (const auto& f : j.value("fibres", Json::array())) {
    if (!f.is_object() || !f.contains("type")) throw Error("each fibre needs a \"type\"");
    FibreSpec fs;
    fs.type = parse_fibre_type(json_string(f["type"], "fibre type"));
    fs.label = f.contains("label") ? json_string(f["label"], "fibre label") : "";
    if (f.contains("drop")) fs.drop = json_string(f["drop"], "fibre drop");
    else if (default_drop.count(fs.type)) fs.drop = default_drop[fs.type];
    spec.fibres.push_back(std::move(fs));
  }
  for (const auto& s : j.value("sections", Json::array())) {
    SectionSpec ss;
    ss.name = json_string(s.value("name", Json()), "section name");
    if (!s.contains("meets") || !s["meets"].is_object()) throw Error("section " + ss.name + " needs \"meets\"");
    for (const auto& [label, comp] : s["meets"].items()) {
      if (comp.is_array()) {
        if (comp.size() != 1)
          throw Error("section " + ss.name + " meets " + std::to_string(comp.size()) +
                      " components of fibre " + label);
        ss.meets[label] = json_string(comp.front(), "section component");
      } else {
        ss.meets[label] = json_string(comp, "section component");
      }
    }
    spec.sections.push_back(std::move(ss));
  }
  for (const auto& s : j.value("multisections", Json::array())) {
    MultisectionSpec ms;
    ms.name = json_string(s.value("name", Json()), "multisection name");
    ms.degree = json_long(s.value("degree", Json()), "multisection degree");
    ms.self = json_long(s.value("self", Json()), "multisection self-intersection");
    if (!s.contains("meets") || !s["meets"].is_object()) throw Error("multisection " + ms.name + " needs \"meets\"");
    for (const auto& [label, counts] : s["meets"].items()) {
      if (!counts.is_object()) throw Error("multisection " + ms.name + ": incidences must be objects");
      for (const auto& [comp, c] : counts.items()) ms.meets[label][comp] = json_long(c, "incidence");
    }
    spec.multisections.push_back(std::move(ms));
  }
  spec.cusp = j.value("cusp", false);
  for (const auto& p : j.value("pairings", Json::array()))
    spec.pairings.push_back({json_string(p.value("a", Json()), "pairing a"),
                             json_string(p.value("b", Json()), "pairing b"),
                             json_long(p.value("value", Json()), "pairing value")});
  const Json cusp_pairings = j.value("cusp_pairings", Json::object());
  if (!cusp_pairings.is_object()) throw Error("\"cusp_pairings\" must map curve names to integers");
  for (const auto& [name, v] : cusp_pairings.items()) spec.cusp_pairings[name] = json_long(v, "cusp pairing");
  for (const auto& g : j.value("glue", Json::array()))
    spec.glue.push_back({json_string(g.value("name", Json()), "glue name"),
                         parse_class(json_string(g.value("class", Json()), "glue class"))});
  return spec;
}

/// Class as "c*name + ..." in map order; readable by parse_class.
inline std::string class_to_string(const DivisorClass& c) {
  std::string out;
  for (const auto& [name, q] : c) {
    if (q == 0) continue;
    Rational a = q < 0 ? Rational(-q) : q;
    if (!out.empty()) out += q < 0 ? " - " : " + ";
    else if (q < 0) out += "-";
    out += (a == 1 ? std::string() : to_string(a) + "*") + name;
  }
  return out.empty() ? "0" : out;
}

inline Json fibration_to_json(const FibrationSpec& spec) {
  Json j = Json::object();
  Json fibres = Json::array();
  for (const auto& f : spec.fibres) {
    Json fj = {{"type", to_string(f.type)}, {"label", f.label}};
    if (!f.drop.empty()) fj["drop"] = f.drop;
    fibres.push_back(std::move(fj));
  }
  j["fibres"] = std::move(fibres);
  if (!spec.sections.empty()) {
    Json arr = Json::array();
    for (const auto& s : spec.sections) arr.push_back({{"name", s.name}, {"meets", s.meets}});
    j["sections"] = std::move(arr);
  }
  if (!spec.multisections.empty()) {
    Json arr = Json::array();
    for (const auto& s : spec.multisections)
      arr.push_back({{"name", s.name}, {"degree", s.degree}, {"self", s.self}, {"meets", s.meets}});
    j["multisections"] = std::move(arr);
  }
  j["cusp"] = spec.cusp;
  if (!spec.pairings.empty()) {
    Json arr = Json::array();
    for (const auto& p : spec.pairings) arr.push_back({{"a", p.a}, {"b", p.b}, {"value", p.value}});
    j["pairings"] = std::move(arr);
  }
  if (!spec.cusp_pairings.empty()) j["cusp_pairings"] = spec.cusp_pairings;
  if (!spec.glue.empty()) {
    Json arr = Json::array();
    for (const auto& g : spec.glue) arr.push_back({{"name", g.name}, {"class", class_to_string(g.combination)}});
    j["glue"] = std::move(arr);
  }
  return j;
}

inline FibrationModel load_fibration(const std::string& source) {
  std::string text = detail::looks_like_json(source) ? source : read_text_file(source);
  return build_ns_model(fibration_from_json(detail::parse_json(text)));
}

}  // namespace k3div
