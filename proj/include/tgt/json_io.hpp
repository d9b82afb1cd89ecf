#pragma once

// JSON and DOT interchange: presented multiplication tables, spectrum and
// isotropy summaries, groupoid exports with a re-import path, right-LCM
// monoid descriptions, and subshift descriptions. Ordered maps throughout,
// so the same input always serializes to the same bytes.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgt/germs.hpp"
#include "tgt/isotropy.hpp"
#include "tgt/lcm.hpp"
#include "tgt/subshift.hpp"

namespace tgt::io {

using json = nlohmann::ordered_json;

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrKind::ParseError,
                "byte " + std::to_string(e.byte) + ": " + e.what(),
                static_cast<long>(e.byte));
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrKind::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrKind::IoError, "short write to " + path);
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrKind::BadInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error(ErrKind::BadInput, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline std::vector<std::string> string_list(const json& v, const char* what) {
  if (!v.is_array())
    throw Error(ErrKind::BadInput, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string())
      throw Error(ErrKind::BadInput, std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace detail

// ---------- semigroup tables ----------

inline json semigroup_to_json(const InverseSemigroup& S) {
  json j;
  j["name"] = S.name;
  j["elements"] = S.elements;
  json mul = json::array();
  for (int a = 0; a < S.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < S.size(); ++b) row.push_back(S.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  json star = json::array();
  for (int a = 0; a < S.size(); ++a) star.push_back(S.star(a));
  j["star"] = std::move(star);
  j["zero"] = S.zero;
  return j;
}

inline RawSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object())
    throw Error(ErrKind::BadInput, "semigroup description must be an object");
  RawSemigroup raw;
  raw.name = j.contains("name") && j.at("name").is_string()
                 ? j.at("name").get<std::string>()
                 : std::string("input");
  raw.elements = detail::string_list(detail::field(j, "elements"), "elements");
  const json& mul = detail::field(j, "mul");
  if (!mul.is_array())
    throw Error(ErrKind::BadInput, "mul must be a square array of integer rows");
  for (const auto& row : mul) {
    if (!row.is_array())
      throw Error(ErrKind::BadInput, "mul rows must be arrays of integers");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw Error(ErrKind::BadInput, "mul entries must be integers");
      r.push_back(x.get<int>());
    }
    raw.mul.push_back(std::move(r));
  }
  const json& star = detail::field(j, "star");
  if (!star.is_array())
    throw Error(ErrKind::BadInput, "star must be an array of integers");
  for (const auto& x : star) {
    if (!x.is_number_integer())
      throw Error(ErrKind::BadInput, "star entries must be integers");
    raw.star.push_back(x.get<int>());
  }
  if (j.contains("zero") && !j.at("zero").is_null()) {
    if (!j.at("zero").is_number_integer())
      throw Error(ErrKind::BadInput, "zero must be an integer index or null");
    raw.zero = j.at("zero").get<int>();
  }
  return raw;
}

inline InverseSemigroup load_semigroup_text(const std::string& text) {
  return validate(semigroup_from_json(parse_text(text)));
}

inline InverseSemigroup load_semigroup_file(const std::string& path) {
  return load_semigroup_text(read_file(path));
}

// ---------- spectrum ----------

// a filter as its sorted list of idempotent names
inline json filter_names(const InverseSemigroup& S, const Filter& f) {
  std::vector<std::string> names;
  names.reserve(f.members.size());
  for (int e : f.members) names.push_back(S.elements[e]);
  std::sort(names.begin(), names.end());
  return json(names);
}

inline json spectrum_to_json(const InverseSemigroup& S, const TightSpectrum& sp) {
  json j;
  j["filters"] = sp.filter_count;
  j["ultrafilters"] = sp.ultrafilter_count;
  j["tight"] = static_cast<int>(sp.tight.size());
  json tf = json::array();
  for (const auto& f : sp.tight) {
    json o;
    o["minimum"] = S.elements[f.minimum];
    o["idempotents"] = filter_names(S, f);
    o["ultra"] = f.ultra;
    tf.push_back(std::move(o));
  }
  j["tight_filters"] = std::move(tf);
  return j;
}

// ---------- isotropy ----------

inline json names_of(const InverseSemigroup& S, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(S.elements[x]);
  return a;
}

inline json isotropy_to_json(const InverseSemigroup& S, const TightSpectrum& sp) {
  json j;
  j["idempotents"] = names_of(S, S.idempotents());
  auto cen = centralizer(S);
  auto iso = s_iso(S);
  j["centralizer"] = names_of(S, cen);
  j["locally_trivial"] = names_of(S, iso);
  bool incl = std::includes(iso.begin(), iso.end(), cen.begin(), cen.end());
  j["centralizer_inside_locally_trivial"] = incl;
  j["centralizer_proper"] = incl && cen != iso;
  auto zd = is_zero_disjunctive(S);
  j["zero_disjunctive"] = zd.ok;
  if (!zd.ok) {
    json w;
    w["e"] = S.elements[zd.e];
    w["f"] = S.elements[zd.f];
    j["zero_disjunctive_witness"] = std::move(w);
  }
  auto lem = lemma_0dis_check(S);
  j["centralizer_lemma"] = {{"applicable", lem.applicable},
                            {"ok", lem.ok},
                            {"detail", lem.detail}};
  j["fixed_sets_covered"] = condition_h(S).ok;
  json zr = json::array();
  for (int s = 0; s < S.size(); ++s) {
    auto z = z_region(S, sp, s);
    json o;
    o["element"] = S.elements[s];
    o["weakly_fixed"] = names_of(S, z.w);
    o["cover"] = names_of(S, z.cover);
    o["region"] = json(z.z);
    zr.push_back(std::move(o));
  }
  j["z_regions"] = std::move(zr);
  return j;
}

// ---------- groupoid export ----------

inline json groupoid_to_json(const InverseSemigroup& S, const TightSpectrum& sp,
                             const TightGroupoid& G) {
  json j;
  j["units"] = json(G.units);
  json arrows = json::array();
  for (int a = 0; a < G.size(); ++a) {
    json o;
    o["id"] = a;
    o["src"] = G.src(a);
    o["rng"] = G.rng(a);
    o["rep"] = S.elements[G.arrows[a].rep];
    o["filter"] = filter_names(S, sp.tight[G.src(a)]);
    arrows.push_back(std::move(o));
  }
  j["arrows"] = std::move(arrows);
  json mul = json::array();
  for (int a = 0; a < G.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < G.size(); ++b) {
      auto p = G.mul(a, b);
      if (p)
        row.push_back(*p);
      else
        row.push_back(nullptr);
    }
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

struct GroupoidImport {
  std::vector<int> units;
  std::vector<int> src, rng;
  std::vector<std::string> rep;
  std::vector<std::vector<std::optional<int>>> mul;
};

inline GroupoidImport groupoid_from_json(const json& j) {
  GroupoidImport out;
  const json& units = detail::field(j, "units");
  if (!units.is_array())
    throw Error(ErrKind::BadInput, "units must be an array of arrow ids");
  for (const auto& u : units) out.units.push_back(u.get<int>());
  const json& arrows = detail::field(j, "arrows");
  if (!arrows.is_array())
    throw Error(ErrKind::BadInput, "arrows must be an array");
  for (const auto& a : arrows) {
    out.src.push_back(detail::int_field(a, "src"));
    out.rng.push_back(detail::int_field(a, "rng"));
    const json& r = detail::field(a, "rep");
    if (!r.is_string())
      throw Error(ErrKind::BadInput, "arrow rep must be an element name");
    out.rep.push_back(r.get<std::string>());
  }
  const json& mul = detail::field(j, "mul");
  if (!mul.is_array() || mul.size() != arrows.size())
    throw Error(ErrKind::BadInput, "mul must be a square array over the arrows");
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != arrows.size())
      throw Error(ErrKind::BadInput, "mul must be a square array over the arrows");
    std::vector<std::optional<int>> r;
    for (const auto& x : row) {
      if (x.is_null())
        r.push_back(std::nullopt);
      else
        r.push_back(x.get<int>());
    }
    out.mul.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// units as nodes named by the minimum idempotent of their filter, every
// non-unit arrow as one labeled edge from source unit to range unit
inline std::string groupoid_to_dot(const InverseSemigroup& S,
                                   const TightSpectrum& sp,
                                   const TightGroupoid& G) {
  std::ostringstream os;
  os << "digraph germs {\n";
  for (size_t i = 0; i < G.units.size(); ++i)
    os << "  u" << i << " [shape=circle, label=\""
       << detail::dot_escape(S.elements[sp.tight[i].minimum]) << "\"];\n";
  std::vector<char> is_unit(static_cast<size_t>(G.size()), 0);
  for (int u : G.units) is_unit[static_cast<size_t>(u)] = 1;
  for (int a = 0; a < G.size(); ++a) {
    if (is_unit[static_cast<size_t>(a)]) continue;
    os << "  u" << G.src(a) << " -> u" << G.rng(a) << " [label=\""
       << detail::dot_escape(S.elements[G.arrows[a].rep]) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------- right-LCM monoids ----------

inline json letters_of(int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(std::string(1, static_cast<char>('a' + i)));
  return a;
}

inline json monoid_to_json(const lcm::Monoid& M) {
  json j;
  json params = json::object();
  switch (M.kind()) {
    case lcm::Kind::Free:
      j["kind"] = "free";
      params["alphabet"] = letters_of(M.alphabet());
      break;
    case lcm::Kind::Lattice:
      j["kind"] = "lattice_nk";
      params["k"] = M.dim();
      break;
    case lcm::Kind::Product: {
      j["kind"] = "product";
      json f1, f2;
      f1["kind"] = "free";
      f1["params"] = {{"alphabet", letters_of(M.alphabet())}};
      f2["kind"] = "lattice_nk";
      f2["params"] = {{"k", M.dim()}};
      params["factors"] = json::array({std::move(f1), std::move(f2)});
      break;
    }
  }
  j["params"] = std::move(params);
  return j;
}

inline lcm::Monoid monoid_from_json(const json& j) {
  const json& kind = detail::field(j, "kind");
  if (!kind.is_string())
    throw Error(ErrKind::BadInput, "monoid kind must be a string");
  std::string k = kind.get<std::string>();
  json params = j.contains("params") ? j.at("params") : json::object();
  if (k == "free") {
    auto letters = detail::string_list(detail::field(params, "alphabet"), "alphabet");
    return lcm::Monoid::free_monoid(static_cast<int>(letters.size()));
  }
  if (k == "lattice_nk") return lcm::Monoid::lattice_nk(detail::int_field(params, "k"));
  if (k == "product") {
    if (params.contains("factors")) {
      const json& fs = params.at("factors");
      if (!fs.is_array() || fs.size() != 2)
        throw Error(ErrKind::BadInput, "product factors must list two monoids");
      int alpha = -1, dim = -1;
      for (const auto& f : fs) {
        auto sub = monoid_from_json(f);
        if (sub.kind() == lcm::Kind::Free)
          alpha = sub.alphabet();
        else if (sub.kind() == lcm::Kind::Lattice)
          dim = sub.dim();
        else
          throw Error(ErrKind::BadInput, "product factors must be free and lattice_nk");
      }
      if (alpha < 0 || dim < 0)
        throw Error(ErrKind::BadInput, "product factors must be free and lattice_nk");
      return lcm::Monoid::product(alpha, dim);
    }
    auto letters = detail::string_list(detail::field(params, "alphabet"), "alphabet");
    return lcm::Monoid::product(static_cast<int>(letters.size()),
                                detail::int_field(params, "k"));
  }
  throw Error(ErrKind::BadInput, "unknown monoid kind '" + k + "'");
}

// ---------- subshifts ----------

inline json shift_to_json(const shift::Sft& X) {
  json j;
  json a = json::array();
  for (char c : X.alphabet()) a.push_back(std::string(1, c));
  j["alphabet"] = std::move(a);
  j["forbidden"] = json(X.forbidden());
  return j;
}

inline shift::Sft shift_from_json(const json& j) {
  auto letters = detail::string_list(detail::field(j, "alphabet"), "alphabet");
  std::string al;
  for (const auto& s : letters) {
    if (s.size() != 1)
      throw Error(ErrKind::BadInput, "alphabet entries must be single symbols");
    al.push_back(s[0]);
  }
  auto forbidden = detail::string_list(detail::field(j, "forbidden"), "forbidden");
  return shift::Sft::make(al, forbidden);
}

}  // namespace tgt::io
