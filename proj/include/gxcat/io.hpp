#pragma once

// JSON encodings for groups, cocycles, rings (with optional action and embedding) and
// pointed data. Keys are sorted (std::map objects). Exact integers are written as plain
// numbers, other exact values as {"a","b","m","den"} for (a + b sqrt(m)) / den.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gxcat/cohomology.hpp"
#include "gxcat/errors.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/numbers.hpp"
#include "gxcat/pointed.hpp"
#include "gxcat/report.hpp"

namespace gxcat::io {

using json = nlohmann::json;

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  fail(ErrorKind::usage, "field '" + field + "': " + what);
}

inline const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) field_error(where.empty() ? key : where + "." + key, "missing");
  return j.at(key);
}

inline std::int64_t as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

// ---------------------------------------------------------------------------
// Numbers

inline json to_json(const QuadraticNumber& q) {
  if (q.is_integer()) return q.a();
  return json{{"a", q.a()}, {"b", q.b()}, {"m", q.m()}, {"den", q.den()}};
}

inline json to_json(const Real& r) {
  if (r.is_exact()) return to_json(r.exact());
  return json{{"value", r.to_double()}, {"error", r.error_bound()}, {"exact", false}};
}

inline Real real_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Real(j.get<std::int64_t>());
  if (!j.is_object()) field_error(field, "expected an integer or an exact number object");
  if (j.contains("value")) {
    if (!j["value"].is_number()) field_error(field + ".value", "expected a number");
    return Real::approx(j["value"].get<double>(), j.contains("error") ? j["error"].get<double>() : kTolerance);
  }
  const std::int64_t a = j.contains("a") ? as_int(j["a"], field + ".a") : 0;
  const std::int64_t b = j.contains("b") ? as_int(j["b"], field + ".b") : 0;
  const std::int64_t m = j.contains("m") ? as_int(j["m"], field + ".m") : 1;
  const std::int64_t den = j.contains("den") ? as_int(j["den"], field + ".den") : 1;
  if (den <= 0) field_error(field + ".den", "must be positive");
  if (m < 1) field_error(field + ".m", "must be positive");
  return Real(QuadraticNumber(a, b, m, den));
}

inline json to_json(const Turn& t) { return json{{"num", t.num()}, {"den", t.den()}}; }

inline Turn turn_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Turn(j.get<std::int64_t>(), 1);
  const auto num = as_int(require(j, "num", field), field + ".num");
  const auto den = as_int(require(j, "den", field), field + ".den");
  if (den <= 0) field_error(field + ".den", "must be positive");
  return Turn(num, den);
}

/// Complex values are floats; rounded so reports stay byte-stable.
inline json complex_to_json(std::complex<double> z) {
  auto r = [](double v) {
    double x = std::round(v * 1e12) / 1e12;
    return x == 0.0 ? 0.0 : x;
  };
  return json{{"re", r(z.real())}, {"im", r(z.imag())}, {"error", 1e-9}};
}

// ---------------------------------------------------------------------------
// Groups

inline json to_json(const FiniteGroup& g) {
  json mul = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(row);
  }
  return json{{"name", g.name()}, {"order", g.order()}, {"mul", mul}, {"elements", g.element_names()}};
}

inline FiniteGroup group_from_json(const json& j, const std::string& field = "group") {
  if (j.is_string()) {
    try {
      return build_group(j.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  }
  if (!j.is_object()) field_error(field, "expected a preset name or {name, order, mul}");
  const std::string name = j.contains("name") ? as_string(j["name"], field + ".name") : std::string("G");
  const int order = static_cast<int>(as_int(require(j, "order", field), field + ".order"));
  if (order < 1 || order > kMaxExplicitOrder) field_error(field + ".order", "out of range 1.." + std::to_string(kMaxExplicitOrder));
  const json& mul = require(j, "mul", field);
  if (!mul.is_array() || static_cast<int>(mul.size()) != order) field_error(field + ".mul", "expected order rows");
  std::vector<int> table;
  for (int a = 0; a < order; ++a) {
    const json& row = mul[a];
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      field_error(field + ".mul[" + std::to_string(a) + "]", "expected order entries");
    for (int b = 0; b < order; ++b) {
      auto v = as_int(row[b], field + ".mul[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      if (v < 0 || v >= order) field_error(field + ".mul[" + std::to_string(a) + "][" + std::to_string(b) + "]", "out of range");
      table.push_back(static_cast<int>(v));
    }
  }
  std::vector<std::string> names;
  if (j.contains("elements")) {
    for (const auto& e : j["elements"]) names.push_back(as_string(e, field + ".elements"));
    if (static_cast<int>(names.size()) != order) field_error(field + ".elements", "expected order names");
  } else {
    for (int a = 0; a < order; ++a) names.push_back(a == 0 ? "e" : "x" + std::to_string(a));
  }
  return FiniteGroup(name, order, std::move(table), std::move(names));
}

/// Element given by name or index.
inline int element_from_json(const FiniteGroup& g, const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= g.order()) field_error(field, "element index out of range");
    return static_cast<int>(v);
  }
  auto name = as_string(j, field);
  auto e = g.find(name);
  if (!e) field_error(field, "unknown element '" + name + "'");
  return *e;
}

// ---------------------------------------------------------------------------
// Cocycles

inline json to_json(const TorsionCocycle& c) {
  json values = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.values()[i] == 0) continue;
    json row = json::array();
    for (int x : c.tuple(i)) row.push_back(c.group().element_name(x));
    row.push_back(c.values()[i]);
    values.push_back(row);
  }
  return json{{"group", to_json(c.group())}, {"degree", c.degree()}, {"N", c.N()}, {"values", values}};
}

inline TorsionCocycle cocycle_from_json(const json& j, GroupPtr group = nullptr, const std::string& field = "cocycle") {
  if (!group) group = std::make_shared<const FiniteGroup>(group_from_json(require(j, "group", field), field + ".group"));
  const int degree = static_cast<int>(as_int(require(j, "degree", field), field + ".degree"));
  const std::int64_t N = as_int(require(j, "N", field), field + ".N");
  if (degree < 0 || degree > 4) field_error(field + ".degree", "must be in 0..4");
  if (N < 1) field_error(field + ".N", "must be positive");
  TorsionCocycle c(group, degree, N);
  const json& values = j.contains("values") ? j["values"] : json::array();
  for (std::size_t r = 0; r < values.size(); ++r) {
    const std::string f = field + ".values[" + std::to_string(r) + "]";
    const json& row = values[r];
    if (!row.is_array() || static_cast<int>(row.size()) != degree + 1) field_error(f, "expected degree elements and a value");
    std::vector<int> t;
    for (int i = 0; i < degree; ++i) t.push_back(element_from_json(*group, row[i], f));
    const auto v = as_int(row[degree], f);
    if (std::find(t.begin(), t.end(), 0) != t.end()) {
      if (mod(v, N) != 0) field_error(f, "cochains are normalized: entries with an identity argument must vanish");
      continue;
    }
    c.set(t, v);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Rings

struct LoadedRing {
  GradedFusionRing ring;
  std::optional<RingGAction> action;
  std::optional<std::vector<int>> embedding;  // irreps of embedding_group -> labels
  GroupPtr embedding_group;
};

inline json to_json(const GradedFusionRing& r, const RingGAction* action = nullptr,
                    const std::vector<int>* embedding = nullptr, const FiniteGroup* embedding_group = nullptr) {
  json j;
  j["simples"] = r.labels;
  j["unit"] = r.labels[r.unit];
  json dual = json::object();
  for (int i = 0; i < r.size(); ++i) dual[r.labels[i]] = r.labels[r.dual[i]];
  j["dual"] = dual;
  json rules = json::array();
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      for (int c = 0; c < r.size(); ++c)
        if (int m = r.N(a, b, c)) rules.push_back({r.labels[a], r.labels[b], r.labels[c], m});
  j["N"] = rules;
  if (r.group->order() > 1) {
    json deg = json::object();
    for (int i = 0; i < r.size(); ++i) deg[r.labels[i]] = r.group->element_name(r.grading[i]);
    j["grading"] = json{{"group", to_json(*r.group)}, {"deg", deg}};
  }
  if (r.dims) {
    json d = json::object();
    for (int i = 0; i < r.size(); ++i) d[r.labels[i]] = to_json((*r.dims)[i]);
    j["dims"] = d;
  }
  if (r.twists) {
    json t = json::object();
    for (int i = 0; i < r.size(); ++i) t[r.labels[i]] = to_json((*r.twists)[i]);
    j["twists"] = t;
  }
  if (action) {
    json a = json::object();
    a["group"] = to_json(*action->group);
    json perms = json::object();
    for (int g = 0; g < action->group->order(); ++g) {
      json p = json::array();
      for (int x : action->perms[g]) p.push_back(r.labels[x]);
      perms[action->group->element_name(g)] = p;
    }
    a["perms"] = perms;
    j["action"] = a;
  }
  if (embedding && embedding_group) {
    json labels = json::array();
    for (int x : *embedding) labels.push_back(r.labels[x]);
    j["embedding"] = json{{"group", to_json(*embedding_group)}, {"labels", labels}};
  }
  return j;
}

inline LoadedRing ring_from_json(const json& j, const std::string& field = "ring");

inline PermutationGroup perm_group_from_json(const json& j, int n, const std::string& field) {
  // {"generators": [[...], ...]} of permutations of 0..n-1
  std::vector<std::vector<int>> gens;
  const json& gs = require(j, "generators", field);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    std::vector<int> p;
    for (const auto& v : gs[i]) p.push_back(static_cast<int>(as_int(v, field + ".generators[" + std::to_string(i) + "]")));
    if (static_cast<int>(p.size()) != n) field_error(field + ".generators[" + std::to_string(i) + "]", "wrong length");
    gens.push_back(p);
  }
  return permutation_group(n, gens, j.contains("name") ? as_string(j["name"], field + ".name") : std::string());
}

inline LoadedRing ring_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) field_error(field, "expected an object");
  if (j.contains("tensor_power")) {
    const json& tp = j["tensor_power"];
    const std::string f = field + ".tensor_power";
    LoadedRing base = ring_from_json(require(tp, "base", f), f + ".base");
    const int n = static_cast<int>(as_int(require(tp, "n", f), f + ".n"));
    if (n < 1 || n > 4) field_error(f + ".n", "must be in 1..4");
    PermutationGroup pg = perm_group_from_json(require(tp, "permutations", f), n, f + ".permutations");
    auto [ring, action] = tensor_power(base.ring, n, pg);
    LoadedRing out;
    out.ring = std::move(ring);
    out.action = std::move(action);
    return out;
  }
  std::vector<std::string> labels;
  const json& simples = require(j, "simples", field);
  if (!simples.is_array()) field_error(field + ".simples", "expected an array of labels");
  for (const auto& s : simples) labels.push_back(as_string(s, field + ".simples"));
  const std::string unit = as_string(require(j, "unit", field), field + ".unit");
  auto label_at = [&](const json& v, const std::string& f) -> std::string {
    if (v.is_number_integer()) {
      auto i = v.get<std::int64_t>();
      if (i < 0 || i >= static_cast<std::int64_t>(labels.size())) field_error(f, "label index out of range");
      return labels[static_cast<std::size_t>(i)];
    }
    auto s = as_string(v, f);
    if (std::find(labels.begin(), labels.end(), s) == labels.end()) field_error(f, "unknown label '" + s + "'");
    return s;
  };
  if (std::find(labels.begin(), labels.end(), unit) == labels.end()) field_error(field + ".unit", "unknown label '" + unit + "'");
  std::vector<std::tuple<std::string, std::string, std::string, int>> rules;
  const json& N = require(j, "N", field);
  if (!N.is_array()) field_error(field + ".N", "expected a list of [i, j, k, mult]");
  for (std::size_t r = 0; r < N.size(); ++r) {
    const std::string f = field + ".N[" + std::to_string(r) + "]";
    if (!N[r].is_array() || N[r].size() != 4) field_error(f, "expected [i, j, k, mult]");
    rules.emplace_back(label_at(N[r][0], f), label_at(N[r][1], f), label_at(N[r][2], f),
                       static_cast<int>(as_int(N[r][3], f)));
  }
  std::vector<std::string> dual;
  if (j.contains("dual")) {
    const json& d = j["dual"];
    for (const auto& l : labels) {
      if (!d.contains(l)) field_error(field + ".dual", "missing entry for '" + l + "'");
      dual.push_back(label_at(d[l], field + ".dual." + l));
    }
  }
  LoadedRing out;
  try {
    out.ring = make_ring(labels, unit, rules, dual);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::resource) throw;
    field_error(field, e.what());
  }
  GradedFusionRing& r = out.ring;
  if (j.contains("grading")) {
    const json& gr = j["grading"];
    r.group = std::make_shared<const FiniteGroup>(group_from_json(require(gr, "group", field + ".grading"), field + ".grading.group"));
    const json& deg = require(gr, "deg", field + ".grading");
    for (int i = 0; i < r.size(); ++i) {
      if (!deg.contains(r.labels[i])) field_error(field + ".grading.deg", "missing entry for '" + r.labels[i] + "'");
      r.grading[i] = element_from_json(*r.group, deg[r.labels[i]], field + ".grading.deg." + r.labels[i]);
    }
  }
  if (j.contains("dims")) {
    std::vector<Real> d;
    for (const auto& l : r.labels) {
      if (!j["dims"].contains(l)) field_error(field + ".dims", "missing entry for '" + l + "'");
      d.push_back(real_from_json(j["dims"][l], field + ".dims." + l));
    }
    r.dims = d;
  }
  if (j.contains("twists")) {
    std::vector<Turn> t;
    for (const auto& l : r.labels) {
      if (!j["twists"].contains(l)) field_error(field + ".twists", "missing entry for '" + l + "'");
      t.push_back(turn_from_json(j["twists"][l], field + ".twists." + l));
    }
    r.twists = t;
  }
  if (j.contains("action")) {
    const json& a = j["action"];
    const std::string f = field + ".action";
    RingGAction act;
    act.group = std::make_shared<const FiniteGroup>(group_from_json(require(a, "group", f), f + ".group"));
    const json& perms = require(a, "perms", f);
    for (int g = 0; g < act.group->order(); ++g) {
      const std::string& gname = act.group->element_name(g);
      std::vector<int> p;
      if (!perms.contains(gname)) {
        if (g != 0) field_error(f + ".perms", "missing entry for '" + gname + "'");
        p.resize(static_cast<std::size_t>(r.size()));
        std::iota(p.begin(), p.end(), 0);
      } else {
        for (const auto& v : perms[gname]) p.push_back(r.index(label_at(v, f + ".perms." + gname)));
        if (static_cast<int>(p.size()) != r.size()) field_error(f + ".perms." + gname, "wrong length");
      }
      act.perms.push_back(p);
    }
    out.action = std::move(act);
  }
  if (j.contains("embedding")) {
    const json& e = j["embedding"];
    const std::string f = field + ".embedding";
    out.embedding_group = std::make_shared<const FiniteGroup>(group_from_json(require(e, "group", f), f + ".group"));
    std::vector<int> emb;
    for (const auto& v : require(e, "labels", f)) emb.push_back(r.index(label_at(v, f + ".labels")));
    out.embedding = emb;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointed data

inline json to_json(const PointedGXData& d) {
  const FiniteGroup& T = *d.gamma;
  const FiniteGroup& G = *d.G;
  json deg = json::object();
  for (int x = 0; x < T.order(); ++x) deg[T.element_name(x)] = G.element_name(d.deg[x]);
  json action = json::object();
  for (int g = 0; g < G.order(); ++g) {
    json p = json::array();
    for (int x : d.action[g]) p.push_back(T.element_name(x));
    action[G.element_name(g)] = p;
  }
  json braid = json::array();
  for (int x = 0; x < T.order(); ++x) {
    json row = json::array();
    for (int y = 0; y < T.order(); ++y) row.push_back(d.b(x, y));
    braid.push_back(row);
  }
  json assoc = to_json(d.assoc)["values"];
  return json{{"Gamma", to_json(T)}, {"G", to_json(G)}, {"deg", deg}, {"action", action},
              {"N", d.N},          {"assoc", assoc},     {"braid", braid}};
}

inline PointedGXData pointed_from_json(const json& j, const std::string& field = "pointed") {
  auto gamma = std::make_shared<const FiniteGroup>(group_from_json(require(j, "Gamma", field), field + ".Gamma"));
  auto G = std::make_shared<const FiniteGroup>(
      j.contains("G") ? group_from_json(j["G"], field + ".G") : FiniteGroup());
  const std::int64_t N = as_int(require(j, "N", field), field + ".N");
  if (N < 1 || N > kMaxCoefficientOrder) field_error(field + ".N", "out of range");
  PointedGXData d = pointed_skeleton(gamma, G, N);
  const int n = gamma->order();
  if (j.contains("deg")) {
    const json& deg = j["deg"];
    for (int x = 0; x < n; ++x) {
      const auto& name = gamma->element_name(x);
      if (!deg.contains(name)) field_error(field + ".deg", "missing entry for '" + name + "'");
      d.deg[x] = element_from_json(*G, deg[name], field + ".deg." + name);
    }
  }
  if (j.contains("action")) {
    const json& a = j["action"];
    for (int g = 0; g < G->order(); ++g) {
      const auto& gname = G->element_name(g);
      if (!a.contains(gname)) {
        if (g != 0) field_error(field + ".action", "missing entry for '" + gname + "'");
        continue;
      }
      const json& p = a[gname];
      if (!p.is_array() || static_cast<int>(p.size()) != n) field_error(field + ".action." + gname, "expected |Gamma| entries");
      for (int x = 0; x < n; ++x) d.action[g][x] = element_from_json(*gamma, p[x], field + ".action." + gname);
    }
  }
  d.assoc = cocycle_from_json(json{{"degree", 3}, {"N", N}, {"values", j.contains("assoc") ? j["assoc"] : json::array()}},
                              gamma, field + ".assoc");
  const json& braid = require(j, "braid", field);
  if (!braid.is_array() || static_cast<int>(braid.size()) != n) field_error(field + ".braid", "expected |Gamma| rows");
  for (int x = 0; x < n; ++x) {
    const json& row = braid[x];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      field_error(field + ".braid[" + std::to_string(x) + "]", "expected |Gamma| entries");
    for (int y = 0; y < n; ++y)
      d.b(x, y) = as_int(row[y], field + ".braid[" + std::to_string(x) + "][" + std::to_string(y) + "]");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Reports and files

inline json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(json{{"check", f.check}, {"detail", f.detail}, {"witness", f.witness}});
  return json{{"ok", r.ok()}, {"failures", failures}};
}

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::usage, source + ": " + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::usage, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_json(const std::filesystem::path& path) { return parse_text(read_file(path), path.string()); }

/// What a JSON document describes, judged by its keys.
inline std::string detect_kind(const json& j) {
  if (j.is_string()) return "group";
  if (!j.is_object()) return "unknown";
  if (j.contains("Gamma")) return "pointed";
  if (j.contains("simples") || j.contains("tensor_power")) return "ring";
  if (j.contains("degree")) return "cocycle";
  if (j.contains("mul")) return "group";
  return "unknown";
}

/// 64-bit FNV-1a, used for corpus integrity.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gxcat::io
