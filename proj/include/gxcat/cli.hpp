#pragma once

// gxcat command-line front end. run() is the whole program minus argv handling, so tests
// can drive it in-process.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error, 3 size guard.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gxcat/cohomology.hpp"
#include "gxcat/corpus.hpp"
#include "gxcat/errors.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/gauging.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/io.hpp"
#include "gxcat/parallel.hpp"
#include "gxcat/pointed.hpp"
#include "gxcat/twisted_double.hpp"

namespace gxcat::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct Options {
  std::string format = "json";
  std::optional<std::int64_t> N;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string group;
  int k = 3;
  std::string g;
  int threads = 1;
  int n = 2;
  std::string perm_group = "cyclic";
  std::string embedding;
  std::string corpus = default_corpus_dir().string();
  bool rehash = false;
  std::vector<std::string> files;
};

struct Outcome {
  json report;
  bool failed = false;  // validation failure: exit 1 with the report
};

namespace detail {

inline std::string render_text(const json& j, const std::string& indent = "") {
  std::ostringstream os;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << indent << k << ":\n" << render_text(v, indent + "  ");
      } else {
        os << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && !v.empty()) {
        os << indent << "-\n" << render_text(v, indent + "  ");
      } else {
        os << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
  return os.str();
}

inline const std::string& one_file(const Options& o, const std::string& what) {
  if (o.files.size() != 1) fail(ErrorKind::usage, "expected exactly one " + what + " file");
  return o.files[0];
}

inline io::LoadedRing load_ring(const Options& o) {
  auto j = io::load_json(one_file(o, "ring"));
  if (io::detect_kind(j) != "ring") fail(ErrorKind::usage, "'" + o.files[0] + "' is not a ring file");
  return io::ring_from_json(j);
}

inline GroupPtr group_option(const Options& o) {
  if (o.group.empty()) fail(ErrorKind::usage, "--group is required");
  if (std::filesystem::exists(o.group)) return std::make_shared<const FiniteGroup>(io::group_from_json(io::load_json(o.group)));
  return std::make_shared<const FiniteGroup>(build_group(o.group));
}

inline std::vector<std::string> labels_of(const GradedFusionRing& r, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(r.labels[x]);
  return out;
}

// 3-cocycle from a file argument, or the zero cocycle on --group with --N (default |G|).
inline TorsionCocycle omega_argument(const Options& o) {
  if (!o.files.empty()) {
    auto c = io::cocycle_from_json(io::load_json(one_file(o, "cocycle")));
    if (c.degree() != 3) fail(ErrorKind::usage, "expected a 3-cocycle");
    return c;
  }
  auto g = group_option(o);
  return TorsionCocycle(g, 3, o.N.value_or(g->order()));
}

inline std::pair<std::vector<int>, GroupPtr> embedding_of(const io::LoadedRing& lr, const Options& o) {
  GroupPtr g = lr.embedding_group;
  if (!o.group.empty()) g = group_option(o);
  if (!g) fail(ErrorKind::usage, "no embedding: supply --group and --embedding, or an \"embedding\" entry in the ring file");
  if (!o.embedding.empty()) {
    std::vector<int> emb;
    std::stringstream ss(o.embedding);
    std::string label;
    while (std::getline(ss, label, ',')) emb.push_back(lr.ring.index(label));
    return {emb, g};
  }
  if (!lr.embedding) fail(ErrorKind::usage, "--embedding is required for this ring");
  return {*lr.embedding, g};
}

inline json dims_json(const GradedFusionRing& r, const std::vector<Real>& d) {
  json out = json::object();
  for (int i = 0; i < r.size(); ++i) out[r.labels[i]] = io::to_json(d[i]);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline Outcome cmd_validate(const Options& o) {
  const auto& path = detail::one_file(o, "input");
  auto j = io::load_json(path);
  const std::string kind = io::detect_kind(j);
  Report rep;
  if (kind == "ring") {
    auto lr = io::ring_from_json(j);
    rep = validate_ring(lr.ring);
    if (lr.action) rep.merge(validate_action(lr.ring, *lr.action));
  } else if (kind == "pointed") {
    rep = validate_pointed(io::pointed_from_json(j));
  } else if (kind == "cocycle") {
    auto c = io::cocycle_from_json(j);
    auto chk = is_cocycle(c);
    if (!chk.ok) {
      std::vector<std::string> w;
      if (chk.witness)
        for (int x : *chk.witness) w.push_back(c.group().element_name(x));
      rep.add("closed", "coboundary of the cochain is nonzero", w);
    }
  } else if (kind == "group") {
    try {
      io::group_from_json(j);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::validation) throw;
      rep.add("group_axioms", e.what());
    }
  } else {
    fail(ErrorKind::usage, "cannot tell what '" + path + "' describes");
  }
  json r = io::to_json(rep);
  r["kind"] = kind;
  return {r, !rep.ok()};
}

inline Outcome cmd_dims(const Options& o) {
  auto lr = detail::load_ring(o);
  auto d = pf_dims(lr.ring);
  bool exact = std::all_of(d.begin(), d.end(), [](const Real& x) { return x.is_exact(); });
  return {json{{"dims", detail::dims_json(lr.ring, d)}, {"global_dim", io::to_json(global_dim(d))}, {"exact", exact}}};
}

inline Outcome cmd_sectors(const Options& o) {
  auto lr = detail::load_ring(o);
  auto s = sector_dims(lr.ring);
  json sectors = json::object();
  for (int g = 0; g < lr.ring.group->order(); ++g) sectors[lr.ring.group->element_name(g)] = io::to_json(s.sector[g]);
  return {json{{"sectors", sectors}, {"full_spectrum", s.full_spectrum}, {"homogeneous", s.homogeneous}}};
}

inline Outcome cmd_picard(const Options& o) {
  auto lr = detail::load_ring(o);
  auto p = picard(lr.ring);
  json table = json::object();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      table[lr.ring.labels[p.labels[a]]][lr.ring.labels[p.labels[b]]] =
          lr.ring.labels[p.labels[p.table[static_cast<std::size_t>(a) * p.size() + b]]];
  return {json{{"picard", detail::labels_of(lr.ring, p.labels)}, {"order", p.size()}, {"table", table}}};
}

inline Outcome cmd_obstruct(const Options& o) {
  auto lr = detail::load_ring(o);
  if (!lr.action) fail(ErrorKind::usage, "the ring file has no action");
  if (o.g.empty()) fail(ErrorKind::usage, "--g is required");
  auto g = lr.action->group->find(o.g);
  if (!g) fail(ErrorKind::usage, "unknown group element '" + o.g + "'");
  auto w = invertible_sector_obstruction(lr.ring, *lr.action, *g);
  return {json{{"g", o.g}, {"obstructed", w.has_value()}, {"witness", w ? json(lr.ring.labels[*w]) : json(nullptr)}}};
}

inline Outcome cmd_gauge(const Options& o) {
  auto lr = detail::load_ring(o);
  if (!lr.action) fail(ErrorKind::usage, "the ring file has no action");
  if (auto rep = validate_action(lr.ring, *lr.action); !rep.ok()) {
    json r = io::to_json(rep);
    r["kind"] = "action";
    return {r, true};
  }
  auto eq = equivariant_ring(lr.ring, *lr.action);
  const Real input = global_dim(lr.ring);
  const Real order(static_cast<std::int64_t>(lr.action->group->order()));
  json simples = json::array();
  for (const auto& s : eq.simples.simples)
    simples.push_back(json{{"label", s.label},
                           {"dim", io::to_json(s.dim)},
                           {"orbit", detail::labels_of(lr.ring, s.orbit)},
                           {"irrep_dim", s.irrep_dim}});
  json r{{"simples", simples},
         {"global_dim", io::to_json(eq.simples.global_dim)},
         {"input_global_dim", io::to_json(input)},
         {"group_order", lr.action->group->order()},
         {"dimension_identity", approx_equal(eq.simples.global_dim, order * input)}};
  if (!o.out.empty()) r["ring"] = io::to_json(eq.ring, nullptr, &eq.rep_embedding, lr.action->group.get());
  return {r};
}

inline json crossed_json(const GradedFusionRing& r, const CrossedProductResult& cp, const FiniteGroup& G) {
  json comps = json::array();
  for (const auto& c : cp.components) {
    json jc{{"members", detail::labels_of(r, c.members)}, {"budget", io::to_json(c.budget)}, {"resolved", c.resolved}};
    if (c.simple_dim) jc["simple_dim"] = io::to_json(*c.simple_dim);
    if (c.degree) jc["degree"] = G.element_name(*c.degree);
    comps.push_back(jc);
  }
  json outs = json::array();
  for (std::size_t y = 0; y < cp.output_labels.size(); ++y) {
    json jy{{"label", cp.output_labels[y]}, {"dim", io::to_json(cp.output_dims[y])}};
    jy["degree"] = cp.output_degrees[y] ? json(G.element_name(*cp.output_degrees[y])) : json(nullptr);
    outs.push_back(jy);
  }
  return json{{"components", comps},
              {"outputs", outs},
              {"global_dim", io::to_json(cp.global_dim)},
              {"fully_resolved", cp.fully_resolved},
              {"group_order", cp.group_order},
              {"embedding", detail::labels_of(r, cp.embedding)}};
}

inline Outcome cmd_ungauge(const Options& o) {
  auto lr = detail::load_ring(o);
  auto [emb, g] = detail::embedding_of(lr, o);
  auto cp = crossed_product(lr.ring, emb, *g);
  json r = crossed_json(lr.ring, cp, *g);
  const Real input = global_dim(lr.ring);
  r["input_global_dim"] = io::to_json(input);
  r["dimension_identity"] = approx_equal(cp.global_dim * Real(static_cast<std::int64_t>(g->order())), input);
  return {r};
}

inline Outcome cmd_roundtrip(const Options& o) {
  auto lr = detail::load_ring(o);
  auto [emb, g] = detail::embedding_of(lr, o);
  auto rt = roundtrip_check(lr.ring, emb, *g);
  json r{{"input_global_dim", io::to_json(rt.input_global)},
         {"crossed_global_dim", io::to_json(rt.crossed_global)},
         {"regauged_global_dim", io::to_json(rt.regauged_global)},
         {"global_ok", rt.global_ok},
         {"count_ok", rt.count_ok},
         {"ok", rt.ok()}};
  if (rt.input_simples) r["input_simples"] = *rt.input_simples;
  if (rt.regauged_simples) r["regauged_simples"] = *rt.regauged_simples;
  return {r, !rt.ok()};
}

inline Outcome cmd_cohomology(const Options& o) {
  auto g = detail::group_option(o);
  json r{{"group", g->name()}, {"k", o.k}};
  CohomologyGroup h;
  if (o.N) {
    h = cohomology_group(g, o.k, *o.N);
    r["coefficients"] = "Z/" + std::to_string(*o.N);
    if (o.seed && g->order() > 1) {
      // d d = 0 on random cochains
      std::mt19937_64 rng(*o.seed);
      bool ok = true;
      for (int t = 0; t < 100 && ok; ++t)
        ok = coboundary(coboundary(random_cochain(g, o.k - 1, *o.N, rng))).is_zero();
      r["dd_zero_samples"] = 100;
      r["dd_zero"] = ok;
    }
  } else {
    h = u1_cohomology(*g, o.k);
    r["coefficients"] = "U(1)";
  }
  r["invariant_factors"] = h.invariant_factors;
  r["order"] = h.order();
  if (!o.out.empty()) {
    json reps = json::array();
    for (const auto& c : h.representatives) reps.push_back(io::to_json(c));
    r["representatives"] = reps;
  }
  return {r};
}

inline Outcome cmd_transgress(const Options& o) {
  auto omega = detail::omega_argument(o);
  if (o.g.empty()) fail(ErrorKind::usage, "--g is required");
  auto g = omega.group().find(o.g);
  if (!g) fail(ErrorKind::usage, "unknown group element '" + o.g + "'");
  auto t = transgress(omega, *g);
  return {json{{"g", o.g},
               {"centralizer", t.centralizer.group.element_names()},
               {"cocycle", io::to_json(t.cocycle)},
               {"coboundary", is_coboundary(t.cocycle)},
               {"projective_irrep_dims", projective_irrep_dims(t.cocycle)}}};
}

inline Outcome cmd_double(const Options& o) {
  auto omega = detail::omega_argument(o);
  auto d = twisted_double(omega);
  json simples = json::array();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.simples.size(); ++i) {
    const auto& s = d.simples[i];
    total += static_cast<std::int64_t>(s.dim) * s.dim;
    simples.push_back(json{{"label", s.label}, {"dim", s.dim}, {"twist", io::to_json(d.T[i])}});
  }
  json S = json::array();
  for (int i = 0; i < d.S.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.S.cols(); ++j) row.push_back(io::complex_to_json(d.S(i, j)));
    S.push_back(row);
  }
  json r{{"simples", simples},
         {"count", d.simples.size()},
         {"sum_dims_squared", total},
         {"S", S},
         {"modular", d.has_modular_data},
         {"rep_embedding", detail::labels_of(d.ring, d.rep_embedding)}};
  if (!o.out.empty()) r["ring"] = io::to_json(d.ring, nullptr, &d.rep_embedding, d.group.get());
  return {r};
}

inline json pointed_summary(const PointedGXData& d) {
  auto rep = validate_pointed(d);
  auto s = sector_dims(pointed_as_ring(d));
  auto k = kirillov_S(d);
  return json{{"datum", io::to_json(d)},
              {"valid", rep.ok()},
              {"full_spectrum", s.full_spectrum},
              {"homogeneous", s.homogeneous},
              {"kirillov_invertible", k.invertible}};
}

inline Outcome cmd_holo(const Options& o) {
  auto omega = detail::omega_argument(o);
  auto h = holomorphic_crossed(omega);
  json r = pointed_summary(h.datum);
  r["solutions"] = h.solutions;
  r["N"] = h.datum.N;
  return {r};
}

inline Outcome cmd_enumerate(const Options& o) {
  auto g = detail::group_option(o);
  auto e = enumerate_holomorphic(g, o.N.value_or(g->order()));
  json orbits = json::array();
  for (std::size_t i = 0; i < e.representatives.size(); ++i) {
    json j = pointed_summary(e.raw[e.representatives[i]]);
    j["size"] = e.orbit_sizes[i];
    orbits.push_back(j);
  }
  return {json{{"raw_count", e.raw.size()},
               {"orbit_count", e.representatives.size()},
               {"orbits", orbits},
               {"equivalence", "braid shifts by 2-cocycles; relabelling by automorphisms of G"}}};
}

inline Outcome cmd_smatrix(const Options& o) {
  auto j = io::load_json(detail::one_file(o, "pointed"));
  auto d = io::pointed_from_json(j);
  if (auto rep = validate_pointed(d); !rep.ok()) {
    json r = io::to_json(rep);
    r["kind"] = "pointed";
    return {r, true};
  }
  auto k = kirillov_S(d);
  json basis = json::array();
  for (auto [x, g] : k.basis) basis.push_back({d.gamma->element_name(x), d.G->element_name(g)});
  json phase = json::array();
  for (const auto& row : k.phase) {
    json jr = json::array();
    for (auto v : row) jr.push_back(v < 0 ? json(nullptr) : json(v));
    phase.push_back(jr);
  }
  return {json{{"basis", basis},
               {"phase", phase},
               {"N", k.N},
               {"invertible", k.invertible},
               {"exact", k.exact},
               {"det", io::complex_to_json(k.det_numeric)}}};
}

inline Outcome cmd_perm_picard(const Options& o) {
  auto lr = detail::load_ring(o);
  const int n = o.n;
  if (n < 1 || n > 4) fail(ErrorKind::usage, "--n must be in 1..4");
  std::vector<std::vector<int>> gens;
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  gens.push_back(cycle);
  if (o.perm_group == "symmetric" && n > 2) {
    std::vector<int> swap(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
  } else if (o.perm_group != "cyclic" && o.perm_group != "symmetric") {
    fail(ErrorKind::usage, "--perm-group must be cyclic or symmetric");
  }
  auto pg = permutation_group(n, gens);
  auto res = perm_orbifold_picard(lr.ring, n, pg);
  json pairs = json::array();
  for (const auto& [x, chi] : res.pairs) pairs.push_back(json{{"label", lr.ring.labels[x]}, {"character", chi.values}});
  const int count = static_cast<int>(res.pairs.size());
  return {json{{"pairs", pairs},
               {"count", count},
               {"brute_force", res.brute_force},
               {"agree", count == res.brute_force},
               {"group", pg.group.name()}},
          count != res.brute_force};
}

inline Outcome cmd_corpus(const Options& o) {
  if (o.rehash) rehash_corpus(o.corpus);
  auto entries = corpus_list(o.corpus);
  json list = json::array();
  for (const auto& e : entries)
    list.push_back(json{{"name", e.name}, {"kind", e.kind}, {"path", e.path}, {"goldens", e.goldens}, {"fnv1a", e.checksum}});
  return {json{{"entries", list}, {"count", entries.size()}, {"ok", true}}};
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"gxcat: graded fusion rings, crossed braided pointed data, gauging and twisted doubles"};
  app.set_version_flag("--version", "gxcat 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--N", o.N, "coefficient / root-of-unity order");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--out", o.out, "write the report to this path instead of standard output");
  app.add_option("--group", o.group, "group preset (Z2, Z2xZ2, S3, D4, Q8, ...) or group file");
  app.add_option("--k", o.k, "cohomological degree");
  app.add_option("--g", o.g, "group element name");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--n", o.n, "number of tensor factors");
  app.add_option("--perm-group", o.perm_group, "cyclic or symmetric slot permutations");
  app.add_option("--embedding", o.embedding, "comma-separated labels: irreps of --group in character-table order");
  app.add_option("--corpus", o.corpus, "corpus directory");

  using Handler = std::function<Outcome(const Options&)>;
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"validate", "validate a group, cocycle, ring or pointed file", cmd_validate},
      {"dims", "Perron-Frobenius dimensions of a ring", cmd_dims},
      {"sectors", "per-degree sums of squared dimensions", cmd_sectors},
      {"picard", "invertible simples and their fusion", cmd_picard},
      {"obstruct", "invertible objects in the sector of --g", cmd_obstruct},
      {"gauge", "equivariantize a ring by its action", cmd_gauge},
      {"ungauge", "crossed product by an embedded Rep(G)", cmd_ungauge},
      {"roundtrip", "crossed product followed by equivariantization", cmd_roundtrip},
      {"cohomology", "H^k(G, Z/N), or H^k(G, U(1)) without --N", cmd_cohomology},
      {"transgress", "transgression of a 3-cocycle at --g", cmd_transgress},
      {"double", "twisted quantum double of a 3-cocycle (or --group)", cmd_double},
      {"holo-crossed", "holomorphic crossed pointed data for a 3-cocycle", cmd_holo},
      {"enumerate", "orbits of holomorphic crossed pointed data on --group", cmd_enumerate},
      {"smatrix", "Kirillov S-matrix of pointed data", cmd_smatrix},
      {"perm-picard", "Picard group of a permutation orbifold", cmd_perm_picard},
      {"corpus", "list and verify the bundled corpus", cmd_corpus},
  };
  std::map<std::string, Handler> handlers;
  for (const auto& [name, help, h] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "input files");
    if (name == "corpus") sub->add_flag("--rehash", o.rehash, "recompute manifest checksums");
    handlers[name] = h;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "gxcat 1.0.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  set_threads(o.threads);
  const std::string name = app.get_subcommands().front()->get_name();
  Outcome res;
  try {
    res = handlers.at(name)(o);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::usage:
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
      case ErrorKind::resource:
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
      case ErrorKind::validation:
        err << "validation error: " << e.what() << "\n";
        return kExitFailed;
      case ErrorKind::internal:
        err << "internal error: " << e.what() << "\n";
        return kExitFailed;
    }
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResource;
  }

  const std::string text = o.format == "json" ? res.report.dump(2) + "\n" : detail::render_text(res.report);
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write '" << o.out << "'\n";
      return kExitUsage;
    }
    f << text;
  } else {
    out << text;
  }
  return res.failed ? kExitFailed : kExitOk;
}

}  // namespace gxcat::cli
