#include "unicell/cli/commands.hpp"

#include "unicell/bijections.hpp"
#include "unicell/cli/cache.hpp"
#include "unicell/cli/literals.hpp"
#include "unicell/cli/serialize.hpp"
#include "unicell/formulas.hpp"
#include "unicell/planar_closure.hpp"
#include "unicell/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace unicell::cli {

const std::vector<FamilySpec>& census_families() {
  static const std::vector<FamilySpec> families = {
      {"unicellular-orientable", {"n", "v"}, 1, 7, "edges n"},
      {"unicellular-general", {"n", "v"}, 1, 6, "edges n"},
      {"planar-pqr", {"q", "r"}, 1, 7, "maximum number of edges"},
      {"tree-rooted", {"n", "q"}, 1, 5, "edges n"},
  };
  return families;
}

const std::vector<CheckSpec>& verification_checks() {
  static const std::vector<CheckSpec> checks = {
      {"gluing-totals", 6, 1, 7, "n_max"},
      {"t-formula", 5, 1, 5, "n_max"},
      {"some-colors", 6, 1, 6, "n_max (N <= 6)"},
      {"harer-zagier", 6, 2, 7, "n_max"},
      {"jackson", 4, 1, 5, "n_max"},
      {"u-formula", 4, 1, 5, "n_max"},
      {"u-hat", 4, 1, 5, "n_max (N <= 5)"},
      {"ledoux", 6, 2, 6, "n_max"},
      {"qfd", 6, 0, 6, "n_max"},
      {"phi-roundtrip", 4, 1, 4, "n_max"},
      {"upsilon-fiber", 3, 1, 3, "n_max"},
      {"psi-fiber", 3, 1, 3, "n_max"},
      {"gamma-roundtrip", 4, 1, 5, "edges (trees with up to twice as many slots)"},
      {"algebraic-P", 9, 2, 9, "total degree"},
      {"q-pde", 5, 0, 5, "t-degree of the residual"},
      {"rec-hP", 4, -2, 4, "maximum q + r"},
      {"A-combination", 7, 1, 7, "total degree of the residual"},
      {"qfd-operator", 7, 1, 7, "t-degree of U"},
      {"tutte-totals", 7, 1, 7, "edges"},
  };
  return checks;
}

namespace {

const FamilySpec& family_spec(const std::string& name) {
  for (const FamilySpec& f : census_families())
    if (f.name == name) return f;
  throw std::out_of_range("unknown census family '" + name + "'");
}

const CheckSpec& check_spec(const std::string& name) {
  for (const CheckSpec& c : verification_checks())
    if (c.name == name) return c;
  throw std::out_of_range("unknown check '" + name + "'");
}

void require_bound(int bound, int lo, int hi, const std::string& what) {
  if (bound < lo || bound > hi)
    throw std::out_of_range(what + " bound " + std::to_string(bound) + " outside " + std::to_string(lo) + ".." +
                            std::to_string(hi));
}

CountTable build_census(const std::string& family, int bound, int threads) {
  if (family == "unicellular-orientable") return vertex_profile(bound, true, threads);
  if (family == "unicellular-general") return vertex_profile(bound, false, threads);
  if (family == "planar-pqr") return planar_census(bound, threads).table;
  CountTable table;
  for (int q = 1; q <= bound + 1; ++q) {
    ExactInteger count = 0;
    for_each_tree_rooted_map(bound, q, [&](const TreeRootedMap&) { ++count; });
    table.set({bound, q}, count);
  }
  return table;
}

CountTable profiles(int n_max, bool orientable_only, const Context& ctx) {
  CountTable table;
  table.set({0, 1}, 1);
  for (int n = 1; n <= n_max; ++n)
    table.merge(census_table(orientable_only ? "unicellular-orientable" : "unicellular-general", n, ctx));
  return table;
}

std::string str(int v) { return std::to_string(v); }

std::string range_n(int lo, int hi) { return str(lo) + "<=n<=" + str(hi); }

ExactInteger surj_sum(const CountTable& profile, int n, int q) {
  ExactInteger total = 0;
  for (const auto& [key, value] : profile.entries())
    if (key[0] == n) total += value * surjection_count(key[1], q);
  return total;
}

std::vector<std::pair<int, int>> tree_label_pairs(const TreeRootedMap& t) {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < t.map.half_edge_count(); ++h) {
    if (h > t.map.alpha(h)) continue;
    int a = t.vertex_label[t.map.vertex_of(h)], b = t.vertex_label[t.map.vertex_of(t.map.alpha(h))];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict check_gluing_totals(int bound, const Context& ctx) {
  const std::string range = range_n(1, bound);
  for (int n = 1; n <= bound; ++n) {
    ExactInteger o = census_table("unicellular-orientable", n, ctx).total();
    ExactInteger g = n <= 6 ? census_table("unicellular-general", n, ctx).total() : ExactInteger(-1);
    ExactInteger expected = double_factorial(2 * n - 1);
    if (o != expected) return Verdict::fail("gluing-totals", range, "n=" + str(n) + ": orientable " + to_decimal(o));
    if (n <= 6 && g != power(2, n) * expected)
      return Verdict::fail("gluing-totals", range, "n=" + str(n) + ": general " + to_decimal(g));
  }
  return Verdict::ok("gluing-totals", range);
}

Verdict check_t_formula(int bound, const Context& ctx) {
  const std::string range = range_n(1, bound) + ", 1<=q<=n+2";
  CountTable eps = profiles(bound, true, ctx);
  for (int n = 1; n <= bound; ++n) {
    CountTable trees = census_table("tree-rooted", n, ctx);
    for (int q = 1; q <= n + 2; ++q) {
      ExactInteger t = t_formula(n, q);
      ExactInteger by_profile = surj_sum(eps, n, q);
      ExactInteger direct = trees.get({n, q});
      if (t != by_profile || t != direct)
        return Verdict::fail("t-formula", range,
                             "n=" + str(n) + ", q=" + str(q) + ": formula " + to_decimal(t) + ", profile " +
                                 to_decimal(by_profile) + ", tree-rooted " + to_decimal(direct));
    }
  }
  return Verdict::ok("t-formula", range);
}

Verdict check_jackson(int bound) {
  const std::string range = range_n(1, bound) + ", p+q<=n+2";
  for (int n = 1; n <= bound; ++n)
    for (int p = 1; p <= n + 1; ++p)
      for (int q = 1; p + q <= n + 2; ++q) {
        ExactInteger f = jackson_formula(n, p, q), b = bipartite_colored_count(n, p, q);
        if (f != b)
          return Verdict::fail("jackson", range,
                               "n=" + str(n) + ", p=" + str(p) + ", q=" + str(q) + ": " + to_decimal(f) +
                                   " != " + to_decimal(b));
      }
  return Verdict::ok("jackson", range);
}

Verdict check_u_formula(int bound, const Context& ctx) {
  const std::string range = range_n(1, bound) + ", 1<=q<=n+2";
  PlanarCensus census = cached_planar_census(bound, ctx);
  CountTable eta = profiles(bound, false, ctx);
  for (int n = 1; n <= bound; ++n)
    for (int q = 1; q <= n + 2; ++q) {
      ExactInteger f = u_formula(n, q, census), b = surj_sum(eta, n, q);
      if (f != b)
        return Verdict::fail("u-formula", range,
                             "n=" + str(n) + ", q=" + str(q) + ": " + to_decimal(f) + " != " + to_decimal(b));
    }
  return Verdict::ok("u-formula", range);
}

Verdict check_u_hat(int bound, const Context& ctx) {
  const std::string range = range_n(1, bound) + ", 1<=N<=5";
  PlanarCensus census = cached_planar_census(bound, ctx);
  CountTable eta = profiles(bound, false, ctx);
  for (int n = 1; n <= bound; ++n)
    for (int N = 1; N <= 5; ++N) {
      ExactInteger f = u_hat_formula(n, N);
      ExactInteger via_u = 0;
      for (int q = 1; q <= N; ++q) via_u += binomial(N, q) * u_formula(n, q, census);
      ExactInteger direct = 0;
      for (const auto& [key, value] : eta.entries())
        if (key[0] == n) direct += value * power(N, key[1]);
      if (f != via_u || f != direct)
        return Verdict::fail("u-hat", range,
                             "n=" + str(n) + ", N=" + str(N) + ": formula " + to_decimal(f) + ", from U " +
                                 to_decimal(via_u) + ", direct " + to_decimal(direct));
    }
  return Verdict::ok("u-hat", range);
}

Verdict check_phi(int bound) {
  const std::string range = range_n(1, bound) + ", 1<=q<=n+1";
  for (int n = 1; n <= bound; ++n)
    for (int q = 1; q <= n + 1; ++q) {
      const std::string at = "n=" + str(n) + ", q=" + str(q);
      std::size_t images = 0;
      for (const ColoredUnicellularMap& u : gen_colored_unicellular(n, q, true)) {
        TreeRootedMap t = phi(u);
        validate_tree_rooted(t);
        if (!(phi_inv(t) == u)) return Verdict::fail("phi-roundtrip", range, at + ": " + format_gluing(u));
        if (tree_label_pairs(t) != edge_color_pairs(u))
          return Verdict::fail("phi-roundtrip", range, at + ": edge colors differ for " + format_gluing(u));
        ++images;
      }
      std::size_t trees = 0;
      for (const TreeRootedMap& t : gen_tree_rooted_maps(n, q)) {
        if (!(phi(phi_inv(t)) == t)) return Verdict::fail("phi-roundtrip", range, at + ": " + format_tree_rooted_map(t));
        ++trees;
      }
      if (images != trees)
        return Verdict::fail("phi-roundtrip", range, at + ": " + str(static_cast<int>(images)) + " maps, " +
                                                         str(static_cast<int>(trees)) + " tree-rooted maps");
    }
  return Verdict::ok("phi-roundtrip", range);
}

Verdict check_upsilon(int bound) {
  const std::string range = range_n(1, bound) + ", 1<=q<=n+1";
  for (int n = 1; n <= bound; ++n)
    for (int q = 1; q <= n + 1; ++q) {
      std::size_t covered = 0;
      for (const ColoredUnicellularMap& u : gen_colored_unicellular(n, q, false)) {
        const std::string at = format_gluing(u);
        const int w = external_weight(u);
        auto fiber = upsilon_fiber(u);
        if (fiber.size() != (std::size_t{1} << w)) return Verdict::fail("upsilon-fiber", range, at + ": fiber size");
        if ((w == 0) != u.orientable()) return Verdict::fail("upsilon-fiber", range, at + ": weight vs orientability");
        if (std::set(fiber.begin(), fiber.end()).size() != fiber.size())
          return Verdict::fail("upsilon-fiber", range, at + ": repeated fiber element");
        for (const auto& m : fiber) {
          validate_compatible(m);
          if (m.external_weight() != w || !(upsilon(m) == u) || tree_label_pairs(m.base) != edge_color_pairs(u))
            return Verdict::fail("upsilon-fiber", range, at + ": bad fiber element");
        }
        covered += fiber.size();
      }
      if (covered != gen_compatibly_oriented(n, q).size())
        return Verdict::fail("upsilon-fiber", range, "n=" + str(n) + ", q=" + str(q) + ": fibers do not partition");
    }
  return Verdict::ok("upsilon-fiber", range);
}

Verdict check_psi(int bound) {
  const std::string range = range_n(1, bound) + ", 1<=q<=n+1";
  for (int n = 1; n <= bound; ++n)
    for (int q = 1; q <= n + 1; ++q)
      for (const ColoredUnicellularMap& u : gen_colored_unicellular(n, q, false)) {
        const std::string at = format_gluing(u);
        const int w = external_weight(u);
        auto fiber = psi_fiber(u);
        if (fiber.size() != (std::size_t{1} << w)) return Verdict::fail("psi-fiber", range, at + ": fiber size");
        if ((w == 0) != u.orientable()) return Verdict::fail("psi-fiber", range, at + ": weight vs orientability");
        if (std::set(fiber.begin(), fiber.end()).size() != fiber.size())
          return Verdict::fail("psi-fiber", range, at + ": repeated fiber element");
        const std::vector<int> sums = color_degree_sums(u);
        for (const auto& p : fiber) {
          validate_planar_rooted(p);
          if (p.face_count() != w + 1) return Verdict::fail("psi-fiber", range, at + ": face count");
          if (!(psi(p) == u)) return Verdict::fail("psi-fiber", range, at + ": psi does not return the map");
          if (label_degrees(p.map, p.vertex_label) != sums)
            return Verdict::fail("psi-fiber", range, at + ": degree certificate");
        }
      }
  return Verdict::ok("psi-fiber", range);
}

Verdict check_gamma(int bound) {
  const std::string range = "trees with <= " + str(2 * bound) + " slots, plane maps with <= " + str(bound) + " edges";
  std::optional<std::string> bad;
  for (int slots = 2; slots <= 2 * bound && !bad; ++slots) {
    for_each_near_eulerian_tree(slots, [&](const NearEulerianTree& t) {
      if (bad) return;
      OrientedPlaneMap m = closure_gamma(t);
      if (!(opening_delta(m.plane) == t)) bad = "tree " + format_near_eulerian_tree(t);
      else if (m.arrow != dual_distance_orientation(m.plane))
        bad = "orientation of the closure of " + format_near_eulerian_tree(t);
    });
  }
  for (int e = 1; e <= bound && !bad; ++e) {
    for_each_rooted_map(e, [&](const RootedMap& map) {
      if (bad || euler_data(map).genus != 0) return;
      for (const auto& face : trace_faces(map)) {
        PlaneMap plane(map, *std::min_element(face.begin(), face.end()));
        OrientedPlaneMap back = closure_gamma(opening_delta(plane));
        if (!(back.plane == plane)) {
          bad = "plane map " + format_plane_map(plane, back.arrow);
          return;
        }
      }
    });
  }
  return bad ? Verdict::fail("gamma-roundtrip", range, *bad) : Verdict::ok("gamma-roundtrip", range);
}

Verdict check_tutte(int bound, const Context& ctx) {
  const std::string range = "1<=e<=" + str(bound);
  PlanarCensus census = cached_planar_census(bound, ctx);
  std::vector<ExactInteger> totals = planar_totals(census);
  for (int e = 1; e <= bound; ++e) {
    ExactInteger closed = 2 * power(3, e) * factorial(2 * e) / (factorial(e) * factorial(e + 2));
    if (totals[e] != closed)
      return Verdict::fail("tutte-totals", range, "e=" + str(e) + ": " + to_decimal(totals[e]) + " != " +
                                                      to_decimal(closed));
  }
  return Verdict::ok("tutte-totals", range);
}

Verdict check_qfd_operator(int D, const Context& ctx) {
  Series U = u_from_q(q_from_p(cached_planar_census(D, ctx), D), D);
  Series r = apply_recurrence_operator(qfd_operator(), U);
  const std::string range = "t-degree <= " + str(r.valid());
  if (auto key = r.first_nonzero(r.valid()))
    return Verdict::fail("qfd-operator", range,
                         "coefficient (" + str(key->first) + ", " + str(key->second) + ") = " +
                             to_decimal(r.coeff(key->first, key->second)));
  return Verdict::ok("qfd-operator", range);
}

}  // namespace

CountTable census_table(const std::string& family, int bound, const Context& ctx) {
  const FamilySpec& spec = family_spec(family);
  require_bound(bound, spec.min_bound, spec.max_bound, family);
  std::optional<CensusCache> cache;
  if (ctx.cache_dir) cache.emplace(*ctx.cache_dir);
  if (cache)
    if (auto hit = cache->load(family, bound, spec.keys)) return *hit;
  CountTable table = build_census(family, bound, ctx.threads);
  if (cache) cache->store(family, bound, spec.keys, table);
  return table;
}

PlanarCensus cached_planar_census(int max_edges, const Context& ctx) {
  return PlanarCensus{census_table("planar-pqr", max_edges, ctx), max_edges};
}

Verdict run_check(const std::string& name, int bound, const Context& ctx) {
  const CheckSpec& spec = check_spec(name);
  require_bound(bound, spec.min_bound, spec.max_bound, name);
  if (name == "gluing-totals") return check_gluing_totals(bound, ctx);
  if (name == "t-formula") return check_t_formula(bound, ctx);
  if (name == "some-colors") return some_colors_check(profiles(bound, true, ctx), bound, 6);
  if (name == "harer-zagier") return hz_recurrence_check(profiles(bound, true, ctx), bound);
  if (name == "jackson") return check_jackson(bound);
  if (name == "u-formula") return check_u_formula(bound, ctx);
  if (name == "u-hat") return check_u_hat(bound, ctx);
  if (name == "ledoux") return ledoux_check(profiles(bound, false, ctx), bound);
  if (name == "qfd") return check_qfd(profiles(bound, false, ctx), bound);
  if (name == "phi-roundtrip") return check_phi(bound);
  if (name == "upsilon-fiber") return check_upsilon(bound);
  if (name == "psi-fiber") return check_psi(bound);
  if (name == "gamma-roundtrip") return check_gamma(bound);
  if (name == "algebraic-P")
    return check_algebraic_P(p_series(cached_planar_census(std::max(1, bound - 2), ctx), bound), bound);
  if (name == "q-pde") return check_q_pde(q_from_p(cached_planar_census(bound + 2, ctx), bound + 2), bound);
  if (name == "rec-hP") return check_rec_hP(cached_planar_census(bound + 3, ctx), bound);
  if (name == "A-combination") return check_A_combination(p_series(cached_planar_census(bound, ctx), bound + 2), bound);
  if (name == "qfd-operator") return check_qfd_operator(bound, ctx);
  return check_tutte(bound, ctx);
}

namespace {

Json psi_element(const ExternallyLabelledPlanarRootedMap& p, const std::vector<int>& sums) {
  Json j = Json::object();
  j["map"] = format_rotation(p.map);
  std::vector<int> labels, submap;
  for (int l : p.vertex_label) labels.push_back(l + 1);
  for (int h = 0; h < p.map.half_edge_count(); ++h)
    if (p.in_submap[h] && h < p.map.alpha(h)) submap.push_back(h);
  j["vertex_labels"] = labels;
  j["submap"] = submap;
  j["faces"] = p.face_count();
  j["face_labels"] = p.labeling;
  std::vector<int> degrees = label_degrees(p.map, p.vertex_label);
  j["label_degrees"] = degrees;
  j["degrees_match"] = degrees == sums;
  return j;
}

Json upsilon_element(const CompatiblyOrientedTreeRootedMap& m, const ColoredUnicellularMap& u) {
  Json j = Json::object();
  std::string literal = format_tree_rooted_map(m.base);
  std::vector<int> outs, ins;
  for (std::size_t h = 0; h < m.arrow.size(); ++h) {
    if (m.arrow[h] == Arrow::out) outs.push_back(static_cast<int>(h));
    if (m.arrow[h] == Arrow::in) ins.push_back(static_cast<int>(h));
  }
  j["map"] = literal;
  j["out"] = outs;
  j["in"] = ins;
  j["external_weight"] = m.external_weight();
  j["edge_colors_match"] = tree_label_pairs(m.base) == edge_color_pairs(u);
  return j;
}

int cmd_census(const std::string& family, int bound, const std::string& format, const std::string& output,
               const Context& ctx, std::ostream& out) {
  const FamilySpec& spec = family_spec(family);
  CountTable table = census_table(family, bound, ctx);
  std::string text;
  if (format == "csv") {
    text = table_to_csv(table, spec.keys);
  } else {
    Json doc = Json::object();
    doc["schema"] = kSchemaVersion;
    doc["family"] = family;
    doc["bound"] = bound;
    doc["entries"] = table_to_json(table, spec.keys);
    doc["total"] = to_decimal(table.total());
    text = dump(doc);
  }
  out << text;
  if (!output.empty()) {
    std::ofstream file(output, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + output);
    file << text;
  }
  return 0;
}

int cmd_verify(const std::string& name, std::optional<int> bound, bool timing, const Context& ctx,
               std::ostream& out) {
  const CheckSpec& spec = check_spec(name);
  const auto start = std::chrono::steady_clock::now();
  Verdict v = run_check(name, bound.value_or(spec.default_bound), ctx);
  Json j = verdict_to_json(v);
  if (timing)
    j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << dump(j);
  return v.pass ? 0 : 1;
}

int cmd_fiber(const std::string& kind, const std::string& literal, std::ostream& out) {
  ColoredUnicellularMap u = parse_gluing(literal);
  Json doc = Json::object();
  doc["schema"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["input"] = format_gluing(u);
  doc["orientable"] = u.orientable();
  const int w = external_weight(u);
  doc["w"] = w;
  Json elements = Json::array();
  if (kind == "psi") {
    const std::vector<int> sums = color_degree_sums(u);
    doc["color_degree_sums"] = sums;
    for (const auto& p : psi_fiber(u)) elements.push_back(psi_element(p, sums));
  } else if (kind == "upsilon") {
    for (const auto& m : upsilon_fiber(u)) elements.push_back(upsilon_element(m, u));
  } else {
    throw std::out_of_range("unknown fiber kind '" + kind + "'");
  }
  doc["size"] = elements.size();
  doc["elements"] = std::move(elements);
  out << dump(doc);
  return 0;
}

int cmd_bijection(const std::string& kind, const std::string& literal, std::ostream& out) {
  Json doc = Json::object();
  doc["schema"] = kSchemaVersion;
  doc["bijection"] = kind;
  if (kind == "phi") {
    ColoredUnicellularMap u = parse_gluing(literal);
    doc["input"] = format_gluing(u);
    doc["output"] = format_tree_rooted_map(phi(u));
  } else if (kind == "phi-inv") {
    TreeRootedMap t = to_tree_rooted_map(parse_rotation(literal));
    doc["input"] = format_tree_rooted_map(t);
    doc["output"] = format_gluing(phi_inv(t));
  } else if (kind == "gamma") {
    NearEulerianTree t = to_near_eulerian_tree(parse_rotation(literal));
    OrientedPlaneMap m = closure_gamma(t);
    doc["input"] = format_near_eulerian_tree(t);
    doc["output"] = format_plane_map(m.plane, m.arrow);
    doc["dual_distance_orientation"] = m.arrow == dual_distance_orientation(m.plane);
  } else if (kind == "delta") {
    PlaneMap m = to_plane_map(parse_rotation(literal));
    doc["input"] = format_plane_map(m, dual_distance_orientation(m));
    doc["output"] = format_near_eulerian_tree(opening_delta(m));
  } else {
    throw std::out_of_range("unknown bijection '" + kind + "'");
  }
  out << dump(doc);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of colored unicellular maps and their bijections", "unicell"};
  app.require_subcommand(1);
  int threads = 1;
  std::optional<std::string> cache_flag;
  std::string format = "json";
  bool timing = false;

  std::string family, output;
  int census_bound = 0;
  auto* census = app.add_subcommand("census", "Enumerate a family and print its count table");
  census->add_option("family", family, "unicellular-orientable, unicellular-general, planar-pqr or tree-rooted")
      ->required();
  census->add_option("-n,--max", census_bound, "Size bound of the family")->required();
  census->add_option("-o,--output", output, "Also write the table to this file");

  std::string check;
  std::optional<int> verify_bound;
  auto* verify = app.add_subcommand("verify", "Run a named check and print its report");
  verify->add_option("check", check, "Check name (see --list)");
  verify->add_option("-n,--max", verify_bound, "Bound of the check");
  verify->add_flag("--timing", timing, "Include wall-clock seconds in the report");
  bool list = false;
  verify->add_flag("--list", list, "List the available checks");

  std::string fiber_kind, fiber_input;
  auto* fiber = app.add_subcommand("fiber", "List the psi or upsilon fiber of a colored gluing");
  fiber->add_option("kind", fiber_kind, "psi or upsilon")->required()->check(CLI::IsMember({"psi", "upsilon"}));
  fiber->add_option("map", fiber_input, "Gluing literal")->required();

  std::string bij_kind, bij_input;
  auto* bijection = app.add_subcommand("bijection", "Apply phi, phi-inv, gamma or delta to a literal");
  bijection->add_option("kind", bij_kind, "phi, phi-inv, gamma or delta")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "gamma", "delta"}));
  bijection->add_option("input", bij_input, "Map literal")->required();

  for (CLI::App* sub : {census, verify, fiber, bijection}) {
    sub->add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    sub->add_option("--cache", cache_flag, std::string("Census cache directory (default $") + kCacheEnv + ")");
  }
  census->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Context ctx{threads, resolve_cache_dir(cache_flag)};
  try {
    if (census->parsed()) return cmd_census(family, census_bound, format, output, ctx, out);
    if (verify->parsed()) {
      if (list) {
        for (const CheckSpec& c : verification_checks())
          out << c.name << "  default " << c.default_bound << ", range " << c.min_bound << ".." << c.max_bound
              << " (" << c.bound_meaning << ")\n";
        return 0;
      }
      if (check.empty()) {
        err << "verify: a check name is required (see --list)\n";
        return 2;
      }
      return cmd_verify(check, verify_bound, timing, ctx, out);
    }
    if (fiber->parsed()) return cmd_fiber(fiber_kind, fiber_input, out);
    return cmd_bijection(bij_kind, bij_input, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace unicell::cli
