#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "holoskew/automorphism.hpp"
#include "holoskew/biskew.hpp"
#include "holoskew/constructions.hpp"
#include "holoskew/error.hpp"
#include "holoskew/group_spec.hpp"
#include "holoskew/identify.hpp"
#include "report.hpp"

namespace holoskew {

namespace {

using report::json;

struct RunConfig {
  std::string command;
  std::string spec;
  std::string kind;
  std::string extra;  // ring shorthand such as "2xy"
  std::string method = "auto";
  std::string format = "json";
  std::string out;
  std::string k, h, rgf = "inner", form, products;
  std::string gamma_file, circle_file;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> p, q, s, t;
  bool verbose = false;
};

std::vector<Elem> parse_list(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Rejected("not an element index: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Elem>> parse_matrix(const std::string& text) {
  std::vector<std::vector<Elem>> out;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) out.push_back(parse_list(row));
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Rejected("cannot open " + path);
  return json::parse(in);
}

void check_elements(const Group& g, const std::vector<Elem>& xs) {
  for (Elem x : xs) {
    if (x >= g.order()) throw Rejected("element " + std::to_string(x) + " out of range");
  }
}

Subgroup generated(const Group& g, const std::string& text) {
  const auto xs = parse_list(text);
  check_elements(g, xs);
  return subgroup_closure(g, xs);
}

Subgroup index_range(const Group& g, std::size_t from, std::size_t step, std::size_t count) {
  std::vector<Elem> xs;
  for (std::size_t i = 0; i < count; ++i) xs.push_back(from + i * step);
  return Subgroup(g, xs);
}

// K and H from --k / --h, or the natural factors of a spec that has them.
std::pair<Subgroup, Subgroup> factors(const GroupSpec& spec, const Group& g, const RunConfig& cfg) {
  if (!cfg.k.empty() || !cfg.h.empty()) {
    if (cfg.k.empty() || cfg.h.empty()) throw Rejected("give both --k and --h");
    return {generated(g, cfg.k), generated(g, cfg.h)};
  }
  if (const auto* sd = std::get_if<SemidirectSpec>(&spec.kind)) {
    const std::size_t nk = make_group(*sd->k).order();
    return {index_range(g, 0, 1, nk), index_range(g, 0, nk, g.order() / nk)};
  }
  if (const auto* dp = std::get_if<DirectSpec>(&spec.kind)) {
    const std::size_t nk = make_group(*dp->b).order();
    return {index_range(g, 0, 1, nk), index_range(g, 0, nk, g.order() / nk)};
  }
  if (const auto* me = std::get_if<ModularExtSpec>(&spec.kind)) {
    std::size_t pn = 1;
    for (std::size_t i = 0; i < me->n; ++i) pn *= me->p;
    return {index_range(g, 0, 1, pn), subgroup_closure(g, std::vector<Elem>{pn})};
  }
  if (const auto* d = std::get_if<DihedralSpec>(&spec.kind)) {
    return {index_range(g, 0, 1, d->n), subgroup_closure(g, std::vector<Elem>{d->n})};
  }
  throw Rejected("no natural factorization for " + spec.text + "; give --k and --h");
}

RelativeGammaFunction rgf_on(const Group& g, const Subgroup& h, const std::string& rgf) {
  RelativeGammaFunction out{g, h, {}};
  long long t = 0;
  if (rgf == "trivial") {
    t = 0;
  } else if (rgf == "inner") {
    t = 1;
  } else if (rgf.rfind("inner-pow:", 0) == 0) {
    try {
      t = std::stoll(rgf.substr(10));
    } catch (const std::exception&) {
      throw Rejected("bad --rgf power: " + rgf);
    }
  } else {
    throw Rejected("unknown --rgf '" + rgf + "' (trivial | inner | inner-pow:T)");
  }
  // gamma'(h) = iota(h^-t)
  for (Elem x : h.members()) out.values.push_back(inner(g, g.pow(x, -t)));
  return out;
}

void require_bound(const Group& g, std::size_t bound) {
  if (g.order() > bound) {
    throw Rejected("group order " + std::to_string(g.order()) + " exceeds the bound " + std::to_string(bound) +
                   " (raise it with --bound)");
  }
}

json brace_section(const GammaFunction& gamma) {
  json b = report::brace_json(gamma);
  const BiskewReport bi = biskew_report(gamma);
  b["biskew"] = report::biskew_json(bi);
  const HolGroup hol(gamma.group);
  b["beta"] = report::beta_json(beta_report(hol, gamma));
  return b;
}

json cmd_enumerate(const RunConfig& cfg, const GroupSpec& spec, const Group& g) {
  require_bound(g, cfg.bound.value_or(32));
  return report::census_report(spec.text, brace_census(g));
}

json cmd_tg(const RunConfig& cfg, const GroupSpec& spec, const Group& g) {
  std::string method = cfg.method;
  if (method == "auto") method = g.order() <= kDirectDegreeBound ? "both" : "miller";
  if (method != "direct" && method != "miller" && method != "both") throw Rejected("unknown method " + method);
  const HolGroup hol(g);
  json out{{"schema", report::kSchema}, {"command", "tg"}, {"group", report::group_json(g, spec.text)}, {"method", method}};
  std::optional<std::size_t> direct, miller;
  if (method != "miller") {
    direct = multiple_holomorph_direct(hol);
    out["T_order_direct"] = *direct;
  }
  json rows = json::array();
  if (method != "direct") {
    require_bound(g, cfg.bound.value_or(32));
    const auto regs = enumerate_regular_subgroups(hol);
    const auto h = miller_set(hol, regs);
    miller = h.size();
    out["T_order_miller"] = *miller;
    json members = json::array();
    for (std::size_t i : h) {
      const GammaFunction gamma = gamma_from_regular(hol, regs[i]);
      const Group circle = regular_subgroup_as_group(hol, regs[i]);
      const auto iso = is_isomorphic(circle, g);
      ensure(iso.has_value(), "member of H(G) without an isomorphism to G");
      members.push_back({{"regular_subgroup", i}, {"gamma", report::gamma_json(gamma)}, {"isomorphism_to_G", *iso}});
      rows.push_back({{"regular_subgroup", i}, {"normal_in_hol", true}, {"isomorphic_to_G", true}});
    }
    out["H"] = members;
  }
  if (direct && miller) {
    out["agreement"] = *direct == *miller;
    ensure(*direct == *miller, "direct and Miller counts of T(G) differ");
  }
  out["rows"] = rows;
  return out;
}

json cmd_construct(const RunConfig& cfg, const GroupSpec* spec, std::optional<Group> g) {
  const std::string& kind = cfg.kind;
  json out{{"schema", report::kSchema}, {"command", "construct"}, {"kind", kind}};
  json params = json::object();
  json extra = json::object();
  std::optional<Construction> built;

  if (kind == "semi" && cfg.p) {
    if (!cfg.q) throw Rejected("semi example needs --p and --q");
    const std::size_t s = cfg.s.value_or(1), t = cfg.t.value_or(1);
    SemiExample ex = semi_example(*cfg.p, *cfg.q, s, t);
    require_bound(ex.group, cfg.bound.value_or(64));
    params = {{"p", *cfg.p}, {"q", *cfg.q}, {"s", s}, {"t", t}};
    built = semi_gamma(ex.group, ex.k, ex.h, ex.rgf);
    out["group"] = report::group_json(ex.group, ex.group.name());
    extra["compatible_pair_group_order"] = compatible_pair_group(ex.group, ex.k, ex.h).members.size();
  } else {
    if (!spec || !g) throw Rejected("construct " + kind + " needs a group spec");
    require_bound(*g, cfg.bound.value_or(64));
    out["group"] = report::group_json(*g, spec->text);
    if (kind == "childs" || kind == "lift" || kind == "central" || kind == "semi") {
      const auto [k, h] = factors(*spec, *g, cfg);
      params["K"] = k.members();
      params["H"] = h.members();
      if (kind == "childs") {
        built = childs_gamma(*g, k, h);
      } else if (kind == "central") {
        CentralConstruction cc = central_gamma(*g, k, h);
        built = std::move(cc.c);
        extra["opposite_is_bi_gf"] = cc.bar_is_bi_gf;
        extra["H_normal"] = cc.h_normal;
        extra["H_KZ_normal"] = cc.kernel_normal;
      } else {
        params["rgf"] = cfg.rgf;
        const RelativeGammaFunction rgf = rgf_on(*g, h, cfg.rgf);
        built = kind == "lift" ? lift_rgf(*g, h, k, rgf) : semi_gamma(*g, k, h, rgf);
      }
    } else if (kind == "delta") {
      const Subgroup k = cfg.k.empty() ? center(*g) : generated(*g, cfg.k);
      if (cfg.form.empty()) throw Rejected("delta needs --form, e.g. \"0,9;18,0\"");
      const auto form = parse_matrix(cfg.form);
      params = {{"K", k.members()}, {"generators", bilinear_generators(*g, k)}, {"form", form}};
      built = delta_gamma(bilinear_delta(*g, k, form));
    } else if (kind == "ault-watters") {
      built = ault_watters_gamma(*g);
    } else if (kind == "ring") {
      RadicalRing ring = [&] {
        if (!cfg.extra.empty()) {
          // "<m>xy": x * y = m x y on a cyclic group
          const std::string& e = cfg.extra;
          if (e.size() < 3 || e.substr(e.size() - 2) != "xy") throw Rejected("ring shorthand must look like 2xy");
          if (!std::holds_alternative<CyclicSpec>(spec->kind)) throw Rejected("the mxy shorthand needs a cyclic group");
          std::size_t m = 0;
          try {
            m = std::stoul(e.substr(0, e.size() - 2));
          } catch (const std::exception&) {
            throw Rejected("bad ring shorthand " + e);
          }
          const std::size_t n = g->order();
          std::vector<Elem> star(n * n);
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) star[x * n + y] = (m % n) * x % n * y % n;
          }
          params["multiplication"] = e;
          return make_radical_ring(*g, std::move(star));
        }
        if (cfg.products.empty()) throw Rejected("ring needs a shorthand like 2xy or --products");
        const auto prods = parse_matrix(cfg.products);
        params = {{"generators", ring_generators(*g)}, {"products", prods}};
        return ring_from_products(*g, prods);
      }();
      built = Construction{ring_to_gamma(ring), {"ring axioms hold", "x + y + x*y is a group operation"}};
      extra["cube_condition"] = cube_condition(ring);
      built->transcript.push_back(std::string("G * G * G = 0: ") + (cube_condition(ring) ? "yes" : "no"));
    } else {
      throw Rejected("unknown construction '" + kind + "' (childs | lift | central | semi | delta | ault-watters | ring)");
    }
  }

  const Construction& c = *built;
  out["parameters"] = params;
  out["transcript"] = c.transcript;
  out["brace"] = brace_section(c.gamma);
  for (auto& [key, v] : extra.items()) out[key] = v;
  json row{{"kind", kind},
           {"group", out["group"]["spec"]},
           {"order", c.gamma.group.order()},
           {"circle_type", out["brace"]["circle_type"]},
           {"bi_skew", out["brace"]["biskew"]["swap_is_brace"]},
           {"kernel_size", out["brace"]["kernel"].size()}};
  for (auto& [key, v] : extra.items()) row[key] = v;
  out["rows"] = json::array({row});
  return out;
}

json cmd_check(const RunConfig& cfg, const GroupSpec& spec, const Group& g) {
  require_bound(g, cfg.bound.value_or(64));
  json out{{"schema", report::kSchema}, {"command", "check"}, {"group", report::group_json(g, spec.text)}};
  const std::size_t n = g.order();
  if (!cfg.gamma_file.empty() && !cfg.circle_file.empty()) throw Rejected("give --gamma or --circle, not both");
  if (cfg.gamma_file.empty() && cfg.circle_file.empty()) {
    const AutGroup aut(g);
    out["abelian"] = g.is_abelian();
    out["exponent"] = exponent(g);
    out["center"] = center(g).members();
    out["derived_subgroup"] = derived_subgroup(g).members();
    out["frattini"] = frattini(g).members();
    out["aut_order"] = aut.size();
    out["rows"] = json::array({{{"spec", spec.text},
                                {"order", n},
                                {"type", identify_group(g)},
                                {"center_order", center(g).size()},
                                {"aut_order", aut.size()}}});
    return out;
  }
  std::optional<GammaFunction> gamma;
  if (!cfg.gamma_file.empty()) {
    const auto maps = read_json(cfg.gamma_file).get<std::vector<std::vector<Elem>>>();
    const Table1Report t1 = validate_table1(g, maps);
    out["table1"] = report::table1_json(t1);
    if (!t1.all_hold()) {
      out["rows"] = json::array({{{"spec", spec.text}, {"skew_brace", false}}});
      return out;
    }
    std::vector<Permutation> values;
    for (const auto& m : maps) values.emplace_back(m);
    gamma = make_gamma(g, std::move(values));
  } else {
    const auto table = read_json(cfg.circle_file).get<std::vector<std::vector<Elem>>>();
    std::vector<Elem> flat;
    for (const auto& row : table) {
      if (row.size() != n) throw Rejected("circle table rows must have " + std::to_string(n) + " entries");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    gamma = gamma_from_circle(g, flat);
  }
  out["brace"] = brace_section(*gamma);
  out["rows"] = json::array({{{"spec", spec.text},
                              {"skew_brace", true},
                              {"circle_type", out["brace"]["circle_type"]},
                              {"bi_skew", out["brace"]["biskew"]["swap_is_brace"]},
                              {"normal_in_hol", out["brace"]["beta"]["n_normal_in_hol"]}}});
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::size_t default_bound) {
  sub->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--out", cfg.out, "write the report to this file");
  sub->add_option("--bound", cfg.bound, "largest group order accepted (default " + std::to_string(default_bound) + ")");
  sub->add_flag("-v,--verbose", cfg.verbose, "progress on stderr");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"skew braces, gamma functions and regular subgroups of the holomorph"};
  app.require_subcommand(1);

  auto* en = app.add_subcommand("enumerate", "every skew brace on a group, with bi-skew and normality reports");
  en->add_option("spec", cfg.spec, "group spec, e.g. c4, d3, sd(c9,c2,inv), file:PATH")->required();
  add_common(en, cfg, 32);

  auto* tg = app.add_subcommand("tg", "order of the multiple holomorph T(G)");
  tg->add_option("spec", cfg.spec, "group spec")->required();
  tg->add_option("--method", cfg.method, "direct | miller | both | auto")
      ->check(CLI::IsMember({"direct", "miller", "both", "auto"}));
  add_common(tg, cfg, 32);

  auto* co = app.add_subcommand("construct", "build a bi-skew brace by one of the constructions");
  co->set_help_flag("--help", "print this help message and exit");
  co->add_option("kind", cfg.kind, "childs | lift | central | semi | delta | ault-watters | ring")->required();
  co->add_option("spec", cfg.spec, "group spec");
  co->add_option("extra", cfg.extra, "ring multiplication shorthand, e.g. 2xy");
  co->add_option("--k", cfg.k, "generators of K, comma separated");
  co->add_option("--h", cfg.h, "generators of H, comma separated");
  co->add_option("--rgf", cfg.rgf, "relative gamma function on H: trivial | inner | inner-pow:T");
  co->add_option("--form", cfg.form, "Delta on generators of G/G'K, rows separated by ';'");
  co->add_option("--products", cfg.products, "ring products of generators, rows separated by ';'");
  co->add_option("--p", cfg.p, "semi example: p");
  co->add_option("--q", cfg.q, "semi example: q");
  co->add_option("--s", cfg.s, "semi example: s");
  co->add_option("--t", cfg.t, "semi example: t");
  add_common(co, cfg, 64);

  auto* ch = app.add_subcommand("check", "validate a group, or a gamma function / circle table on it");
  ch->add_option("spec", cfg.spec, "group spec")->required();
  ch->add_option("--gamma", cfg.gamma_file, "JSON file: array of n image arrays");
  ch->add_option("--circle", cfg.circle_file, "JSON file: n x n circle table");
  add_common(ch, cfg, 64);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    json result;
    std::optional<GroupSpec> spec;
    std::optional<Group> g;
    if (!cfg.spec.empty()) {
      spec = parse_group_spec(cfg.spec);
      g = make_group(*spec);
      if (cfg.verbose) err << "group " << spec->text << " of order " << g->order() << "\n";
    }
    if (en->parsed()) {
      result = cmd_enumerate(cfg, *spec, *g);
    } else if (tg->parsed()) {
      result = cmd_tg(cfg, *spec, *g);
    } else if (co->parsed()) {
      result = cmd_construct(cfg, spec ? &*spec : nullptr, g);
    } else {
      result = cmd_check(cfg, *spec, *g);
    }
    const std::string text = cfg.format == "tsv" ? report::to_tsv(result) : result.dump(2) + "\n";
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw Rejected("cannot write " + cfg.out);
      f << text;
    }
    return 0;
  } catch (const Rejected& e) {
    err << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "rejected: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const InvariantBreach& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace holoskew
