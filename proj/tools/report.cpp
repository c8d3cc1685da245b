#include "report.hpp"

#include <sstream>

#include "holoskew/identify.hpp"

namespace holoskew::report {

json gamma_json(const GammaFunction& gamma) {
  json out = json::array();
  for (const Permutation& p : gamma.values) out.push_back(p.images());
  return out;
}

json subgroup_json(const Subgroup& s) { return s.members(); }

json biskew_json(const BiskewReport& r) {
  json out;
  for (const auto& [k, v] : r.flags()) out[k] = v;
  out["agreement"] = r.agreement;
  out["witnesses"] = r.witnesses;
  return out;
}

json beta_json(const BetaReport& r) {
  json out;
  for (const auto& [k, v] : r.flags()) out[k] = v;
  out["agreement"] = r.agreement;
  out["orbit_size"] = r.orbit_size;
  out["witnesses"] = r.witnesses;
  return out;
}

json table1_json(const Table1Report& r) {
  json rows = json::array();
  for (const Table1Row& row : r.rows) {
    rows.push_back({{"circle_property", row.circle_property},
                    {"gamma_property", row.gamma_property},
                    {"circle_holds", row.circle_holds},
                    {"gamma_holds", row.gamma_holds},
                    {"witness", row.witness}});
  }
  return {{"rows", rows}, {"caveats", r.caveats}, {"all_hold", r.all_hold()}};
}

json group_json(const Group& g, const std::string& spec) {
  return {{"spec", spec}, {"order", g.order()}, {"type", identify_group(g)}};
}

json brace_json(const GammaFunction& gamma) {
  const SkewBrace b = circle_from_gamma(gamma);
  json table = json::array();
  for (Elem x = 0; x < b.circle.order(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < b.circle.order(); ++y) row.push_back(b.circ(x, y));
    table.push_back(std::move(row));
  }
  return {{"gamma", gamma_json(gamma)},
          {"circle_table", table},
          {"circle_type", identify_group(b.circle)},
          {"kernel", subgroup_json(kernel_gamma(gamma))}};
}

json census_report(const std::string& spec, const BraceCensus& c) {
  const Group& g = c.hol.group();
  json braces = json::array();
  json rows = json::array();
  const auto miller = miller_set(c.hol, c.regs);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GammaFunction& gamma = c.gammas[i];
    const BiskewReport bi = biskew_report(gamma);
    const BetaReport be = beta_report(c.hol, gamma);
    json b = brace_json(gamma);
    b["index"] = i;
    b["orbit"] = c.orbit[i];
    b["biskew"] = biskew_json(bi);
    b["beta"] = beta_json(be);
    b["normalized_by_rho"] = is_normalized_by_rho(c.hol, c.regs[i]);
    b["normalized_by_aut"] = is_normalized_by_aut(c.hol, c.regs[i]);
    b["normal_in_hol"] = is_normal_in_hol(c.hol, c.regs[i]);
    rows.push_back({{"index", i},
                    {"orbit", c.orbit[i]},
                    {"circle_type", b["circle_type"]},
                    {"kernel_size", b["kernel"].size()},
                    {"bi_skew", bi.bi_skew()},
                    {"normal_in_hol", be.n_normal_in_hol},
                    {"orbit_size", be.orbit_size}});
    braces.push_back(std::move(b));
  }
  return {{"schema", kSchema},
          {"command", "enumerate"},
          {"group", group_json(g, spec)},
          {"aut_order", c.hol.aut().size()},
          {"hol_order", c.hol.order()},
          {"brace_count", c.size()},
          {"orbit_count", c.orbits.size()},
          {"T_order_miller", miller.size()},
          {"braces", braces},
          {"rows", rows}};
}

std::string to_tsv(const json& report) {
  std::ostringstream os;
  const json rows = report.contains("rows") ? report["rows"] : json::array();
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "\t" : "") << keys[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const json& v = row.contains(keys[i]) ? row[keys[i]] : json();
      os << (i ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace holoskew::report
