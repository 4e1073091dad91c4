#include "hhb/harness/report.hpp"

#include <sstream>

namespace hhb::harness {

namespace {

using ojson = nlohmann::ordered_json;

// Exact integers: a JSON number when it fits in 64 bits, else a decimal string.
ojson big_json(const std::optional<bounds::BigInt>& x) {
  if (!x) return nullptr;
  if (bounds::exceeds_64_bits(*x)) return x->str();
  return x->convert_to<std::uint64_t>();
}

ojson config_json(const CampaignConfig& c) {
  ojson j;
  j["primes"] = c.primes;
  j["maxOrder"] = c.max_order;
  j["maxN"] = c.max_n;
  ojson cats = ojson::array();
  for (const auto& p : c.catalogs) cats.push_back(p.generic_string());
  j["catalogs"] = cats;
  j["fieldDegree"] = c.field_degree ? ojson(*c.field_degree) : ojson(nullptr);
  j["degreeFactor"] = c.degree_factor;
  j["checkLemmas"] = c.check_lemmas;
  j["checkOracle"] = c.check_oracle;
  j["oracleMaxGroupOrder"] = c.oracle_caps.max_group_order;
  j["oracleMaxCochainDim"] = c.oracle_caps.max_cochain_dim;
  j["decompositionMaxOrder"] = c.decomposition_max_order;
  j["resolutionCap"] = c.resolution_cap;
  return j;
}

ojson record_json(const BlockRecord& r) {
  ojson j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["p"] = r.p;
  j["fieldDegree"] = r.field_degree;
  j["block"] = r.block;
  j["dim"] = r.dim;
  j["centerDim"] = r.center_dim;
  j["defect"] = r.defect;
  j["defectGroupOrder"] = r.defect_group_order;
  j["brauerPairs"] = r.brauer_pairs;
  j["hh"] = r.hh;
  ojson f = ojson::array();
  ojson big = ojson::array();
  for (const auto& x : r.f) {
    f.push_back(big_json(x));
    big.push_back(x && bounds::exceeds_64_bits(*x));
  }
  j["f"] = f;
  j["fExceeds64Bits"] = big;
  ojson st = ojson::array();
  for (auto s : r.status) st.push_back(to_string(s));
  j["status"] = st;
  j["reasons"] = r.reasons;
  j["centerMatches"] = r.center_ok;
  j["brauerFeit"] = r.brauer_feit_ok;
  j["oracle"] = to_string(r.oracle);
  j["oracleReason"] = r.oracle_reason;
  return j;
}

ojson lemma_json(const LemmaRecord& l) {
  ojson j;
  j["group"] = l.group;
  j["p"] = l.p;
  j["block"] = l.block;
  j["check"] = l.result.check;
  j["status"] = cohom::to_string(l.result.status);
  j["reason"] = l.result.reason;
  j["witness"] = l.result.witness ? ojson(*l.result.witness) : ojson(nullptr);
  ojson rows = ojson::array();
  for (const auto& row : l.result.rows) {
    ojson x;
    x["label"] = row.label;
    x["degree"] = row.degree;
    x["lhs"] = row.lhs;
    x["rhs"] = row.rhs;
    x["ok"] = row.ok;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json report_json(const Report& r) {
  ojson j;
  j["config"] = config_json(r.config);
  ojson results = ojson::array();
  for (const auto& x : r.results) results.push_back(record_json(x));
  j["results"] = results;
  ojson lemmas = ojson::array();
  for (const auto& l : r.lemma_checks) lemmas.push_back(lemma_json(l));
  j["lemmaChecks"] = lemmas;
  ojson issues = ojson::array();
  for (const auto& i : r.issues) {
    ojson x;
    x["group"] = i.group;
    x["p"] = i.p;
    x["status"] = to_string(i.outcome);
    x["reason"] = i.reason;
    issues.push_back(x);
  }
  j["issues"] = issues;
  j["passed"] = r.passed();
  return j;
}

std::string report_csv(const Report& r) {
  std::ostringstream out;
  out << "group,order,p,fieldDegree,block,dim,centerDim,defect,n,hh,f,status,reason\n";
  for (const auto& x : r.results) {
    for (std::size_t n = 0; n < x.hh.size(); ++n) {
      out << csv_field(x.group) << ',' << x.order << ',' << x.p << ',' << x.field_degree << ',' << x.block << ','
          << x.dim << ',' << x.center_dim << ',' << x.defect << ',' << n << ',' << x.hh[n] << ','
          << (x.f[n] ? x.f[n]->str() : std::string()) << ',' << to_string(x.status[n]) << ','
          << csv_field(x.reasons[n]) << '\n';
    }
  }
  return out.str();
}

}  // namespace hhb::harness
