#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mjg/classify.hpp"
#include "mjg/complement.hpp"
#include "mjg/johnson.hpp"
#include "mjg/near_field.hpp"
#include "mjg/verify.hpp"

namespace mjg {

using Json = nlohmann::ordered_json;

/// Big integers serialize as decimal strings; JSON numbers lose precision past 2^53.
inline Json big_json(const BigInt& x) { return x.str(); }

inline Json permutation_json(const Permutation& p) {
  Json out = Json::array();
  for (Point x : p.images()) out.push_back(x + 1);
  return out;
}

inline Json field_element_json(const FiniteField& F, FieldElement a) { return F.to_coeffs(a); }

inline Json subset_json(Mask K) {
  Json out = Json::array();
  for (Mask m = K; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

inline constexpr std::uint32_t kNearFieldTableLimit = 81;

inline Json near_field_json(const NearField& F) {
  Json out;
  out["q"] = F.pair().q;
  out["d"] = F.pair().d;
  out["order"] = F.order();
  out["modulus"] = F.field().modulus();
  if (F.order() <= kNearFieldTableLimit) {
    Json table = Json::array();
    for (FieldElement a = 0; a < F.order(); ++a) {
      Json row = Json::array();
      for (FieldElement b = 0; b < F.order(); ++b) row.push_back(F.multiply(a, b));
      table.push_back(std::move(row));
    }
    out["multiplication"] = std::move(table);
  }
  return out;
}

inline Json index_set_json(IndexSet I) { return index_list(I); }

inline Json witness_json(const std::vector<WitnessRecipe>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.name);
  return out;
}

inline Json verdict_json(const Verdict& v) {
  Json out;
  out["n"] = v.n;
  out["k"] = v.k;
  out["I"] = index_set_json(v.I);
  out["vertices"] = big_json(v.vertices);
  out["aut"] = {{"case", v.aut.case_id},
                {"structure", v.aut.structure},
                {"order", v.aut.order ? big_json(*v.aut.order) : Json(nullptr)}};
  Json cay;
  cay["outcome"] = v.cayley.yes ? "YES" : "NO";
  cay["case"] = v.cayley.cases.empty() ? Json(nullptr) : Json(v.cayley.cases.front());
  cay["cases"] = v.cayley.cases;
  cay["witness"] = witness_json(v.cayley.witnesses);
  if (!v.cayley.yes) cay["reason"] = v.cayley.reason;
  cay["disconnected"] = v.cayley.disconnected;
  cay["trusted"] = v.cayley.trusted;
  out["cayley"] = std::move(cay);
  Json two;
  two["outcome"] = v.two_regular.yes ? "YES" : "NO";
  two["cases"] = v.two_regular.cases;
  two["witness"] = witness_json(v.two_regular.witnesses);
  if (!v.two_regular.yes) two["reason"] = v.two_regular.reason;
  two["trusted"] = v.two_regular.trusted;
  out["two_regular"] = std::move(two);
  Json def;
  if (v.deficiency.exact)
    def["exact"] = big_json(v.deficiency.value);
  else
    def["interval"] = {big_json(v.deficiency.lower), big_json(v.deficiency.upper)};
  def["basis"] = v.deficiency.basis;
  out["deficiency"] = std::move(def);
  out["only_an_sn"] = v.only_an_sn;
  out["connected"] = v.connected;
  return out;
}

inline Json graph_json(const MergedJohnsonGraph& J) {
  Json out;
  out["n"] = J.n();
  out["k"] = J.k();
  out["I"] = index_set_json(J.I());
  Json verts = Json::array();
  for (Mask K : J.vertices()) verts.push_back(subset_json(K));
  out["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (auto [u, v] : J.edges()) edges.push_back({u + 1, v + 1});
  out["edges"] = std::move(edges);
  return out;
}

inline Json group_json(const PermutationGroup& G, const std::string& name) {
  Json out;
  out["name"] = name;
  out["degree"] = G.degree();
  out["order"] = G.order();
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(permutation_json(g));
  out["generators"] = std::move(gens);
  return out;
}

inline Json complement_json(const ComplementGroup& C) {
  Json out;
  out["delta_label"] = C.delta_label;
  out["orbit_sizes"] = C.orbit_sizes;
  out["regularity"] = C.regularity ? Json(*C.regularity) : Json(nullptr);
  Json elems = Json::array();
  C.vertex_group.for_each_element([&](const Permutation& p) { elems.push_back(permutation_json(p)); });
  out["elements"] = std::move(elems);
  return out;
}

inline Json report_json(const OracleReport& r) {
  return {{"claim", r.claim}, {"outcome", r.outcome()}, {"evidence", r.evidence}, {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace mjg
