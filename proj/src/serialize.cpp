#include "ellk3/serialize.hpp"

namespace ellk3 {

namespace {

constexpr std::array<const char*, 5> kKeys = {"a1", "a2", "a3", "a4", "a6"};

std::string surface_class_name(const SurfaceClass& c) {
  switch (c.kind) {
    case SurfaceClass::Kind::Rational: return "rational";
    case SurfaceClass::Kind::K3: return "K3";
    case SurfaceClass::Kind::Other: return c.to_string();
  }
  return "?";
}

}  // namespace

WeierstrassModel model_from_json(const Json& j) {
  if (!j.is_object()) throw Error("model file must hold a JSON object");
  if (!j.contains("p") || !j["p"].is_number_integer()) throw Error("model file needs an integer 'p'");
  int p = j["p"].get<int>();
  require_prime(p);
  std::array<std::string, 5> a;
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    a[i] = "0";
    if (!j.contains(kKeys[i])) continue;
    const Json& v = j[kKeys[i]];
    if (v.is_string()) {
      a[i] = v.get<std::string>();
    } else if (v.is_number_integer()) {
      a[i] = std::to_string(v.get<long long>());
    } else {
      throw Error(std::string("coefficient ") + kKeys[i] + " must be a string");
    }
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return model_from_strings(p, a, label);
}

Json model_to_json(const WeierstrassModel& m) {
  Json j;
  j["p"] = m.p();
  for (std::size_t i = 0; i < kKeys.size(); ++i) j[kKeys[i]] = m.coeffs()[i].to_string();
  j["chi"] = m.chi();
  if (!m.label().empty()) j["label"] = m.label();
  j["equation"] = m.equation();
  return j;
}

Json fiber_to_json(const FiberAnalysis& f, int p) {
  Json j;
  j["place"] = f.place.to_string();
  j["degree"] = f.place.degree();
  j["type"] = f.type.render(p);
  j["n"] = f.type.n;
  j["swan"] = f.type.swan;
  j["m"] = f.m;
  j["v_delta_min"] = f.v_delta_min;
  j["component_group"] = f.component_group;
  j["reduction_class"] = to_string(f.reduction_class);
  return j;
}

Json report_to_json(const SurfaceReport& r) {
  int p = r.model.p();
  Json j;
  j["model"] = model_to_json(r.model);
  j["surface_class"] = surface_class_name(r.surface_class);
  j["chi"] = r.model.chi();
  j["c2"] = r.c2;
  Json fibers = Json::array();
  for (const FiberAnalysis& f : r.fibers) fibers.push_back(fiber_to_json(f, p));
  j["fibers"] = std::move(fibers);
  j["fiber_multiset"] = render_multiset(fiber_multiset(r.fibers), p);
  j["height_flag"] = to_string(r.height_flag);
  j["supersingular"] = r.supersingular ? Json(*r.supersingular) : Json(nullptr);
  j["unirational_implied"] = r.unirational_implied;
  j["decision"] = r.decision ? Json(to_string(*r.decision)) : Json(nullptr);
  j["sigma0"] = r.sigma0 ? Json(*r.sigma0) : Json(nullptr);
  j["mw_rank"] = r.mw_rank ? Json(*r.mw_rank) : Json(nullptr);
  return j;
}

Json point_to_json(const SectionPoint& P) {
  if (P.zero) return "zero";
  return Json{{"x", P.x.to_string()}, {"y", P.y.to_string()}};
}

Json lattice_to_json(const Lattice& l) {
  Json gram = Json::array();
  for (const auto& row : l.gram()) {
    Json r = Json::array();
    for (const Rational& q : row) r.push_back(to_string(q));
    gram.push_back(std::move(r));
  }
  Json j;
  j["name"] = l.name();
  j["rank"] = l.rank();
  j["gram"] = std::move(gram);
  if (l.index() != 1) j["index"] = l.index();
  j["det"] = to_string(l.det());
  return j;
}

Json igusa_to_json(const IgusaEntry& e) {
  Json j;
  j["p_power"] = e.p_power;
  j["p"] = e.p;
  j["level"] = e.level;
  j["model"] = model_to_json(e.model);
  j["fibers"] = render_multiset(e.fiber_table, e.p);
  Json tower = Json::array();
  for (const TowerRow& row : e.tower) {
    Json t;
    t["k"] = row.k;
    t["fibers"] = render_multiset(row.fibers, e.p);
    if (row.printed) {
      Json a;
      for (std::size_t i = 0; i < kKeys.size(); ++i) a[kKeys[i]] = (*row.printed)[i];
      t["printed"] = std::move(a);
    } else {
      t["printed"] = nullptr;
    }
    tower.push_back(std::move(t));
  }
  j["tower"] = std::move(tower);
  return j;
}

}  // namespace ellk3
