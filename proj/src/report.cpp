#include "bridgevar/report.hpp"

#include <chrono>
#include <sstream>

#include "bridgevar/polytext.hpp"

namespace bv {

using nlohmann::json;

namespace {

std::string route(long a, long b) { return a == b ? "both-agree" : "disagree"; }

json routed(long formula, long other, const char* other_name) {
  return {{"formula", formula}, {other_name, other}, {"route", route(formula, other)}};
}

void note(KnotReport& r, const std::string& what, long a, long b) {
  if (a != b) r.disagreements.push_back(what + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

json to_json(const Bidegree& b) { return json::array({b.r, b.t}); }

json to_json(const AffineLocus& a) {
  json branches = json::array();
  for (const auto& b : a.branches) branches.push_back(b.describe());
  return {{"empty", a.empty}, {"singular_branches", branches}, {"res_t_ft_degree", a.res_t_ft_degree},
          {"res_t_fr_degree", a.res_t_fr_degree}, {"gcd_degree", a.gcd_degree}};
}

json to_json(const SmoothnessCertificate& c) {
  json j = {{"target", to_string(c.target)}, {"refused", c.refused}, {"smooth", c.smooth()}, {"route", "oracle"}};
  if (c.refused) {
    j["refusal"] = c.refusal;
    return j;
  }
  j["affine"] = to_json(c.affine);
  j["infinity"] = {{"transversal", c.infinity.transversal},
                   {"points_on_r_infinity", c.infinity.points_on_r_infinity},
                   {"points_on_t_infinity", c.infinity.points_on_t_infinity},
                   {"corner_on_curve", c.infinity.corner_on_curve},
                   {"witnesses", c.infinity.witnesses}};
  j["delta_filter_consistent"] = c.delta_filter_consistent;
  if (c.union_locus) {
    j["union"] = to_json(*c.union_locus);
    j["union_intersections"] = c.union_intersections;
  }
  return j;
}

json verdict_json(const IrreducibilityVerdict& v) {
  if (auto* i = std::get_if<Irreducible>(&v)) return {{"kind", "Irreducible"}, {"prime", i->prime}};
  if (auto* r = std::get_if<Reducible>(&v))
    return {{"kind", "Reducible"}, {"factor_degree", r->factor_degree}, {"root", to_string(r->root)}};
  const auto& in = std::get<Inconclusive>(v);
  return {{"kind", "Inconclusive"}, {"possible_degrees", in.possible_degrees}, {"primes", in.primes}};
}

json value_json(const ValueOrInf& v) { return to_string(v); }

}  // namespace

KnotReport analyze(long k, long l) {
  auto start = std::chrono::steady_clock::now();
  KnotReport r;
  r.input_k = k;
  r.input_l = l;
  r.cls = classify(k, l);
  if (r.cls == KnotClass::NotAKnot) {
    r.degenerate.push_back("kl is odd: J(k,l) is a two-component link");
    return r;
  }
  r.id = normalize(k, l);
  k = r.id->k;
  l = r.id->l;
  r.models.push_back(c_model(k, l));
  r.models.push_back(d_model(k, l));
  r.alexander = alexander_canonical(k, l);
  r.fibered = is_fibered(k, l);
  r.fibered_list = in_fibered_list(k, l);
  note(r, "fibered vs list", *r.fibered, *r.fibered_list);
  if (r.cls == KnotClass::Unknot) {
    r.degenerate.push_back("unknot: C(k,l) is empty");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  r.two_bridge = two_bridge_params(k, l);
  try {
    r.fourplat = fourplat_sequence(k, l);
    mpq_class x = cont_frac_value(*r.fourplat);
    bool same = x.get_den() == r.two_bridge->p &&
                same_two_bridge_knot(r.two_bridge->p, r.two_bridge->q, r.two_bridge->p, x.get_num().get_si());
    if (!same) r.disagreements.push_back("four-plat sequence vs two-bridge form");
  } catch (const NotCoveredByTable&) {
  }

  if (r.cls == KnotClass::TorusNonHyperbolic) {
    r.degenerate.push_back("torus knot: D(k,l) is a union of lines");
  } else if (r.cls == KnotClass::Trefoil) {
    r.degenerate.push_back("trefoil: D(k,l) is the line t = r");
    r.smoothness = smoothness_certificate(k, l);
  } else {
    if (k == l) {
      DSplit s = d_split(l);
      r.models.push_back(s.d0);
      r.models.push_back(s.d1);
    }
    r.smoothness = smoothness_certificate(k, l);
    r.components = component_count(k, l);
    if (r.smoothness->smooth()) {
      r.genus_y = genus_Y(k, l, *r.smoothness);
      r.genus_x = genus_X(k, l, *r.smoothness);
      r.odd_points = odd_point_count(k, l);
      note(r, "genus_Y", r.genus_y->genus_formula, r.genus_y->genus_bidegree);
      if (r.genus_y->d1_genus_formula)
        note(r, "genus_Y(D1)", *r.genus_y->d1_genus_formula, *r.genus_y->d1_genus_bidegree);
      note(r, "genus_X", r.genus_x->genus_formula, r.genus_x->genus_rh);
      if (r.genus_x->x0_formula) note(r, "genus_X0", *r.genus_x->x0_formula, *r.genus_x->x0_rh);
      if (r.genus_x->x1_formula) note(r, "genus_X1", *r.genus_x->x1_formula, *r.genus_x->x1_rh);
      note(r, "odd points", r.odd_points->formula, r.odd_points->oracle);
    } else {
      r.disagreements.push_back("smoothness certificate failed");
    }
    r.trace_field = trace_field_report(k, l);
    r.commensurability = commensurability_certificate(k, l);
    r.commensurability_verified = verify_certificate(*r.commensurability);
    if (!*r.commensurability_verified) r.disagreements.push_back("commensurability certificate does not verify");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const CurveModel& m) {
  return {{"kind", to_string(m.kind)},
          {"state", to_string(m.state)},
          {"equation", to_string(m.equation)},
          {"variables", std::string{var_char(m.first), var_char(m.second)}},
          {"bidegree", to_json(m.bidegree)}};
}

json to_json(const NewtonPolygon& np) {
  json pts = json::array(), verts = json::array(), slopes = json::array(), roots = json::array();
  for (const auto& p : np.points) pts.push_back(json::array({p.index, value_json(p.value)}));
  for (const auto& p : np.vertices) verts.push_back(json::array({p.index, value_json(p.value)}));
  for (const auto& s : np.slopes) slopes.push_back(to_string(s));
  for (const auto& rv : root_valuations(np)) roots.push_back({{"valuation", value_json(rv.valuation)}, {"count", rv.count}});
  return {{"points", pts}, {"vertices", verts}, {"slopes", slopes}, {"root_valuations", roots}};
}

json to_json(const TraceFieldReport& t) {
  return {{"bound", t.bound},
          {"bound_route", "formula"},
          {"polynomial", to_string(t.poly)},
          {"degree", t.poly_degree},
          {"degree_route", "both-agree"},
          {"squarefree_degree", t.squarefree_degree},
          {"irreducibility", verdict_json(t.verdict)},
          {"irreducibility_route", "oracle"},
          {"factor_degrees", t.factor_degrees},
          {"observation", t.observation}};
}

json to_json(const CommensurabilityCertificate& c) {
  json j = {{"verdict", c.verdict == CommVerdict::Fibered ? "Fibered" : "NotCommensurable"},
            {"k", c.knot.k},
            {"l", c.knot.l}};
  if (const auto* w = std::get_if<OddWitness>(&c.witness)) {
    j["witness"] = {{"kind", "odd"},
                    {"F", to_string(w->F)},
                    {"leading", to_string(w->leading)},
                    {"constant", to_string(w->constant)},
                    {"prime", w->prime},
                    {"positive_slope", to_string(w->positive_slope)},
                    {"polygon", to_json(w->polygon)}};
  } else if (const auto* w = std::get_if<EvenWitness>(&c.witness)) {
    j["witness"] = {{"kind", "even"},
                    {"point", json::array({to_string(w->point.first), to_string(w->point.second)})},
                    {"prime", w->prime},
                    {"valuation", to_string(w->valuation)}};
  }
  return j;
}

json to_json(const KnotReport& r, bool timing) {
  json j;
  j["schema"] = 1;
  j["input"] = {{"k", r.input_k}, {"l", r.input_l}};
  j["class"] = to_string(r.cls);
  j["degenerate"] = r.degenerate;
  j["disagreements"] = r.disagreements;
  if (timing) j["timing_ms"] = static_cast<long>(r.seconds * 1000 + 0.5);
  if (!r.id) return j;
  j["knot"] = {{"k", r.id->k}, {"l", r.id->l}, {"swapped", r.id->swapped}, {"normalization", r.id->trace}};
  json models = json::object();
  for (const auto& m : r.models) models[to_string(m.kind)] = to_json(m);
  j["models"] = models;
  j["alexander"] = {{"polynomial", to_string(*r.alexander)}, {"route", "formula"}};
  j["fibered"] = {{"value", *r.fibered}, {"list", *r.fibered_list},
                  {"route", *r.fibered == *r.fibered_list ? "both-agree" : "disagree"}};
  if (r.two_bridge) {
    json tb = {{"p", r.two_bridge->p}, {"q", r.two_bridge->q}, {"epsilon", r.two_bridge->epsilon},
               {"continued_fraction", r.two_bridge->cont_frac}, {"route", "formula"}};
    if (r.fourplat) {
      tb["four_plat"] = *r.fourplat;
      tb["route"] = "both-agree";
    }
    j["two_bridge"] = tb;
  }
  if (r.smoothness) j["smoothness"] = to_json(*r.smoothness);
  if (r.components)
    j["components"] = {{"count", r.components->count},
                       {"description", r.components->description},
                       {"route", r.components->cross_checked ? "both-agree" : "formula"}};
  if (r.genus_y) {
    const GenusY& g = *r.genus_y;
    json gy = routed(g.genus_formula, g.genus_bidegree, "bidegree");
    gy["hyperelliptic"] = g.hyperelliptic;
    if (g.d0_genus) gy["D0"] = {{"formula", *g.d0_genus}, {"route", "formula"}};
    if (g.d1_genus_formula) {
      gy["D1"] = routed(*g.d1_genus_formula, *g.d1_genus_bidegree, "bidegree");
      gy["D1"]["hyperelliptic"] = *g.d1_hyperelliptic;
    }
    j["genus_Y"] = gy;
  }
  if (r.genus_x) {
    const GenusX& g = *r.genus_x;
    json gx = routed(g.genus_formula, g.genus_rh, "riemann_hurwitz");
    if (g.x0_formula) gx["X0"] = routed(*g.x0_formula, *g.x0_rh, "riemann_hurwitz");
    if (g.x1_formula) gx["X1"] = routed(*g.x1_formula, *g.x1_rh, "riemann_hurwitz");
    j["genus_X"] = gx;
  }
  if (r.odd_points) {
    json op = routed(r.odd_points->formula, r.odd_points->oracle, "oracle");
    op["case_constant"] = r.odd_points->case_constant;
    op["uncovered_case"] = r.odd_points->uncovered_case;
    j["odd_points"] = op;
  }
  if (r.trace_field) j["trace_field"] = to_json(*r.trace_field);
  if (r.commensurability) {
    j["commensurability"] = to_json(*r.commensurability);
    j["commensurability"]["verified"] = *r.commensurability_verified;
    j["commensurability"]["route"] = "oracle";
  }
  return j;
}

json sweep_row(const KnotReport& r) {
  json row = {{"k", r.input_k}, {"l", r.input_l}, {"class", to_string(r.cls)},
              {"disagreements", r.disagreements.size()}};
  if (r.smoothness) row["smooth"] = r.smoothness->smooth();
  if (r.components) row["components"] = r.components->count;
  if (r.genus_y) row["genus_Y"] = r.genus_y->genus_formula;
  if (r.genus_x) row["genus_X"] = r.genus_x->genus_formula;
  if (r.odd_points) row["odd_points"] = r.odd_points->formula;
  if (r.fibered) row["fibered"] = *r.fibered;
  if (r.commensurability)
    row["commensurability"] = r.commensurability->verdict == CommVerdict::Fibered ? "Fibered" : "NotCommensurable";
  return row;
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    bool nested = v.is_object() || (v.is_array() && !v.empty() && v.front().is_object());
    out << pad << it.key();
    if (v.is_object()) {
      out << "\n";
      render(out, v, indent + 2);
    } else if (nested) {
      out << "\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        render(out, e, indent + 4);
      }
    } else {
      out << std::string(width - it.key().size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string to_text(const json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace bv
