#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridgevar/geometry.hpp"
#include "bridgevar/knotprops.hpp"
#include "bridgevar/models.hpp"

namespace bv {

/// Everything computed for one J(k, l).  Optional parts are absent when the
/// knot class makes them meaningless; `degenerate` then says why.
struct KnotReport {
  long input_k = 0, input_l = 0;
  KnotClass cls = KnotClass::NotAKnot;
  std::optional<KnotId> id;
  std::optional<TwoBridgeForm> two_bridge;
  std::optional<std::vector<long>> fourplat;
  std::vector<CurveModel> models;
  std::optional<SmoothnessCertificate> smoothness;
  std::optional<ComponentCount> components;
  std::optional<GenusY> genus_y;
  std::optional<GenusX> genus_x;
  std::optional<OddPointCount> odd_points;
  std::optional<UniPoly> alexander;
  std::optional<bool> fibered, fibered_list;
  std::optional<TraceFieldReport> trace_field;
  std::optional<CommensurabilityCertificate> commensurability;
  std::optional<bool> commensurability_verified;
  std::vector<std::string> degenerate;
  /// Route pairs that disagreed; empty on a healthy run.
  std::vector<std::string> disagreements;
  double seconds = 0;
};

KnotReport analyze(long k, long l);

/// Keys sorted, schema 1.  Timing is left out unless asked for, so equal inputs give equal bytes.
nlohmann::json to_json(const KnotReport& r, bool timing = false);
nlohmann::json to_json(const CurveModel& m);
nlohmann::json to_json(const NewtonPolygon& np);
nlohmann::json to_json(const TraceFieldReport& t);
nlohmann::json to_json(const CommensurabilityCertificate& c);

/// One summary row per knot for sweeps.
nlohmann::json sweep_row(const KnotReport& r);

/// Indented "key  value" rendering of a JSON value.
std::string to_text(const nlohmann::json& j);

}  // namespace bv
