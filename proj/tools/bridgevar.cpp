#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "bridgevar/knotprops.hpp"
#include "bridgevar/newton.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/report.hpp"
#include "bridgevar/suites.hpp"

using namespace bv;
using nlohmann::json;

namespace {

struct Options {
  long k = 0, l = 0;
  bool json_out = false;
  bool timing = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  long kmax = 10, lmax = 10, nmax = 4, range = 20;
  std::string out_path, suite = "all", kind = "D", variant, poly;
  long n = 0, p = 3;
};

void emit(const json& j, const Options& o) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << to_text(j);
}

int cmd_analyze(const Options& o) {
  KnotReport r = analyze(o.k, o.l);
  emit(to_json(r, o.timing), o);
  return r.disagreements.empty() ? 0 : 1;
}

int cmd_sweep(const Options& o) {
  if (o.kmax < 2 || o.lmax < 2) throw std::invalid_argument("--kmax and --lmax must be at least 2");
  std::vector<std::pair<long, long>> tasks;
  for (long k = -o.kmax; k <= o.kmax; ++k)
    for (long l = -o.lmax; l <= o.lmax; l += 2)
      if (std::labs(k) >= 2 && std::labs(l) >= 2) tasks.emplace_back(k, l);

  std::vector<json> rows(tasks.size());
  std::vector<long> failures(tasks.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        KnotReport r = analyze(tasks[i].first, tasks[i].second);
        rows[i] = sweep_row(r);
        if (!r.disagreements.empty()) rows[i]["details"] = r.disagreements;
      } catch (const std::exception& e) {
        rows[i] = {{"k", tasks[i].first}, {"l", tasks[i].second}, {"error", e.what()}};
        failures[i] = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<size_t>(o.jobs, tasks.size()); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw std::runtime_error("cannot open " + o.out_path);
  }
  std::ostream& out = o.out_path.empty() ? std::cout : file;
  const std::vector<std::string> cols = {"k", "l", "class", "smooth", "components", "genus_Y",
                                         "genus_X", "odd_points", "fibered", "commensurability", "disagreements"};
  if (!o.json_out) {
    for (size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
    out << "\n";
  }
  long disagreements = 0, failed = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    failed += failures[i];
    if (rows[i].contains("disagreements")) disagreements += rows[i]["disagreements"].get<long>();
    if (o.json_out) {
      out << rows[i].dump() << "\n";
      continue;
    }
    for (size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "");
      if (!rows[i].contains(cols[c])) continue;
      const json& v = rows[i][cols[c]];
      out << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    if (failures[i]) out << ",error: " << rows[i]["error"].get<std::string>();
    out << "\n";
  }
  std::cerr << "rows " << rows.size() << ", disagreements " << disagreements << ", failed rows " << failed << "\n";
  return disagreements == 0 && failed == 0 ? 0 : 1;
}

int cmd_verify(const Options& o) {
  std::vector<SuiteCheck> checks;
  auto add = [&](std::vector<SuiteCheck> v) { checks.insert(checks.end(), v.begin(), v.end()); };
  if (o.suite == "identities" || o.suite == "all") add(identities_suite(o.range));
  if (o.suite == "newton" || o.suite == "all") add(newton_suite());
  if (o.suite == "riley" || o.suite == "all") add(riley_suite(o.kmax, o.nmax, o.seed));
  bool ok = true;
  json arr = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"detail", c.detail}});
    if (!o.json_out)
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << c.checked << " checks)"
                << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  if (o.json_out) std::cout << json{{"schema", 1}, {"suite", o.suite}, {"checks", arr}, {"pass", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_model(const Options& o) {
  KnotId id = normalize(o.k, o.l);
  CurveModel m;
  if (o.kind == "C")
    m = c_model(id.k, id.l);
  else if (o.kind == "X")
    m = x_model(id.k, id.l);
  else if (o.kind == "D")
    m = d_model(id.k, id.l);
  else {
    if (id.k != id.l) throw std::invalid_argument("D0 and D1 need k = l");
    DSplit s = d_split(id.l);
    m = o.kind == "D0" ? s.d0 : s.d1;
  }
  json j = to_json(m);
  j["schema"] = 1;
  j["k"] = id.k;
  j["l"] = id.l;
  j["swapped"] = id.swapped;
  emit(j, o);
  return 0;
}

int cmd_tracefield(const Options& o) {
  json j = to_json(trace_field_report(o.k, o.l));
  j["schema"] = 1;
  emit(j, o);
  return 0;
}

int cmd_commensurability(const Options& o) {
  CommensurabilityCertificate c = commensurability_certificate(o.k, o.l);
  json j = to_json(c);
  bool ok = verify_certificate(c);
  j["schema"] = 1;
  j["verified"] = ok;
  emit(j, o);
  return ok ? 0 : 1;
}

int cmd_newton(const Options& o) {
  json j;
  if (!o.poly.empty()) {
    j = to_json(polygon_at(parse_unipoly(o.poly), o.p));
    j["p"] = o.p;
  } else {
    ShiftBase v = o.variant == "one" ? ShiftBase::One : o.variant == "i" ? ShiftBase::I : ShiftBase::Alpha;
    ShiftedPolygon lp = shifted_polygon(v, o.n, o.p);
    j = to_json(lp.polygon);
    json ex = json::array();
    for (const auto& pt : lp.expected_vertices) ex.push_back(json::array({pt.index, to_string(pt.value)}));
    j["expected_vertices"] = ex;
    j["matches"] = lp.matches();
    j["e"] = lp.e;
    j["n"] = lp.n;
    j["p"] = lp.p;
  }
  j["schema"] = 1;
  emit(j, o);
  return j.value("matches", true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties, curve models and invariants of the double twist knots J(k,l)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "JSON output");
  app.add_option("--seed", o.seed, "Seed for random sampling (BRIDGEVAR_SEED overrides)");

  auto knot_opts = [&](CLI::App* c) {
    c->add_option("-k", o.k, "k")->required();
    c->add_option("-l", o.l, "l")->required();
    c->add_flag("--json", o.json_out, "JSON output");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for J(k,l)");
  knot_opts(analyze_cmd);
  analyze_cmd->add_flag("--timing", o.timing, "Include timing");

  auto* sweep_cmd = app.add_subcommand("sweep", "Reports for all 2 <= |k| <= kmax, 2 <= |l| <= lmax, l even");
  sweep_cmd->add_option("kmax,--kmax", o.kmax)->check(CLI::Range(2L, 1000L));
  sweep_cmd->add_option("lmax,--lmax", o.lmax)->check(CLI::Range(2L, 1000L));
  sweep_cmd->add_option("--out,-o", o.out_path, "Output file");
  sweep_cmd->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--json", o.json_out, "JSON lines instead of CSV");

  auto* verify_cmd = app.add_subcommand("verify", "Run a regression suite");
  verify_cmd->add_option("suite", o.suite)->check(CLI::IsMember({"identities", "newton", "riley", "all"}));
  verify_cmd->add_option("--range", o.range, "Index range for identities")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--kmax", o.kmax)->check(CLI::Range(2L, 100L));
  verify_cmd->add_option("--nmax", o.nmax)->check(CLI::Range(1L, 100L));
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_flag("--json", o.json_out, "JSON output");

  auto* model_cmd = app.add_subcommand("model", "Print a curve model");
  knot_opts(model_cmd);
  model_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"C", "X", "D", "D0", "D1"}));

  auto* tf_cmd = app.add_subcommand("tracefield", "Trace-field polynomial and degree report");
  knot_opts(tf_cmd);

  auto* comm_cmd = app.add_subcommand("commensurability", "Commensurability certificate");
  knot_opts(comm_cmd);

  auto* newton_cmd = app.add_subcommand("newton", "Newton polygons");
  auto* variant_opt =
      newton_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"one", "i", "alpha"}));
  newton_cmd->add_option("-n", o.n)->needs(variant_opt);
  auto* poly_opt = newton_cmd->add_option("--poly", o.poly, "Integer polynomial");
  poly_opt->excludes(variant_opt);
  newton_cmd->add_option("-p", o.p)->check(CLI::PositiveNumber);
  newton_cmd->add_flag("--json", o.json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("BRIDGEVAR_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "BRIDGEVAR_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  if (newton_cmd->parsed() && o.poly.empty() && o.variant.empty()) {
    std::cerr << "newton needs --variant or --poly\n";
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o);
    if (sweep_cmd->parsed()) return cmd_sweep(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (model_cmd->parsed()) return cmd_model(o);
    if (tf_cmd->parsed()) return cmd_tracefield(o);
    if (comm_cmd->parsed()) return cmd_commensurability(o);
    if (newton_cmd->parsed()) return cmd_newton(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
