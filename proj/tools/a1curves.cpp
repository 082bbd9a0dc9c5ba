// a1curves: command-line front end for monoids, charts, combs and wonderful
// group compactifications.
//
// Exit codes: 0 success with an affirmative verdict, 1 negative verdict,
// 2 malformed input, precondition violation or usage error.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "a1c/comb.hpp"
#include "a1c/dfchart.hpp"
#include "a1c/fsmonoid.hpp"
#include "a1c/json_io.hpp"
#include "a1c/wonderful.hpp"
#include "report.hpp"

using namespace a1c;
using a1c::json::Json;
using a1c::json::to_json;

namespace {

struct Outcome {
  Json report;
  int code = 0;
};

Integer parse_integer(const std::string& s, const char* what) {
  try {
    return json::integer_from(Json(s));
  } catch (const Error&) {
    throw Error(std::string(what) + " must be an integer, got \"" + s + "\"");
  }
}

Vec parse_list(const std::string& s, const char* what) {
  Vec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, what));
  if (out.empty() && !s.empty()) throw Error(std::string(what) + " is empty");
  return out;
}

Isogeny parse_isogeny(const std::string& s) {
  if (s == "sc" || s == "simply_connected") return Isogeny::simply_connected;
  if (s == "adjoint") return Isogeny::adjoint;
  throw Error("unknown isogeny \"" + s + "\" (use sc or adjoint)");
}

std::string isogeny_name(Isogeny i) {
  return i == Isogeny::simply_connected ? "simply_connected" : "adjoint";
}

Json provenance(const SphericalData& d) {
  Json p;
  p["knop"] = d.hyp_knop_asserted ? "asserted" : "not asserted";
  p["intersection_is_kronecker"] =
      d.intersection_matrix ? "checked against intersection_matrix" : "asserted";
  p["color_types"] = "asserted";
  p["cone"] = "computed";
  return p;
}

Json hypotheses_json(const HypothesisReport& h) {
  Json j;
  j["knop"] = h.knop;
  j["cone"] = h.cone;
  j["all_colors_type_b"] = h.all_colors_type_b;
  return j;
}

Outcome monoid_saturate(const std::string& file) {
  FsMonoid m = json::monoid_from(json::read_file(file));
  FsMonoid s = saturate(m);
  Outcome o;
  o.report["input"] = to_json(m);
  o.report["was_saturated"] = m.is_saturated();
  o.report["saturation"] = to_json(s);
  o.report["hilbert_basis_size"] = s.generators().size();
  return o;
}

Outcome monoid_colimit(const std::string& file) {
  MonoidDiagram d = json::diagram_from(json::read_file(file));
  ColimitResult c = fs_colimit(d);
  Outcome o;
  o.report["colimit"] = to_json(c.colimit);
  o.report["sharp"] = c.colimit.is_sharp();
  o.report["saturated"] = c.colimit.is_saturated();
  o.report["unit_rank"] = c.unit_rank;
  o.report["group_torsion"] = to_json(c.group_torsion);
  Json maps = Json::array();
  for (const MonoidMorphism& m : c.structure_maps) maps.push_back(to_json(m.matrix()));
  o.report["structure_maps"] = maps;
  return o;
}

Outcome chart_admissible(const std::string& file, const std::string& cls) {
  DFChart chart = json::chart_from(json::read_file(file));
  Vec F = parse_list(cls, "--class");
  Vec co = contact_order(chart, F);
  bool ok = chart.dual_cone().contains(co);
  Outcome o;
  o.report["class"] = to_json(F);
  o.report["contact_order"] = to_json(co);
  o.report["admissible"] = ok;
  o.code = ok ? 0 : 1;
  return o;
}

Outcome chart_enumerate(const std::string& file, const std::string& bound_s,
                        const std::string& height_s, const std::string& cone_file) {
  DFChart chart = json::chart_from(json::read_file(file));
  Integer bound = parse_integer(bound_s, "--bound");
  Vec height = height_s.empty() ? Vec(chart.pic_rank(), Integer(1))
                                : parse_list(height_s, "--height");
  Cone eff = cone_file.empty() ? Cone::orthant(chart.pic_rank())
                               : json::cone_from(json::read_file(cone_file));
  auto classes = enumerate_admissible(chart, eff, height, bound);
  Outcome o;
  o.report["bound"] = to_json(bound);
  o.report["height"] = to_json(height);
  o.report["effective_cone"] = to_json(eff);
  o.report["count"] = classes.size();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["class"] = to_json(c.curve_class);
    e["contact"] = to_json(c.contact);
    list.push_back(e);
  }
  o.report["classes"] = list;
  return o;
}

Outcome comb_check(const std::string& file) {
  CombData c = json::comb_from(json::read_file(file));
  MinimalMonoidResult mm = minimal_monoid(c);
  LiftResult lift = lift_contact_vector(c);
  SmoothingProfile sp = smoothing_profile(c);
  Outcome o;
  o.report["c_infty"] = to_json(lift.c_infty);
  o.report["verdict"] = to_string(lift.verdict);
  o.report["a1_curve"] = lift.a1_curve;
  o.report["admissible"] = mm.admissible;
  Json m;
  m["monoid"] = to_json(mm.monoid);
  m["sharp"] = mm.monoid.is_sharp();
  m["saturated"] = mm.monoid.is_saturated();
  m["group_torsion"] = to_json(mm.group_torsion);
  o.report["minimal_monoid"] = m;
  Json s;
  s["rank"] = sp.rank;
  s["transform_degree"] = to_json(sp.transform_degree);
  s["spanning"] = sp.spanning;
  s["heuristic"] = true;
  o.report["smoothing"] = s;
  o.code = (lift.verdict == LiftVerdict::fails || !mm.admissible) ? 1 : 0;
  return o;
}

Outcome wonderful_group(const std::string& type, const std::string& iso_s) {
  RootSystem rs = build_root_system(type);
  Isogeny iso = parse_isogeny(iso_s);
  SphericalData d = group_wonderful_data(rs, iso);
  DFChart chart = distinguished_chart(d);
  HypothesisReport h = check_hypotheses(d);
  IsogenyInvariants inv = isogeny_invariants(d, chart);
  Outcome o;
  o.report["type"] = rs.type_label;
  o.report["isogeny"] = isogeny_name(iso);
  o.report["cartan"] = to_json(rs.cartan);
  o.report["data"] = to_json(d);
  o.report["chart"] = to_json(chart);
  o.report["hypotheses"] = hypotheses_json(h);
  o.report["pi1_order"] = to_json(inv.pi1_order);
  o.report["primitive"] = inv.primitive;
  o.report["character_group"] = to_json(inv.character_group);
  o.report["provenance"] = provenance(d);
  o.code = (h.knop && h.cone && h.all_colors_type_b) ? 0 : 1;
  return o;
}

Outcome wonderful_classify(const std::string& type, const std::string& data_file,
                           const std::string& iso_s, const std::string& bound_s) {
  if (type.empty() == data_file.empty()) throw Error("give exactly one of --type or --data");
  Integer bound = parse_integer(bound_s, "--bound");
  SphericalData d = data_file.empty()
                        ? group_wonderful_data(build_root_system(type), parse_isogeny(iso_s))
                        : json::spherical_from(json::read_file(data_file));
  auto classes = classify_curve_classes(d, bound);
  Outcome o;
  if (!type.empty()) {
    o.report["type"] = build_root_system(type).type_label;
    o.report["isogeny"] = isogeny_name(parse_isogeny(iso_s));
  }
  o.report["bound"] = to_json(bound);
  o.report["count"] = classes.size();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["class"] = to_json(c.curve_class);
    e["contact"] = to_json(c.contact);
    e["is_A1_class"] = c.is_A1_class;
    list.push_back(e);
  }
  o.report["classes"] = list;
  o.report["provenance"] = provenance(d);
  return o;
}

Outcome wonderful_verify(const std::string& type, const std::string& bound_s) {
  RootSystem rs = build_root_system(type);
  Integer bound = parse_integer(bound_s, "--bound");
  bool ok = verify_theorem_G(rs, bound);
  Outcome o;
  o.report["theorem_G"] = ok;
  o.report["type"] = rs.type_label;
  o.report["bound"] = to_json(bound);
  o.report["provenance"] = provenance(group_wonderful_data(rs, Isogeny::simply_connected));
  o.code = ok ? 0 : 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve classes, log charts and minimal monoids"};
  app.name("a1curves");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  bool as_json = false;
  std::function<Outcome()> action;
  std::string file, chart, cls, bound, height, cone, type, data, isogeny = "sc";

  auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_flag("--json", as_json, "emit JSON instead of a table");
    return sub;
  };

  CLI::App* monoid = app.add_subcommand("monoid", "fine saturated monoids");
  monoid->require_subcommand(1);
  CLI::App* sat = leaf(monoid, "saturate", "Hilbert basis of a sharp monoid");
  sat->add_option("file", file, "monoid JSON")->required();
  sat->callback([&] { action = [&] { return monoid_saturate(file); }; });
  CLI::App* col = leaf(monoid, "colimit", "colimit of a finite diagram");
  col->add_option("file", file, "diagram JSON")->required();
  col->callback([&] { action = [&] { return monoid_colimit(file); }; });

  CLI::App* chartc = app.add_subcommand("chart", "global monoid charts");
  chartc->require_subcommand(1);
  CLI::App* adm = leaf(chartc, "admissible", "is a curve class admissible");
  adm->add_option("--chart", chart, "chart JSON")->required();
  adm->add_option("--class", cls, "comma-separated class coefficients")->required();
  adm->callback([&] { action = [&] { return chart_admissible(chart, cls); }; });
  CLI::App* en = leaf(chartc, "enumerate", "admissible classes up to a height");
  en->add_option("--chart", chart, "chart JSON")->required();
  en->add_option("--bound", bound, "height bound")->required();
  en->add_option("--height", height, "comma-separated height covector (default all ones)");
  en->add_option("--effective-cone", cone, "cone JSON (default the orthant)");
  en->callback([&] { action = [&] { return chart_enumerate(chart, bound, height, cone); }; });

  CLI::App* combc = app.add_subcommand("comb", "comb curves");
  combc->require_subcommand(1);
  CLI::App* chk = leaf(combc, "check", "minimal monoid, lift and smoothing data");
  chk->add_option("file", file, "comb JSON")->required();
  chk->callback([&] { action = [&] { return comb_check(file); }; });

  CLI::App* won = app.add_subcommand("wonderful", "wonderful group compactifications");
  won->require_subcommand(1);
  CLI::App* grp = leaf(won, "group", "group data, chart, hypotheses, invariants");
  grp->add_option("--type", type, "root system, e.g. A2 or E_8")->required();
  grp->add_option("--isogeny", isogeny, "sc or adjoint");
  grp->callback([&] { action = [&] { return wonderful_group(type, isogeny); }; });
  CLI::App* cla = leaf(won, "classify", "log-admissible curve classes");
  CLI::Option* topt = cla->add_option("--type", type, "root system");
  CLI::Option* dopt = cla->add_option("--data", data, "spherical data JSON");
  topt->excludes(dopt);
  cla->add_option("--isogeny", isogeny, "sc or adjoint, with --type");
  cla->add_option("--bound", bound, "height bound")->required();
  cla->callback([&] { action = [&] { return wonderful_classify(type, data, isogeny, bound); }; });
  CLI::App* ver = leaf(won, "verify", "cross-check against dominant coroots");
  ver->add_option("--type", type, "root system")->required();
  ver->add_option("--bound", bound, "height bound")->required();
  ver->callback([&] { action = [&] { return wonderful_verify(type, bound); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  try {
    Outcome o = action();
    if (as_json)
      std::cout << report::render_json(o.report);
    else
      std::cout << report::render_table(o.report);
    return o.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
