#include "hcd/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hcd/crgeom.hpp"
#include "hcd/errors.hpp"
#include "hcd/groebner.hpp"
#include "hcd/holoclosure.hpp"
#include "hcd/jets.hpp"
#include "hcd/parser.hpp"

namespace hcd::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGlobalNotice =
    "global semantics: dimensions describe the Zariski closure of the whole set, "
    "a germ at a point may have smaller holomorphic closure dimension";

struct Options {
  std::string input = "-";
  bool json = false;
  std::uint64_t seed = 1;
  std::vector<std::string> points;
  int k = 0;
  std::string order = "grevlex";
  int maxdeg = 4;
  std::vector<int> jets;
  std::vector<std::string> vars;
  GroebnerLimits limits;
  ProbeLimits probe_limits;
};

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot read input file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Json document_json(const InputDocument& doc) {
  Json out;
  out["kind"] = std::string(document_kind_name(doc.kind));
  out["variables"] = doc.declared;
  if (!doc.equations.empty() || doc.kind == DocumentKind::SystemZeta || doc.kind == DocumentKind::SystemReal)
    out["equations"] = strings(doc.equations);
  if (!doc.maps.empty()) out["map"] = strings(doc.maps);
  if (!doc.jets.empty()) out["jets"] = strings(doc.jets);
  return out;
}

std::vector<Point> points_of(const Options& o) {
  std::vector<Point> out;
  for (const auto& text : o.points) out.push_back(parse_point(text));
  return out;
}

Point single_point(const Options& o) {
  if (o.points.size() != 1) throw InvalidInput("exactly one --point is required");
  return parse_point(o.points.front());
}

Json ideal_summary(const Ideal& ideal, const GroebnerLimits& limits) {
  Json out;
  out["generators"] = strings(ideal.generators());
  out["dimension"] = optional_int(ideal_dimension(ideal, limits));
  return out;
}

// Each handler fills `results` and `diagnostics` from a parsed document.
using Handler = std::function<void(const InputDocument*, const Options&, Json&, Json&)>;

void cmd_hcdim(const InputDocument* doc, const Options& o, Json& res, Json& diag) {
  const HCReport r = holomorphic_closure(to_system(*doc), o.limits);
  res["hc_dimension"] = r.hc_dimension;
  res["real_dimension"] = r.real_dimension;
  res["hc_ideal"] = strings(r.hc_ideal.generators());
  diag.push_back(kGlobalNotice);
}

void cmd_realdim(const InputDocument* doc, const Options& o, Json& res, Json&) {
  res["real_dimension"] = real_dimension(to_system(*doc), o.limits);
}

void cmd_param_hcdim(const InputDocument* doc, const Options& o, Json& res, Json& diag) {
  if (doc->kind != DocumentKind::Parametrization) throw InvalidInput("param-hcdim needs a 'params' document with 'map' lines");
  const HCReport r = hc_dimension_parametrized(doc->maps, o.limits);
  res["hc_dimension"] = r.hc_dimension;
  res["real_dimension"] = r.real_dimension;
  res["hc_ideal"] = strings(r.hc_ideal.generators());
  diag.push_back(kGlobalNotice);
}

void cmd_ranks(const InputDocument* doc, const Options& o, Json& res, Json& diag) {
  const PolynomialMap map = to_map(*doc);
  RankOptions ro;
  if (!o.points.empty()) ro.witness = single_point(o);
  const RankReport r = gabrielov_r1(map, source_ideal(*doc), o.seed, ro, o.limits);
  res["r1"] = r.r1;
  res["r3"] = r.r3;
  res["lambda"] = r.lambda;
  res["regular"] = r.regular;
  res["fibre_witness"] = point_json(r.fibre_witness);
  res["kernel"] = strings(r.kernel.generators());
  if (!r.regular) diag.push_back("r1 < r3: the map is not regular in Gabrielov's sense at the sampled points");
}

void cmd_crdim(const InputDocument* doc, const Options& o, Json& res, Json&) {
  const CRReport r = cr_dimension_at(to_system(*doc), single_point(o), o.limits);
  res["d"] = r.d;
  res["m"] = r.m;
  res["smooth"] = r.smooth;
  res["rank_df"] = r.rank_df;
  res["rank_stacked"] = r.rank_stacked;
}

void cmd_strata(const InputDocument* doc, const Options& o, Json& res, Json&) {
  const Ideal strata = cr_strata_ideal(to_system(*doc), o.k, o.limits);
  res["k"] = o.k;
  res["generator_count"] = strata.generators().size();
  res["generators"] = strings(strata.generators());
}

void cmd_verify_dm(const InputDocument* doc, const Options& o, Json& res, Json& diag) {
  const auto points = points_of(o);
  if (points.empty()) throw InvalidInput("verify-dm needs at least one --point");
  const DmReport r = verify_d_minus_m(to_system(*doc), points, o.limits);
  res["h"] = r.h;
  res["all_agree"] = r.all_agree;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["point"] = point_json(c.point);
    j["d"] = c.d;
    j["m"] = c.m;
    j["smooth"] = c.smooth;
    j["agrees"] = c.agrees;
    if (!c.note.empty()) {
      j["note"] = c.note;
      diag.push_back("point " + point_json(c.point).dump() + ": " + c.note);
    }
    checks.push_back(std::move(j));
  }
  res["checks"] = std::move(checks);
}

Ideal equations_ideal(const InputDocument& doc) {
  if (doc.kind == DocumentKind::JetComponents || doc.kind == DocumentKind::Parametrization)
    throw InvalidInput("this command needs a document with 'eq' lines");
  return Ideal(doc.context, doc.equations);
}

void cmd_groebner(const InputDocument* doc, const Options& o, Json& res, Json&) {
  const Ideal ideal = equations_ideal(*doc);
  const MonomialOrder order = o.order == "lex" ? MonomialOrder::lex()
                                                : MonomialOrder::grevlex();
  const GroebnerBasis gb = buchberger(ideal, order, o.limits);
  res["order"] = o.order;
  res["basis"] = strings(gb.basis);
  res["dimension"] = optional_int(ideal_dimension(ideal, o.limits));
}

void cmd_eliminate(const InputDocument* doc, const Options& o, Json& res, Json&) {
  const Ideal ideal = equations_ideal(*doc);
  if (o.vars.empty()) throw InvalidInput("eliminate needs --vars");
  std::vector<bool> mask(doc->context->size(), false);
  for (const auto& name : o.vars) {
    const auto idx = doc->context->index_of(name);
    if (!idx) throw InvalidInput("unknown variable '" + name + "' in --vars");
    mask[*idx] = true;
  }
  const Ideal elim = eliminate(ideal, mask, o.limits);
  res["eliminated"] = o.vars;
  res["remaining"] = Json::array();
  for (const auto& v : elim.context()->variables()) res["remaining"].push_back(v.name);
  res["ideal"] = ideal_summary(elim, o.limits);
}

Json probe_table(const std::vector<ProbeResult>& rows) {
  Json table = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["K"] = r.jet_order;
    j["max_degree"] = r.max_degree;
    j["min_relation_degree"] = optional_int(r.min_relation_degree);
    j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
    table.push_back(std::move(j));
  }
  return table;
}

std::vector<int> jet_orders(const Options& o) {
  if (o.jets.empty()) throw InvalidInput("--jets needs at least one order");
  for (int k : o.jets)
    if (k < 0) throw InvalidInput("jet orders must be non-negative");
  return o.jets;
}

void cmd_probe_osgood(const InputDocument*, const Options& o, Json& res, Json&) {
  const auto orders = jet_orders(o);
  res["components"] = {"v", "v*w", "v*w*exp(w)"};
  res["table"] = probe_table(osgood_probe(orders, o.maxdeg, o.probe_limits));
}

void cmd_probe(const InputDocument* doc, const Options& o, Json& res, Json&) {
  std::vector<ProbeResult> rows;
  for (int k : jet_orders(o)) {
    const auto jets = to_jets(*doc, k);
    rows.push_back(relation_probe(jets, k, o.maxdeg, o.probe_limits));
  }
  res["table"] = probe_table(rows);
}

void render_text(const Json& value, const std::string& indent, std::ostream& out) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      out << indent << key << ":\n";
      render_text(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : v) {
        out << indent << "  -\n";
        render_text(item, indent + "    ", out);
      }
    } else if (v.is_array()) {
      out << indent << key << ": [";
      for (std::size_t k = 0; k < v.size(); ++k)
        out << (k ? ", " : "") << (v[k].is_string() ? v[k].get<std::string>() : v[k].dump());
      out << "]\n";
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

struct CommandSpec {
  const char* name;
  const char* help;
  Handler handler;
  bool needs_input;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<CommandSpec> commands = {
      {"hcdim", "holomorphic closure dimension and ideal of a real set", cmd_hcdim, true},
      {"realdim", "real dimension of a real set", cmd_realdim, true},
      {"param-hcdim", "holomorphic closure dimension of a parametrized set", cmd_param_hcdim, true},
      {"ranks", "Gabrielov ranks r1 and r3 of a polynomial map", cmd_ranks, true},
      {"crdim", "CR dimension at a point (--point)", cmd_crdim, true},
      {"strata", "ideal of the stratum where the CR dimension is at least k (--k)", cmd_strata, true},
      {"verify-dm", "check h = d - m at the given points", cmd_verify_dm, true},
      {"groebner", "reduced Groebner basis of the 'eq' ideal", cmd_groebner, true},
      {"eliminate", "elimination ideal of the 'eq' ideal (--vars)", cmd_eliminate, true},
      {"probe-osgood", "relation probe on the Osgood jets (--jets, --maxdeg)", cmd_probe_osgood, false},
      {"probe", "relation probe on user jet components (--jets, --maxdeg)", cmd_probe, true},
  };

  CLI::App app{"Holomorphic closure dimension toolkit", "hcd"};
  app.require_subcommand(1);
  Options o;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.needs_input) sub->add_option("input", o.input, "input file, '-' for standard input");
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_option("--max-pairs", o.limits.max_pairs, "Groebner pair budget");
    sub->add_option("--max-degree", o.limits.max_degree, "Groebner degree budget");
    const std::string name = c.name;
    if (name == "ranks") {
      sub->add_option("--seed", o.seed, "sampling seed");
      sub->add_option("--point", o.points, "fibre witness on the source set");
    }
    if (name == "crdim") sub->add_option("--point", o.points, "point of the set")->required();
    if (name == "verify-dm") sub->add_option("--point", o.points, "points of the set (repeatable)")->required();
    if (name == "strata") sub->add_option("--k", o.k, "CR dimension threshold")->required();
    if (name == "groebner")
      sub->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
    if (name == "eliminate") sub->add_option("--vars", o.vars, "variables to eliminate")->delimiter(',')->required();
    if (name == "probe" || name == "probe-osgood") {
      sub->add_option("--jets", o.jets, "jet orders, comma separated")->delimiter(',')->required();
      sub->add_option("--maxdeg", o.maxdeg, "largest relation degree searched");
      sub->add_option("--max-entries", o.probe_limits.max_entries, "linear system size budget");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "hcd: " << e.what() << '\n';
    return Usage;
  }

  const CommandSpec* command = nullptr;
  for (const auto& c : commands)
    if (app.got_subcommand(c.name)) command = &c;

  Json report;
  report["command"] = command->name;
  Json inputs;
  if (std::string(command->name) == "ranks") inputs["seed"] = o.seed;
  if (!o.points.empty()) inputs["points"] = o.points;
  if (std::string(command->name) == "strata") inputs["k"] = o.k;
  if (std::string(command->name) == "groebner") inputs["order"] = o.order;
  if (!o.jets.empty()) {
    inputs["jets"] = o.jets;
    inputs["maxdeg"] = o.maxdeg;
  }
  Json results = Json::object();
  Json diagnostics = Json::array();
  int code = Ok;
  try {
    std::optional<InputDocument> doc;
    if (command->needs_input) {
      doc = parse(read_input(o.input, in));
      inputs["document"] = document_json(*doc);
    }
    command->handler(doc ? &*doc : nullptr, o, results, diagnostics);
  } catch (const ParseError& e) {
    code = Parse;
    diagnostics.push_back(std::string("parse error at ") + e.what());
  } catch (const ResourceLimit& e) {
    code = Resource;
    diagnostics.push_back(std::string("resource limit: ") + e.what());
  } catch (const PreconditionFailed& e) {
    code = Precondition;
    diagnostics.push_back(std::string("precondition failed: ") + e.what());
  } catch (const InvalidInput& e) {
    code = Precondition;
    diagnostics.push_back(std::string("invalid input: ") + e.what());
  }
  report["inputs"] = std::move(inputs);
  report["status"] = code == Ok ? "ok" : "error";
  report["exit_code"] = code;
  report["results"] = std::move(results);
  report["diagnostics"] = diagnostics;

  if (o.json) {
    out << report.dump(2) << '\n';
  } else if (code == Ok) {
    render_text(report["results"], "", out);
    for (const auto& d : diagnostics) err << "note: " << d.get<std::string>() << '\n';
  }
  if (code != Ok)
    for (const auto& d : diagnostics) err << "hcd: " << d.get<std::string>() << '\n';
  return code;
}

}  // namespace hcd::cli
