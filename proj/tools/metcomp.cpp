#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metcomp/oracle.hpp"
#include "metcomp/specfile.hpp"

namespace mc = metcomp;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "metcomp/1.0";

json header(const std::string& command) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

const char* category_kind_name(mc::CategoryDescriptor::Kind k) {
  using K = mc::CategoryDescriptor::Kind;
  switch (k) {
    case K::DerivedOfLocalizedZ: return "DerivedOfLocalizedZ";
    case K::KroneckerLocalisation: return "KroneckerLocalisation";
    case K::ThickInsideS: return "ThickInsideS";
    case K::PerpOfExceptional: return "PerpOfExceptional";
    case K::ZeroCategory: return "ZeroCategory";
  }
  return "?";
}

json category_json(const mc::CategoryDescriptor& c) {
  json j;
  j["kind"] = category_kind_name(c.kind);
  j["display"] = c.str();
  j["generators"] = c.generators;
  if (c.kind == mc::CategoryDescriptor::Kind::ThickInsideS)
    j["inside"] = c.inside.str();
  return j;
}

json report_json(const std::string& metric_name, const mc::CompletionReport& r) {
  json j;
  j["metric"] = metric_name;
  j["case"] = r.case_number == 1 ? "I" : "II";
  j["kernel"] = r.kernel.str();
  j["countablyGenerated"] = r.countably_generated;
  j["convergesUniformly"] = r.converges_uniformly;
  j["category"] = category_json(r.category);
  j["evidence"] = r.evidence;
  return j;
}

void print_report_text(const std::string& name, const mc::CompletionReport& r) {
  std::cout << "metric " << name << ": case " << (r.case_number == 1 ? "I" : "II")
            << "\n  kernel: " << r.kernel.str()
            << "\n  countably generated: " << (r.countably_generated ? "yes" : "no")
            << "\n  converges uniformly: " << (r.converges_uniformly ? "yes" : "no")
            << "\n  completion: " << r.category.str() << "\n";
  for (const auto& e : r.evidence) std::cout << "  - " << e << "\n";
}

std::string cone_display(const mc::SplitObject& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [d, m] : x.summands) {
    if (!s.empty()) s += ", ";
    s += m.str() + " in degree " + std::to_string(d);
  }
  return s;
}

// ----------------------------------------------------------------- classify

int run_classify(const std::string& path, bool as_json) {
  mc::SpecFile f = mc::load_specfile(path);
  std::vector<std::string> targets;
  for (const auto& q : f.queries)
    if (q.kind == mc::Query::Kind::Classify) targets.push_back(q.metric_args[0]);
  if (targets.empty()) {
    mc::require(f.metrics.size() == 1, mc::Err::InvalidDescriptor,
                "no classify query and no unique metric in " + path);
    targets.push_back(f.metrics[0].first);
  }
  json out = header("classify");
  out["ring"] = f.ring.str();
  out["results"] = json::array();
  for (const auto& name : targets) {
    mc::CompletionReport r = mc::classify(f.ring, *f.metric(name));
    out["results"].push_back(report_json(name, r));
    if (!as_json) print_report_text(name, r);
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ lattice

int run_lattice(const std::string& op, const std::string& path, bool as_json) {
  mc::SpecFile f = mc::load_specfile(path);
  mc::Query::Kind want = op == "meet"   ? mc::Query::Kind::Meet
                         : op == "join" ? mc::Query::Kind::Join
                                        : mc::Query::Kind::Leq;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& q : f.queries)
    if (q.kind == want) pairs.emplace_back(q.metric_args[0], q.metric_args[1]);
  if (pairs.empty()) {
    mc::require(f.metrics.size() == 2, mc::Err::InvalidDescriptor,
                "no " + op + " query and no unique metric pair in " + path);
    pairs.emplace_back(f.metrics[0].first, f.metrics[1].first);
  }
  json out = header("lattice");
  out["op"] = op;
  out["results"] = json::array();
  for (const auto& [ln, rn] : pairs) {
    const mc::MetricNF& a = *f.metric(ln);
    const mc::MetricNF& b = *f.metric(rn);
    json r;
    r["left"] = ln;
    r["right"] = rn;
    if (want == mc::Query::Kind::Leq) {
      bool holds = mc::finer_leq(a, b);
      r["holds"] = holds;
      if (!as_json)
        std::cout << ln << " finer_leq " << rn << ": " << (holds ? "true" : "false")
                  << "\n";
    } else {
      mc::MetricNF m = want == mc::Query::Kind::Meet ? mc::meet(a, b)
                                                     : mc::join(a, b);
      r["result"] = m.str();
      if (!as_json)
        std::cout << op << "(" << ln << ", " << rn << ") =\n" << m.str() << "\n";
    }
    out["results"].push_back(std::move(r));
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------- cauchy

json certificate_json(const mc::CauchyCertificate& c) {
  json j;
  j["horizon"] = c.horizon;
  json st = json::object();
  for (const auto& [ball, from] : c.stabilization)
    st[std::to_string(ball)] = from;
  j["stabilization"] = std::move(st);
  j["display"] = c.str();
  return j;
}

int run_cauchy(const std::string& mode, const std::string& path, bool as_json,
               long long horizon) {
  mc::SpecFile f = mc::load_specfile(path);
  mc::require(f.cauchy.has_value(), mc::Err::InvalidDescriptor,
              path + " has no cauchy block");
  const mc::CauchySpec& spec = *f.cauchy;
  mc::ObjectSequence seq =
      mc::small_object_sequence(f.ring, spec.target, spec.start, spec.steps);
  mc::MetricNF metric = spec.against.empty() ? mc::mk_constant(spec.target)
                                             : *f.metric(spec.against);
  if (horizon <= 0) horizon = seq.length();
  mc::CauchyOutcome outcome = mc::is_cauchy(seq, metric, horizon);

  json out = header("cauchy");
  out["mode"] = mode;
  out["target"] = spec.target.str();
  out["horizon"] = horizon;
  if (mode == "build") {
    json sj;
    sj["length"] = seq.length();
    sj["entries"] = json::array();
    for (const auto& e : seq.entries) sj["entries"].push_back(e.str());
    sj["maps"] = json::array();
    for (const auto& w : seq.maps) sj["maps"].push_back(w.str());
    sj["cones"] = json::array();
    for (long long n = 1; n <= seq.length(); ++n)
      sj["cones"].push_back(cone_display(mc::cone_at(seq, n)));
    out["sequence"] = std::move(sj);
  }
  out["cauchy"] = outcome.cauchy;
  if (outcome.cauchy) {
    out["certificate"] = certificate_json(outcome.certificate);
  } else {
    json cx;
    cx["index"] = outcome.counterexample;
    cx["ball"] = outcome.ball;
    cx["reason"] = outcome.reason;
    out["counterexample"] = std::move(cx);
  }
  if (mode == "build") {
    try {
      out["hocolim"] = mc::hocolim_model(seq).str();
    } catch (const mc::MathError& e) {
      out["hocolim"] = std::string("unavailable (") + mc::err_name(e.code()) + ")";
    }
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (mode == "build")
      std::cout << seq.str() << "\n";
    std::cout << (outcome.cauchy ? "cauchy up to horizon " + std::to_string(horizon)
                                 : "not cauchy: " + outcome.reason)
              << "\n";
    if (outcome.cauchy) std::cout << outcome.certificate.str() << "\n";
    if (mode == "build") std::cout << "hocolim: " << out["hocolim"].get<std::string>() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- hom, cone

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

mc::RingDescriptor inline_ring(const std::string& first_tok,
                               const std::string& field_opt) {
  if (!first_tok.empty() && first_tok[0] == 'Z')
    return mc::RingDescriptor::integers();
  mc::FieldDescriptor fd = mc::FieldDescriptor::rational();
  if (field_opt == "symbolic")
    fd = mc::FieldDescriptor::symbolic();
  else if (field_opt != "rational")
    fd = mc::FieldDescriptor::finite(std::stoll(field_opt));
  return mc::RingDescriptor::kronecker(fd);
}

bool looks_like_file(const std::string& arg) {
  if (arg.find(' ') != std::string::npos) return false;
  std::ifstream in(arg);
  return in.good();
}

int run_hom(const std::string& arg, bool as_json, const std::string& field_opt) {
  std::vector<std::tuple<mc::RingDescriptor, mc::Indecomposable, mc::Indecomposable>>
      tasks;
  if (looks_like_file(arg)) {
    mc::SpecFile f = mc::load_specfile(arg);
    for (const auto& q : f.queries)
      if (q.kind == mc::Query::Kind::Hom)
        tasks.emplace_back(f.ring, q.modules[0], q.modules[1]);
    mc::require(!tasks.empty(), mc::Err::InvalidDescriptor,
                arg + " has no hom query");
  } else {
    auto toks = split_ws(arg);
    mc::require(toks.size() == 2, mc::Err::ParseError,
                "inline hom needs exactly two module names, got '" + arg + "'");
    mc::RingDescriptor ring = inline_ring(toks[0], field_opt);
    tasks.emplace_back(ring, mc::parse_module_name(ring, toks[0]),
                       mc::parse_module_name(ring, toks[1]));
  }
  json out = header("hom");
  out["results"] = json::array();
  for (const auto& [ring, x, y] : tasks) {
    mc::HomExtRecord rec = mc::hom_invariants(ring, x, y);
    json r;
    r["ring"] = ring.str();
    r["source"] = x.str();
    r["target"] = y.str();
    r["hom"] = rec.hom_str();
    r["ext"] = rec.ext_str();
    out["results"].push_back(std::move(r));
    if (!as_json)
      std::cout << "Hom(" << x.str() << ", " << y.str() << ") = " << rec.hom_str()
                << ", Ext^1 = " << rec.ext_str() << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int run_cone(const std::string& arg, bool as_json) {
  std::vector<std::tuple<mc::RingDescriptor, mc::Indecomposable, long long,
                         mc::Indecomposable>>
      tasks;
  if (looks_like_file(arg)) {
    mc::SpecFile f = mc::load_specfile(arg);
    for (const auto& q : f.queries)
      if (q.kind == mc::Query::Kind::Cone)
        tasks.emplace_back(f.ring, q.modules[0], q.scalar, q.modules[1]);
    mc::require(!tasks.empty(), mc::Err::InvalidDescriptor,
                arg + " has no cone query");
  } else {
    // inline form: X --t--> Y
    auto p1 = arg.find("--");
    auto p2 = arg.find("-->", p1 == std::string::npos ? 0 : p1 + 2);
    mc::require(p1 != std::string::npos && p2 != std::string::npos && p2 > p1,
                mc::Err::ParseError,
                "inline cone needs the form 'X --t--> Y', got '" + arg + "'");
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(0, 1);
      while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
      return s;
    };
    std::string xs = trim(arg.substr(0, p1));
    std::string ts = trim(arg.substr(p1 + 2, p2 - p1 - 2));
    std::string ys = trim(arg.substr(p2 + 3));
    long long t = 0;
    try {
      size_t used = 0;
      t = std::stoll(ts, &used);
      mc::require(used == ts.size(), mc::Err::ParseError, "bad factor");
    } catch (const std::exception&) {
      mc::raise(mc::Err::ParseError,
                "inline cone factor '" + ts + "' is not an integer");
    }
    mc::RingDescriptor ring = mc::RingDescriptor::integers();
    tasks.emplace_back(ring, mc::parse_module_name(ring, xs), t,
                       mc::parse_module_name(ring, ys));
  }
  json out = header("cone");
  out["results"] = json::array();
  for (const auto& [ring, x, t, y] : tasks) {
    mc::IMat m(1, 1);
    m.at(0, 0) = t;
    mc::SplitObject cone =
        mc::cone_of_module_map(mc::ModuleMap::z_map(ring, {x}, {y}, m));
    std::string map_disp =
        x.str() + " --" + std::to_string(t) + "--> " + y.str();
    json r;
    r["map"] = map_disp;
    r["cone"] = cone_display(cone);
    r["summands"] = json::array();
    for (const auto& [d, mod] : cone.summands)
      r["summands"].push_back({{"degree", d}, {"module", mod.str()}});
    out["results"].push_back(std::move(r));
    if (!as_json)
      std::cout << "cone(" << map_disp << ") = " << cone_display(cone) << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- selftest

mc::OracleConfig parse_bounds(const std::string& bounds) {
  mc::OracleConfig cfg;
  if (bounds.empty()) return cfg;
  size_t i = 0;
  while (i <= bounds.size()) {
    auto comma = bounds.find(',', i);
    if (comma == std::string::npos) comma = bounds.size();
    std::string item = bounds.substr(i, comma - i);
    auto eq = item.find('=');
    mc::require(eq != std::string::npos, mc::Err::ParseError,
                "bounds are key=value pairs, got '" + item + "'");
    std::string key = item.substr(0, eq);
    long long val = 0;
    try {
      size_t used = 0;
      val = std::stoll(item.substr(eq + 1), &used);
      mc::require(used == item.size() - eq - 1, mc::Err::ParseError, "bad value");
    } catch (const std::exception&) {
      mc::raise(mc::Err::ParseError,
                "bound value in '" + item + "' is not an integer");
    }
    if (key == "dim")
      cfg.max_total_dimension = val;
    else if (key == "gens")
      cfg.max_generators_z = val;
    else if (key == "q")
      cfg.field_for_enumeration = mc::FieldDescriptor::finite(val);
    else
      mc::raise(mc::Err::ParseError, "unknown bound '" + key + "'");
    i = comma + 1;
  }
  return cfg;
}

int run_selftest(const std::string& bounds, bool as_json) {
  mc::OracleConfig cfg = parse_bounds(bounds);
  std::vector<mc::SelftestResult> suites = mc::oracle_selftest(cfg);
  bool all_ok = true;
  json out = header("selftest");
  out["bounds"] = {{"maxTotalDimension", cfg.max_total_dimension},
                   {"maxGeneratorsZ", cfg.max_generators_z},
                   {"enumerationField", cfg.field_for_enumeration.str()}};
  out["suites"] = json::array();
  for (const auto& s : suites) {
    all_ok = all_ok && s.ok();
    json r;
    r["suite"] = s.suite;
    r["cases"] = s.cases;
    r["failures"] = s.failures;
    r["notes"] = s.notes;
    out["suites"].push_back(std::move(r));
    if (!as_json) {
      std::cout << (s.ok() ? "[PASS] " : "[FAIL] ") << s.suite << " ("
                << s.cases << " cases";
      if (!s.ok()) std::cout << ", " << s.failures << " failures";
      std::cout << ")\n";
      for (const auto& n : s.notes) std::cout << "       " << n << "\n";
    }
  }
  out["allPassed"] = all_ok;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (all_ok ? "all suites passed" : "SELFTEST FAILURES") << "\n";
  return all_ok ? 0 : 1;
}

template <class Fn>
int guarded(const std::string& cmd, Fn fn) {
  try {
    return fn();
  } catch (const mc::MathError& e) {
    json j = header(cmd);
    j["error"] = {{"name", mc::err_name(e.code())}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return e.code() == mc::Err::ParseError ? 2 : 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"completions of bounded derived categories along good metrics"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json etc. appear after the subcommand name

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");
  std::string field_opt = "rational";
  app.add_option("--field", field_opt,
                 "field for inline Kronecker module names: rational | symbolic | <q>");
  long long horizon = 0;
  app.add_option("--horizon", horizon,
                 "certification horizon for cauchy (default: chain length)");

  std::string classify_file;
  auto* sc_classify =
      app.add_subcommand("classify", "decide the completion per classify query");
  sc_classify->add_option("file", classify_file, "spec file")->required();

  std::string lattice_op, lattice_file;
  auto* sc_lattice =
      app.add_subcommand("lattice", "meet / join / leq of named metrics");
  lattice_op.clear();
  sc_lattice->add_option("op", lattice_op, "meet | join | leq")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "leq"}));
  sc_lattice->add_option("file", lattice_file, "spec file")->required();

  std::string cauchy_mode, cauchy_file;
  auto* sc_cauchy = app.add_subcommand(
      "cauchy", "build the small-object chain and certify it");
  sc_cauchy->add_option("mode", cauchy_mode, "build | check")
      ->required()
      ->check(CLI::IsMember({"build", "check"}));
  sc_cauchy->add_option("file", cauchy_file, "spec file")->required();

  std::string hom_arg;
  auto* sc_hom =
      app.add_subcommand("hom", "Hom and Ext^1 (spec file or inline 'X Y')");
  sc_hom->add_option("file", hom_arg, "spec file or inline pair")->required();

  std::string cone_arg;
  auto* sc_cone = app.add_subcommand(
      "cone", "mapping cone (spec file or inline 'X --t--> Y')");
  sc_cone->add_option("file", cone_arg, "spec file or inline map")->required();

  std::string bounds;
  auto* sc_selftest = app.add_subcommand(
      "selftest", "replay the oracle equivalence suites");
  sc_selftest->add_option("--bounds", bounds, "dim=8,gens=3,q=5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*sc_classify)
    return guarded("classify", [&] { return run_classify(classify_file, as_json); });
  if (*sc_lattice)
    return guarded("lattice",
                   [&] { return run_lattice(lattice_op, lattice_file, as_json); });
  if (*sc_cauchy)
    return guarded("cauchy", [&] {
      return run_cauchy(cauchy_mode, cauchy_file, as_json, horizon);
    });
  if (*sc_hom)
    return guarded("hom", [&] { return run_hom(hom_arg, as_json, field_opt); });
  if (*sc_cone)
    return guarded("cone", [&] { return run_cone(cone_arg, as_json); });
  if (*sc_selftest)
    return guarded("selftest", [&] { return run_selftest(bounds, as_json); });
  return 0;
}
