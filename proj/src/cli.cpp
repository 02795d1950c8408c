// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "polymat/cone.hpp"
#include "polymat/core.hpp"
#include "polymat/diagram.hpp"
#include "polymat/error.hpp"
#include "polymat/hilbert.hpp"
#include "polymat/intersect.hpp"
#include "polymat/json_io.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat::cli {
namespace {

constexpr int kDefaultEnumerationCap = 8;
constexpr int kDefaultRecognitionCap = 5;

struct RunConfig {
  std::string command;
  std::vector<std::string> families;  // "n,i,t"
  std::string pair;                   // "n,i1,i2,t2"
  std::string input;
  std::string output;
  int n = -1, i1 = -1, i2 = -1, t2 = -1, t1 = 0;
  int max_degree = -1;
  int normality_degree = kDefaultNormalityDegree;
  int shift_degree = kDefaultShiftDegree;
  std::string format = "json";
  std::string diagram_format = "ascii";
  int jobs = 1;
  bool check_exchange = false;
  bool verify = false;
  bool exhaustive = false;
};

// A report plus the exit status it implies.
struct Report {
  Report(Json b, int s = kSuccess, std::string t = {})
      : body(std::move(b)), status(s), text(std::move(t)) {}
  Json body;
  int status = kSuccess;
  std::string text;  // preformatted output that bypasses JSON/table rendering
};

std::optional<int> env_cap() {
  if (const char* raw = std::getenv("POLYMAT_MAX_N")) {
    try {
      return std::stoi(raw);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("POLYMAT_MAX_N is not an integer: ") + raw);
    }
  }
  return std::nullopt;
}

int enumeration_cap() { return env_cap().value_or(kDefaultEnumerationCap); }
int recognition_cap() { return env_cap().value_or(kDefaultRecognitionCap); }

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the limit " +
                        std::to_string(cap) + " (set POLYMAT_MAX_N to override)");
  }
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* flag) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParameter(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  if (out.size() != count) {
    throw InvalidParameter(std::string(flag) + " expects " + std::to_string(count) +
                           " comma-separated integers, got '" + text + "'");
  }
  return out;
}

FamilyParams parse_family(const std::string& text) {
  const auto v = parse_ints(text, 3, "--family");
  FamilyParams p{v[0], v[1], v[2]};
  p.validate();
  return p;
}

bool has_pair(const RunConfig& cfg) { return !cfg.pair.empty() || cfg.n >= 0; }

PairParams resolve_pair(const RunConfig& cfg) {
  if (!cfg.pair.empty()) {
    const auto v = parse_ints(cfg.pair, 4, "--pair");
    PairParams p{v[0], v[1], v[2], v[3]};
    p.validate();
    return p;
  }
  if (cfg.n < 0 || cfg.i1 < 0 || cfg.i2 < 0 || cfg.t2 < 0) {
    throw InvalidParameter("pair commands need --pair n,i1,i2,t2 or all of -n --i1 --i2 --t2");
  }
  return normalize_pair(FamilyParams{cfg.n, cfg.i1, cfg.t1}, FamilyParams{cfg.n, cfg.i2, cfg.t2});
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

std::vector<FamilyParams> resolve_families(const RunConfig& cfg) {
  std::vector<FamilyParams> out;
  for (const auto& f : cfg.families) out.push_back(parse_family(f));
  if (out.empty() && has_pair(cfg)) {
    const PairParams p = resolve_pair(cfg);
    out = {p.first(), p.second()};
  }
  if (out.empty()) throw InvalidParameter("give at least one --family n,i,t or a pair");
  for (const auto& f : out) {
    if (f.n != out.front().n) throw InvalidParameter("all families must share n");
    if (f.n < 3) throw InvalidParameter("families need n >= 3");
  }
  check_cap(out.front().n, enumeration_cap(), "enumeration");
  return out;
}

// The presentation named by --input, a single --family, or a pair witness.
// Files override inline parameters.
Presentation resolve_presentation(const RunConfig& cfg) {
  if (!cfg.input.empty()) return presentation_from_json(read_json_file(cfg.input));
  if (cfg.families.size() == 1) return family_presentation(parse_family(cfg.families.front()));
  if (has_pair(cfg)) return witness(resolve_pair(cfg));
  throw InvalidParameter("give --input, a single --family, or a pair");
}

// Generator set: a base-set or presentation file, the intersection of the
// given families, or the intersection set of a pair.
BaseSet resolve_generators(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    const Json doc = read_json_file(cfg.input);
    if (doc.is_object() && doc.contains("points")) return base_set_from_json(doc);
    const Presentation p = presentation_from_json(doc);
    check_cap(p.n(), enumeration_cap(), "enumeration");
    return enumerate_bases(p);
  }
  const auto families = resolve_families(cfg);
  BaseSet acc = enumerate_bases(family_presentation(families.front()));
  for (std::size_t k = 1; k < families.size(); ++k) {
    acc = acc.intersect(enumerate_bases(family_presentation(families[k])));
  }
  return acc;
}

Report cmd_bases(const RunConfig& cfg) {
  BaseSet b;
  if (cfg.input.empty() && cfg.families.empty() && has_pair(cfg)) {
    const PairParams p = resolve_pair(cfg);
    check_cap(p.n, enumeration_cap(), "enumeration");
    b = intersection_base_set(p);
  } else if (!cfg.input.empty()) {
    b = resolve_generators(cfg);
  } else {
    const Presentation p = resolve_presentation(cfg);
    check_cap(p.n(), enumeration_cap(), "enumeration");
    b = enumerate_bases(p);
  }
  Report r{to_json(b)};
  if (cfg.check_exchange) {
    const ExchangeResult ex = check_base_exchange(b);
    r.body["exchange"] = ex.pass ? "pass" : "fail";
    if (!ex.pass) {
      const auto& v = *ex.violation;
      r.body["exchange_violation"] = {{"u", std::vector<int>(v.u.coords().begin(), v.u.coords().end())},
                                      {"v", std::vector<int>(v.v.coords().begin(), v.v.coords().end())},
                                      {"index", v.index}};
      r.status = kCheckFailed;
    }
  }
  return r;
}

Report cmd_cone(const RunConfig& cfg) {
  const auto families = resolve_families(cfg);
  const int n = families.front().n;
  const ConeDescription cone = build_cone(families, n);
  Report r{to_json(cone)};
  if (cfg.verify) {
    const FacetReport facets = verify_facets(cone, cone_section(cone, 1));
    Json rows = Json::array();
    for (const auto& c : facets.normals) {
      Json row{{"normal", c.normal.primitive},
               {"nonnegative", c.nonnegative},
               {"hyperplane_rank", c.hyperplane_rank},
               {"pass", c.pass()}};
      row["witness_degree"] = c.witness_degree ? Json(*c.witness_degree) : Json(nullptr);
      rows.push_back(row);
    }
    r.body["facets"] = rows;
    r.body["irreducible"] = facets.pass();
    if (!facets.pass()) r.status = kCheckFailed;
  }
  return r;
}

Report cmd_hilbert(const RunConfig& cfg) {
  const BaseSet gens = resolve_generators(cfg);
  check_cap(gens.n(), enumeration_cap(), "enumeration");
  const int degree = cfg.max_degree >= 0 ? cfg.max_degree : gens.n();
  const HilbertData data = compute_hilbert(gens, degree);
  Report r{to_json(data)};
  if (!data.h.consistent()) r.status = kCheckFailed;
  return r;
}

Report cmd_gorenstein(const RunConfig& cfg) {
  if (cfg.normality_degree < 1 || cfg.shift_degree < 1) {
    throw InvalidParameter("degree bounds must be >= 1");
  }
  const auto families = resolve_families(cfg);
  const int n = families.front().n;
  const ConeDescription cone = build_cone(families, n);
  BaseSet gens = enumerate_bases(family_presentation(families.front()));
  for (std::size_t k = 1; k < families.size(); ++k) {
    gens = gens.intersect(enumerate_bases(family_presentation(families[k])));
  }
  const HilbertData data = compute_hilbert(gens, n);
  const DegreeCheck normal = check_normality(gens, cone, cfg.normality_degree);
  const DegreeCheck shift = check_canonical_shift(cone, cfg.shift_degree);

  auto check_row = [](const std::string& name, bool pass, const Json& detail) {
    return Json{{"check", name}, {"pass", pass}, {"detail", detail}};
  };
  Json checks = Json::array();
  checks.push_back(check_row("normality: generator sums fill the cone section",
                             normal.pass,
                             Json{{"max_degree", cfg.normality_degree},
                                  {"failing_degree", normal.failing_degree ? Json(*normal.failing_degree) : Json(nullptr)}}));
  checks.push_back(check_row("canonical module: interior = (1,...,1) + cone",
                             shift.pass,
                             Json{{"max_degree", cfg.shift_degree},
                                  {"failing_degree", shift.failing_degree ? Json(*shift.failing_degree) : Json(nullptr)}}));
  checks.push_back(check_row("h-vector is palindromic", data.gorenstein_symmetric, Json(data.h.h)));
  const bool a_ok = data.a_invariant && *data.a_invariant == -1;
  checks.push_back(check_row("a-invariant = -1", a_ok,
                             data.a_invariant ? Json(*data.a_invariant) : Json(nullptr)));

  const bool pass = normal.pass && shift.pass && data.gorenstein_symmetric && a_ok;
  Json body = to_json(data);
  body["checks"] = checks;
  body["gorenstein"] = pass;
  return Report{body, pass ? kSuccess : kCheckFailed};
}

Report cmd_decide(const RunConfig& cfg) {
  const PairParams p = resolve_pair(cfg);
  return Report{to_json(p, decide(p))};
}

Report cmd_witness(const RunConfig& cfg) {
  const PairParams p = resolve_pair(cfg);
  Json body = to_json(witness(p));
  return Report{body};
}

Report cmd_sweep(const RunConfig& cfg) {
  if (cfg.n < 0) throw InvalidParameter("sweep needs -n");
  check_cap(cfg.n, recognition_cap(), "sweep");
  const SweepReport report = sweep_theorem(cfg.n, cfg.jobs, recognition_cap());
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row{{"i1", e.params.i1},
             {"i2", e.params.i2},
             {"t2", e.params.t2},
             {"decided", e.decided},
             {"recognized", e.recognized},
             {"condition", e.condition},
             {"agrees", e.agrees()}};
    if (e.decided) {
      row["lemma_case"] = e.lemma_case;
      row["witness_ok"] = e.witness_ok;
    }
    entries.push_back(row);
  }
  Json body{{"n", report.n},
            {"triples", report.entries.size()},
            {"yes_instances", report.yes_instances()},
            {"disagreements", report.disagreements()},
            {"witness_failures", report.witness_failures()},
            {"entries", entries}};
  body["summary"] = std::to_string(report.entries.size()) + " triples, " +
                    std::to_string(report.disagreements()) + " disagreements";
  Report r{body, report.disagreements() == 0 ? kSuccess : kCheckFailed};
  if (cfg.format == "table") {
    std::ostringstream t;
    t << std::left << std::setw(4) << "i1" << std::setw(4) << "i2" << std::setw(4) << "t2"
      << std::setw(10) << "decided" << std::setw(12) << "recognized" << std::setw(11)
      << "condition" << std::setw(12) << "case" << "witness\n";
    for (const auto& e : report.entries) {
      t << std::left << std::setw(4) << e.params.i1 << std::setw(4) << e.params.i2 << std::setw(4)
        << e.params.t2 << std::setw(10) << (e.decided ? "yes" : "no") << std::setw(12)
        << (e.recognized ? "yes" : "no") << std::setw(11) << e.condition << std::setw(12)
        << (e.decided ? e.lemma_case : "-") << (e.decided ? (e.witness_ok ? "ok" : "FAIL") : "-")
        << '\n';
    }
    t << body["summary"].get<std::string>() << '\n';
    r.text = t.str();
  }
  return r;
}

Report cmd_diagram(const RunConfig& cfg) {
  const Presentation p = resolve_presentation(cfg);
  return Report{Json(), kSuccess, render(p, parse_diagram_format(cfg.diagram_format))};
}

Report cmd_recognize(const RunConfig& cfg) {
  BaseSet b;
  if (cfg.input.empty() && cfg.families.empty() && has_pair(cfg)) {
    b = intersection_base_set(resolve_pair(cfg));
  } else {
    b = resolve_generators(cfg);
  }
  check_cap(b.n(), recognition_cap(), "recognition");
  const RecognitionResult r = cfg.exhaustive ? exhaustive_recognize(b) : recognize_transversal(b);
  return Report{to_json(r)};
}

std::string render_table(const Json& body) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& [key, value] : body.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : body.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key;
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  return out.str();
}

void emit(const RunConfig& cfg, const Report& report, std::ostream& out) {
  std::string payload;
  if (!report.text.empty()) {
    payload = report.text;
  } else if (cfg.format == "table") {
    payload = render_table(report.body);
  } else {
    payload = report.body.dump() + "\n";
  }
  if (cfg.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw InvalidInput("cannot open output file '" + cfg.output + "'");
  file << payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Transversal polymatroid base rings: enumeration, cones, Hilbert data and "
               "intersection decisions"};
  app.name("polymat");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "write the report to this file");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | table")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.families, "family n,i,t (repeat to intersect)");
    sub->add_option("--input", cfg.input, "JSON presentation or base set file");
  };
  auto add_pair_flags = [&](CLI::App* sub) {
    sub->add_option("--pair", cfg.pair, "pair n,i1,i2,t2");
    sub->add_option("-n", cfg.n, "ground set size");
    sub->add_option("--i1", cfg.i1, "first window length");
    sub->add_option("--i2", cfg.i2, "second window length");
    sub->add_option("--t2", cfg.t2, "second window offset");
    sub->add_option("--t1", cfg.t1, "first window offset (normalized away)");
  };

  auto* bases = app.add_subcommand("bases", "enumerate the base set of a presentation");
  add_sources(bases);
  add_pair_flags(bases);
  add_common(bases);
  add_format(bases);
  bases->add_flag("--check-exchange", cfg.check_exchange, "verify the base exchange axiom");

  auto* cone = app.add_subcommand("cone", "facet normals of an intersection cone");
  cone->add_option("--family", cfg.families, "family n,i,t (repeat to intersect)");
  add_pair_flags(cone);
  add_common(cone);
  add_format(cone);
  cone->add_flag("--verify", cfg.verify, "verify that the normals are an irredundant facet set");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, h-vector, a-invariant");
  add_sources(hilbert);
  hilbert->add_option("--pair", cfg.pair, "pair n,i1,i2,t2");
  add_common(hilbert);
  add_format(hilbert);
  hilbert->add_option("--max-degree", cfg.max_degree, "largest degree (at least n is computed)")
      ->check(CLI::NonNegativeNumber);

  auto* gorenstein = app.add_subcommand("gorenstein", "normality, canonical shift, symmetry");
  gorenstein->add_option("--family", cfg.families, "family n,i,t (repeat to intersect)");
  add_pair_flags(gorenstein);
  add_common(gorenstein);
  add_format(gorenstein);
  gorenstein->add_option("--normality-degree", cfg.normality_degree, "normality degree bound");
  gorenstein->add_option("--shift-degree", cfg.shift_degree, "canonical shift degree bound");

  auto* decide_cmd = app.add_subcommand("decide", "is A n B a transversal base set?");
  add_pair_flags(decide_cmd);
  add_common(decide_cmd);
  add_format(decide_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "presentation of A n B for a yes-instance");
  add_pair_flags(witness_cmd);
  add_common(witness_cmd);
  add_format(witness_cmd);

  auto* sweep = app.add_subcommand("sweep", "cross-check decide against recognition for all triples");
  sweep->add_option("-n", cfg.n, "ground set size")->required();
  add_common(sweep);
  add_format(sweep);

  auto* diagram = app.add_subcommand("diagram", "render the polymatroidal diagram");
  diagram->add_option("--family", cfg.families, "family n,i,t");
  diagram->add_option("--input", cfg.input, "JSON presentation file");
  add_pair_flags(diagram);
  diagram->add_option("--output", cfg.output, "write the diagram to this file");
  diagram->add_option("--format", cfg.diagram_format, "ascii | svg");

  auto* recognize = app.add_subcommand("recognize", "decide whether a base set is transversal");
  add_sources(recognize);
  add_pair_flags(recognize);
  add_common(recognize);
  add_format(recognize);
  recognize->add_flag("--exhaustive", cfg.exhaustive, "use the exhaustive search oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const std::vector<std::pair<CLI::App*, Report (*)(const RunConfig&)>> dispatch{
      {bases, cmd_bases},         {cone, cmd_cone},           {hilbert, cmd_hilbert},
      {gorenstein, cmd_gorenstein}, {decide_cmd, cmd_decide}, {witness_cmd, cmd_witness},
      {sweep, cmd_sweep},         {diagram, cmd_diagram},     {recognize, cmd_recognize}};

  try {
    for (const auto& [sub, handler] : dispatch) {
      if (!sub->parsed()) continue;
      cfg.command = sub->get_name();
      const Report report = handler(cfg);
      emit(cfg, report, out);
      return report.status;
    }
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInvalidInput;
}

}  // namespace polymat::cli
