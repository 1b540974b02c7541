#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "steiner/configurations.hpp"
#include "steiner/constructions.hpp"
#include "steiner/explorer.hpp"
#include "steiner/moufang.hpp"
#include "steiner/term.hpp"
#include "steiner/text_io.hpp"

namespace steiner::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  bool json = false;
  bool quiet = false;
  bool no_timing = false;
  std::string kind;
};

/// What a command produced; rendered as text or as one JSON object.
struct Result {
  std::string command;
  std::string verdict;
  json counterexample = nullptr;
  json count = nullptr;
  json items = json::array();
  std::string text;
  int exit = ok;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

json assignment_json(const Assignment& a) {
  json obj = json::object();
  for (auto [name, value] : a) obj[std::string(1, name)] = value;
  return obj;
}

std::string assignment_text(const Assignment& a) {
  std::string s;
  for (auto [name, value] : a) s += (s.empty() ? "" : " ") + std::string(1, name) + "=" + std::to_string(value);
  return s;
}

std::string triple_text(const std::array<Element, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

AnyStructure load(const std::string& path, const Settings& settings) {
  if (settings.kind.empty()) return load_structure(path);
  if (settings.kind == "sts") return load_structure(path, FileKind::sts);
  if (settings.kind == "loop") return load_structure(path, FileKind::loop);
  if (settings.kind == "quasigroup") return load_structure(path, FileKind::quasigroup);
  throw UsageError("unknown --kind " + settings.kind);
}

LoopTable load_loop(const std::string& path, const Settings& settings) {
  AnyStructure s = load(path, settings);
  if (auto* loop = std::get_if<LoopTable>(&s)) return *loop;
  throw UsageError(path + " is not a loop table");
}

TripleSystem load_sts_like(const std::string& path, const Settings& settings) {
  AnyStructure s = load(path, settings);
  if (auto* sts = std::get_if<TripleSystem>(&s)) return *sts;
  if (auto* loop = std::get_if<LoopTable>(&s)) return loop_to_sts(*loop);
  return quasigroup_to_sts(std::get<QuasigroupTable>(s));
}

int param(const std::vector<int>& params, const std::string& name) {
  if (params.size() != 1) throw UsageError("construct " + name + " takes exactly one integer parameter");
  return params[0];
}

// ---- construct ----

struct ConstructArgs {
  std::string name;
  std::vector<int> params;
  std::string output;
  bool as_loop = false;
};

Result do_construct(const ConstructArgs& a) {
  Result r{"construct", "OK"};
  auto no_params = [&] {
    if (!a.params.empty()) throw UsageError("construct " + a.name + " takes no parameters");
  };
  std::string text;
  std::optional<TripleSystem> sts;
  if (a.name == "fano") {
    no_params();
    sts = fano();
  } else if (a.name == "ag9") {
    no_params();
    sts = affine_ag23();
  } else if (a.name == "pg") {
    sts = projective(param(a.params, a.name));
  } else if (a.name == "bose") {
    sts = bose(param(a.params, a.name));
  } else if (a.name == "sts13") {
    int i = param(a.params, a.name);
    if (i != 1 && i != 2) throw UsageError("construct sts13 takes 1 or 2");
    sts = sts13_classes()[static_cast<std::size_t>(i - 1)];
  } else if (a.name == "loop10") {
    no_params();
    text = format_table(steiner_loop_10().table());
  } else if (a.name == "ea") {
    text = format_table(elementary_abelian_loop(param(a.params, a.name)).table());
  } else if (a.name == "m12") {
    no_params();
    text = format_table(moufang_loop_12().table());
  } else {
    throw UsageError("unknown construction '" + a.name + "' (fano, ag9, loop10, pg, bose, ea, sts13, m12)");
  }
  if (sts) text = a.as_loop ? format_table(sts_to_loop(*sts).table()) : format_sts(*sts);
  else if (a.as_loop) throw UsageError("--loop applies to triple systems only");

  r.count = 1;
  if (a.output.empty()) {
    r.text = text;
    r.items.push_back(text);
  } else {
    write_file(a.output, text);
    r.text = "wrote " + a.output + "\n";
    r.items.push_back(a.output);
  }
  return r;
}

// ---- check ----

Result do_check(const std::string& file, const std::string& identity_text, const std::string& builtin,
                const Settings& settings) {
  if (identity_text.empty() == builtin.empty()) throw UsageError("give exactly one of --identity or --builtin");
  std::optional<Identity> identity;
  if (!builtin.empty()) {
    identity = builtin_identity(builtin);
    if (!identity) throw UsageError("unknown builtin '" + builtin + "'");
  } else {
    identity = parse_identity(identity_text);
  }
  AnyStructure s = load(file, settings);
  CheckReport report;
  if (auto* loop = std::get_if<LoopTable>(&s))
    report = check_identity(*identity, *loop);
  else if (auto* q = std::get_if<QuasigroupTable>(&s))
    report = check_identity(*identity, *q);
  else
    throw UsageError(file + " is a triple system; check needs a loop or quasigroup table");

  Result r{"check", report.holds ? "HOLDS" : "FAILS"};
  r.count = report.assignments_checked;
  r.items.push_back(print_identity(*identity));
  if (report.holds) {
    r.text = "HOLDS (" + std::to_string(report.assignments_checked) + " assignments)\n";
  } else {
    r.counterexample = assignment_json(*report.counterexample);
    r.text = "FAILS at " + assignment_text(*report.counterexample) + " (" +
             std::to_string(report.assignments_checked) + " assignments)\n";
    r.exit = failed;
  }
  return r;
}

// ---- mt ----

Result do_mt(const std::string& file, const std::string& method, const Settings& settings) {
  LoopTable loop = load_loop(file, settings);
  std::vector<MTReport> reports;
  if (method == "def" || method == "all") reports.push_back(satisfies_mt_definition(loop));
  if (method == "prop1" || method == "all") reports.push_back(satisfies_mt_prop1(loop));
  if (method == "fano" || method == "all") reports.push_back(satisfies_mt_fano(loop));
  if (reports.empty()) throw UsageError("unknown --method " + method + " (def, prop1, fano, all)");

  Result r{"mt"};
  bool all_satisfy = true, any_satisfy = false;
  for (const MTReport& m : reports) {
    all_satisfy = all_satisfy && m.satisfies;
    any_satisfy = any_satisfy || m.satisfies;
    json item = {{"method", to_string(m.method)},
                 {"verdict", m.satisfies ? "SATISFIES" : "FAILS"},
                 {"counterexample", m.counterexample ? json(*m.counterexample) : json(nullptr)},
                 {"triples_examined", m.triples_examined}};
    r.items.push_back(item);
    r.text += to_string(m.method) + ": ";
    r.text += m.satisfies ? "SATISFIES" : "FAILS at " + triple_text(*m.counterexample);
    r.text += " (" + std::to_string(m.triples_examined) + " triples)\n";
  }
  r.count = reports.size();
  if (all_satisfy) {
    r.verdict = "SATISFIES";
  } else if (!any_satisfy) {
    r.verdict = "FAILS";
    r.counterexample = *reports.front().counterexample;
    r.exit = failed;
  } else {
    r.verdict = "INCONSISTENT";
    r.exit = inconsistent;
  }
  if (reports.size() > 1) r.text += std::string("agreement: ") + (r.exit == inconsistent ? "NO" : "yes") + "\n";
  return r;
}

// ---- pasch ----

Result do_pasch(const std::string& file, bool list, const Settings& settings) {
  TripleSystem s = load_sts_like(file, settings);
  auto configs = find_pasch_configs(s);
  Result r{"pasch", "OK"};
  r.count = configs.size();
  r.text = "pasch configurations: " + std::to_string(configs.size()) + "\n";
  for (const PaschConfig& p : configs) {
    std::string line;
    json blocks = json::array();
    for (const Block& b : p.blocks()) {
      line += (line.empty() ? "" : "; ") + std::to_string(b[0]) + " " + std::to_string(b[1]) + " " +
              std::to_string(b[2]);
      blocks.push_back(b);
    }
    if (list) {
      r.text += line + "\n";
      r.items.push_back(blocks);
    }
  }
  return r;
}

// ---- enumerate ----

Result do_enumerate(int order, bool allow_slow, const std::string& out_dir, const Settings& settings,
                    std::ostream& err) {
  if (order < 1 || (order % 6 != 1 && order % 6 != 3))
    throw UsageError("inadmissible order " + std::to_string(order) + " (need v = 1 or 3 mod 6)");
  if (order == 13 && !allow_slow) throw UsageError("order 13 takes a while; pass --allow-slow");
  EnumerateOptions options;
  options.allow_slow = allow_slow;
  if (!settings.quiet)
    options.progress = [&err](std::uint64_t visited, std::size_t classes) {
      err << "enumerate: " << visited << " completions, " << classes << " classes\n";
    };
  auto systems = enumerate_sts(order, options);
  Result r{"enumerate", "OK"};
  r.count = systems.size();
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    auto path = (std::filesystem::path(out_dir) / ("sts" + std::to_string(order) + "-" + std::to_string(i + 1) + ".sts"))
                    .string();
    write_file(path, format_sts(systems[i]));
    r.items.push_back(path);
    r.text += path + "\n";
  }
  r.text += "classes: " + std::to_string(systems.size()) + "\n";
  return r;
}

// ---- explore ----

Result do_explore(const std::string& target_file, const std::vector<std::string>& witness_files,
                  std::size_t max_leaves, const std::string& vars, const Settings& settings, std::ostream& err) {
  LoopTable target = load_loop(target_file, settings);
  std::vector<NamedLoop> witnesses;
  for (const auto& w : witness_files) witnesses.push_back({w, load_loop(w, settings)});
  if (witnesses.empty()) witnesses = default_witnesses();
  ExploreOptions options;
  options.max_leaves = max_leaves;
  options.variables.assign(vars.begin(), vars.end());
  if (max_leaves > 6 && !settings.quiet)
    err << "explore: --max-leaves " << max_leaves << " above the default 6 may take a long time\n";
  auto found = find_identities(target, witnesses, options);
  Result r{"explore", "OK"};
  r.count = found.size();
  for (const FoundIdentity& f : found) {
    std::string id = print_identity(f.identity);
    r.text += id + "\t" + f.witness + "\n";
    r.items.push_back({{"identity", id}, {"witness", f.witness}});
  }
  return r;
}

void emit(const Result& r, const Settings& settings, double elapsed_ms, std::ostream& out) {
  if (!settings.json) {
    out << r.text;
    return;
  }
  json j = {{"schema", 1},
            {"command", r.command},
            {"verdict", r.verdict},
            {"counterexample", r.counterexample},
            {"count", r.count},
            {"items", r.items},
            {"elapsed_ms", settings.no_timing ? json(nullptr) : json(elapsed_ms)}};
  out << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner triple systems, Steiner loops, and Moufang's theorem", "steinerloop"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--json", settings.json, "Print one JSON object instead of text");
  app.add_flag("--quiet", settings.quiet, "No progress messages on stderr");
  app.add_flag("--no-timing", settings.no_timing, "Set elapsed_ms to null in JSON output");
  app.add_option("--kind", settings.kind, "Input file kind: sts, loop, quasigroup (default: inferred)");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Write a named system or table");
  construct_cmd->add_option("name", construct.name, "fano, ag9, loop10, pg N, bose K, ea N, sts13 I, m12")->required();
  construct_cmd->add_option("params", construct.params, "Integer parameters");
  construct_cmd->add_option("-o,--output", construct.output, "Output file (default: stdout)");
  construct_cmd->add_flag("--loop", construct.as_loop, "Emit the Steiner loop table of a triple system");

  std::string check_file, identity_text, builtin;
  auto* check_cmd = app.add_subcommand("check", "Check an identity on a loop or quasigroup table");
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_option("--identity", identity_text, "Identity such as \"x(xy)=y\"");
  check_cmd->add_option("--builtin", builtin, "STEINER_COMM, STEINER_KEY, IDEMPOTENT, MOUFANG, ID4, EXTRA10, ASSOC");

  std::string mt_file, method = "def";
  auto* mt_cmd = app.add_subcommand("mt", "Decide whether a loop satisfies Moufang's theorem");
  mt_cmd->add_option("file", mt_file)->required();
  mt_cmd->add_option("--method", method, "def, prop1, fano, or all");

  std::string pasch_file;
  bool pasch_list = false;
  auto* pasch_cmd = app.add_subcommand("pasch", "Count Pasch configurations");
  pasch_cmd->add_option("file", pasch_file)->required();
  pasch_cmd->add_flag("--list", pasch_list, "List configurations");

  int order = 0;
  bool allow_slow = false;
  std::string out_dir = ".";
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate STS(v) up to isomorphism");
  enum_cmd->add_option("--order", order)->required();
  enum_cmd->add_flag("--allow-slow", allow_slow, "Permit order 13");
  enum_cmd->add_option("--out-dir", out_dir, "Directory for the class files (default: .)");

  std::string target;
  std::vector<std::string> witness_files;
  std::size_t max_leaves = 6;
  std::string vars = "xyz";
  auto* explore_cmd = app.add_subcommand("explore", "Search for separating identities");
  explore_cmd->add_option("--target", target)->required();
  explore_cmd->add_option("--witness", witness_files, "Witness loop tables (default: built-in corpus)");
  explore_cmd->add_option("--max-leaves", max_leaves, "Leaf budget per side (default 6, at most 8)");
  explore_cmd->add_option("--vars", vars, "Variable letters (default xyz)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    if (*construct_cmd)
      result = do_construct(construct);
    else if (*check_cmd)
      result = do_check(check_file, identity_text, builtin, settings);
    else if (*mt_cmd)
      result = do_mt(mt_file, method, settings);
    else if (*pasch_cmd)
      result = do_pasch(pasch_file, pasch_list, settings);
    else if (*enum_cmd)
      result = do_enumerate(order, allow_slow, out_dir, settings, err);
    else if (*explore_cmd)
      result = do_explore(target, witness_files, max_leaves, vars, settings, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (settings.json) {
      json j = {{"schema", 1}, {"command", app.get_subcommands().front()->get_name()}, {"verdict", "ERROR"},
                {"error", e.what()}};
      out << j.dump() << "\n";
    }
    return usage_error;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(result, settings, elapsed, out);
  return result.exit;
}

}  // namespace steiner::cli
