#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cluster/errors.hpp"
#include "cluster/matchenum.hpp"
#include "cluster/mutation.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/tilegraphs.hpp"
#include "cluster/verify.hpp"
#include "serialize.hpp"

namespace cluster::cli {

namespace {

struct Config {
  std::string type;
  int rank = 0;
  std::string root;
  std::string format;
  std::string out;
  std::string dot_dir;
  std::string checks = "all";
  int jobs = 1;
  int rows = 0;
  int extra_rows = 0;
  bool timings = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DynkinType resolve_type(const Config& c) {
  if (c.type.empty()) throw UsageError("--type is required");
  int rank = c.rank;
  if (rank == 0 && (c.type == "G2" || c.type == "G" || c.type == "g2" || c.type == "g")) rank = 2;
  if (rank == 0) throw UsageError("--rank is required");
  try {
    return parse_type(c.type, rank);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "' for this command");
}

std::string dump(const io::ordered_json& j) { return j.dump(2) + "\n"; }

std::string root_text(const RootVector& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return "(" + s + ")";
}

std::string cmd_roots(const Config& c) {
  const DynkinType t = resolve_type(c);
  require_format(c.format, {"json", "text"});
  const auto roots = positive_roots(t);
  if (c.format == "json") return dump(io::roots_json(roots));
  std::string out;
  for (const auto& r : roots) out += root_text(r) + "\n";
  return out;
}

std::string cmd_belt(const Config& c) {
  const DynkinType t = resolve_type(c);
  require_format(c.format, {"json", "text"});
  if (c.rows < 0 || c.extra_rows < 0) throw UsageError("row counts must be nonnegative");
  const BeltLattice lat = belt(t, c.rows > 0 ? c.rows : default_belt_cap(t), c.extra_rows);
  if (c.format == "json") return dump(io::to_json(lat));
  const auto names = variable_names(t);
  const auto labels = slot_labels(t);
  std::string out;
  for (const auto& row : lat.rows) {
    for (const auto& e : row)
      out += "x" + labels[e.col] + "^(" + std::to_string(e.sup) + ") = " +
             to_fraction_string(e.value, names) + "\n";
    out += "\n";
  }
  return out;
}

std::string cmd_variables(const Config& c) {
  const DynkinType t = resolve_type(c);
  require_format(c.format, {"json", "text"});
  const auto vars = noninitial_variables(t);
  if (c.format == "json") return dump(io::variables_json(t, vars));
  const auto names = variable_names(t);
  std::string out;
  for (const auto& [root, v] : vars) out += root_text(root) + ": " + to_fraction_string(v, names) + "\n";
  return out;
}

std::string cmd_graphs(const Config& c) {
  const DynkinType t = resolve_type(c);
  require_format(c.format, {"json", "text", "dot"});
  const auto family = enumerate_family(t);
  if (!c.dot_dir.empty()) {
    std::filesystem::create_directories(c.dot_dir);
    for (const auto& g : family) {
      const std::string stem = io::graph_file_stem(t, g.mu);
      std::ofstream f(std::filesystem::path(c.dot_dir) / (stem + ".dot"));
      if (!f) throw Error("cannot write to " + c.dot_dir);
      f << to_dot(realize(g), "\"" + stem + "\"");
    }
  }
  if (c.format == "json") {
    io::ordered_json arr = io::ordered_json::array();
    for (const auto& g : family) arr.push_back(io::to_json(g));
    return dump(arr);
  }
  std::string out;
  for (const auto& g : family) {
    if (c.format == "dot") {
      out += to_dot(realize(g), "\"" + io::graph_file_stem(t, g.mu) + "\"");
    } else {
      out += root_text(g.mu) + " " + g.kind + ": " + g.tile_word() + "\n";
    }
  }
  return out;
}

std::string cmd_expand(const Config& c) {
  const DynkinType t = resolve_type(c);
  require_format(c.format, {"json", "text", "dot"});
  if (c.root.empty()) throw UsageError("--root is required");
  RootVector alpha;
  try {
    alpha = io::parse_root(c.root);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(alpha.size()) != t.rank)
    throw UsageError("--root needs " + std::to_string(t.rank) + " coordinates");
  if (!is_positive_root(t, alpha)) throw UsageError(root_text(alpha) + " is not a positive root");
  const TileGraph g = graph_for_root(t, alpha);
  const MatchingGraph m = realize(g);
  if (c.format == "dot") return to_dot(m, "\"" + io::graph_file_stem(t, alpha) + "\"");
  const Laurent p = matching_polynomial(m);
  const Laurent x = div_exact(p, Laurent::monomial(t.rank, Exponents(alpha.begin(), alpha.end())));
  const auto names = variable_names(t);
  if (c.format == "text") return to_fraction_string(x, names) + "\n";
  return dump({{"type", family_tag(t.family)},
               {"rank", t.rank},
               {"root", alpha},
               {"graph", io::to_json(g)},
               {"matching_polynomial", to_string(p, names)},
               {"expansion", to_string(x, names)},
               {"fraction", to_fraction_string(x, names)}});
}

std::string cmd_verify(const Config& c, int& status) {
  require_format(c.format, {"json", "text"});
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<DynkinType> types;
  if (c.type.empty()) {
    if (c.rank != 0) throw UsageError("--rank needs --type");
    types = desk_scale_types();
  } else {
    types = {resolve_type(c)};
  }
  std::vector<std::string> suites;
  if (c.checks == "all") {
    suites = suite_names();
  } else {
    std::stringstream ss(c.checks);
    std::string s;
    const auto known = suite_names();
    while (std::getline(ss, s, ',')) {
      if (std::find(known.begin(), known.end(), s) == known.end())
        throw UsageError("unknown check '" + s + "'");
      suites.push_back(s);
    }
    if (suites.empty()) throw UsageError("--checks is empty");
  }
  const VerificationReport report = run_suites(suites, types, c.jobs);
  status = report.pass() ? 0 : 1;
  if (c.format == "json") return dump(io::to_json(report, c.timings));
  std::string out;
  for (const auto& r : report.checks) {
    out += std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.summary + "\n";
    for (const auto& [k, v] : r.counterexample) out += "    " + k + ": " + v + "\n";
    for (const auto& [k, v] : r.notes) out += "    note " + k + ": " + v + "\n";
  }
  out += std::string(report.pass() ? "all " : "FAILED: ") + std::to_string(report.checks.size()) +
         " checks " + (report.pass() ? "passed" : "run") + "\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster variables by seed mutation and by perfect matchings of tile graphs",
               "clustergraph"};
  app.require_subcommand(1);
  Config c;

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* o1 = sub->add_option("--type", c.type, "A, B, C, D or G2");
    auto* o2 = sub->add_option("--rank", c.rank, "rank n");
    if (required) o1->required();
    (void)o2;
  };
  auto add_output = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", c.format, "json, text or dot")->default_str(default_format);
    sub->add_option("--out", c.out, "write output to this file instead of stdout");
  };

  auto* roots = app.add_subcommand("roots", "positive roots in simple-root coordinates");
  add_type(roots, true);
  add_output(roots, "json");
  auto* beltc = app.add_subcommand("belt", "rows of the bipartite belt");
  add_type(beltc, true);
  add_output(beltc, "json");
  beltc->add_option("--rows", c.rows, "cap on mutated half-rows (default 2(h+2))");
  beltc->add_option("--extra-rows", c.extra_rows, "half-rows to continue past full coverage");
  auto* vars = app.add_subcommand("variables", "all non-initial cluster variables keyed by root");
  add_type(vars, true);
  add_output(vars, "json");
  auto* graphs = app.add_subcommand("graphs", "the tile-graph family");
  add_type(graphs, true);
  add_output(graphs, "json");
  graphs->add_option("--dot-dir", c.dot_dir, "write one DOT file per graph into this directory");
  auto* expand = app.add_subcommand("expand", "expansion of one root via perfect matchings");
  add_type(expand, true);
  add_output(expand, "text");
  expand->add_option("--root", c.root, "comma-separated coordinates, e.g. 1,1,0")->required();
  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_type(verify, false);
  add_output(verify, "json");
  verify->add_option("--checks", c.checks, "all, or a comma list of " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  verify->add_option("--jobs", c.jobs, "worker threads");
  verify->add_flag("--timings", c.timings, "include per-check timings in JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (c.format.empty()) {
    auto* opt = sub->get_option("--format");
    c.format = opt->get_default_str();
  }

  int status = 0;
  std::string text;
  try {
    const std::string name = sub->get_name();
    if (name == "roots") text = cmd_roots(c);
    else if (name == "belt") text = cmd_belt(c);
    else if (name == "variables") text = cmd_variables(c);
    else if (name == "graphs") text = cmd_graphs(c);
    else if (name == "expand") text = cmd_expand(c);
    else text = cmd_verify(c, status);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "error: cannot write " << c.out << "\n";
      return 2;
    }
    f << text;
  }
  if (status != 0 && sub->get_name() == "verify" && c.format == "text") err << "verification failed\n";
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cluster::cli
