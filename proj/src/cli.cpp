#include "loopkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopkit/conditions.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/extension_io.hpp"
#include "loopkit/extensions.hpp"
#include "loopkit/mapping_groups.hpp"
#include "loopkit/smooth/catalog.hpp"
#include "loopkit/smooth/numeric_conditions.hpp"
#include "loopkit/table_io.hpp"

namespace loopkit::cli {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  // splitmix64 step over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (std::uint64_t(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct Options {
  std::string table;
  std::string kernel = "z3^1";
  std::string cocycle;
  std::string phi;
  std::string property;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 500;
  double tol = 1e-8;
  std::size_t limit = 1;
  std::size_t order = 0;
  bool porcelain = false;
  std::string name;
};

FiniteLoop load_loop(const std::string &path) {
  if (path.empty())
    throw StructuralError("a table file is required (--table)");
  return FiniteLoop(read_table_file(path));
}

PropertyKind require_property(const std::string &name) {
  auto p = parse_property(name);
  if (!p) {
    std::string known;
    for (auto q : kAllProperties)
      known += (known.empty() ? "" : ", ") + std::string(property_name(q));
    throw StructuralError("unknown property '" + name + "' (known: " + known + ")");
  }
  return *p;
}

std::string join(const std::vector<std::size_t> &v) {
  std::string s;
  for (auto x : v)
    s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// --- commands -----------------------------------------------------------

int cmd_verify(const Options &o, std::ostream &out) {
  const auto table = read_table_file(o.table);
  const auto q = validate_quasigroup(table);
  if (!q.valid) {
    out << "not a quasigroup of order " << table.order();
    if (!q.bad_rows.empty())
      out << "; rows not permutations: " << join(q.bad_rows);
    if (!q.bad_columns.empty())
      out << "; columns not permutations: " << join(q.bad_columns);
    out << '\n';
    return kVerifiedFalse;
  }
  const auto l = validate_loop(table);
  if (!l.valid) {
    out << "quasigroup of order " << table.order() << ", not a loop with identity 0";
    if (auto e = find_identity(table))
      out << " (identity is element " << *e << ")";
    out << '\n';
    for (const auto &p : l.problems)
      out << "  " << p << '\n';
    return kVerifiedFalse;
  }
  out << "loop of order " << table.order() << '\n';
  return kOk;
}

int cmd_props(const Options &o, std::ostream &out) {
  const auto loop = load_loop(o.table);
  for (auto p : kAllProperties) {
    const auto r = has_property(loop, p);
    if (o.porcelain) {
      out << "property=" << property_name(p) << " holds=" << (r.holds ? "true" : "false");
      if (!r.holds)
        out << " witness=" << format_tuple(r.witness);
      out << '\n';
      continue;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-18s %s", std::string(property_name(p)).c_str(),
                  r.holds ? "holds" : "fails");
    out << buf;
    if (!r.holds)
      out << "  witness " << format_tuple(r.witness) << ": " << r.detail;
    out << '\n';
  }
  return kOk;
}

int cmd_inn(const Options &o, std::ostream &out) {
  const auto loop = load_loop(o.table);
  const auto mlt = multiplication_group(loop);
  const auto inn = stabilizer(mlt, 0);
  out << "order " << loop.order() << '\n';
  out << "Mlt order " << mlt.size() << '\n';
  out << "Inn order " << inn.size() << '\n';
  out << "Inn generators " << inn.generators().size() << '\n';
  for (const auto &g : inn.generators())
    out << "  " << g.label << ": " << g.perm.to_string() << '\n';
  return kOk;
}

Cocycle obtain_cocycle(const Options &o, const FiniteLoop &loop, std::ostream &out,
                       bool announce_seed) {
  if (!o.cocycle.empty())
    return read_cocycle_file(o.cocycle, loop);
  const auto kernel = AbGroup::parse(o.kernel);
  if (announce_seed)
    out << "# random cocycle over " << kernel.to_string() << " seed=" << o.seed << '\n';
  return random_cocycle(loop, kernel, o.seed);
}

int cmd_extend(const Options &o, std::ostream &out) {
  const auto loop = load_loop(o.table);
  const auto c = obtain_cocycle(o, loop, out, true);
  write_table(out, build_extension(c).table());
  return kOk;
}

int report_condition(const std::string &label, const ConditionResult &r, bool porcelain,
                     std::ostream &out) {
  if (porcelain) {
    out << label << " verdict=" << verdict_name(r.verdict);
    if (!r.holds())
      out << " witness=" << format_tuple(r.witness);
    out << '\n';
  } else {
    out << label << ": " << verdict_name(r.verdict);
    if (!r.holds())
      out << " at " << format_tuple(r.witness) << " (" << r.detail << ")";
    out << '\n';
  }
  return r.holds() ? kOk : kVerifiedFalse;
}

int cmd_check(const Options &o, std::ostream &out) {
  const auto p = require_property(o.property);
  const auto loop = load_loop(o.table);
  if (o.cocycle.empty())
    throw StructuralError("check needs a cocycle file (--cocycle)");
  const auto c = read_cocycle_file(o.cocycle, loop);
  const auto report = validate_cocycle(c);
  if (!report.valid)
    throw StructuralError("invalid cocycle: " + report.problems.front());
  const std::string label = o.porcelain ? "condition=" + std::string(1, condition_letter(p)) +
                                              " property=" + std::string(property_name(p))
                                        : "condition (" + std::string(1, condition_letter(p)) +
                                              ") for " + std::string(property_name(p));
  return report_condition(label, check_cocycle_condition(c, p), o.porcelain, out);
}

int cmd_tangentlike(const Options &o, std::ostream &out) {
  const auto loop = load_loop(o.table);
  const auto kernel = AbGroup::parse(o.kernel);
  const auto inn = inner_mapping_group(loop);
  PhiAssignments assignments;
  if (o.phi.empty()) {
    for (const auto &g : inn.generators())
      assignments.emplace_back(g.perm, ModMatrix::identity(kernel));
  } else {
    assignments = read_phi_file(o.phi, kernel);
  }
  const auto phi = phi_from_generators(inn, kernel, assignments);
  const auto c = tangent_like_cocycle(loop, phi);
  if (o.property.empty()) {
    write_cocycle(out, c);
    return kOk;
  }
  const auto p = require_property(o.property);
  const auto tl = check_tangent_like_condition(loop, phi, p);
  const auto cc = check_cocycle_condition(c, p);
  const std::string name(property_name(p));
  report_condition(o.porcelain ? "tangent-like property=" + name : "tangent-like condition for " + name,
                   tl, o.porcelain, out);
  report_condition(o.porcelain ? "cocycle property=" + name : "cocycle condition for " + name, cc,
                   o.porcelain, out);
  return tl.holds() ? kOk : kVerifiedFalse;
}

int cmd_audit(const Options &o, std::ostream &out) {
  const auto loop = load_loop(o.table);
  const auto kernel = AbGroup::parse(o.kernel);
  std::vector<PropertyKind> props(kAllProperties.begin(), kAllProperties.end());
  if (!o.property.empty())
    props = {require_property(o.property)};
  out << "# audit table=" << o.table << " kernel=" << kernel.to_string() << " seed=" << o.seed
      << " trials=" << o.trials << '\n';
  std::size_t lines = 0, violations = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto s = trial_seed(o.seed, t);
    const auto c = random_cocycle(loop, kernel, s);
    const auto ext = build_extension(c);
    for (auto p : props) {
      const auto r = equivalence_audit(c, ext, p);
      out << "trial=" << t << " cocycle_seed=" << s << ' ' << format_audit(r) << '\n';
      ++lines;
      violations += r.consistent ? 0 : 1;
    }
  }
  out << "# summary audits=" << lines << " violations=" << violations << '\n';
  return violations == 0 ? kOk : kVerifiedFalse;
}

int cmd_search(const Options &o, std::ostream &out, std::ostream &err) {
  const auto filter = PropertyFilter::parse(o.property);
  const auto loops = enumerate_loops(o.order, filter, o.limit);
  for (const auto &l : loops)
    write_table(out, l.table());
  if (loops.empty()) {
    err << "no loop of order " << o.order << " matches " << filter.to_string() << '\n';
    return kVerifiedFalse;
  }
  return kOk;
}

int cmd_smooth_demo(const Options &o, std::ostream &out) {
  const auto loop = smooth::builtin_loop(o.name);
  smooth::NumericOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  opts.tol = o.tol;
  const auto report = smooth::theorem1_suite(*loop, opts);
  out << smooth::format_suite(report, o.porcelain);
  return report.consistent() ? kOk : kVerifiedFalse;
}

int cmd_smooth_list(std::ostream &out) {
  for (const auto &n : smooth::builtin_names())
    out << n << '\n';
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite and differentiable loops: extensions, cocycle conditions, "
               "tangent prolongations",
               "loopkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  Options o;

  auto add_table = [&](CLI::App *sub, bool positional) {
    if (positional) {
      sub->add_option("table,--table", o.table, "Cayley table file")->required();
    } else {
      sub->add_option("--table", o.table, "Cayley table file")->required();
    }
  };
  auto add_porcelain = [&](CLI::App *sub) {
    sub->add_flag("--porcelain", o.porcelain, "One key=value line per result");
  };
  auto add_seed = [&](CLI::App *sub) {
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  };

  auto *verify = app.add_subcommand("verify", "Validate a Cayley table as quasigroup and loop");
  add_table(verify, true);

  auto *props = app.add_subcommand("props", "Check the nine weak properties of a loop");
  add_table(props, true);
  add_porcelain(props);

  auto *inn = app.add_subcommand("inn", "Multiplication and inner mapping groups");
  add_table(inn, true);

  auto *extend = app.add_subcommand("extend", "Materialize a linear abelian extension");
  add_table(extend, false);
  extend->add_option("--kernel", o.kernel, "Kernel z<m>^<k> for a random cocycle")
      ->capture_default_str();
  extend->add_option("--cocycle", o.cocycle, "Cocycle file (otherwise random by --seed)");
  add_seed(extend);

  auto *tangent = app.add_subcommand(
      "tangentlike", "Tangent-like cocycle from a homomorphism Inn(L) -> Aut(A)");
  add_table(tangent, false);
  tangent->add_option("--kernel", o.kernel, "Kernel z<m>^<k>")->capture_default_str();
  tangent->add_option("--phi", o.phi, "Generator assignments (default: trivial)");
  tangent->add_option("--property", o.property, "Compare both conditions for this property");
  add_porcelain(tangent);

  auto *check = app.add_subcommand("check", "Evaluate a cocycle condition");
  add_table(check, false);
  check->add_option("--cocycle", o.cocycle, "Cocycle file")->required();
  check->add_option("--property", o.property, "Property name or condition letter")->required();
  add_porcelain(check);

  auto *audit = app.add_subcommand("audit", "Extension iff base and condition, on random cocycles");
  add_table(audit, false);
  audit->add_option("--kernel", o.kernel, "Kernel z<m>^<k>")->capture_default_str();
  audit->add_option("--trials", o.trials, "Number of random cocycles")->capture_default_str();
  audit->add_option("--property", o.property, "Restrict to one property");
  add_seed(audit);

  auto *search = app.add_subcommand("search", "Enumerate loops with identity 0");
  search->add_option("--order", o.order, "Order (1..8)")->required();
  search->add_option("--property", o.property,
                     "Comma list, e.g. left-bol,nonassociative (default: any)");
  search->add_option("--limit", o.limit, "Maximum number of loops")->capture_default_str();

  auto *smooth_cmd = app.add_subcommand("smooth", "Numeric suites on built-in smooth loops");
  smooth_cmd->require_subcommand(1);
  auto *demo = smooth_cmd->add_subcommand("demo", "numeric property suite on a catalog loop");
  demo->add_option("name", o.name, "Catalog name")->required();
  demo->add_option("--samples", o.samples, "Sample count")->capture_default_str();
  demo->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  add_seed(demo);
  add_porcelain(demo);
  auto *list = smooth_cmd->add_subcommand("list", "List catalog loops");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    // Help for a subcommand is requested through the subcommand itself.
    if (e.get_exit_code() == 0) {
      for (auto *sub : app.get_subcommands())
        out << sub->help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (verify->parsed())
      return cmd_verify(o, out);
    if (props->parsed())
      return cmd_props(o, out);
    if (inn->parsed())
      return cmd_inn(o, out);
    if (extend->parsed())
      return cmd_extend(o, out);
    if (tangent->parsed())
      return cmd_tangentlike(o, out);
    if (check->parsed())
      return cmd_check(o, out);
    if (audit->parsed())
      return cmd_audit(o, out);
    if (search->parsed())
      return cmd_search(o, out, err);
    if (demo->parsed())
      return cmd_smooth_demo(o, out);
    if (list->parsed())
      return cmd_smooth_list(out);
  } catch (const FormatError &e) {
    err << "format error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError &e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const NumericError &e) {
    err << "numeric error: " << e.what() << '\n';
    return kResourceError;
  } catch (const ConsistencyError &e) {
    err << "internal error: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

} // namespace loopkit::cli
