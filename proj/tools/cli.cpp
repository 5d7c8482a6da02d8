#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plab/catalog.hpp"
#include "plab/theorems.hpp"

namespace plab::cli {
namespace {

using nlohmann::json;

struct Options {
  // ring
  std::string spec;
  std::string show;
  // classify
  std::string catalog = "default";
  std::string submodule;
  std::string module;
  bool all = false;
  std::string format = "table";
  std::string out_path;
  // verify
  std::string suite = "all";
  unsigned jobs = 1;
  std::string report_path;
  bool omit_runtime = false;
  // mine
  std::string pattern;
  std::size_t max_ring = 16;
  std::size_t max_module = 64;
  std::size_t limit = 10;
};

void echo_caps(std::ostream& err, const CatalogDefaults& d) {
  err << "  caps: ring_cap=" << d.ring_cap << " ideal_cap=" << d.ideal_cap << " module_cap=" << d.module_cap
      << " lattice_cap=" << d.lattice_cap << " lattice_module_max=" << d.lattice_module_max
      << " hom_cap=" << d.hom_cap << " quadruple_zero_limit=" << d.quadruple_zero_limit << "\n";
}

void echo_footer(std::ostream& err) {
  err << "  randomness: none (all enumeration orders are fixed; there is no seed)\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_labels(const FiniteRing& r, const ElementSet& s) {
  std::string out;
  s.for_each([&](Elem x) { out += (out.empty() ? "" : ", ") + r.label(x); });
  return out;
}

std::string ideal_text(const FiniteRing& r, const Ideal& i) {
  std::string g;
  for (Elem x : i.generators) g += (g.empty() ? "" : ", ") + r.label(x);
  return "(" + (g.empty() ? r.label(r.zero()) : g) + ")";
}

// ring ------------------------------------------------------------------------

int cmd_ring(const Options& o, std::ostream& out, std::ostream& err) {
  json spec;
  try {
    spec = json::parse(o.spec);
  } catch (const json::parse_error& e) {
    err << "error: --spec is not valid JSON: " << e.what() << "\n";
    return kUsage;
  }
  const Catalog c = parse_catalog(json{{"rings", {{"spec", spec}}}}.dump());
  const RingPtr ring = build_ring(c.rings.at("spec"), c.defaults.module_options().ring);
  const FiniteRing& r = *ring;

  err << "plab ring\n  spec: " << r.spec().describe() << "\n  show: " << o.show << "\n";
  echo_caps(err, c.defaults);
  echo_footer(err);

  out << "ring " << r.spec().describe() << " (" << r.size() << " elements)\n";
  if (o.show == "units") {
    out << "units (" << r.units().count() << "): " << join_labels(r, r.units()) << "\n";
  } else if (o.show == "ideals") {
    const auto& ideals = r.ideals();
    out << "ideals (" << ideals.size() << "):\n";
    for (const auto& i : ideals) {
      const auto rep = classify_ideal(r, i);
      out << "  " << std::left << std::setw(16) << ideal_text(r, i) << " size=" << i.size()
          << " proper=" << yes_no(rep.proper) << " prime=" << yes_no(rep.prime) << " maximal=" << yes_no(rep.maximal)
          << " 1-absorbing=" << yes_no(rep.one_abs_prime) << " weakly-1-absorbing=" << yes_no(rep.weakly_one_abs_prime);
      if (rep.weakly_one_abs_witness) {
        const auto& w = *rep.weakly_one_abs_witness;
        out << " witness=" << r.label(w[0]) << "·" << r.label(w[1]) << "·" << r.label(w[2]);
      }
      out << "\n";
    }
  } else if (o.show == "jacobson") {
    const Ideal j = jacobson_radical(r);
    out << "jacobson radical " << ideal_text(r, j) << " = {" << join_labels(r, j.members) << "}\n";
  } else {
    const auto v = is_u_ring(r);
    out << "u-ring: " << yes_no(v.holds) << "\n";
    if (v.witness) {
      out << "witness ideal " << ideal_text(r, *v.witness) << " is covered by";
      for (const auto& f : v.covering_family) out << " " << ideal_text(r, f);
      out << " and contained in none of them\n";
    }
  }
  return kOk;
}

// classify --------------------------------------------------------------------

void print_table(std::ostream& out, const FiniteModule& m, const std::string& name, const Submodule& n,
                 const ClassificationReport& rep) {
  out << "submodule " << name << " of " << m.spec().describe() << " (" << to_string(m.mode()) << "), |N| = " << n.size()
      << "\n";
  for (auto id : kAllPredicates) {
    const auto& v = rep[id];
    out << "  " << std::left << std::setw(23) << to_string(id) << " " << std::setw(4) << yes_no(v.holds);
    if (v.exponent) out << " exponent " << *v.exponent;
    if (v.witness) out << " witness " << render_witness(m, id, *v.witness);
    out << "\n";
  }
  if (!rep.quadruple_zeros.empty()) {
    out << "  quadruple-zeros:";
    for (const auto& q : rep.quadruple_zeros) out << " (" << q.a << "," << q.b << "," << q.c << "," << q.m << ")";
    out << "\n";
  }
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.submodule.empty() == (o.module.empty() || !o.all)) {
    err << "error: classify needs either --submodule ID or --module ID --all\n";
    return kUsage;
  }
  const Catalog cat = load_catalog(o.catalog);
  const std::string digest = catalog_digest(cat);

  err << "plab classify\n  catalog: " << o.catalog << " (sha256 " << digest << ")\n  target: "
      << (o.submodule.empty() ? "all proper submodules of " + o.module : o.submodule) << "\n  format: " << o.format
      << "\n";
  echo_caps(err, cat.defaults);
  echo_footer(err);

  const auto opts = cat.defaults.module_options();
  std::string module_id = o.module;
  if (!o.submodule.empty()) {
    auto it = cat.submodules.find(o.submodule);
    if (it == cat.submodules.end()) {
      err << "error: unknown submodule id \"" << o.submodule << "\"\n";
      return kUsage;
    }
    module_id = it->second.module;
  }
  auto mit = cat.modules.find(module_id);
  if (mit == cat.modules.end()) {
    err << "error: unknown module id \"" << module_id << "\"\n";
    return kUsage;
  }
  const ModulePtr mod = build_module(mit->second, opts);
  const auto ctx = std::make_shared<const ModuleContext>(mod);

  std::vector<std::pair<std::string, Submodule>> targets;
  if (!o.submodule.empty()) {
    std::vector<Elem> gens;
    for (const auto& t : cat.submodules.at(o.submodule).generators) gens.push_back(resolve_generator(*mod, t));
    Submodule n = submodule_generated(*mod, gens);
    if (!n.is_proper()) {
      err << "error: submodule " << o.submodule << " is the whole module\n";
      return kUsage;
    }
    targets.emplace_back(o.submodule, std::move(n));
  } else {
    for (const auto& n : mod->lattice()) {
      if (!n.is_proper()) continue;
      std::string name = "<";
      for (std::size_t k = 0; k < n.generators.size(); ++k) name += (k ? "," : "") + mod->label(n.generators[k]);
      targets.emplace_back(name + ">", n);
    }
  }

  std::ostringstream buf;
  std::vector<json> entries;
  for (const auto& [name, n] : targets) {
    SubmoduleAnalyzer a(ctx, n);
    const auto rep = a.classify();
    if (o.format == "json")
      entries.push_back(classification_to_json(*mod, name, n, rep));
    else
      print_table(buf, *mod, name, n, rep);
  }
  const std::string text = o.format == "json" ? dump_json(classification_report_json(digest, entries)) : buf.str();
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) throw CatalogError(CatalogError::Kind::io, "cannot write " + o.out_path);
  }
  return kOk;
}

// verify ----------------------------------------------------------------------

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(item);
  return ids;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Catalog cat = load_catalog(o.catalog);
  SuiteOptions so;
  so.jobs = std::max(1u, o.jobs);
  if (o.suite != "all") {
    so.selection = split_ids(o.suite);
    for (const auto& id : *so.selection)
      if (!find_check(id)) {
        err << "error: unknown check id \"" << id << "\"\n";
        return kUsage;
      }
  }
  const Workspace ws(cat);

  err << "plab verify\n  catalog: " << o.catalog << " (sha256 " << ws.digest() << ")\n  suite: " << o.suite
      << "\n  jobs: " << so.jobs << "\n  report: " << (o.report_path.empty() ? "(none)" : o.report_path) << "\n";
  echo_caps(err, cat.defaults);
  echo_footer(err);
  for (const auto& e : ws.build_errors()) err << "warning: " << e << "\n";

  const SuiteReport rep = run_suite(ws, so);
  for (const auto& c : rep.checks) {
    out << std::left << std::setw(4) << c.id << " " << std::setw(28) << c.title << " " << std::setw(11)
        << to_string(c.mode) << " " << std::setw(20) << to_string(c.status) << " instances=" << c.instances_checked
        << " qualifying=" << c.qualifying << " counterexamples=" << c.counterexample_count
        << " findings=" << c.finding_count << " skipped=" << c.skipped.size() << "\n";
    for (const auto& f : c.counterexamples) out << "     counterexample: " << f.instance << ": " << f.detail << "\n";
  }
  if (!o.report_path.empty()) write_json(suite_to_json(rep, !o.omit_runtime), o.report_path);
  return rep.any_counterexample() ? kCounterexample : kOk;
}

// mine ------------------------------------------------------------------------

int cmd_mine(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& patterns = mine_patterns();
  if (std::find(patterns.begin(), patterns.end(), o.pattern) == patterns.end()) {
    err << "error: unknown pattern \"" << o.pattern << "\"\n";
    return kUsage;
  }
  const MineBounds b{o.max_ring, o.max_module, o.limit};
  err << "plab mine\n  pattern: " << o.pattern << "\n  max_ring: " << b.max_ring << "\n  max_module: " << b.max_module
      << "\n  limit: " << b.limit << "\n";
  echo_footer(err);

  const auto found = mine(o.pattern, b);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& f : found)
      a.push_back({{"instance", f.instance}, {"detail", f.detail}, {"witness", f.witness}, {"rendered", f.rendered}});
    out << dump_json({{"schema_version", kSchemaVersion}, {"pattern", o.pattern}, {"findings", a}});
  } else {
    out << found.size() << " finding(s) for " << o.pattern << "\n";
    for (const auto& f : found) {
      out << "  " << f.instance << ": " << f.detail << "; witness (";
      for (std::size_t k = 0; k < f.witness.size(); ++k) out << (k ? "," : "") << f.witness[k];
      out << ")";
      if (!f.rendered.empty()) out << " " << f.rendered;
      out << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly classical 1-absorbing prime submodules over finite rings", "plab"};
  app.require_subcommand(1, 1);
  Options o;

  auto* ring = app.add_subcommand("ring", "Describe a finite ring");
  ring->add_option("--spec", o.spec, "Ring spec as inline JSON, e.g. '{\"kind\":\"zn\",\"n\":12}'")->required();
  ring->add_option("--show", o.show, "What to show")
      ->required()
      ->check(CLI::IsMember({"units", "ideals", "jacobson", "u-ring"}));

  auto* classify = app.add_subcommand("classify", "Classify submodules from a catalog");
  classify->add_option("--catalog", o.catalog, "Catalog file, or 'default'")->required();
  auto* sub_opt = classify->add_option("--submodule", o.submodule, "Named submodule id");
  auto* mod_opt = classify->add_option("--module", o.module, "Module id (with --all)");
  auto* all_flag = classify->add_flag("--all", o.all, "Every proper submodule of --module");
  sub_opt->excludes(mod_opt)->excludes(all_flag);
  mod_opt->needs(all_flag);
  all_flag->needs(mod_opt);
  classify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  classify->add_option("--out", o.out_path, "Write output to this file");

  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("--catalog", o.catalog, "Catalog file, or 'default'")->required();
  verify->add_option("--suite", o.suite, "'all' or a comma-separated list of check ids");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--report", o.report_path, "Write the JSON suite report here");
  verify->add_flag("--omit-runtime", o.omit_runtime, "Leave runtime_ms out of the report");

  auto* minec = app.add_subcommand("mine", "Search small rings for separating examples");
  minec->add_option("--pattern", o.pattern, "Pattern id")->required();
  minec->add_option("--max-ring", o.max_ring, "Largest ring size")->check(CLI::Range(2, 256));
  minec->add_option("--max-module", o.max_module, "Largest module size")->check(CLI::Range(2, 4096));
  minec->add_option("--limit", o.limit, "Stop after this many findings");
  minec->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ring->parsed()) return cmd_ring(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_mine(o, out, err);
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const CatalogError& e) {
    err << "error: catalog " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == CatalogError::Kind::cap_exceeded ? kCapExceeded : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace plab::cli
