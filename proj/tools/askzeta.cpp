// askzeta: command-line front end.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 bad input, 3 budget
// exceeded, 4 internal inconsistency.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/closed_forms.hpp"
#include "askzeta/error.hpp"
#include "askzeta/grouporbits.hpp"
#include "askzeta/json_io.hpp"
#include "askzeta/lie.hpp"
#include "askzeta/structural.hpp"

using namespace askzeta;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kBudget = 3, kInternal = 4 };

struct Job {
  std::string catalog, input, output, format = "json", method = "auto", form, route = "both";
  std::vector<std::int64_t> primes;
  int n_max = 2;
  int d = -1, n = 3, order = 6;
  std::uint64_t budget = 100000000, seed = 1;
  unsigned jobs = 1;
};

// What a command hands back: the JSON report, a table for csv, lines for text.
struct Report {
  Json json = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;
  int code = kOk;
};

std::string rat(const mpq_class& x) {
  mpq_class y = x;
  y.canonicalize();
  return y.get_str();
}

void check_primes(const Job& job) {
  if (job.primes.empty()) throw InputError("--p: at least one prime required");
  for (auto p : job.primes)
    if (!is_prime(p)) throw InputError("--p: " + std::to_string(p) + " is not prime");
  if (job.n_max < 0) throw InputError("--n-max must be nonnegative");
}

MatrixModule load_module(const Job& job) {
  if (job.catalog.empty() == job.input.empty()) throw InputError("give exactly one of --catalog and --input");
  if (!job.catalog.empty()) return catalog_module(job.catalog);
  return module_from_json(read_json_file(job.input));
}

AskOptions ask_options(const Job& job) {
  AskOptions o;
  o.budget = job.budget;
  o.jobs = std::max(1u, job.jobs);
  return o;
}

AskMethod method_of(const Job& job) { return parse_ask_method(job.method); }

Json source(const Job& job) { return job.catalog.empty() ? Json{{"input", job.input}} : Json{{"catalog", job.catalog}}; }

Report run_ask(const Job& job) {
  check_primes(job);
  const auto m = load_module(job);
  Report r;
  r.json["module"] = module_to_json(m);
  r.json["source"] = source(job);
  r.json["method"] = job.method;
  r.header = {"p", "n", "ask", "method"};
  Json series = Json::array();
  for (auto p : job.primes) {
    const auto s = ask_series(m, p, job.n_max, method_of(job), ask_options(job));
    Json coeffs = Json::array(), methods = Json::array();
    std::string line = "p=" + std::to_string(p) + ":";
    for (const auto& v : s.values) {
      coeffs.push_back(rational_to_json(v.value));
      methods.push_back(to_string(v.method));
      r.rows.push_back({std::to_string(p), std::to_string(v.n), rat(v.value), to_string(v.method)});
      line += " " + rat(v.value);
    }
    series.push_back(Json{{"p", p}, {"coefficients", coeffs}, {"methods", methods}});
    r.text.push_back(line);
  }
  r.json["series"] = series;
  return r;
}

// Group for an oc catalog entry.
GroupGenSet oc_group(const std::string& key, std::int64_t p) {
  if (key == "oc:gl(2)") return gl_generators(2, p);
  if (key == "oc:minus_one") return {1, {IntMatrix{{-1}}}, "minus one"};
  if (key == "oc:swap") return {2, {IntMatrix{{0, 1}, {1, 0}}}, "swap"};
  throw InputError("no group for '" + key + "'");
}

std::vector<mpq_class> computed_series(const CatalogEntry& e, const MatrixModule* override_module, std::int64_t p,
                                       const Job& job) {
  std::vector<mpq_class> out;
  switch (e.kind) {
    case ZetaKind::ask: {
      const MatrixModule m = override_module ? *override_module : catalog_module(e.module_ref);
      return ask_series(m, p, job.n_max, method_of(job), ask_options(job)).coefficients();
    }
    case ZetaKind::cc: {
      const auto k = parse_catalog_key(e.module_ref);
      if (k.name != "L" || k.args.size() != 2) throw InputError("'" + e.key + "' has no algebra to compute with");
      return cc_via_ask(graaf_algebra(k.args[0], k.args[1]), p, job.n_max, method_of(job), ask_options(job))
          .series.coefficients();
    }
    case ZetaKind::oc: {
      GroupOptions g;
      g.budget = job.budget;
      for (const auto& c : oc_coefficients(oc_group(e.key, p), p, job.n_max, g)) out.push_back(c);
      return out;
    }
  }
  return out;
}

Report run_verify(const Job& job) {
  check_primes(job);
  if (job.catalog.empty() && job.form.empty()) throw InputError("verify needs --catalog, or --input with --form");
  CatalogEntry e;
  std::optional<MatrixModule> module;
  if (!job.catalog.empty()) {
    e = closed_form(job.catalog);
  } else {
    e.key = job.input;
    e.validity = "all p";
  }
  if (!job.input.empty()) {
    Job only_input = job;
    only_input.catalog.clear();
    module = load_module(only_input);
  }
  if (!job.form.empty()) e.formula = QTRational::parse(job.form);
  Report r;
  r.json["source"] = source(job);
  r.json["formula"] = e.formula.to_string();
  r.json["kind"] = to_string(e.kind);
  r.json["validity"] = e.validity;
  if (!e.note.empty()) r.json["note"] = e.note;
  r.header = {"p", "n", "computed", "formula", "status"};
  Json checks = Json::array();
  std::optional<std::pair<std::int64_t, int>> first_bad;
  for (auto p : job.primes) {
    if (!job.form.empty() ? false : !validity_holds(e, p)) {
      checks.push_back(Json{{"p", p}, {"status", "skipped: outside stated validity"}});
      r.text.push_back("p=" + std::to_string(p) + ": skipped (outside stated validity: " + e.validity + ")");
      r.rows.push_back({std::to_string(p), "", "", "", "skipped"});
      continue;
    }
    std::optional<mpq_class> c;
    if (e.uses_elliptic_count) c = elliptic_point_count(p);
    const auto got = computed_series(e, module ? &*module : nullptr, p, job);
    const auto want = expand(e.formula, p, job.n_max + 1, c);
    for (int n = 0; n <= job.n_max; ++n) {
      const bool ok = got[n] == want.coeffs[n];
      if (!ok && !first_bad) first_bad = {p, n};
      Json row{{"p", p}, {"n", n}, {"computed", rational_to_json(got[n])}, {"formula", rational_to_json(want.coeffs[n])},
               {"status", ok ? "match" : "mismatch"}};
      if (c) row["c"] = c->get_str();
      checks.push_back(row);
      r.rows.push_back({std::to_string(p), std::to_string(n), rat(got[n]), rat(want.coeffs[n]), ok ? "match" : "mismatch"});
      r.text.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + (ok ? "match" : "mismatch") + " (" +
                       rat(got[n]) + (ok ? "" : " vs " + rat(want.coeffs[n])) + ")");
    }
  }
  r.json["checks"] = checks;
  if (first_bad) {
    r.json["first_mismatch"] = Json{{"p", first_bad->first}, {"n", first_bad->second}};
    r.code = kMismatch;
  }
  r.json["result"] = first_bad ? "mismatch" : "match";
  return r;
}

Json predicate_json(const PredicateResult& p) {
  Json j{{"status", to_string(p.status)}, {"reason", p.reason}, {"minor_counts", p.minor_counts},
         {"span_dims", p.span_dims}, {"excluded_primes", p.excluded_primes}};
  if (p.witness) {
    Json w = Json::array();
    for (const auto& x : *p.witness) w.push_back(x.get_str());
    j["witness"] = w;
    j["witness_rank"] = p.witness_rank;
  }
  return j;
}

Report run_structure(const Job& job) {
  const auto m = load_module(job);
  StructuralOptions opts;
  opts.seed = job.seed;
  const auto rep = structure_report(m, opts);
  Report r;
  r.json["module"] = module_to_json(m);
  r.json["source"] = source(job);
  r.json["seed"] = job.seed;
  r.json["grk"] = rep.grk;
  r.json["gor"] = rep.gor;
  r.json["o_maximal"] = predicate_json(rep.o_maximal);
  r.json["k_minimal"] = predicate_json(rep.k_minimal);
  r.json["constant_rank"] = to_string(rep.constant_rank);
  r.json["constant_orbit_dim"] = to_string(rep.constant_orbit_dim);
  if (rep.template_key) r.json["template"] = Json{{"key", *rep.template_key}, {"formula", rep.template_formula->to_string()}};
  r.header = {"property", "value"};
  r.rows = {{"grk", std::to_string(rep.grk)},
            {"gor", std::to_string(rep.gor)},
            {"o_maximal", to_string(rep.o_maximal.status)},
            {"k_minimal", to_string(rep.k_minimal.status)},
            {"template", rep.template_key.value_or("")}};
  for (const auto& row : r.rows) r.text.push_back(row[0] + ": " + row[1]);
  if (rep.template_formula) r.text.push_back("formula: " + rep.template_formula->to_string());
  return r;
}

Json coeff_json(const std::vector<mpq_class>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

std::string coeff_text(const std::vector<mpq_class>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + rat(x);
  return s;
}

Report run_cc(const Job& job) {
  check_primes(job);
  if (job.route != "both" && job.route != "direct" && job.route != "ask") throw InputError("--route must be direct, ask or both");
  // A catalog L_{d,i} without a matrix realization can still go through ad(L).
  std::optional<MatrixModule> m;
  std::optional<LieAlgebra> abstract;
  if (!job.catalog.empty() && parse_catalog_key(job.catalog).name == "L") {
    const auto k = parse_catalog_key(job.catalog);
    abstract = graaf_algebra(k.args[0], k.args[1]);
    try {
      m = catalog_module(job.catalog);
    } catch (const InputError&) {
    }
  } else {
    m = load_module(job);
    abstract = LieAlgebra::from_module(*m);
  }
  Report r;
  r.json["source"] = source(job);
  r.header = {"p", "n", "route", "classes"};
  Json series = Json::array();
  GroupOptions g;
  g.budget = job.budget;
  for (auto p : job.primes) {
    Json entry{{"p", p}};
    std::optional<std::vector<mpq_class>> direct, via;
    std::vector<std::string> warnings;
    if (job.route != "ask" && m) {
      check_nilpotent_algebra(*m);
      direct.emplace();
      for (const auto& c : cc_coefficients_direct(*m, p, job.n_max, g)) direct->push_back(c);
      entry["direct"] = coeff_json(*direct);
      r.text.push_back("p=" + std::to_string(p) + " direct: " + coeff_text(*direct));
    }
    if (job.route != "direct") {
      const auto b = m ? cc_via_ask(*m, p, job.n_max, method_of(job), ask_options(job))
                       : cc_via_ask(*abstract, p, job.n_max, method_of(job), ask_options(job));
      via = b.series.coefficients();
      warnings = b.warnings;
      entry["via_ask"] = coeff_json(*via);
      entry["warnings"] = warnings;
      r.text.push_back("p=" + std::to_string(p) + " via ask: " + coeff_text(*via));
      for (const auto& w : warnings) r.text.push_back("  warning: " + w);
    }
    for (int n = 0; n <= job.n_max; ++n) {
      if (direct) r.rows.push_back({std::to_string(p), std::to_string(n), "direct", rat((*direct)[n])});
      if (via) r.rows.push_back({std::to_string(p), std::to_string(n), "ask", rat((*via)[n])});
    }
    if (direct && via && *direct != *via) {
      entry["agree"] = false;
      // the correspondence is a theorem when no hypothesis is flagged
      r.code = std::max(r.code, warnings.empty() ? int(kInternal) : int(kMismatch));
    } else if (direct && via) {
      entry["agree"] = true;
    }
    series.push_back(entry);
  }
  r.json["series"] = series;
  return r;
}

Report run_oc(const Job& job) {
  check_primes(job);
  if (job.catalog.empty() == job.input.empty()) throw InputError("give exactly one of --catalog and --input");
  GroupOptions g;
  g.budget = job.budget;
  Report r;
  r.json["source"] = source(job);
  r.header = {"p", "n", "route", "orbits"};
  Json series = Json::array();
  std::optional<Json> input;
  if (!job.input.empty()) input = read_json_file(job.input);
  for (auto p : job.primes) {
    Json entry{{"p", p}};
    std::vector<mpq_class> counts;
    std::optional<std::vector<mpq_class>> via;
    std::optional<MatrixModule> algebra;
    GroupGenSet group;
    if (input && input->contains("generators")) {
      group = group_from_json(*input);
    } else if (input) {
      algebra = module_from_json(*input);
    } else if (job.catalog.rfind("oc:", 0) == 0) {
      group = oc_group(job.catalog, p);
    } else if (parse_catalog_key(job.catalog).name == "gl") {
      group = gl_generators(static_cast<std::size_t>(parse_catalog_key(job.catalog).args.at(0)), p);
    } else {
      algebra = catalog_module(job.catalog);
    }
    if (algebra) {
      check_nilpotent_algebra(*algebra);
      group = exp_generators(*algebra, RingSpec(p, std::max(job.n_max, 1)));
      const auto b = oc_via_ask(*algebra, p, job.n_max, method_of(job), ask_options(job));
      via = b.series.coefficients();
      entry["via_ask"] = coeff_json(*via);
      entry["warnings"] = b.warnings;
    }
    for (const auto& c : oc_coefficients(group, p, job.n_max, g)) counts.push_back(c);
    entry["orbits"] = coeff_json(counts);
    r.text.push_back("p=" + std::to_string(p) + ": " + coeff_text(counts));
    for (int n = 0; n <= job.n_max; ++n) {
      r.rows.push_back({std::to_string(p), std::to_string(n), "orbits", rat(counts[n])});
      if (via) r.rows.push_back({std::to_string(p), std::to_string(n), "ask", rat((*via)[n])});
    }
    if (via) {
      entry["agree"] = *via == counts;
      if (*via != counts) r.code = std::max(r.code, int(kInternal));
    }
    series.push_back(entry);
  }
  r.json["series"] = series;
  return r;
}

Report run_feqn(const Job& job) {
  QTRational w;
  int d = job.d;
  if (!job.form.empty()) {
    w = QTRational::parse(job.form);
  } else if (!job.catalog.empty()) {
    const auto e = closed_form(job.catalog);
    w = e.formula;
    if (d < 0) d = e.feqn_d;
  } else {
    throw InputError("feqn needs --form or --catalog");
  }
  if (d < 0) throw InputError("feqn needs --d");
  const bool holds = functional_equation_check(w, d);
  Report r;
  r.json["formula"] = w.to_string();
  r.json["d"] = d;
  r.json["holds"] = holds;
  r.header = {"formula", "d", "holds"};
  r.rows = {{w.to_string(), std::to_string(d), holds ? "true" : "false"}};
  r.text = {holds ? "functional equation holds" : "functional equation fails"};
  r.code = holds ? kOk : kMismatch;
  return r;
}

Json entry_json(const CatalogEntry& e) {
  Json j{{"key", e.key},           {"formula", e.formula.to_string()}, {"module", e.module_ref},
         {"validity", e.validity}, {"kind", to_string(e.kind)},        {"feqn_d", e.feqn_d}};
  if (!e.tested_at.empty()) j["tested_at"] = e.tested_at;
  if (e.uses_elliptic_count) j["c"] = "#E(F_q), E: Y^2 = X^3 - X";
  if (!e.printed_formula.empty()) j["printed_formula"] = e.printed_formula;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Report run_catalog(const Job& job) {
  Report r;
  r.header = {"key", "kind", "validity", "formula"};
  Json entries = Json::array();
  const std::vector<std::string> keys = job.catalog.empty() ? closed_form_keys() : std::vector{job.catalog};
  for (const auto& k : keys) {
    const auto e = closed_form(k);
    entries.push_back(entry_json(e));
    r.rows.push_back({e.key, to_string(e.kind), e.validity, e.formula.to_string()});
    r.text.push_back(e.key + " [" + to_string(e.kind) + "; " + e.validity + "]: " + e.formula.to_string());
    if (!e.note.empty()) r.text.push_back("  note: " + e.note);
  }
  r.json["entries"] = entries;
  if (!job.catalog.empty()) {
    const auto e = closed_form(job.catalog);
    if (e.kind == ZetaKind::ask && e.module_ref.rfind("none", 0) != 0)
      r.json["module"] = module_to_json(catalog_module(e.module_ref));
  } else {
    r.json["modules"] = catalog_module_names();
  }
  return r;
}

Report run_brenti(const Job& job) {
  if (job.n < 1 || job.n > 8) throw InputError("--n must be between 1 and 8");
  if (job.order < 1) throw InputError("--order must be positive");
  const Poly b = brenti_polynomial(job.n);
  const bool ok = brenti_identity_check(job.n, job.order);
  Report r;
  r.json["n"] = job.n;
  r.json["order"] = job.order;
  r.json["polynomial"] = b.to_string({"X", "Y"});
  r.json["identity_holds"] = ok;
  r.header = {"n", "polynomial", "identity_holds"};
  r.rows = {{std::to_string(job.n), b.to_string({"X", "Y"}), ok ? "true" : "false"}};
  r.text = {"B_" + std::to_string(job.n) + "(X, Y) = " + b.to_string({"X", "Y"}),
            std::string("identity to order ") + std::to_string(job.order) + (ok ? ": holds" : ": FAILS")};
  r.code = ok ? kOk : kInternal;
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Report& r, const std::string& command, const Job& job) {
  std::ostringstream out;
  if (job.format == "json") {
    Json j = r.json;
    j["schema"] = kSchema;
    j["command"] = command;
    j["exit_code"] = r.code;
    out << j.dump(2) << "\n";
  } else if (job.format == "csv") {
    for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "," : "") << csv_field(r.header[i]);
    out << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
  } else {
    for (const auto& line : r.text) out << line << "\n";
  }
  if (job.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(job.output);
    if (!f) throw InputError("cannot write '" + job.output + "'");
    f << out.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ask zeta coefficients of integer matrix modules over Z/p^n"};
  app.require_subcommand(1);
  Job job;

  auto common = [&](CLI::App* sub, bool module, bool series) {
    if (module) {
      sub->add_option("--catalog", job.catalog, "catalog key, e.g. so(3), mat(2,3), L_{3,2}");
      sub->add_option("--input", job.input, "module/algebra/group JSON file");
    }
    if (series) {
      sub->add_option("--p", job.primes, "prime(s), comma separated")->delimiter(',')->required();
      sub->add_option("--n-max", job.n_max, "largest level n")->capture_default_str();
      sub->add_option("--method", job.method, "auto, average, orbit or both")->capture_default_str();
      sub->add_option("--budget", job.budget, "points per coefficient before giving up")->capture_default_str();
      sub->add_option("--jobs", job.jobs, "worker threads")->capture_default_str();
    }
    sub->add_option("--output", job.output, "write the report here instead of stdout");
    sub->add_option("--format", job.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  auto* ask = app.add_subcommand("ask", "ask coefficients for n = 0..n-max");
  common(ask, true, true);
  auto* verify = app.add_subcommand("verify", "compare coefficients with a closed form");
  common(verify, true, true);
  verify->add_option("--form", job.form, "formula to check instead of the catalog one");
  auto* structure = app.add_subcommand("structure", "generic ranks, O-maximality, K-minimality");
  common(structure, true, false);
  structure->add_option("--seed", job.seed, "seed for witness search and rank sampling")->capture_default_str();
  auto* cc = app.add_subcommand("cc", "conjugacy classes of exp(L) mod p^n");
  common(cc, true, true);
  cc->add_option("--route", job.route, "direct, ask or both")->capture_default_str();
  auto* oc = app.add_subcommand("oc", "orbits of a linear group on (Z/p^n)^d");
  common(oc, true, true);
  auto* feqn = app.add_subcommand("feqn", "check W(1/q, 1/T) = -q^d T W(q, T)");
  common(feqn, false, false);
  feqn->add_option("--form", job.form, "rational function in q and T");
  feqn->add_option("--catalog", job.catalog, "catalog key");
  feqn->add_option("--d", job.d, "number of rows");
  auto* catalog = app.add_subcommand("catalog", "list closed forms");
  common(catalog, false, false);
  catalog->add_option("--catalog", job.catalog, "show a single entry");
  auto* brenti = app.add_subcommand("brenti", "B_n(X, Y) and its defining identity");
  common(brenti, false, false);
  brenti->add_option("--n", job.n, "size")->capture_default_str();
  brenti->add_option("--order", job.order, "number of series terms to compare")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  const std::vector<std::pair<CLI::App*, Report (*)(const Job&)>> commands = {
      {ask, run_ask},       {verify, run_verify}, {structure, run_structure}, {cc, run_cc},
      {oc, run_oc},         {feqn, run_feqn},     {catalog, run_catalog},     {brenti, run_brenti}};
  try {
    for (const auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      const Report r = run(job);
      emit(r, sub->get_name(), job);
      return r.code;
    }
  } catch (const InputError& e) {
    std::cerr << "askzeta: input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "askzeta: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "askzeta: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "askzeta: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
