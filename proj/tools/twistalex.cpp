// Command-line driver: compute, genus, fiber, search, batch.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "twistalex/analysis.hpp"
#include "twistalex/knot_io.hpp"

namespace fs = std::filesystem;
using namespace twistalex;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kInputError = 2, kBudgetExhausted = 3, kInvariantFailure = 4 };

struct Config {
  std::string input;
  std::string hom_file;
  std::vector<int> ks;
  std::vector<std::uint32_t> primes;
  std::vector<std::string> flavors;
  double budget_seconds = 600;
  int workers = 1;
  bool json = false;
  std::string longitude;
  std::optional<std::int64_t> known_genus;
  std::string task = "genus";
};

fs::path fixture_dir() {
  if (const char* env = std::getenv("TWISTALEX_FIXTURES")) return env;
  return TWISTALEX_FIXTURE_DIR;
}

struct Loaded {
  std::string name;
  std::string text;  // source text, hashed into the report
  KnotInput input;
  std::optional<KnotTableEntry> entry;
};

// A path, a fixture file name (with or without extension), or the name of an
// entry in the fixture table.
Loaded resolve_input(const std::string& arg) {
  if (arg.empty()) throw InputError("--input is required");
  auto from_file = [&](const fs::path& path) {
    Loaded l;
    l.name = arg;
    l.text = read_file(path);
    l.input = parse_input(l.text);
    return l;
  };
  if (fs::is_regular_file(arg)) return from_file(arg);
  const fs::path dir = fixture_dir();
  for (const char* ext : {"", ".pres", ".braid"})
    if (fs::is_regular_file(dir / (arg + ext))) return from_file(dir / (arg + ext));
  const fs::path table = dir / "knots.table";
  if (fs::is_regular_file(table)) {
    for (auto& e : load_table(table)) {
      if (e.name != arg) continue;
      Loaded l;
      l.name = arg;
      l.text = print_input(e.input);
      l.input = e.input;
      l.entry = std::move(e);
      return l;
    }
  }
  throw InputError("no file or fixture named `" + arg + "` (fixture directory " + dir.string() + ")");
}

Presentation prepare(const Loaded& l, const Config& c, std::vector<std::string>& assumptions) {
  Presentation p = to_presentation(l.input);
  if (!phi_is_primitive(p)) {
    p = derive_phi(p);
    assumptions.push_back("phi was divided by the gcd of its values to make it primitive");
  }
  if (!c.longitude.empty()) {
    Word lon;
    if (c.longitude == "auto") {
      const auto* b = std::get_if<BraidWord>(&l.input);
      if (!b) throw InputError("--longitude auto needs a braid input");
      if (braid_components(*b) != 1) throw InputError("--longitude auto needs a knot (one-component closure)");
      lon = braid_longitude(*b);
    } else {
      lon = parse_word(p, c.longitude);
    }
    p = zero_surgery(p, lon);
  }
  return p;
}

std::vector<Flavor> flavors_of(const Config& c, std::vector<Flavor> fallback) {
  if (c.flavors.empty()) return fallback;
  std::vector<Flavor> out;
  for (const auto& f : c.flavors) out.push_back(parse_flavor(f));
  return out;
}

SearchOptions search_options(const Presentation& p, const Config& c) {
  SearchOptions s;
  s.meridional = p.meridional;
  s.budget = std::chrono::milliseconds(static_cast<std::int64_t>(c.budget_seconds * 1000));
  return s;
}

void add_timing(ReportDocument& doc, const char* what, std::chrono::steady_clock::time_point start) {
  if (!std::getenv("TWISTALEX_TIMINGS")) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  doc.timings_ms.emplace_back(what, ms.count());
}

void emit(const ReportDocument& doc, const Config& c) {
  std::cout << emit_report(doc, c.json ? ReportFormat::Json : ReportFormat::Text);
}

int run_compute(const Config& c) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = resolve_input(c.input);
  std::vector<std::string> assumptions;
  const Presentation p = prepare(l, c, assumptions);
  const Flavor flavor = flavors_of(c, {Flavor::Standard}).front();
  if (c.primes.size() > 1) throw InputError("compute takes a single --prime");
  const std::uint32_t prime = c.primes.empty() ? 13 : c.primes.front();
  ReportDocument doc = report_for("compute", l.name, l.text, p);
  doc.flavor = to_string(flavor);
  TwistedDegrees d;
  if (flavor == Flavor::Trivial && c.hom_file.empty()) {
    d = evaluate_classical(p, prime);
  } else {
    if (c.hom_file.empty()) throw InputError("compute needs --hom unless --flavor trivial");
    const PermHom h = parse_hom(p, read_file(c.hom_file));
    doc.hom = hom_doc(p, h);
    d = evaluate_hom(p, h, flavor, prime);
  }
  set_invariants(doc, d);
  doc.assumptions = assumptions;
  if (p.kind == ManifoldKind::Closed) doc.assumptions.push_back("closed manifold: Delta_2 from duality with the adjoint");
  add_timing(doc, "total", start);
  emit(doc, c);
  return kOk;
}

ReportDocument genus_report(const Loaded& l, const Config& c, int workers, bool& budget_hit) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> assumptions;
  const Presentation p = prepare(l, c, assumptions);
  GenusSearchOptions o;
  o.ks = !c.ks.empty() ? c.ks : (l.entry && !l.entry->ks.empty() ? l.entry->ks : std::vector<int>{2, 3, 4, 5});
  o.primes = !c.primes.empty() ? c.primes : std::vector<std::uint32_t>{13};
  o.flavors = flavors_of(c, {Flavor::Standard, Flavor::Permutation});
  o.search = search_options(p, c);
  o.known_genus = c.known_genus ? c.known_genus : (l.entry ? l.entry->known_genus : std::nullopt);
  o.workers = workers;
  const auto r = genus_search(p, o);
  ReportDocument doc = report_for("genus", l.name, l.text, p);
  if (r.best) {
    doc.hom = hom_doc(p, r.best->hom);
    doc.flavor = to_string(r.best->flavor);
    set_invariants(doc, r.best->degrees);
  } else {
    doc.flavor = to_string(Flavor::Trivial);
    set_invariants(doc, r.classical);
  }
  SearchDoc s;
  s.status = to_string(r.status);
  s.evaluated = r.evaluated;
  s.known_genus = o.known_genus;
  if (o.known_genus) s.certified = r.certified;
  if (r.classical.genus_bound) s.classical_genus_bound = r.classical.genus_bound->value.str();
  doc.search = s;
  doc.assumptions = assumptions;
  budget_hit = r.status == SearchStatus::BudgetExhausted;
  add_timing(doc, "total", start);
  return doc;
}

ReportDocument fiber_report(const Loaded& l, const Config& c, int workers, bool& budget_hit) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> assumptions;
  const Presentation p = prepare(l, c, assumptions);
  FiberingOptions o;
  o.ks = !c.ks.empty() ? c.ks : (l.entry && !l.entry->ks.empty() ? l.entry->ks : std::vector<int>{3, 4, 5});
  o.primes = !c.primes.empty() ? c.primes
                               : (l.entry && !l.entry->primes.empty() ? l.entry->primes
                                                                      : std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});
  o.flavors = flavors_of(c, {Flavor::Permutation, Flavor::Standard});
  o.search = search_options(p, c);
  o.known_genus = c.known_genus ? c.known_genus : (l.entry ? l.entry->known_genus : std::nullopt);
  o.workers = workers;
  if (!c.hom_file.empty()) o.homs.push_back(parse_hom(p, read_file(c.hom_file)));
  const auto v = fibering_check(p, o);
  ReportDocument doc = report_for("fiber", l.name, l.text, p);
  doc.verdict = verdict_doc(p, v);
  if (v.certificate) {
    doc.hom = doc.verdict->certificate->hom;
    doc.flavor = doc.verdict->certificate->flavor;
    doc.field = FieldSpec{v.certificate->prime}.name();
    doc.degrees = doc.verdict->certificate->degrees;
    const auto& g = doc.degrees;
    if (g.d0 && g.d1 && g.d2) doc.torsion_degree = *g.d1 - *g.d0 - *g.d2;
  }
  doc.assumptions = assumptions;
  for (const auto& a : v.assumptions) doc.assumptions.push_back(a);
  budget_hit = !v.complete && v.status != VerdictStatus::Obstructed;
  add_timing(doc, "total", start);
  return doc;
}

int run_genus(const Config& c) {
  bool budget_hit = false;
  emit(genus_report(resolve_input(c.input), c, c.workers, budget_hit), c);
  return budget_hit ? kBudgetExhausted : kOk;
}

int run_fiber(const Config& c) {
  bool budget_hit = false;
  emit(fiber_report(resolve_input(c.input), c, c.workers, budget_hit), c);
  return budget_hit ? kBudgetExhausted : kOk;
}

int run_search(const Config& c) {
  const Loaded l = resolve_input(c.input);
  std::vector<std::string> assumptions;
  const Presentation p = prepare(l, c, assumptions);
  ReportDocument doc = report_for("search", l.name, l.text, p);
  SearchDoc s;
  SearchStatus worst = SearchStatus::Complete;
  for (int k : c.ks.empty() ? std::vector<int>{3} : c.ks) {
    const auto homs = collect_homs(p, k, search_options(p, c));
    if (homs.status == SearchStatus::BudgetExhausted) worst = homs.status;
    for (const auto& h : homs.homs) s.homs.push_back(hom_doc(p, h));
  }
  s.status = to_string(worst);
  s.evaluated = s.homs.size();
  doc.search = s;
  doc.assumptions = assumptions;
  doc.assumptions.push_back("homomorphisms listed up to conjugation in S_k");
  emit(doc, c);
  return worst == SearchStatus::BudgetExhausted ? kBudgetExhausted : kOk;
}

int run_batch(const Config& c) {
  fs::path table = c.input.empty() ? fixture_dir() / "knots.table" : fs::path(c.input);
  if (!fs::is_regular_file(table) && fs::is_regular_file(fixture_dir() / c.input)) table = fixture_dir() / c.input;
  const auto entries = load_table(table);
  if (c.task != "genus" && c.task != "fiber") throw InputError("--task must be genus or fiber");
  std::vector<ReportDocument> docs(entries.size());
  std::vector<int> codes(entries.size(), kOk);
  std::vector<std::string> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      Loaded l{entries[i].name, print_input(entries[i].input), entries[i].input, entries[i]};
      bool budget_hit = false;
      try {
        docs[i] = c.task == "genus" ? genus_report(l, c, 1, budget_hit) : fiber_report(l, c, 1, budget_hit);
        if (budget_hit) codes[i] = kBudgetExhausted;
      } catch (const InvariantViolation& e) {
        codes[i] = kInvariantFailure;
        errors[i] = e.what();
      } catch (const std::exception& e) {
        codes[i] = kInputError;
        errors[i] = e.what();
      }
      if (!errors[i].empty()) {
        docs[i].command = c.task;
        docs[i].input = l.name;
        docs[i].input_hash = content_hash(l.text);
        docs[i].assumptions.push_back("error: " + errors[i]);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, c.workers); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::cout << emit_reports(docs, c.json ? ReportFormat::Json : ReportFormat::Text);
  int code = kOk;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!errors[i].empty()) std::cerr << entries[i].name << ": " << errors[i] << "\n";
    code = std::max(code, codes[i]);
  }
  return code;
}

void add_common(CLI::App* app, Config& c) {
  app->add_option("--input", c.input, "Input file, fixture name, or fixture-table entry");
  app->add_option("--k", c.ks, "Permutation degrees k")->check(CLI::Range(1, 8));
  app->add_option("--prime", c.primes, "Field characteristics (0 = rationals for compute)");
  app->add_option("--flavor", c.flavors, "Representation flavors")
      ->check(CLI::IsMember({"trivial", "perm", "std", "permutation", "standard"}));
  app->add_option("--budget", c.budget_seconds, "Search time budget in seconds")->check(CLI::PositiveNumber);
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1, 256));
  app->add_flag("--json", c.json, "Structured JSON output");
  app->add_option("--longitude", c.longitude, "0-framed longitude word (or `auto` for braids); closes the manifold");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Alexander polynomials, genus bounds and fibering obstructions"};
  app.require_subcommand(1);
  Config c;
  auto* compute = app.add_subcommand("compute", "Twisted invariants for one hom");
  auto* genus = app.add_subcommand("genus", "Search homs for the best genus bound");
  auto* fiber = app.add_subcommand("fiber", "Fibering obstruction");
  auto* search = app.add_subcommand("search", "List homs to S_k up to conjugation");
  auto* batch = app.add_subcommand("batch", "Run genus or fiber over a knot table");
  for (auto* s : {compute, genus, fiber, search, batch}) add_common(s, c);
  for (auto* s : {compute, fiber}) s->add_option("--hom", c.hom_file, "Hom file (generator: cycles)");
  for (auto* s : {genus, fiber, batch}) s->add_option("--known-genus", c.known_genus, "Genus to certify against");
  batch->add_option("--task", c.task, "genus or fiber")->check(CLI::IsMember({"genus", "fiber"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  for (auto q : c.primes)
    if (q != 0 && !is_prime(q)) {
      std::cerr << "error: " << q << " is not prime\n";
      return kInputError;
    }
  try {
    if (compute->parsed()) return run_compute(c);
    if (genus->parsed()) return run_genus(c);
    if (fiber->parsed()) return run_fiber(c);
    if (search->parsed()) return run_search(c);
    return run_batch(c);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ContractError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
