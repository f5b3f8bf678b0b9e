#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "transcat/cayley_ci.hpp"
#include "transcat/classify.hpp"
#include "transcat/elusive.hpp"
#include "transcat/vt_graphs.hpp"

extern char** environ;

using namespace transcat;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDescentBudget;
  int workers = 1;
  std::string data_dir;
  std::string out;
  std::string engine;
};

std::string default_out_dir() {
  const char* env = std::getenv("TRANSCAT_OUT");
  return env && *env ? env : ".";
}

ClassifyConfig classify_config(const RunConfig& rc) {
  ClassifyConfig cfg;
  cfg.seed = rc.seed;
  cfg.budget = rc.budget;
  cfg.data_dir = rc.data_dir.empty() ? default_data_dir() : fs::path(rc.data_dir);
  cfg.work_dir = rc.out;
  if (!rc.engine.empty()) cfg.engine = parse_engine(rc.engine);
  return cfg;
}

void write_artifact(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

const PartSpec& find_part(const std::vector<PartSpec>& parts, const std::string& id) {
  for (const auto& p : parts) {
    if (p.id == id) return p;
  }
  throw Error("no part " + id);
}

bool part_is_done(int n, const PartSpec& part, CatalogueSet& cats) {
  if (!fs::exists(cats.manifest_path(n))) return false;
  PartManifest m = read_manifest(cats.manifest_path(n));
  const PartRecord* rec = m.find(part.id);
  const auto path = cats.part_path(n, part.id);
  return m.seed == cats.config().seed && rec && rec->status == "done" && rec->engine == to_string(part.engine) &&
         fs::exists(path) && file_digest(path) == rec->digest;
}

fs::path self_exe(const char* argv0) {
  std::error_code ec;
  auto p = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::path(argv0) : p;
}

class Dispatcher {
 public:
  Dispatcher(const RunConfig& rc, fs::path exe) : rc_(rc), exe_(std::move(exe)) {}

  // Builds every catalogue degree n depends on, then runs the pending parts
  // of n as worker processes.  Catalogue files are written here only.
  void prepare(int n, CatalogueSet& cats) {
    if (done_.count(n) || (fs::exists(cats.catalogue_path(n)) && cats.has(n))) return;
    for (int d = 2; d < n; ++d) {
      if (n % d != 0) continue;
      prepare(d, cats);
      cats.catalogue(d);
    }
    std::vector<const PartSpec*> pending;
    const auto parts = plan_parts(n, cats);
    for (const auto& p : parts) {
      if (!part_is_done(n, p, cats)) pending.push_back(&p);
    }
    std::map<pid_t, std::size_t> running;
    std::vector<std::string> outcome(pending.size());
    std::size_t next = 0;
    while (next < pending.size() || !running.empty()) {
      while (next < pending.size() && static_cast<int>(running.size()) < rc_.workers) {
        running.emplace(spawn(n, pending[next]->id), next);
        ++next;
      }
      int status = 0;
      const pid_t pid = waitpid(-1, &status, 0);
      if (pid < 0) throw Error(std::string("waitpid: ") + std::strerror(errno));
      auto it = running.find(pid);
      if (it == running.end()) continue;
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        outcome[it->second] = "worker exit status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
      }
      running.erase(it);
    }
    // Recorded in plan order so the manifest does not depend on timing.
    std::string failures;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (!record_part(n, *pending[i], cats, outcome[i])) failures += " " + pending[i]->id;
    }
    if (!failures.empty()) throw Error("degree " + std::to_string(n) + " parts failed:" + failures);
    done_.insert(n);
  }

 private:
  pid_t spawn(int n, const std::string& id) {
    std::vector<std::string> args{exe_.string(), "parts",    "--degree", std::to_string(n),
                                  "--run",       id,         "--seed",   std::to_string(rc_.seed),
                                  "--budget",    std::to_string(rc_.budget), "--out", rc_.out};
    if (!rc_.data_dir.empty()) args.insert(args.end(), {"--data-dir", rc_.data_dir});
    if (!rc_.engine.empty()) args.insert(args.end(), {"--engine", rc_.engine});
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    pid_t pid = 0;
    if (const int rc = posix_spawn(&pid, exe_.c_str(), nullptr, nullptr, argv.data(), environ); rc != 0) {
      throw Error("cannot spawn worker: " + std::string(std::strerror(rc)));
    }
    return pid;
  }

  const RunConfig& rc_;
  fs::path exe_;
  std::set<int> done_;
};

std::vector<SmallGroupSeed> load_small_groups(const RunConfig& rc) {
  const fs::path dir = rc.data_dir.empty() ? default_data_dir() : fs::path(rc.data_dir);
  verify_checksums(dir);
  auto seeds = read_small_groups(dir / "small_groups.txt");
  validate_small_groups(seeds);
  return seeds;
}

std::string header(const std::string& what, const RunConfig& rc) {
  return "# transcat " + what + " seed " + std::to_string(rc.seed) + '\n';
}

int cmd_classify(const RunConfig& rc, int n, const char* argv0) {
  CatalogueSet cats(classify_config(rc));
  if (rc.workers > 1) Dispatcher(rc, self_exe(argv0)).prepare(n, cats);
  const Catalogue& cat = cats.catalogue(n);
  std::cout << "degree " << n << ": " << cat.size() << " transitive, " << cat.minimal_count()
            << " minimal transitive -> " << cats.catalogue_path(n).string() << '\n';
  return 0;
}

int cmd_graphs(const RunConfig& rc, int n, bool directed) {
  CatalogueSet cats(classify_config(rc));
  const auto census = transitive_graph_census(cats.catalogue(n), directed);
  const std::string kind = directed ? "digraphs" : "graphs";
  const fs::path path = fs::path(rc.out) / (kind + "-" + std::to_string(n) + ".txt");
  write_artifact(path, header(kind + " order " + std::to_string(n), rc) + census.report(directed));
  std::cout << census.n << ' ' << census.total << ' ' << census.cayley << " -> " << path.string() << '\n';
  return 0;
}

int cmd_ci(const RunConfig& rc, int max_order, bool directed) {
  const auto seeds = load_small_groups(rc);
  std::ostringstream os;
  os << header((directed ? "dci" : "ci") + std::string(" max-order ") + std::to_string(max_order), rc);
  CiVerdicts verdicts;
  int non_ci = 0;
  for (const auto& s : seeds) {
    if (s.order > max_order) continue;
    const auto r = is_ci_group(s, directed);
    verdicts[{s.order, s.index}] = r.ci;
    non_ci += r.ci ? 0 : 1;
    os << r.to_line() << '\n';
  }
  const auto minimal = minimal_non_ci(max_order, seeds, verdicts);
  os << "minimal";
  for (const auto& [order, index] : minimal) os << '\t' << order << ',' << index;
  os << '\n';
  const fs::path path = fs::path(rc.out) / ((directed ? "dci-" : "ci-") + std::to_string(max_order) + ".txt");
  write_artifact(path, os.str());
  std::cout << verdicts.size() << " groups, " << non_ci << " non-CI, minimal:";
  for (const auto& [order, index] : minimal) std::cout << ' ' << order << ',' << index;
  std::cout << " -> " << path.string() << '\n';
  return 0;
}

int cmd_elusive(const RunConfig& rc, int n) {
  CatalogueSet cats(classify_config(rc));
  DerangementOptions opts;
  opts.seed = rc.seed;
  std::ostringstream os;
  os << header("elusive degree " + std::to_string(n), rc);
  int elusive = 0;
  for (const auto& r : elusive_census(cats.catalogue(n), opts)) {
    elusive += r.elusive ? 1 : 0;
    os << r.to_line() << '\n';
  }
  const fs::path path = fs::path(rc.out) / ("elusive-" + std::to_string(n) + ".txt");
  write_artifact(path, os.str());
  std::cout << "degree " << n << ": " << elusive << " elusive -> " << path.string() << '\n';
  return 0;
}

int cmd_verify(const RunConfig& rc, const std::string& tables, int from, int to) {
  const auto ref = read_reference_tables(tables);
  CatalogueSet cats(classify_config(rc));
  bool ok = true;
  auto row = [&](const std::string& t, int n, std::uint64_t expected, std::uint64_t actual) {
    const bool pass = expected == actual;
    ok = ok && pass;
    std::cout << t << '\t' << n << '\t' << expected << '\t' << actual << '\t' << (pass ? "PASS" : "FAIL") << '\n';
  };
  for (const auto& c : verify_tables(from, to, ref, cats)) row(c.table, c.degree, c.expected, c.actual);
  for (int n = from; n <= to; ++n) {
    if (!ref.has("t", n) && !ref.has("c", n)) continue;
    const auto census = transitive_graph_census(cats.catalogue(n));
    if (ref.has("t", n)) row("t", n, ref.at("t", n), census.total);
    if (ref.has("c", n)) row("c", n, ref.at("c", n), census.cayley);
  }
  return ok ? 0 : 1;
}

int cmd_parts(const RunConfig& rc, int n, bool list, const std::string& run) {
  CatalogueSet cats(classify_config(rc));
  const auto parts = plan_parts(n, cats);
  if (list) {
    for (const auto& p : parts) std::cout << p.id << '\t' << to_string(p.engine) << '\n';
  }
  if (!run.empty()) {
    const auto entries = run_part_file(n, find_part(parts, run), cats);
    std::cout << run << '\t' << entries.size() << " groups -> " << cats.part_path(n, run).string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitive permutation groups, vertex-transitive graphs, CI groups and elusive groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  rc.out = default_out_dir();
  app.add_option("--seed", rc.seed, "PRNG seed, recorded in every artifact header");
  app.add_option("--budget", rc.budget, "largest wreath product handed to the descent engine")
      ->check(CLI::Range(std::uint64_t{10'000}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--workers", rc.workers, "worker processes for classify")->check(CLI::Range(1, 256));
  app.add_option("--data-dir", rc.data_dir, "seed data directory")->check(CLI::ExistingDirectory);
  app.add_option("--out", rc.out, "output directory (default $TRANSCAT_OUT or .)");
  app.add_option("--engine", rc.engine, "force one engine for imprimitive parts")
      ->check(CLI::IsMember({"descent", "layered", "goursat"}));

  int degree = 0;
  int order = 0;
  int max_order = 0;
  int from = 2;
  int to = 12;
  bool directed = false;
  bool list = false;
  std::string run;
  std::string tables;

  auto* classify = app.add_subcommand("classify", "classify the transitive groups of one degree");
  classify->add_option("--degree", degree, "degree")->required()->check(CLI::Range(2, kMaxCatalogueDegree));

  auto* graphs = app.add_subcommand("graphs", "census of vertex-transitive graphs of one order");
  graphs->add_option("--order", order, "order")->required()->check(CLI::Range(2, kMaxCatalogueDegree));
  graphs->add_flag("--directed", directed, "digraphs instead of graphs");

  auto* ci = app.add_subcommand("ci", "CI verdicts and minimal non-CI groups");
  ci->add_option("--max-order", max_order, "largest group order")->required()->check(CLI::Range(1, 31));
  ci->add_flag("--directed", directed, "DCI verdicts");

  auto* elusive = app.add_subcommand("elusive", "elusive groups of one degree");
  elusive->add_option("--degree", degree, "degree")->required()->check(CLI::Range(2, kMaxCatalogueDegree));

  auto* verify = app.add_subcommand("verify", "compare counts with a reference table file");
  verify->add_option("--tables", tables, "reference tables")->required()->check(CLI::ExistingFile);
  verify->add_option("--from", from, "first degree")->check(CLI::Range(2, kMaxCatalogueDegree));
  verify->add_option("--to", to, "last degree")->check(CLI::Range(2, kMaxCatalogueDegree));

  auto* parts = app.add_subcommand("parts", "list or run the parts of one degree");
  parts->add_option("--degree", degree, "degree")->required()->check(CLI::Range(2, kMaxCatalogueDegree));
  auto* list_opt = parts->add_flag("--list", list, "print part ids and engines");
  auto* run_opt = parts->add_option("--run", run, "run one part and write its part file");
  list_opt->excludes(run_opt);
  parts->callback([&] {
    if (!list && run.empty()) throw CLI::RequiredError("--list or --run");
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(rc, degree, argv[0]);
    if (*graphs) return cmd_graphs(rc, order, directed);
    if (*ci) return cmd_ci(rc, max_order, directed);
    if (*elusive) return cmd_elusive(rc, degree);
    if (*verify) return cmd_verify(rc, tables, from, to);
    if (*parts) return cmd_parts(rc, degree, list, run);
  } catch (const std::exception& e) {
    std::cerr << "transcat: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
