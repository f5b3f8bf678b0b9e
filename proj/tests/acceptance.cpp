// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.  `--stretch` adds the non-blocking targets.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "property_suites.hpp"
#include "transcat/blocks.hpp"
#include "transcat/cayley_ci.hpp"
#include "transcat/classify.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/elusive.hpp"
#include "transcat/lattice.hpp"
#include "transcat/vt_graphs.hpp"

using namespace transcat;
namespace fs = std::filesystem;

namespace {

// Runtime limits in seconds.
constexpr double kSmallDegreeSeconds = 60;  // each n <= 10
constexpr double kDegree12Seconds = 3600;
constexpr double kDegree14Seconds = 7200;
constexpr double kLatticeSeconds = 600;
constexpr double kGraphCensusSeconds = 3600;
constexpr double kCiSeconds = 1800;
constexpr double kPropertySuiteSeconds = 1200;

constexpr int kFirstDegree = 2;
constexpr int kLastDegree = 14;

const std::vector<std::uint64_t> kTransitive = {1, 2, 5, 5, 16, 7, 50, 34, 45, 8, 301, 9, 63};
const std::vector<std::uint64_t> kMinimal = {1, 1, 2, 1, 4, 1, 5, 2, 6, 1, 17, 1, 6};
// n = 2..13.
const std::vector<std::uint64_t> kGraphs = {2, 2, 4, 3, 8, 4, 14, 9, 22, 8, 74, 14};
const std::vector<std::uint64_t> kCayley = {2, 2, 4, 3, 8, 4, 14, 9, 20, 8, 74, 14};
// C16, D12, C4xC2, QD16, Q16, D16 as (order, index) in the shipped seeds.
const std::set<std::pair<int, int>> kMinimalNonCi = {{8, 2}, {12, 4}, {16, 1}, {16, 7}, {16, 8}, {16, 9}};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    pass = false;
    detail << ' ' << why;
  }
};

int failures = 0;

void report(int criterion, const std::string& title, Outcome& o) {
  std::cout << "criterion " << criterion << " [" << title << "]: " << (o.pass ? "PASS" : "FAIL") << " -"
            << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

void run(int criterion, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(criterion, title, o);
}

bool same_classes(const std::vector<PermGroup>& a, const std::vector<PermGroup>& b) {
  ConjugacyClassifier ca;
  for (const auto& g : a) {
    if (!ca.add(g).second) return false;
  }
  if (ca.size() != b.size()) return false;
  std::vector<bool> hit(ca.size(), false);
  for (const auto& g : b) {
    const int i = ca.find(g);
    if (i < 0 || hit[static_cast<std::size_t>(i)]) return false;
    hit[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

std::vector<PermGroup> groups_of(const Catalogue& cat) {
  std::vector<PermGroup> out;
  for (const auto& e : cat.entries) out.push_back(e.group());
  return out;
}

CatalogueSet& catalogues() {
  static CatalogueSet cats([] {
    ClassifyConfig cfg;
    cfg.data_dir = TRANSCAT_TEST_DATA_DIR;
    return cfg;
  }());
  return cats;
}

std::vector<SmallGroupSeed> small_groups() {
  auto seeds = read_small_groups(fs::path(TRANSCAT_TEST_DATA_DIR) / "small_groups.txt");
  validate_small_groups(seeds);
  return seeds;
}

PermGroup m11_on_twelve() {
  for (const auto& s : read_primitive_seeds(fs::path(TRANSCAT_TEST_DATA_DIR) / "primitive_groups.txt")) {
    if (s.degree == 12 && s.name == "M11") return PermGroup(12, s.generators);
  }
  throw Error("M11 seed missing");
}

std::string ids(const std::set<std::pair<int, int>>& s) {
  std::string out = "{";
  for (const auto& [o, i] : s) out += (out.size() > 1 ? " " : "") + std::to_string(o) + "," + std::to_string(i);
  return out + "}";
}

void criterion_counts() {
  std::vector<double> secs(kLastDegree + 1, 0);
  run(1, "g(n), n=2..14", [&](Outcome& o) {
    for (int n = kFirstDegree; n <= kLastDegree; ++n) {
      const auto t0 = Clock::now();
      const auto got = catalogues().catalogue(n).size();
      secs[static_cast<std::size_t>(n)] = seconds_since(t0);
      const auto want = kTransitive[static_cast<std::size_t>(n - kFirstDegree)];
      o.detail << " g(" << n << ")=" << got;
      if (got != want) o.fail("expected " + std::to_string(want));
      const double limit = n <= 10 ? kSmallDegreeSeconds : n <= 12 ? kDegree12Seconds : kDegree14Seconds;
      if (secs[static_cast<std::size_t>(n)] > limit) o.fail("degree " + std::to_string(n) + " over time limit");
    }
    o.detail << " (degree 12: " << secs[12] << "s, degree 14: " << secs[14] << "s)";
  });
  run(2, "m(n), n=2..14", [&](Outcome& o) {
    for (int n = kFirstDegree; n <= kLastDegree; ++n) {
      const auto got = catalogues().catalogue(n).minimal_count();
      const auto want = kMinimal[static_cast<std::size_t>(n - kFirstDegree)];
      o.detail << " m(" << n << ")=" << got;
      if (got != want) o.fail("expected " + std::to_string(want));
    }
  });
}

void criterion_engines() {
  run(3, "engine A = engine B on block-size-2 slices, even n<=12", [](Outcome& o) {
    auto& cats = catalogues();
    int slices = 0;
    for (int n = 4; n <= 12; n += 2) {
      for (const auto& t : cats.catalogue(n / 2).entries) {
        const PartSpec a{"", PartEngine::Descent, 2, t.index};
        const PartSpec b{"", PartEngine::Layered, 2, t.index};
        const auto ga = run_part(n, a, cats);
        const auto gb = run_part(n, b, cats);
        ++slices;
        if (!same_classes(ga, gb)) {
          o.fail("degree " + std::to_string(n) + " top " + std::to_string(t.index) + ": " +
                 std::to_string(ga.size()) + " vs " + std::to_string(gb.size()));
        }
      }
    }
    o.detail << ' ' << slices << " slices compared";
  });
}

void criterion_lattice() {
  run(4, "catalogue = transitive slice of the Sym(n) lattice, n<=7", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (int n = 2; n <= 7; ++n) {
      std::vector<PermGroup> oracle;
      for (auto& c : all_subgroup_classes(PermGroup::symmetric(n))) {
        if (c.representative.is_transitive()) oracle.push_back(std::move(c.representative));
      }
      if (!same_classes(groups_of(catalogues().catalogue(n)), oracle)) o.fail("degree " + std::to_string(n));
      o.detail << " n=" << n << ":" << oracle.size();
    }
    const double s = seconds_since(t0);
    o.detail << " (" << s << "s)";
    if (s > kLatticeSeconds) o.fail("over time limit");
  });
}

void criterion_graphs() {
  run(5, "t(n), c(n), n=2..13", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (int n = 2; n <= 13; ++n) {
      const auto census = transitive_graph_census(catalogues().catalogue(n));
      const auto i = static_cast<std::size_t>(n - 2);
      o.detail << ' ' << n << ':' << census.total << '/' << census.cayley;
      if (census.total != kGraphs[i] || census.cayley != kCayley[i]) {
        o.fail("expected " + std::to_string(kGraphs[i]) + "/" + std::to_string(kCayley[i]));
      }
    }
    const double s = seconds_since(t0);
    o.detail << " (" << s << "s)";
    if (s > kGraphCensusSeconds) o.fail("over time limit");
  });
}

void criterion_elusive() {
  run(6, "elusive groups of degree <= 14", [](Outcome& o) {
    const PermGroup m11 = m11_on_twelve();
    std::vector<PermGroup> m11_transitive;
    for (auto& c : all_subgroup_classes(m11)) {
      if (c.representative.is_transitive()) m11_transitive.push_back(std::move(c.representative));
    }
    if (m11_transitive.size() != 5) o.fail("M11 has " + std::to_string(m11_transitive.size()) + " transitive classes");
    std::vector<PermGroup> found;
    for (int n = 2; n <= kLastDegree; ++n) {
      const auto& cat = catalogues().catalogue(n);
      for (const auto& r : elusive_census(cat)) {
        if (!r.elusive) continue;
        if (n != 12) o.fail("elusive group at degree " + std::to_string(n));
        if (r.two_closed) o.fail("2-closed elusive group " + std::to_string(n) + "," + std::to_string(r.index));
        found.push_back(cat.entries[static_cast<std::size_t>(r.index - 1)].group());
        o.detail << " " << n << "," << r.index << "(|G|=" << found.back().order() << ")";
      }
    }
    if (same_classes(found, m11_transitive)) {
      o.detail << " = M11 and its proper transitive subgroups, none 2-closed";
    } else {
      o.fail("elusive set differs from the transitive subgroups of M11");
    }
  });
}

void criterion_ci(bool stretch) {
  const auto seeds = small_groups();
  run(7, "minimal non-CI groups of order <= 16", [&](Outcome& o) {
    const auto t0 = Clock::now();
    CiVerdicts v;
    for (const auto& s : seeds) {
      if (s.order <= 16) v[{s.order, s.index}] = is_ci_group(s).ci;
    }
    const auto minimal = minimal_non_ci(16, seeds, v);
    const std::set<std::pair<int, int>> got(minimal.begin(), minimal.end());
    o.detail << " computed " << ids(got);
    if (got != kMinimalNonCi) o.fail("expected " + ids(kMinimalNonCi));
    const double s = seconds_since(t0);
    o.detail << " (" << s << "s)";
    if (s > kCiSeconds) o.fail("over time limit");
  });
  run(8, "cycle index = orderly count, |G| <= 24", [&](Outcome& o) {
    int groups = 0;
    for (const auto& s : seeds) {
      if (s.order > 24) continue;
      const AbstractGroup g(PermGroup(std::max(s.order, 1), s.generators));
      const ConnectionSpace space(g);
      const auto z = count_cayley_sets(space);
      const auto orderly = orderly_connection_classes(space).size();
      ++groups;
      if (z != orderly) o.fail(s.name + ": Z=" + z.str() + " orderly=" + std::to_string(orderly));
    }
    o.detail << ' ' << groups << " groups";
  });
  if (!stretch) return;
  CiVerdicts v;
  std::cout << "stretch: CI verdicts up to order 27:";
  for (const auto& s : seeds) {
    if (s.order > 27) continue;
    const auto r = is_ci_group(s);
    v[{s.order, s.index}] = r.ci;
    if (s.order > 16) std::cout << ' ' << s.name << (r.ci ? "=CI" : "=NONCI");
  }
  const auto minimal = minimal_non_ci(27, seeds, v);
  std::cout << "; minimal non-CI " << ids({minimal.begin(), minimal.end()}) << std::endl;
}

void criterion_properties() {
  run(9, "property suites under a fixed seed", [](Outcome& o) {
    std::istringstream list(kPropertySuites);
    const auto t0 = Clock::now();
    std::string exe;
    int suites = 0;
    while (std::getline(list, exe, ';')) {
      if (exe.empty()) continue;
      ++suites;
      const std::string cmd = "\"" + exe + "\" --gtest_brief=1 > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) o.fail(fs::path(exe).filename().string());
    }
    const double s = seconds_since(t0);
    o.detail << ' ' << suites << " suites (" << s << "s)";
    if (s > kPropertySuiteSeconds) o.fail("over time limit");
  });
}

void stretch_degrees() {
  for (int n : {15, 16}) {
    try {
      const auto t0 = Clock::now();
      const auto& cat = catalogues().catalogue(n);
      const auto census = transitive_graph_census(cat);
      std::cout << "stretch: degree " << n << ": g=" << cat.size() << " m=" << cat.minimal_count()
                << " t=" << census.total << " c=" << census.cayley << " (" << seconds_since(t0) << "s)" << std::endl;
    } catch (const std::exception& e) {
      std::cout << "stretch: degree " << n << " not reached: " << e.what() << std::endl;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool stretch = argc > 1 && std::string(argv[1]) == "--stretch";
  criterion_counts();
  criterion_engines();
  criterion_lattice();
  criterion_graphs();
  criterion_elusive();
  criterion_ci(stretch);
  criterion_properties();
  if (stretch) stretch_degrees();
  std::cout << (9 - failures) << "/9 criteria pass" << std::endl;
  return failures;
}
