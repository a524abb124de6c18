// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "catalog.hpp"
#include "subdepth/cache.hpp"
#include "subdepth/cartan.hpp"
#include "subdepth/cli.hpp"
#include "subdepth/depthcore.hpp"
#include "subdepth/serialize.hpp"

using namespace subdepth;

namespace {

// pinned limits
constexpr double kSymmetricChainSeconds = 60.0;
constexpr int kFrobeniusPairs = 100;
constexpr int kCatalogMinimum = 20;
constexpr unsigned kSeed = 20240611;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

TableCache& tables() {
  static TableCache cache;
  return cache;
}

Json cli_json(const std::vector<std::string>& args) {
  auto full = args;
  for (const char* extra : {"--format", "json", "--no-cache"}) full.push_back(extra);
  const auto r = cli::run(full);
  if (r.exit_code != 0) throw std::runtime_error("subdepth " + args.front() + " failed: " + r.err);
  return Json::parse(r.out);
}

IntMatrix pair_matrix(const SubgroupEmbedding& emb) {
  return induction_restriction_matrix(emb, tables().get(emb.supergroup), tables().get(emb.subgroup)).entries;
}

std::vector<PermutationGroup> centerless(const std::vector<PermutationGroup>& groups) {
  std::vector<PermutationGroup> out;
  for (const auto& g : groups) {
    if (center(g).order() == 1) out.push_back(g);
  }
  return out;
}

void criterion1(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto j = cli_json({"depth", "S(" + std::to_string(n + 1) + ")", "S(" + std::to_string(n) + ")"});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int d = j["depth"]["d"];
    c.detail << (n > 2 ? ", " : "") << "n=" << n << ": d=" << d;
    c.expect(d == 2 * n - 1, "n=" + std::to_string(n) + " expected " + std::to_string(2 * n - 1));
    if (n == 5) c.expect(seconds <= kSymmetricChainSeconds, "n=5 took " + std::to_string(seconds) + " s");
  }
}

void criterion2(Check& c) {
  const auto emb = SubgroupEmbedding::make(builtin::symmetric(4), builtin::dihedral(8));
  const auto r = corefree_compare(emb, tables().source());
  c.detail << "d=" << r.original.d << ", core order " << r.core_order << ", quotient d=" << r.quotient.d
           << ", module depths " << r.module_depth << "/" << r.quotient_module_depth;
  c.expect(r.original.d == 4, "d != 4");
  c.expect(r.core_order == 4 && r.core == builtin::klein(), "core is not the Klein group");
  c.expect(r.quotient.d == 3, "quotient depth != 3");
  c.expect(r.inequality_holds, "quotient inequality fails");
  c.expect(r.intervals_hold, "interval fails");
  c.expect(r.module_depth == 1 && r.quotient_module_depth == 1, "module depth is not 1");
}

void criterion3(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    const auto j = cli_json({"double", "S(" + std::to_string(n) + ")"})["double"];
    c.detail << (n > 3 ? ", " : "") << "S(" << n << "): ell_Q=" << j["ell_Q"] << " d=" << j["d"];
    c.expect(j["ell_Q"] == 1 && j["d"] == 3, "S(" + std::to_string(n) + ") mismatch");
  }
}

void criterion4(Check& c) {
  const auto j = cli_json({"double", "G108"})["double"];
  c.detail << "classes=" << j["classes"] << " center=" << j["center_order"] << " S zero=" << j["S_has_zero"]
           << " S^2>0=" << j["S_squared_positive"] << " ell_Q=" << j["ell_Q"] << " d=" << j["d"];
  c.expect(j["classes"] == 15, "class count");
  c.expect(j["center_order"] == 1, "center");
  c.expect(j["S_has_zero"] == true, "S has no zero");
  c.expect(j["S_squared_positive"] == true, "S^2 not positive");
  c.expect(j["ell_Q"] == 2, "ell_Q");
  c.expect(j["d"] == 5, "d");
}

void criterion5(Check& c, const std::vector<testcat::Pair>& catalog) {
  int normal = 0;
  for (const auto& p : catalog) {
    const int d = min_depth(pair_matrix(p.emb)).d;
    const bool is_n = is_normal(p.emb);
    normal += is_n;
    c.expect((d <= 2) == is_n, p.name + ": d=" + std::to_string(d));
  }
  c.expect(static_cast<int>(catalog.size()) >= kCatalogMinimum, "catalog too small");
  c.detail << (c.ok ? "" : "; ") << catalog.size() << " embeddings, " << normal << " normal";
}

void criterion6(Check& c, const std::vector<testcat::Pair>& catalog) {
  for (const auto& p : catalog) {
    const auto& gt = tables().get(p.emb.supergroup);
    const auto& ht = tables().get(p.emb.subgroup);
    const auto r = min_depth(induction_restriction_matrix(p.emb, gt, ht).entries);
    const auto interval = subgroup_depth_interval_check(p.emb, gt, ht);
    c.expect(interval.holds, p.name + ": d=" + std::to_string(r.d) + " outside [2dq+1, 2dq+2]");
    c.expect(r.d_h - 2 <= r.d && r.d <= r.d_h + 1, p.name + ": d_h ladder");
  }
  c.detail << (c.ok ? "" : "; ") << catalog.size() << " embeddings";
}

void criterion7(Check& c, const std::vector<PermutationGroup>& groups) {
  for (const auto& g : centerless(groups)) {
    const auto diag = diagonal_depth(g, tables().source());
    const auto dbl = double_depth(tables().get(g));
    const int predicted = 2 * dbl.ell_q.value_or(-100) + 1;
    c.detail << g.label() << ": " << diag.depth.d << "=" << predicted << ", ";
    c.expect(diag.depth.d == predicted, g.label() + " diagonal depth");
  }
  for (const auto& g : groups) {
    const auto dbl = double_depth(tables().get(g));
    c.expect(dbl.components == center(g).order(), g.label() + " components");
  }
  c.detail << "components = |Z(G)| over " << groups.size() << " groups";
}

ClassFunction random_virtual(const CharacterTable& t, std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<Cyclotomic> v(t.size(), Cyclotomic());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cyclotomic a(coef(rng));
    for (std::size_t k = 0; k < t.size(); ++k) v[k] += a * t.irreducibles[i][k];
  }
  return ClassFunction(t.group, std::move(v));
}

void criterion8(Check& c, const std::vector<PermutationGroup>& groups, const std::vector<testcat::Pair>& catalog) {
  for (const auto& g : groups) {
    const auto check = check_orthogonality(tables().get(g));
    c.expect(check.rows && check.columns, g.label() + " orthogonality");
    c.expect(check.degrees, g.label() + " degrees");
  }
  std::mt19937 rng(kSeed);
  std::size_t pairs = 0;
  for (const auto& p : catalog) {
    const auto& gt = tables().get(p.emb.supergroup);
    const auto& ht = tables().get(p.emb.subgroup);
    for (int i = 0; i < kFrobeniusPairs; ++i, ++pairs) {
      const auto alpha = random_virtual(ht, rng);
      const auto beta = random_virtual(gt, rng);
      if (inner_product(induce_character(alpha, p.emb), beta) != inner_product(alpha, restrict_character(beta, p.emb))) {
        c.expect(false, p.name + " reciprocity");
        break;
      }
    }
  }
  c.detail << (c.ok ? "" : "; ") << groups.size() << " tables, " << pairs << " reciprocity pairs";
}

void criterion9(Check& c, const std::vector<testcat::Pair>& catalog) {
  for (int n = 1; n <= 12; ++n) {
    const auto data = triangular_example(n);
    c.expect(validate(data).ok(), "triangular " + std::to_string(n) + " fails DM = NC");
    if (n >= 2) c.expect(necessary_condition(data, 1, Parity::Even).holds, "depth-2 inequality at " + std::to_string(n));
    c.expect(!data.note.empty(), "missing true-depth note");
  }
  std::size_t compared = 0;
  for (const auto& p : catalog) {
    const auto m = pair_matrix(p.emb);
    const auto data = from_semisimple_pair(m);
    const auto report = min_depth(m);
    for (int n = 1; 2 * n + 1 <= report.search_cap; ++n, ++compared) {
      const bool even = necessary_condition(data, n, Parity::Even).holds;
      const bool odd = necessary_condition(data, n, Parity::Odd).holds;
      // depthcore: d_even is the least even depth, d_odd the least odd depth
      c.expect(even == (report.d_even && *report.d_even <= 2 * n), p.name + " even n=" + std::to_string(n));
      c.expect(odd == (report.d_odd <= 2 * n + 1), p.name + " odd n=" + std::to_string(n));
    }
  }
  c.detail << (c.ok ? "" : "; ") << "triangular n=1..12 valid, depth-2 inequality holds; " << compared
           << " (pair, n) verdicts agree";
}

void criterion10(Check& c, const std::vector<PermutationGroup>& groups) {
  for (const auto& g : centerless(groups)) {
    const auto& t = tables().get(g);
    const auto r = burnside_brauer_bound(adjoint_character(t), t);
    c.detail << g.label() << ": " << r.ell << "<=" << r.distinct_values << " ";
    c.expect(r.holds, g.label());
  }
}

// The report suite used for determinism; each entry is one CLI invocation.
std::vector<std::vector<std::string>> report_suite() {
  std::vector<std::vector<std::string>> suite;
  for (const char* g : {"S(3)", "S(4)", "S(5)", "A(4)", "A(5)", "D(8)", "D(10)", "Klein", "G108"}) {
    suite.push_back({"chartab", g});
    suite.push_back({"double", g});
  }
  for (const char* h : {"S(3)", "D(8)", "Klein", "A(4)", "perm(4; (1 2)(3 4))", "perm(4; (1 2 3 4))"}) {
    for (const char* cmd : {"depth", "module-depth", "chain", "corefree"}) suite.push_back({cmd, "S(4)", h});
  }
  suite.push_back({"depth", "S(6)", "S(5)"});
  suite.push_back({"diag", "S(3)"});
  suite.push_back({"diag", "S(4)"});
  return suite;
}

std::string run_suite(const std::vector<std::string>& flags) {
  std::string all;
  for (auto args : report_suite()) {
    args.insert(args.end(), flags.begin(), flags.end());
    for (const char* extra : {"--format", "json", "--certificate"}) args.push_back(extra);
    const auto r = cli::run(args);
    if (r.exit_code != 0) throw std::runtime_error("suite command failed: " + r.err);
    all += r.out;
  }
  return all;
}

void criterion11(Check& c) {
  const auto dir = std::filesystem::temp_directory_path() / ("subdepth-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const auto cold = run_suite({"--threads", "1", "--cache-dir", dir.string()});
  const auto warm = run_suite({"--threads", "4", "--cache-dir", dir.string()});
  const auto none = run_suite({"--threads", "2", "--no-cache"});
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  std::filesystem::remove_all(dir);
  c.expect(cold == warm, "cold vs warm cache differ");
  c.expect(cold == none, "cached vs uncached differ");
  c.expect(files > 0, "cache stayed empty");
  c.detail << (c.ok ? "" : "; ") << report_suite().size() << " reports, " << cold.size() << " bytes, " << files
           << " cached tables";
}

}  // namespace

int main() {
  const auto catalog = testcat::embeddings();
  const auto groups = testcat::groups();
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"symmetric chain d = 2n-1", criterion1},
      {"D8 in S4 and its corefree quotient", criterion2},
      {"Drinfeld double of S(n)", criterion3},
      {"order-108 example", criterion4},
      {"d <= 2 iff normal", [&](Check& c) { criterion5(c, catalog); }},
      {"interval and h-depth ladder", [&](Check& c) { criterion6(c, catalog); }},
      {"diagonal depth and center components", [&](Check& c) { criterion7(c, groups); }},
      {"character table integrity", [&](Check& c) { criterion8(c, groups, catalog); }},
      {"algebra matrix data", [&](Check& c) { criterion9(c, catalog); }},
      {"Burnside-Brauer bound", [&](Check& c) { criterion10(c, groups); }},
      {"deterministic JSON reports", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << c.detail.str() << "] (" << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
