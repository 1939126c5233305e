// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brute_force.hpp"
#include "oneconn/cli.hpp"
#include "oneconn/cycles.hpp"
#include "oneconn/generator.hpp"
#include "oneconn/io.hpp"
#include "oneconn/oracle.hpp"
#include "oneconn/radial.hpp"
#include "oneconn/search.hpp"

using namespace oneconn;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Collects the first few problems of a criterion for its report line.
struct Issues {
  std::size_t count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  bool none() const { return count == 0; }
  std::string summary() const { return none() ? "" : "; " + std::to_string(count) + " issues, first: " + first; }
};

std::string describe(const GenConfig& cfg) {
  std::ostringstream os;
  os << "n=" << cfg.n << " f=" << cfg.crossing_fraction << " seed=" << cfg.seed
     << (cfg.variant == Variant::Sparse ? " sparse" : " tri");
  return os.str();
}

std::vector<std::uint32_t> to_plain(const OnePlaneEmbedding& emb, const std::vector<VertexId>& set) {
  std::vector<std::uint32_t> out;
  for (auto v : set) out.push_back(emb.graph_index(v));
  return out;
}

// Cycle-to-set direction, checked on an independent graph model for every cycle
// any criterion produces.
struct ExtractionLog {
  std::size_t cycles = 0;
  Issues issues;

  void check(const RadialPlanarisation& rp, const ConstrainedCycle& cycle, const std::string& where) {
    ++cycles;
    try {
      const auto set = extract_separating_set(rp, cycle);
      const auto plain = testing::plain_graph(rp.base().data());
      if (!testing::separates(plain, to_plain(rp.base(), set.vertices))) issues.add(where + ": set does not separate");
    } catch (const Error& e) {
      issues.add(where + ": " + e.what());
    }
  }
};

ExtractionLog extraction;

struct Instance {
  GenConfig cfg;
  OnePlaneEmbedding emb;
  ConnectivityResult cycle_method;
  OracleResult oracle;
};

// Criteria 1 and 2 share one corpus.
std::vector<Instance> criterion_1() {
  const auto configs = corpus(600, 5, 60, 20240);
  std::vector<Instance> out;
  Issues issues;
  std::size_t agree = 0, fallback = 0;
  double busy = 0;
  for (const auto& cfg : configs) {
    const auto emb = generate(cfg);
    const auto start = Clock::now();
    try {
      auto r = vertex_connectivity(emb);
      const auto o = connectivity_flow(emb);
      busy += seconds_since(start);
      if (r.kappa == o.kappa) {
        ++agree;
      } else {
        issues.add(describe(cfg) + ": cycle " + std::to_string(r.kappa) + " vs flow " + std::to_string(o.kappa));
      }
      fallback += r.method == Method::OracleFallback;
      out.push_back({cfg, emb, std::move(r), o});
    } catch (const Error& e) {
      busy += seconds_since(start);
      issues.add(describe(cfg) + ": " + e.what());
    }
  }
  std::ostringstream os;
  os << agree << "/" << configs.size() << " agree (complete graphs, no constrained cycle: " << fallback << "), "
     << busy << " s (limit 120 s)" << issues.summary();
  report(1, "oracle equivalence", issues.none() && agree == configs.size() && busy <= 120.0, os.str());
  return out;
}

void criterion_2(const std::vector<Instance>& instances) {
  Issues issues;
  std::size_t with_set = 0, exhaustive = 0;
  for (const auto& inst : instances) {
    if (!inst.oracle.set) continue;  // complete graph, nothing to separate
    ++with_set;
    const auto& r = inst.cycle_method;
    if (!r.cycle) {
      issues.add(describe(inst.cfg) + ": no cycle although a separating set exists");
      continue;
    }
    extraction.check(*r.radial, *r.cycle, describe(inst.cfg));
    if (r.cycle->length() != 2 * inst.oracle.kappa) {
      issues.add(describe(inst.cfg) + ": length " + std::to_string(r.cycle->length()) + " vs 2*kappa " +
                 std::to_string(2 * inst.oracle.kappa));
    }
    if (inst.cfg.n <= 14) {
      ++exhaustive;
      const auto plain = testing::plain_lambda(r.radial->base().data());
      const auto len = static_cast<std::uint32_t>(r.cycle->length());
      if (const auto shorter = testing::shortest_psi_length(plain, len - 2)) {
        issues.add(describe(inst.cfg) + ": exhaustive search found length " + std::to_string(*shorter));
      }
      if (testing::psi_cycles(plain, len).empty()) {
        issues.add(describe(inst.cfg) + ": exhaustive search misses the reported length");
      }
    }
  }
  std::ostringstream os;
  os << with_set << " instances with |X| = 2*kappa checked, " << exhaustive
     << " confirmed minimal by exhaustive enumeration (n <= 14)" << issues.summary();
  report(2, "cycle length equals twice kappa", issues.none() && with_set > 0 && exhaustive > 0, os.str());
}

void criterion_3() {
  Issues issues;
  std::size_t sets = 0;
  const auto configs = corpus(100, 5, 14, 31337);
  for (const auto& cfg : configs) {
    const auto emb = complete_kites(generate(cfg));
    const auto rp = build_radial(emb);
    const auto plain = testing::plain_graph(emb.data());
    const auto lambda = testing::plain_lambda(emb.data());
    std::vector<SeparatingSet> all;
    try {
      all = enumerate_separators(emb, 7);  // asserts every member touches every flap
    } catch (const Error& e) {
      issues.add(describe(cfg) + ": " + e.what());
      continue;
    }
    for (const auto& s : all) {
      ++sets;
      const auto where = describe(cfg) + " set of " + std::to_string(s.size());
      std::vector<bool> removed(plain.size(), false);
      for (auto v : s.vertices) removed[emb.graph_index(v)] = true;
      for (auto v : s.vertices) {
        auto back = removed;
        back[emb.graph_index(v)] = false;
        if (testing::count_components(plain, back) != 1) issues.add(where + ": member misses a flap");
      }
      try {
        for (auto f : mark_face_vertices(rp, s)) {
          const auto& walk = lambda.face_walks[f - lambda.base];
          const auto into = std::count_if(walk.begin(), walk.end(), [&](VertexId v) {
            return std::binary_search(s.vertices.begin(), s.vertices.end(), v);
          });
          if (into < 2) issues.add(where + ": marked face with one edge into the set");
        }
        const auto cycle = construct_cycle_from_set(rp, s);
        if (!check_constraints(rp, cycle).all()) issues.add(where + ": constraints fail");
        if (cycle.length() > 2 * s.size()) issues.add(where + ": cycle longer than 2|S|");
        for (auto v : cycle.vertices) {
          if (v < emb.vertex_count() && emb.is_original(v) && !std::binary_search(s.vertices.begin(), s.vertices.end(), v)) {
            issues.add(where + ": cycle leaves the set");
          }
        }
        if (!testing::psi1(lambda, cycle.vertices)) issues.add(where + ": independent psi1 check fails");
        extraction.check(rp, cycle, where);
      } catch (const Error& e) {
        issues.add(where + ": " + e.what());
      }
    }
  }
  std::ostringstream os;
  os << sets << " minimal separating sets on " << configs.size() << " graphs round-tripped" << issues.summary();
  report(3, "separating set to cycle", issues.none() && sets > 0, os.str());
}

void criterion_4() {
  std::ostringstream os;
  os << extraction.cycles << " produced cycles extract a separating set" << extraction.issues.summary();
  report(4, "cycle to separating set", extraction.issues.none() && extraction.cycles > 0, os.str());
}

void criterion_5(const std::vector<Instance>& instances) {
  Issues issues;
  for (const auto& inst : instances) {
    const auto& emb = inst.emb;
    const auto n = emb.graph().size();
    const auto m = emb.graph().edge_count();
    if (m > 4 * n - 8) issues.add(describe(inst.cfg) + ": m = " + std::to_string(m));
    if (inst.oracle.kappa > 7) issues.add(describe(inst.cfg) + ": kappa " + std::to_string(inst.oracle.kappa));
    const auto rp = build_radial(complete_kites(emb));
    const auto faces = rp.lambda().trace_faces();
    for (const auto& f : faces.boundaries) {
      if (f.size() != 3) {
        issues.add(describe(inst.cfg) + ": Lambda face of length " + std::to_string(f.size()));
        break;
      }
    }
    const auto plain = testing::plain_lambda(rp.base().data());
    if (rp.lambda().vertex_count() != rp.base().vertex_count() + plain.faces) {
      issues.add(describe(inst.cfg) + ": |V(Lambda)| identity fails");
    }
  }
  report(5, "structural bounds", issues.none(),
         std::to_string(instances.size()) + " graphs: m <= 4n-8, kappa <= 7, triangular Lambda" + issues.summary());
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

void criterion_6(const fs::path& dir) {
  Issues issues;
  std::ostringstream detail;
  for (const auto* name : {"grid-no-kites", "arrow-two-kites"}) {
    const auto emb = fixture(name);
    const auto file = (dir / (std::string(name) + ".json")).string();
    std::ofstream(file) << embedding_to_string(emb);
    const auto plain_run = cli_run({"connectivity", file});
    if (plain_run.code != cli::kPrecondition) issues.add(std::string(name) + ": exit " + std::to_string(plain_run.code));
    const auto forced = cli_run({"connectivity", file, "--force-oracle", "--json"});
    const auto seps = enumerate_separators(emb, 7);
    if (forced.code != cli::kOk || seps.empty()) {
      issues.add(std::string(name) + ": forced oracle run failed");
      continue;
    }
    const auto kappa = nlohmann::json::parse(forced.out)["kappa"].get<std::uint32_t>();
    if (kappa != seps.front().size()) {
      issues.add(std::string(name) + ": oracle " + std::to_string(kappa) + " vs enumeration " +
                 std::to_string(seps.front().size()));
    }
    detail << name << " exit " << plain_run.code << ", kappa " << kappa << "; ";
    if (std::string(name) == "grid-no-kites") {
      const auto lambda = testing::plain_lambda(emb.data());
      const auto shortest = testing::shortest_psi_length(lambda, 2 * kappa);
      if (shortest) issues.add("grid: psi cycle of length " + std::to_string(*shortest));
      detail << "grid (" << emb.graph().size() << " vertices): no psi cycle of length <= " << 2 * kappa << "; ";
    }
  }
  report(6, "negative fixtures", issues.none(), detail.str() + issues.summary());
}

// Sizes are timed round-robin after one untimed pass, so a slow spell on a
// shared machine lands on every size instead of skewing one ratio.
void criterion_7() {
  constexpr std::uint32_t kFirst = 13, kLast = 17, kRuns = 5;
  std::vector<EmbeddingData> inputs;
  for (std::uint32_t exp = kFirst; exp <= kLast; ++exp) {
    inputs.push_back(generate({1u << exp, 0.2, exp, Variant::TriangulationBased}).data());
  }
  const auto stage = [](EmbeddingData input) {
    const auto start = Clock::now();
    const auto emb = OnePlaneEmbedding::create(std::move(input));
    const auto rp = build_radial(complete_kites(emb));
    const double t = seconds_since(start);
    return rp.lambda().vertex_count() > 0 ? t : -1.0;
  };
  for (const auto& input : inputs) stage(input);
  std::vector<std::vector<double>> runs(inputs.size());
  bool ok = true;
  for (std::uint32_t rep = 0; rep < kRuns; ++rep) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      auto input = inputs[i];
      const double t = stage(std::move(input));
      ok = ok && t >= 0;
      runs[i].push_back(t);
    }
  }
  std::ostringstream os;
  double previous = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::sort(runs[i].begin(), runs[i].end());
    const double median = runs[i][kRuns / 2];
    os << (i ? ", " : "") << "n=2^" << kFirst + i << " " << median * 1000 << " ms";
    if (i > 0) {
      const double ratio = median / previous;
      ok = ok && ratio <= 2.5;
      os << " (x" << ratio << ")";
    }
    previous = median;
  }
  report(7, "linear stage scaling", ok, os.str() + "; limit x2.5 per doubling, median of 5");
}

void criterion_8(const fs::path& dir) {
  const std::vector<std::string> args{"compare", "--trials", "50", "--seed", "7", "--json", "--dump-dir", dir.string()};
  const auto a = cli_run(args);
  const auto b = cli_run(args);
  const bool ok = a.code == cli::kOk && b.code == cli::kOk && a.out == b.out && !a.out.empty();
  report(8, "determinism", ok,
         std::to_string(a.out.size()) + " bytes of compare JSON, runs " + (a.out == b.out ? "identical" : "differ"));
}

}  // namespace

int main() {
  const auto dir = fs::temp_directory_path() / "oneconn-acceptance";
  fs::create_directories(dir);
  const auto start = Clock::now();
  const auto instances = criterion_1();
  criterion_2(instances);
  criterion_3();
  criterion_4();
  criterion_5(instances);
  criterion_6(dir);
  criterion_7();
  criterion_8(dir);
  fs::remove_all(dir);
  std::printf("%d of 8 criteria failed, %.1f s total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
