#include "oneconn/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneconn/cycles.hpp"
#include "oneconn/embedding.hpp"
#include "oneconn/export.hpp"
#include "oneconn/generator.hpp"
#include "oneconn/io.hpp"
#include "oneconn/oracle.hpp"
#include "oneconn/radial.hpp"
#include "oneconn/search.hpp"

namespace oneconn::cli {
namespace {

using Json = nlohmann::ordered_json;

Json header() {
  Json doc;
  doc["schema"] = 1;
  return doc;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(1) << '\n'; }

Json labels(const OnePlaneEmbedding& emb, const std::vector<VertexId>& vertices) {
  Json arr = Json::array();
  for (auto v : vertices) arr.push_back(emb.label(v));
  return arr;
}

std::string label_list(const OnePlaneEmbedding& emb, const std::vector<VertexId>& vertices) {
  std::string s;
  for (auto v : vertices) {
    if (!s.empty()) s += ' ';
    s += std::to_string(emb.label(v));
  }
  return s.empty() ? "(empty)" : s;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ONECONN_THREADS")) {
    try {
      const auto cap = std::stoul(env);
      if (cap > 0) n = std::min<std::size_t>(n, cap);
    } catch (const std::exception&) {
      // Unparsable caps are ignored.
    }
  }
  return std::max<std::size_t>(1, std::min(n, jobs));
}

struct Options {
  std::string file;
  bool json = false;
  bool oracle_check = false;
  bool complete = true;
  bool force_oracle = false;
  bool overlay = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::uint32_t nmin = 5;
  std::uint32_t nmax = 40;
  std::uint32_t n = 10;
  double fraction = 0.0;
  std::string variant = "triangulation";
  std::string fixture;
  std::string what = "gx";
  std::string format = "dot";
  std::optional<std::size_t> limit;
  std::optional<std::uint32_t> enumerate;
  std::string dump_dir = ".";
};

int cmd_validate(const Options& o, std::ostream& out) {
  const auto emb = load_embedding(o.file);
  const auto dummies = emb.vertex_count() - emb.originals().size();
  if (o.json) {
    auto doc = header();
    doc["valid"] = true;
    doc["vertices"] = emb.originals().size();
    doc["dummies"] = dummies;
    doc["original_edges"] = emb.original_edges().size();
    doc["crossings"] = emb.crossings().size();
    emit(out, doc);
  } else {
    out << "valid: " << emb.originals().size() << " vertices, " << emb.original_edges().size() << " edges, "
        << emb.crossings().size() << " crossings\n";
  }
  return kOk;
}

int cmd_planarise(const Options& o, std::ostream& out) {
  const auto emb = load_embedding(o.file);
  const auto& gx = emb.planarisation();
  if (o.json) {
    auto doc = header();
    doc["vertices"] = gx.vertex_count();
    doc["edges"] = gx.edge_count();
    doc["faces"] = emb.faces().size();
    doc["dummies"] = emb.crossings().size();
    Json faces = Json::array();
    for (const auto& face : trace_faces(emb)) {
      Json walk = Json::array();
      for (auto d : face.boundary) walk.push_back(emb.label(gx.origin(d)));
      faces.push_back(std::move(walk));
    }
    doc["face_boundaries"] = std::move(faces);
    emit(out, doc);
  } else {
    out << "planarisation: " << gx.vertex_count() << " vertices (" << emb.crossings().size() << " dummy), "
        << gx.edge_count() << " edges, " << emb.faces().size() << " faces\n";
  }
  return kOk;
}

int cmd_radialise(const Options& o, std::ostream& out) {
  auto emb = load_embedding(o.file);
  if (o.complete) emb = complete_kites(emb);
  const auto rp = build_radial(emb);
  const auto faces = rp.lambda().trace_faces();
  const bool triangular = std::all_of(faces.boundaries.begin(), faces.boundaries.end(),
                                      [](const auto& b) { return b.size() == 3; });
  if (o.json) {
    auto doc = header();
    doc["vertices"] = rp.lambda().vertex_count();
    doc["face_vertices"] = rp.face_count();
    doc["edges"] = rp.lambda().edge_count();
    doc["radial_edges"] = rp.radial_edge_count();
    doc["faces"] = faces.size();
    doc["all_triangular"] = triangular;
    emit(out, doc);
  } else {
    out << "lambda: " << rp.lambda().vertex_count() << " vertices (" << rp.face_count() << " face), "
        << rp.lambda().edge_count() << " edges (" << rp.radial_edge_count() << " radial), " << faces.size()
        << " faces, " << (triangular ? "all triangular" : "NOT all triangular") << '\n';
  }
  return kOk;
}

int cmd_kites(const Options& o, std::ostream& out) {
  const auto emb = load_embedding(o.file);
  const auto report = is_locally_maximal(emb);
  std::size_t added = 0;
  std::optional<OnePlaneEmbedding> completed;
  if (o.complete && report.ok) completed = complete_kites(emb, &added);
  if (o.json) {
    auto doc = header();
    doc["locally_maximal"] = report.ok;
    Json missing = Json::array();
    for (const auto& m : report.missing) {
      missing.push_back({{"dummy", emb.label(emb.crossings()[m.crossing].dummy)},
                         {"u", emb.label(m.u)},
                         {"v", emb.label(m.v)}});
    }
    doc["missing"] = std::move(missing);
    doc["kite_faces_complete"] = has_all_kite_faces(emb);
    if (completed) {
      doc["added"] = added;
      doc["embedding"] = embedding_to_json(*completed);
    }
    emit(out, doc);
  } else {
    out << (report.ok ? "locally maximal" : "not locally maximal") << '\n';
    for (const auto& m : report.missing) {
      out << "  crossing at " << emb.label(emb.crossings()[m.crossing].dummy) << " lacks edge (" << emb.label(m.u)
          << "," << emb.label(m.v) << ")\n";
    }
    if (completed) out << "kite completion added " << added << " edges\n";
  }
  return kOk;
}

int cmd_connectivity(const Options& o, std::ostream& out) {
  const auto emb = load_embedding(o.file);
  ConnectivityOptions opts;
  opts.complete_kites = o.complete;
  opts.force_oracle = o.force_oracle;
  opts.oracle_check = o.oracle_check;
  const auto result = vertex_connectivity(emb, opts);
  std::vector<ConstrainedCycle> cycles;
  if (o.limit && result.radial) cycles = all_shortest_cycles(*result.radial, *o.limit);

  if (o.json) {
    auto doc = header();
    doc["kappa"] = result.kappa;
    doc["set"] = result.separating_set ? labels(emb, result.separating_set->vertices) : Json();
    doc["cycle_len"] = result.cycle ? Json(result.cycle->length()) : Json();
    doc["method"] = method_name(result.method);
    doc["cycle"] = result.cycle ? cycle_to_json(*result.radial, *result.cycle) : Json();
    if (o.limit) {
      Json list = Json::array();
      for (const auto& c : cycles) list.push_back(cycle_to_json(*result.radial, c));
      doc["cycles"] = std::move(list);
    }
    emit(out, doc);
  } else {
    out << "kappa: " << result.kappa << '\n';
    out << "separating set: "
        << (result.separating_set ? label_list(emb, result.separating_set->vertices) : std::string("none")) << '\n';
    out << "cycle length: " << (result.cycle ? std::to_string(result.cycle->length()) : std::string("none")) << '\n';
    out << "method: " << method_name(result.method) << '\n';
    if (o.limit) out << "shortest cycles listed: " << cycles.size() << '\n';
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto emb = load_embedding(o.file);
  const auto result = connectivity_flow(emb);
  std::vector<SeparatingSet> separators;
  if (o.enumerate) {
    separators = enumerate_separators(emb, *o.enumerate);
    if (o.limit && separators.size() > *o.limit) separators.resize(*o.limit);
  }
  if (o.json) {
    auto doc = header();
    doc["kappa"] = result.kappa;
    doc["set"] = result.set ? labels(emb, result.set->vertices) : Json();
    if (o.enumerate) {
      Json list = Json::array();
      for (const auto& s : separators) list.push_back(labels(emb, s.vertices));
      doc["separators"] = std::move(list);
    }
    emit(out, doc);
  } else {
    out << "kappa: " << result.kappa << '\n';
    out << "separating set: " << (result.set ? label_list(emb, result.set->vertices) : std::string("none")) << '\n';
    for (const auto& s : separators) out << "minimal separator: " << label_list(emb, s.vertices) << '\n';
  }
  return kOk;
}

const char* variant_name(Variant v) { return v == Variant::Sparse ? "sparse" : "triangulation"; }

struct Trial {
  GenConfig config;
  std::size_t crossings = 0;
  std::optional<std::uint32_t> kappa;
  std::optional<std::uint32_t> oracle;
  std::string method;
  std::string error;
  bool agree = false;
  std::string dump;  // embedding text, kept only on disagreement
};

void run_trial(Trial& t) {
  try {
    const auto emb = generate(t.config);
    t.crossings = emb.crossings().size();
    t.oracle = connectivity_flow(emb).kappa;
    try {
      const auto result = vertex_connectivity(emb);
      t.kappa = result.kappa;
      t.method = method_name(result.method);
    } catch (const Error& e) {
      t.error = e.what();
    }
    t.agree = t.kappa && *t.kappa == *t.oracle;
    if (!t.agree) t.dump = embedding_to_string(emb);
  } catch (const Error& e) {
    t.error = e.what();
  }
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const auto configs = corpus(o.trials, o.nmin, o.nmax, o.seed);
  std::vector<Trial> trials(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) trials[i].config = configs[i];

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (auto i = next++; i < trials.size(); i = next++) run_trial(trials[i]);
  };
  std::vector<std::thread> pool;
  const auto workers = worker_count(trials.size());
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t agreed = 0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    auto& t = trials[i];
    if (t.agree) {
      ++agreed;
      continue;
    }
    if (!t.dump.empty()) {
      const auto path = std::filesystem::path(o.dump_dir) /
                        ("compare-seed" + std::to_string(o.seed) + "-trial" + std::to_string(i) + ".json");
      std::ofstream(path) << t.dump;
      err << "trial " << i << ": disagreement, embedding written to " << path.string() << '\n';
    }
    if (!t.error.empty()) err << "trial " << i << ": " << t.error << '\n';
  }

  if (o.json) {
    auto doc = header();
    doc["seed"] = o.seed;
    doc["trials"] = trials.size();
    doc["nmin"] = o.nmin;
    doc["nmax"] = o.nmax;
    doc["agree"] = agreed;
    Json results = Json::array();
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& t = trials[i];
      Json r;
      r["trial"] = i;
      r["n"] = t.config.n;
      r["fraction"] = t.config.crossing_fraction;
      r["variant"] = variant_name(t.config.variant);
      r["crossings"] = t.crossings;
      r["kappa"] = t.kappa ? Json(*t.kappa) : Json();
      r["oracle_kappa"] = t.oracle ? Json(*t.oracle) : Json();
      r["method"] = t.method;
      r["agree"] = t.agree;
      if (!t.error.empty()) r["error"] = t.error;
      results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    emit(out, doc);
  } else {
    out << agreed << '/' << trials.size() << " agree\n";
  }
  return agreed == trials.size() ? kOk : kMismatch;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (!o.fixture.empty()) {
    out << embedding_to_string(fixture(o.fixture));
    return kOk;
  }
  GenConfig config;
  config.n = o.n;
  config.crossing_fraction = o.fraction;
  config.seed = o.seed;
  config.variant = o.variant == "sparse" ? Variant::Sparse : Variant::TriangulationBased;
  out << embedding_to_string(generate(config));
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  auto emb = load_embedding(o.file);
  const bool dot = o.format == "dot";
  if (o.what == "g") {
    if (dot) out << graph_to_dot(emb);
    else emit(out, graph_to_json(emb));
    return kOk;
  }
  if (o.complete) emb = complete_kites(emb);
  if (o.what == "gx") {
    if (dot) out << planarisation_to_dot(emb);
    else out << embedding_to_string(emb);
    return kOk;
  }
  const auto rp = build_radial(emb);
  std::optional<ConstrainedCycle> cycle;
  if (o.overlay) cycle = shortest_constrained_cycle(rp);
  if (dot) {
    out << lambda_to_dot(rp, cycle ? &*cycle : nullptr);
  } else {
    auto doc = lambda_to_json(rp);
    if (o.overlay) doc["cycle"] = cycle ? cycle_to_json(rp, *cycle) : Json();
    emit(out, doc);
  }
  return kOk;
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Malformed:
    case Errc::Dangling:
    case Errc::Loop:
    case Errc::DummyDegree:
    case Errc::NonAlternating:
    case Errc::DoubleCrossed:
    case Errc::AdjacentCrossing:
    case Errc::NotSphere:
    case Errc::UnknownVertex:
      return kInvalidEmbedding;
    case Errc::NotLocallyMaximal:
    case Errc::Disconnected:
    case Errc::PreconditionFailed:
    case Errc::TooLarge:
    case Errc::TooSmall:
    case Errc::NotEndpoint:
    case Errc::NotIncident:
      return kPrecondition;
    case Errc::UnknownFixture:
      return kUsage;
    case Errc::NotACycle:
    case Errc::ConstraintViolated:
    case Errc::NotSeparating:
    case Errc::NotMinimal:
    case Errc::WitnessNotFound:
    case Errc::ClaimViolated:
    case Errc::InternalMismatch:
      return kMismatch;
  }
  return kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex connectivity of locally maximal 1-plane graphs", "oneconn"};
  app.require_subcommand(1);
  Options o;

  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "embedding JSON file")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  std::vector<std::pair<CLI::App*, CLI::Option*>> kite_flags;
  const auto add_kites_flag = [&](CLI::App* sub) {
    kite_flags.emplace_back(
        sub, sub->add_flag("--complete-kites,!--no-complete-kites", o.complete, "insert missing kite edges first"));
  };

  auto* validate = app.add_subcommand("validate", "check an embedding file");
  add_file(validate);
  auto* planarise = app.add_subcommand("planarise", "summarise the planarisation G^x");
  add_file(planarise);
  auto* radialise = app.add_subcommand("radialise", "summarise the radial planarisation");
  add_file(radialise);
  auto* kites = app.add_subcommand("kites", "report local maximality and kite completion");
  add_file(kites);
  auto* connectivity = app.add_subcommand("connectivity", "vertex connectivity via constrained cycles");
  add_file(connectivity);
  connectivity->add_flag("--oracle-check", o.oracle_check, "cross-check against the flow oracle");
  connectivity->add_flag("--force-oracle", o.force_oracle, "skip the cycle method and use the flow oracle");
  connectivity->add_option("--limit", o.limit, "also list up to this many shortest cycles");
  auto* oracle = app.add_subcommand("oracle", "vertex connectivity via max-flow");
  add_file(oracle);
  oracle->add_option("--enumerate", o.enumerate, "list minimal separators up to this size (n <= 20)");
  oracle->add_option("--limit", o.limit, "cap the number of listed separators");
  auto* compare = app.add_subcommand("compare", "cycle method against the oracle on generated graphs");
  compare->add_flag("--json", o.json, "machine-readable output");
  compare->add_option("--trials", o.trials, "number of generated graphs");
  compare->add_option("--seed", o.seed, "corpus seed");
  compare->add_option("--nmin", o.nmin, "smallest vertex count")->check(CLI::Range(3u, 1u << 20));
  compare->add_option("--nmax", o.nmax, "largest vertex count")->check(CLI::Range(3u, 1u << 20));
  compare->add_option("--dump-dir", o.dump_dir, "where disagreeing embeddings are written");
  auto* gen = app.add_subcommand("gen", "generate a locally maximal 1-plane graph");
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--fraction", o.fraction, "share of eligible edges that receive a crossing")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--variant", o.variant, "triangulation or sparse")
      ->check(CLI::IsMember({"triangulation", "sparse"}));
  const auto names = fixture_names();
  gen->add_option("--fixture", o.fixture, "emit a named fixture instead")
      ->check(CLI::IsMember(std::vector<std::string>(names.begin(), names.end())));
  auto* exp = app.add_subcommand("export", "render G, G^x or Lambda as DOT or JSON");
  exp->add_option("file", o.file, "embedding JSON file")->required();
  exp->add_option("--what", o.what, "g, gx or lambda")->check(CLI::IsMember({"g", "gx", "lambda"}));
  exp->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--overlay", o.overlay, "highlight a shortest constrained cycle (lambda only)");

  for (auto* sub : {radialise, kites, connectivity, exp}) add_kites_flag(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  // Kite completion defaults on for connectivity only.
  for (const auto& [sub, flag] : kite_flags) {
    if (sub->parsed() && flag->count() == 0) o.complete = sub == connectivity;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*planarise) return cmd_planarise(o, out);
    if (*radialise) return cmd_radialise(o, out);
    if (*kites) return cmd_kites(o, out);
    if (*connectivity) return cmd_connectivity(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*compare) return cmd_compare(o, out, err);
    if (*gen) return cmd_gen(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace oneconn::cli
