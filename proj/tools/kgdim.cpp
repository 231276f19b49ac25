// kgdim: consolidates tabular commonsense KG sources under 13 knowledge
// dimensions and runs the coverage / overlap / clustering-agreement / QA
// generation pipelines on the unified edge format.

#include <unistd.h>

#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kgdim/agreement.hpp"
#include "kgdim/clustering.hpp"
#include "kgdim/coverage.hpp"
#include "kgdim/edge_io.hpp"
#include "kgdim/enrich.hpp"
#include "kgdim/error.hpp"
#include "kgdim/hash.hpp"
#include "kgdim/io.hpp"
#include "kgdim/lexicalize.hpp"
#include "kgdim/mapping.hpp"
#include "kgdim/overlap.hpp"
#include "kgdim/qa.hpp"
#include "kgdim/rng.hpp"
#include "kgdim/version.hpp"

namespace fs = std::filesystem;
using namespace kgdim;

namespace {

std::string version_line() {
  std::ostringstream os;
  os << "kgdim " << kVersion << " (default-mapping fnv1a:" << std::hex
     << mapping_checksum(default_mapping()) << ")";
  return os.str();
}

void log_config(const std::string& subcommand,
                const std::vector<std::pair<std::string, std::string>>& kv) {
  std::cerr << "kgdim " << kVersion << " " << subcommand;
  for (const auto& [key, value] : kv) std::cerr << ' ' << key << '=' << value;
  std::cerr << '\n';
}

void write_text_atomic(const std::string& path, const std::string& content) {
  AtomicWriter writer(path);
  writer.stream() << content;
  writer.commit();
}

// `--out -` or no --out writes to stdout; files are written atomically.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_text_atomic(out_path, content);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(',', start);
    if (pos == std::string::npos) {
      if (start < s.size()) out.push_back(s.substr(start));
      break;
    }
    if (pos > start) out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

struct MapDimsArgs {
  std::string input, out, mapping, stats_out, source_filter;
  std::vector<std::string> exclude_prefixes;
  bool strict = false;
};

int run_map_dims(const MapDimsArgs& args) {
  log_config("map-dims", {{"input", args.input},
                          {"out", args.out},
                          {"mapping", args.mapping.empty() ? "<builtin>" : args.mapping},
                          {"strict", args.strict ? "1" : "0"}});
  MappingTable custom;
  const MappingTable* table = &default_mapping();
  if (!args.mapping.empty()) {
    custom = load_mapping_file(args.mapping);
    table = &custom;
  }
  if (!args.exclude_prefixes.empty()) {
    if (args.mapping.empty()) custom = default_mapping();
    for (const auto& p : args.exclude_prefixes) custom.add_excluded_prefix(p);
    table = &custom;
  }

  ReadOptions options;
  options.strict = args.strict;
  if (!args.source_filter.empty()) {
    const auto list = split_commas(args.source_filter);
    options.source_filter.emplace(list.begin(), list.end());
  }

  auto in = open_input(args.input);
  EdgeReader reader(*in, options);
  DimensionAssigner assigner(*table);

  AtomicWriter writer(args.out);
  EdgeWriter edge_writer(writer.stream());
  while (auto edge = reader.next()) {
    if (auto enriched = assigner(std::move(*edge))) {
      edge_writer.write(*enriched);
    }
  }
  writer.commit();

  const EnrichStats& stats = assigner.stats();
  std::cerr << "map-dims: input=" << stats.input << " mapped=" << stats.mapped
            << " excluded=" << stats.excluded
            << " unmapped=" << stats.unmapped_total()
            << " bad_rows=" << reader.stats().bad
            << " filtered=" << reader.stats().filtered << '\n';
  if (!args.stats_out.empty()) {
    std::ostringstream os;
    os << "relation,unmapped_count\n";
    for (const auto& [relation, count] : stats.unmapped) {
      os << relation << ',' << count << '\n';
    }
    write_text_atomic(args.stats_out, os.str());
  }
  return 0;
}

struct CoverageArgs {
  std::string input, format = "csv", out;
  bool dedup = false;
};

int run_coverage(const CoverageArgs& args) {
  log_config("coverage", {{"input", args.input},
                          {"format", args.format},
                          {"dedup", args.dedup ? "1" : "0"}});
  const TableFormat format =
      args.format == "markdown" ? TableFormat::Markdown : TableFormat::Csv;
  auto in = open_input(args.input);
  EdgeReader reader(*in);
  const CoverageMatrix matrix = coverage_counts(reader, {.dedup = args.dedup});
  emit(args.out, render_coverage(matrix, format));
  return 0;
}

struct OverlapArgs {
  std::string input, sources, mode = "dimension", out;
};

int run_overlap(const OverlapArgs& args) {
  log_config("overlap", {{"input", args.input},
                         {"sources", args.sources},
                         {"mode", args.mode}});
  const auto sources = split_commas(args.sources);
  if (sources.size() < 2) {
    throw UsageError("--sources needs at least two comma-separated ids");
  }
  const OverlapMode mode =
      args.mode == "relation" ? OverlapMode::Relation : OverlapMode::Dimension;
  auto in = open_input(args.input);
  EdgeReader reader(*in);
  const auto reports = pairwise_overlap(reader, sources, mode);
  emit(args.out, render_overlap_csv(reports));
  return 0;
}

struct LexicalizeArgs {
  std::string input, templates, out;
  bool strict = false;
};

int run_lexicalize(const LexicalizeArgs& args) {
  log_config("lexicalize", {{"input", args.input},
                            {"templates",
                             args.templates.empty() ? "<builtin>" : args.templates}});
  TemplateTable custom;
  const TemplateTable* table = &default_templates();
  if (!args.templates.empty()) {
    custom = load_templates_file(args.templates);
    table = &custom;
  }
  auto in = open_input(args.input);
  EdgeReader reader(*in, {.source_filter = std::nullopt, .strict = args.strict});

  const bool to_stdout = args.out.empty() || args.out == "-";
  std::optional<AtomicWriter> writer;
  if (!to_stdout) writer.emplace(args.out);
  std::ostream& os = to_stdout ? std::cout : writer->stream();

  os << "id\tsentence\n";
  uint64_t skipped = 0;
  while (auto edge = reader.next()) {
    try {
      os << edge->id << '\t' << lexicalize_edge(*edge, *table) << '\n';
    } catch (const DataError&) {
      if (args.strict) throw;
      ++skipped;
    }
  }
  if (writer) writer->commit();
  if (skipped > 0) std::cerr << "lexicalize: skipped=" << skipped << '\n';
  return 0;
}

struct ClusterArgs {
  std::string vectors, edges, report_out, assignments_out;
  int k = 13;
  uint64_t seed = 0;
  int max_iter = 300;
  double tol = 1e-4;
  int threads = 1;
  uint64_t sample = 0;  // 0 = all rows in the assignments export
  bool strict = false;
};

int run_cluster(const ClusterArgs& args) {
  log_config("cluster", {{"vectors", args.vectors},
                         {"edges", args.edges},
                         {"k", std::to_string(args.k)},
                         {"seed", std::to_string(args.seed)},
                         {"threads", std::to_string(args.threads)}});
  VectorTable all_vectors = VectorTable::load_file(args.vectors);

  auto in = open_input(args.edges);
  std::vector<Edge> edges = read_edges(*in);
  DimensionPartition dims = dimension_partition(edges);

  // Restrict to ids that have both a vector and a dimension.
  std::set<std::string> vector_ids(all_vectors.ids().begin(),
                                   all_vectors.ids().end());
  uint64_t no_vector = 0;
  for (auto it = dims.by_id.begin(); it != dims.by_id.end();) {
    if (vector_ids.count(it->first) == 0) {
      ++no_vector;
      it = dims.by_id.erase(it);
    } else {
      ++it;
    }
  }
  uint64_t no_dimension = 0;
  std::vector<std::string> keep_ids;
  std::vector<std::vector<double>> keep_rows;
  for (std::size_t i = 0; i < all_vectors.size(); ++i) {
    if (dims.by_id.count(all_vectors.ids()[i]) == 0) {
      ++no_dimension;
      continue;
    }
    const auto row = all_vectors.row(i);
    keep_ids.push_back(all_vectors.ids()[i]);
    keep_rows.emplace_back(row.begin(), row.end());
  }
  if (args.strict && (no_vector > 0 || no_dimension > 0)) {
    throw DataError("cluster --strict: vector ids and dimension-assigned "
                    "edge ids do not coincide (" +
                    std::to_string(no_vector) + " without vector, " +
                    std::to_string(no_dimension) + " without dimension)");
  }
  if (keep_ids.empty()) {
    throw DataError("no edge has both a vector and an assigned dimension");
  }
  VectorTable vectors =
      VectorTable::from_rows(std::move(keep_ids), std::move(keep_rows));
  std::cerr << "cluster: points=" << vectors.size()
            << " width=" << vectors.width() << " dropped_no_vector=" << no_vector
            << " dropped_no_dimension=" << no_dimension
            << " dimensionless=" << dims.excluded << '\n';

  KMeansOptions options;
  options.k = args.k;
  options.seed = args.seed;
  options.max_iter = args.max_iter;
  options.tol = args.tol;
  options.threads = args.threads;
  const Clustering clustering = kmeans(vectors, options);

  const AgreementReport agreement = cluster_dimension_jaccard(clustering, dims);

  std::vector<Edge> clustered_edges;
  for (const Edge& e : edges) {
    if (dims.by_id.count(e.id) > 0) clustered_edges.push_back(e);
  }
  const auto profiles = cluster_profile(clustering, clustered_edges);

  std::ostringstream summary;
  summary.precision(6);
  summary << "ari," << agreement.ari << '\n';
  summary << "cluster,dimension,jaccard\n";
  const std::size_t n_top = std::min<std::size_t>(10, agreement.pairs.size());
  for (std::size_t i = 0; i < n_top; ++i) {
    const PairScore& p = agreement.pairs[i];
    summary << p.cluster << ',' << dimension_name(p.dimension) << ','
            << p.jaccard << '\n';
  }
  std::cout << summary.str();

  if (!args.report_out.empty()) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["k"] = clustering.k;
    j["seed"] = clustering.seed;
    j["iterations"] = clustering.iterations;
    j["inertia"] = clustering.inertia;
    j["points"] = clustering.ids.size();
    j["ari"] = agreement.ari;
    auto& pairs = j["top_pairs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n_top; ++i) {
      const PairScore& p = agreement.pairs[i];
      pairs.push_back({{"cluster", p.cluster},
                       {"dimension", dimension_name(p.dimension)},
                       {"jaccard", p.jaccard},
                       {"intersection", p.intersection},
                       {"union", p.unions}});
    }
    auto& clusters = j["clusters"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < profiles.size(); ++c) {
      nlohmann::ordered_json jc;
      jc["cluster"] = c;
      jc["size"] = profiles[c].size;
      auto& hist = jc["dimension_histogram"] = nlohmann::ordered_json::object();
      for (const Dimension d : all_dimensions()) {
        const uint64_t n = profiles[c].dimension_histogram[static_cast<std::size_t>(d)];
        if (n > 0) hist[std::string(dimension_name(d))] = n;
      }
      auto& top3 = jc["top_dimensions"] = nlohmann::ordered_json::array();
      for (const PairScore& p : agreement.top3_by_cluster[c]) {
        top3.push_back({{"dimension", dimension_name(p.dimension)},
                        {"jaccard", p.jaccard}});
      }
      auto& nodes = jc["top_nodes"] = nlohmann::ordered_json::array();
      for (const auto& [node, degree] : profiles[c].top_nodes) {
        nodes.push_back({{"node", node}, {"degree", degree}});
      }
      clusters.push_back(std::move(jc));
    }
    write_text_atomic(args.report_out, j.dump(2) + "\n");
  }

  if (!args.assignments_out.empty()) {
    std::vector<std::size_t> rows(clustering.ids.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    if (args.sample > 0 && args.sample < rows.size()) {
      // Seeded uniform sample for external projection/plotting.
      Rng rng(derive_seed(args.seed, "viz-sample"));
      for (std::size_t i = 0; i < args.sample; ++i) {
        const std::size_t j = i + rng.bounded(rows.size() - i);
        std::swap(rows[i], rows[j]);
      }
      rows.resize(args.sample);
      std::sort(rows.begin(), rows.end());
    }
    std::ostringstream os;
    os << "id,cluster,dimension\n";
    for (const std::size_t i : rows) {
      const std::string& id = clustering.ids[i];
      os << id << ',' << clustering.assignment[i] << ','
         << dimension_name(dims.by_id.at(id)) << '\n';
    }
    write_text_atomic(args.assignments_out, os.str());
  }
  return 0;
}

struct QaGenArgs {
  std::string input, out_dir, templates, atomic_split, atomic_source = "AT";
  std::vector<std::string> exclude_relations;
  uint64_t seed = 0;
  double dev_fraction = 0.05;
  bool strict = false;
};

int run_qa_gen(const QaGenArgs& args) {
  log_config("qa-gen", {{"input", args.input},
                        {"out", args.out_dir},
                        {"seed", std::to_string(args.seed)},
                        {"dev_fraction", std::to_string(args.dev_fraction)},
                        {"strict", args.strict ? "1" : "0"}});
  if (fs::exists(args.out_dir)) {
    throw DataError("output directory already exists: " + args.out_dir);
  }

  TemplateTable custom_templates;
  const TemplateTable* templates = &default_templates();
  if (!args.templates.empty()) {
    custom_templates = load_templates_file(args.templates);
    templates = &custom_templates;
  }
  AtomicSplitTable split_table;
  QAOptions options;
  options.seed = args.seed;
  options.dev_fraction = args.dev_fraction;
  options.strict = args.strict;
  options.atomic_source = args.atomic_source;
  if (!args.exclude_relations.empty()) {
    options.exclude_relations.clear();
    options.exclude_relations.insert(args.exclude_relations.begin(),
                                     args.exclude_relations.end());
  }
  if (!args.atomic_split.empty()) {
    split_table = AtomicSplitTable::load_file(args.atomic_split);
    options.atomic_split = &split_table;
  }

  auto in = open_input(args.input);
  const std::vector<Edge> edges = read_edges(*in, {.source_filter = std::nullopt,
                                                   .strict = args.strict});
  const QASet set = build_buckets(edges, *templates, options);

  // Stage the whole tree, then rename into place: a failed run leaves
  // nothing at the target path.
  const fs::path staging =
      fs::path(args.out_dir + ".tmp" + std::to_string(::getpid()));
  fs::create_directories(staging);
  try {
    for (const QABucket& bucket : set.buckets) {
      const std::string stem(dimension_name(bucket.dimension));
      if (!bucket.train.empty()) {
        std::ofstream f(staging / (stem + "_train.jsonl"), std::ios::binary);
        f << to_jsonl(bucket.train);
        if (!f) throw DataError("write failed in " + staging.string());
      }
      if (!bucket.dev.empty()) {
        std::ofstream f(staging / (stem + "_dev.jsonl"), std::ios::binary);
        f << to_jsonl(bucket.dev);
        if (!f) throw DataError("write failed in " + staging.string());
      }
    }
    std::ofstream report(staging / "report.csv", std::ios::binary);
    report << render_qa_report_csv(set.report);
    if (!report) throw DataError("write failed in " + staging.string());
    report.close();
    fs::rename(staging, args.out_dir);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(staging, ec);
    throw;
  }

  const QAReport& r = set.report;
  std::cerr << "qa-gen: input=" << r.input_edges
            << " dimensionless=" << r.dimensionless
            << " excluded_relation=" << r.excluded_relation
            << " unlexicalizable=" << r.unlexicalizable
            << " dropped_no_distractors=" << r.dropped_no_distractors
            << " relaxed_token_rule=" << r.relaxed_token_rule
            << " atomic_test_dropped=" << r.split.atomic_test_dropped
            << " atomic_fallback=" << r.split.atomic_fallback_hashed << '\n';
  std::cout << render_qa_report_csv(set.report);
  return 0;
}

struct StatsArgs {
  std::string input, out;
};

int run_stats(const StatsArgs& args) {
  log_config("stats", {{"input", args.input}});
  auto in = open_input(args.input);
  EdgeReader reader(*in);
  std::map<std::string, uint64_t> by_source;
  std::map<std::string, uint64_t> by_relation;
  std::map<std::string, uint64_t> by_dimension;
  uint64_t unassigned = 0;
  while (auto edge = reader.next()) {
    ++by_source[edge->source];
    ++by_relation[edge->relation];
    if (edge->dimension) {
      ++by_dimension[std::string(dimension_name(*edge->dimension))];
    } else {
      ++unassigned;
    }
  }
  std::ostringstream os;
  os << "metric,key,count\n";
  os << "rows,," << reader.stats().rows << '\n';
  os << "yielded,," << reader.stats().yielded << '\n';
  os << "bad_rows,," << reader.stats().bad << '\n';
  os << "unassigned,," << unassigned << '\n';
  for (const auto& [k, v] : by_source) os << "source," << k << ',' << v << '\n';
  for (const auto& [k, v] : by_dimension) os << "dimension," << k << ',' << v << '\n';
  for (const auto& [k, v] : by_relation) os << "relation," << k << ',' << v << '\n';
  emit(args.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-dimension toolkit for tabular commonsense KGs"};
  app.set_version_flag("--version", version_line());
  app.require_subcommand(1);

  MapDimsArgs map_args;
  auto* map_cmd = app.add_subcommand(
      "map-dims", "Assign a knowledge dimension to every edge");
  map_cmd->add_option("--input", map_args.input, "Edge TSV (.gz ok)")->required();
  map_cmd->add_option("--out", map_args.out, "Enriched edge TSV")->required();
  map_cmd->add_option("--mapping", map_args.mapping,
                      "Custom mapping TSV (default: built-in table)");
  map_cmd->add_option("--exclude-prefix", map_args.exclude_prefixes,
                      "Relation prefix to exclude (with --mapping)");
  map_cmd->add_option("--source-filter", map_args.source_filter,
                      "Comma-separated source ids to keep");
  map_cmd->add_option("--stats-out", map_args.stats_out,
                      "CSV with per-relation unmapped tallies");
  map_cmd->add_flag("--strict", map_args.strict, "Malformed rows are fatal");

  CoverageArgs cov_args;
  auto* cov_cmd = app.add_subcommand(
      "coverage", "Edge counts per source and dimension");
  cov_cmd->add_option("--input", cov_args.input, "Enriched edge TSV (.gz ok)")
      ->required();
  cov_cmd->add_option("--format", cov_args.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cov_cmd->add_option("--out", cov_args.out, "Output file (default stdout)");
  cov_cmd->add_flag("--dedup", cov_args.dedup,
                    "Count distinct (source,node1,relation,node2) once");

  OverlapArgs ov_args;
  auto* ov_cmd = app.add_subcommand(
      "overlap", "Jaccard overlap of normalized triples between sources");
  ov_cmd->add_option("--input", ov_args.input, "Enriched edge TSV (.gz ok)")
      ->required();
  ov_cmd->add_option("--sources", ov_args.sources,
                     "Comma-separated source ids (at least two)")
      ->required();
  ov_cmd->add_option("--mode", ov_args.mode, "relation or dimension")
      ->check(CLI::IsMember({"relation", "dimension"}));
  ov_cmd->add_option("--out", ov_args.out, "Report CSV (default stdout)");

  LexicalizeArgs lex_args;
  auto* lex_cmd = app.add_subcommand(
      "lexicalize", "Render edges as natural-language sentences");
  lex_cmd->add_option("--input", lex_args.input, "Edge TSV (.gz ok)")->required();
  lex_cmd->add_option("--templates", lex_args.templates,
                      "Template TSV (default: built-in table)");
  lex_cmd->add_option("--out", lex_args.out,
                      "Sentence TSV `id\\tsentence` (default stdout)");
  lex_cmd->add_flag("--strict", lex_args.strict,
                    "Unlexicalizable edges are fatal");

  ClusterArgs cl_args;
  auto* cl_cmd = app.add_subcommand(
      "cluster", "k-means over edge embeddings + dimension agreement");
  cl_cmd->add_option("--vectors", cl_args.vectors, "Vector TSV")->required();
  cl_cmd->add_option("--edges", cl_args.edges, "Enriched edge TSV (.gz ok)")
      ->required();
  cl_cmd->add_option("--k", cl_args.k, "Number of clusters (default 13)");
  cl_cmd->add_option("--seed", cl_args.seed, "RNG seed (default 0)");
  cl_cmd->add_option("--max-iter", cl_args.max_iter, "Iteration budget");
  cl_cmd->add_option("--tol", cl_args.tol, "Centroid movement tolerance");
  cl_cmd->add_option("--threads", cl_args.threads,
                     "Worker threads (results do not depend on it)");
  cl_cmd->add_option("--sample", cl_args.sample,
                     "Seeded uniform sample size for --assignments-out");
  cl_cmd->add_option("--report-out", cl_args.report_out, "Agreement JSON");
  cl_cmd->add_option("--assignments-out", cl_args.assignments_out,
                     "CSV id,cluster,dimension");
  cl_cmd->add_flag("--strict", cl_args.strict,
                   "Vector/edge id mismatches are fatal");

  QaGenArgs qa_args;
  auto* qa_cmd = app.add_subcommand(
      "qa-gen", "Per-dimension synthetic multiple-choice QA sets");
  qa_cmd->add_option("--input", qa_args.input, "Enriched edge TSV (.gz ok)")
      ->required();
  qa_cmd->add_option("--out", qa_args.out_dir, "Output directory (must not exist)")
      ->required();
  qa_cmd->add_option("--seed", qa_args.seed, "RNG seed (default 0)");
  qa_cmd->add_option("--templates", qa_args.templates, "Template TSV");
  qa_cmd->add_option("--exclude-relation", qa_args.exclude_relations,
                     "Relation to skip (default /r/RelatedTo)");
  qa_cmd->add_option("--dev-fraction", qa_args.dev_fraction,
                     "Dev share for hashed splits (default 0.05)");
  qa_cmd->add_option("--atomic-split", qa_args.atomic_split,
                     "Official event split TSV for ATOMIC items");
  qa_cmd->add_option("--atomic-source", qa_args.atomic_source,
                     "Source id treated as ATOMIC (default AT)");
  qa_cmd->add_flag("--strict", qa_args.strict,
                   "Missing split table / bad rows are fatal");

  StatsArgs st_args;
  auto* st_cmd = app.add_subcommand("stats", "Edge-file audit counts");
  st_cmd->add_option("--input", st_args.input, "Edge TSV (.gz ok)")->required();
  st_cmd->add_option("--out", st_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage hint
    return 1;
  }

  try {
    if (map_cmd->parsed()) return run_map_dims(map_args);
    if (cov_cmd->parsed()) return run_coverage(cov_args);
    if (ov_cmd->parsed()) return run_overlap(ov_args);
    if (lex_cmd->parsed()) return run_lexicalize(lex_args);
    if (cl_cmd->parsed()) return run_cluster(cl_args);
    if (qa_cmd->parsed()) return run_qa_gen(qa_args);
    if (st_cmd->parsed()) return run_stats(st_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
