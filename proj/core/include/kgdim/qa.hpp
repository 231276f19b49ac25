#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgdim/edge.hpp"
#include "kgdim/lexicalize.hpp"
#include "kgdim/rng.hpp"

namespace kgdim {

inline constexpr std::string_view kBlankMarker = "[MASK]";

enum class Split : uint8_t { Train, Dev };

std::string_view split_name(Split s);

struct QAItem {
  std::string id;
  std::string question;  // lexicalized edge with the tail blanked out
  std::string answer;    // tail first label
  std::array<std::string, 2> distractors;
  Dimension dimension = Dimension::Lexical;
  std::string source;
  Split split = Split::Train;
  std::string provenance_edge;
  std::vector<uint64_t> seed_path;  // pool indices drawn while sampling

  // Internal provenance, not serialized.
  std::string relation;
  std::string head_key;    // normalized head, for truth checks and splits
  std::string answer_key;  // normalized answer
  bool relaxed_token_rule = false;
};

struct Stem {
  std::string question;
  std::string answer;
};

// Question stem: the lexicalized sentence with the tail replaced by
// kBlankMarker. Throws DataError when the edge cannot be lexicalized.
Stem make_stem(const Edge& edge, const TemplateTable& templates);

// Truth set over normalized triples (head_key, relation, tail_key), used to
// reject distractors that would form a true statement.
class KgIndex {
public:
  void add(const Edge& edge);
  bool contains(std::string_view head_key, std::string_view relation,
                std::string_view tail_key) const;
  std::size_t size() const { return triples_.size(); }

private:
  std::unordered_set<std::string> triples_;
};

struct Candidate {
  std::string text;  // display form
  std::string key;   // normalize_node(text)
};

// Candidate answers grouped by relation, deduplicated by key, in sorted
// order so that seeded draws are reproducible everywhere.
class CandidatePools {
public:
  void add(const Edge& edge);
  void finalize();  // sort + dedup; call once after all adds
  std::span<const Candidate> pool(std::string_view relation) const;

private:
  std::map<std::string, std::vector<Candidate>, std::less<>> by_relation_;
  bool finalized_ = false;
};

// Lowercased content tokens of a normalized text (stopwords removed).
std::set<std::string> content_tokens(std::string_view normalized_text);

struct DistractorResult {
  std::array<std::string, 2> distractors;
  std::vector<uint64_t> seed_path;
  bool relaxed_token_rule = false;
};

// Draws two distractors for the stem. Rejects candidates that (a) equal the
// answer (or each other) under normalization, (b) form a true triple with
// the head under the item's relation, or (c) share a content token with the
// answer. After the attempt budget, rule (c) alone is relaxed and the budget
// renewed; nullopt when even that fails.
std::optional<DistractorResult> sample_distractors(
    std::string_view head_key, std::string_view relation,
    std::string_view answer_key, std::span<const Candidate> pool,
    const KgIndex& index, Rng& rng, int attempts_per_phase = 64);

enum class AtomicFold : uint8_t { Train, Dev, Test };

// The official event->fold table: TSV rows `event\t{train|dev|test}`.
// Events are matched through normalize_node.
class AtomicSplitTable {
public:
  static AtomicSplitTable load(std::istream& in);
  static AtomicSplitTable load_file(const std::string& path);

  std::optional<AtomicFold> find(std::string_view event_key) const;
  std::size_t size() const { return by_event_.size(); }

private:
  std::unordered_map<std::string, AtomicFold> by_event_;
};

struct SplitOptions {
  bool source_aware = true;  // route ATOMIC items through the official split
  double dev_fraction = 0.05;
  uint64_t seed = 0;
  const AtomicSplitTable* atomic_split = nullptr;
  std::string atomic_source = "AT";
  bool strict = false;  // ATOMIC items without a split table become an error
};

struct SplitStats {
  uint64_t hashed_train = 0;
  uint64_t hashed_dev = 0;
  uint64_t atomic_from_table = 0;
  uint64_t atomic_test_dropped = 0;
  uint64_t atomic_fallback_hashed = 0;
};

// Assigns item.split in place. Non-ATOMIC items: seeded hash order over
// provenance_edge with an exact dev quota of round(n * dev_fraction).
// ATOMIC items follow the official table; its test fold is dropped (indices
// returned). Throws UsageError for dev_fraction outside (0,1).
std::vector<std::size_t> split_items(std::vector<QAItem>& items,
                                     const SplitOptions& options,
                                     SplitStats* stats = nullptr);

struct QABucket {
  Dimension dimension = Dimension::Lexical;
  std::vector<QAItem> train;
  std::vector<QAItem> dev;
};

struct QAReport {
  struct Counts {
    uint64_t train = 0;
    uint64_t dev = 0;
  };
  std::map<Dimension, Counts> buckets;
  uint64_t input_edges = 0;
  uint64_t dimensionless = 0;
  uint64_t excluded_relation = 0;
  uint64_t unlexicalizable = 0;
  uint64_t dropped_no_distractors = 0;
  uint64_t relaxed_token_rule = 0;
  SplitStats split;
};

struct QAOptions {
  uint64_t seed = 0;
  std::set<std::string> exclude_relations = {"/r/RelatedTo"};
  double dev_fraction = 0.05;
  bool source_aware = true;
  const AtomicSplitTable* atomic_split = nullptr;
  std::string atomic_source = "AT";
  bool strict = false;
  int attempts_per_phase = 64;
};

struct QASet {
  std::vector<QABucket> buckets;  // one per dimension present, in order
  QAReport report;
};

// The full pipeline: stem, distractors, split, bucket per dimension.
// Deterministic: identical (edges, templates, options) give identical sets.
QASet build_buckets(std::span<const Edge> edges, const TemplateTable& templates,
                    const QAOptions& options);

// One JSON object per line with exactly the serialized fields
// id, question, answer, distractors, dimension, source, provenance_edge.
std::string to_jsonl(std::span<const QAItem> items);

// CSV `dimension,train,dev` over the bucket counts.
std::string render_qa_report_csv(const QAReport& report);

}  // namespace kgdim
