#include "kgdim/qa.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kgdim/error.hpp"
#include "kgdim/hash.hpp"
#include "kgdim/overlap.hpp"

namespace kgdim {

namespace {

constexpr char kSep = '\x1f';

// Template scaffolding and function words; anything else counts as content.
const std::set<std::string>& stopwords() {
  static const std::set<std::string> words = {
      "a",    "an",   "and",  "are",  "as",   "at",   "be",      "been",
      "being", "by",  "for",  "from", "in",   "is",   "it",      "its",
      "of",   "on",   "or",   "the",  "their", "them", "they",   "this",
      "to",   "was",  "were", "with", "you",  "your", "personx", "persony",
      "someone", "something"};
  return words;
}

}  // namespace

std::string_view split_name(Split s) {
  return s == Split::Train ? "train" : "dev";
}

Stem make_stem(const Edge& edge, const TemplateTable& templates) {
  Stem stem;
  stem.answer = display_label(edge.node2_label);
  stem.question = lexicalize_edge_with_tail(edge, templates, kBlankMarker);
  return stem;
}

void KgIndex::add(const Edge& edge) {
  std::string key = normalize_node(edge.node1_label);
  key += kSep;
  key += edge.relation;
  key += kSep;
  key += normalize_node(edge.node2_label);
  triples_.insert(std::move(key));
}

bool KgIndex::contains(std::string_view head_key, std::string_view relation,
                       std::string_view tail_key) const {
  std::string key;
  key.reserve(head_key.size() + relation.size() + tail_key.size() + 2);
  key += head_key;
  key += kSep;
  key += relation;
  key += kSep;
  key += tail_key;
  return triples_.count(key) > 0;
}

void CandidatePools::add(const Edge& edge) {
  std::string text = display_label(edge.node2_label);
  if (text.empty()) return;
  Candidate cand;
  cand.key = normalize_node(text);
  cand.text = std::move(text);
  by_relation_[edge.relation].push_back(std::move(cand));
}

void CandidatePools::finalize() {
  for (auto& [relation, pool] : by_relation_) {
    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
      return a.key != b.key ? a.key < b.key : a.text < b.text;
    });
    pool.erase(std::unique(pool.begin(), pool.end(),
                           [](const Candidate& a, const Candidate& b) {
                             return a.key == b.key;
                           }),
               pool.end());
  }
  finalized_ = true;
}

std::span<const Candidate> CandidatePools::pool(std::string_view relation) const {
  assert(finalized_);  // draw order is only canonical after finalize()
  const auto it = by_relation_.find(relation);
  if (it == by_relation_.end()) return {};
  return it->second;
}

std::set<std::string> content_tokens(std::string_view normalized_text) {
  std::set<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && stopwords().count(current) == 0) {
      tokens.insert(current);
    }
    current.clear();
  };
  for (const char c : normalized_text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || uc >= 0x80) {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::optional<DistractorResult> sample_distractors(
    std::string_view head_key, std::string_view relation,
    std::string_view answer_key, std::span<const Candidate> pool,
    const KgIndex& index, Rng& rng, int attempts_per_phase) {
  if (pool.size() < 2) return std::nullopt;

  DistractorResult result;
  const auto answer_tokens = content_tokens(answer_key);
  std::vector<const Candidate*> accepted;

  auto try_phase = [&](bool enforce_token_rule) {
    for (int attempt = 0;
         attempt < attempts_per_phase && accepted.size() < 2; ++attempt) {
      const uint64_t draw = rng.bounded(pool.size());
      result.seed_path.push_back(draw);
      const Candidate& cand = pool[draw];
      if (cand.key == answer_key) continue;  // rule (a)
      if (std::any_of(accepted.begin(), accepted.end(),
                      [&](const Candidate* c) { return c->key == cand.key; })) {
        continue;  // pairwise distinct
      }
      if (index.contains(head_key, relation, cand.key)) continue;  // rule (b)
      if (enforce_token_rule) {
        const auto tokens = content_tokens(cand.key);
        const bool overlaps =
            std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) {
              return answer_tokens.count(t) > 0;
            });
        if (overlaps) continue;  // rule (c)
      }
      accepted.push_back(&cand);
    }
  };

  try_phase(/*enforce_token_rule=*/true);
  if (accepted.size() < 2) {
    result.relaxed_token_rule = true;
    try_phase(/*enforce_token_rule=*/false);
  }
  if (accepted.size() < 2) return std::nullopt;
  result.distractors = {accepted[0]->text, accepted[1]->text};
  return result;
}

AtomicSplitTable AtomicSplitTable::load(std::istream& in) {
  AtomicSplitTable table;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError("split file line " + std::to_string(lineno) +
                      ": expected `event\\tfold`");
    }
    const std::string_view fold_name =
        std::string_view(line).substr(tab + 1);
    AtomicFold fold;
    if (fold_name == "train") {
      fold = AtomicFold::Train;
    } else if (fold_name == "dev") {
      fold = AtomicFold::Dev;
    } else if (fold_name == "test") {
      fold = AtomicFold::Test;
    } else {
      throw DataError("split file line " + std::to_string(lineno) +
                      ": fold must be train, dev or test, got '" +
                      std::string(fold_name) + "'");
    }
    table.by_event_[normalize_node(std::string_view(line).substr(0, tab))] =
        fold;
  }
  return table;
}

AtomicSplitTable AtomicSplitTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open split file: " + path);
  return load(in);
}

std::optional<AtomicFold> AtomicSplitTable::find(
    std::string_view event_key) const {
  const auto it = by_event_.find(std::string(event_key));
  return it == by_event_.end() ? std::nullopt
                               : std::optional<AtomicFold>(it->second);
}

std::vector<std::size_t> split_items(std::vector<QAItem>& items,
                                     const SplitOptions& options,
                                     SplitStats* stats) {
  if (!(options.dev_fraction > 0.0 && options.dev_fraction < 1.0)) {
    throw UsageError("dev fraction must be in (0,1)");
  }
  SplitStats local;
  std::vector<std::size_t> dropped;
  std::vector<std::size_t> hashed;  // indices split by quota

  for (std::size_t i = 0; i < items.size(); ++i) {
    QAItem& item = items[i];
    const bool is_atomic =
        options.source_aware && item.source == options.atomic_source;
    if (!is_atomic) {
      hashed.push_back(i);
      continue;
    }
    const AtomicFold* fold = nullptr;
    std::optional<AtomicFold> found;
    if (options.atomic_split != nullptr) {
      found = options.atomic_split->find(item.head_key);
      if (found) fold = &*found;
    } else if (options.strict) {
      throw DataError(
          "ATOMIC items present but no official split file was given");
    }
    if (fold == nullptr) {
      // Not covered by the table (or no table in lenient mode).
      ++local.atomic_fallback_hashed;
      hashed.push_back(i);
      continue;
    }
    switch (*fold) {
      case AtomicFold::Train:
        item.split = Split::Train;
        ++local.atomic_from_table;
        break;
      case AtomicFold::Dev:
        item.split = Split::Dev;
        ++local.atomic_from_table;
        break;
      case AtomicFold::Test:
        ++local.atomic_test_dropped;
        dropped.push_back(i);
        break;
    }
  }

  // Exact quota fill: order by seeded hash of the provenance edge, take the
  // first round(n * fraction) as dev.
  std::vector<std::pair<uint64_t, std::size_t>> order;
  order.reserve(hashed.size());
  for (const std::size_t i : hashed) {
    order.emplace_back(derive_seed(options.seed, items[i].provenance_edge), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return items[a.second].provenance_edge < items[b.second].provenance_edge;
  });
  for (std::size_t r = 0; r < order.size(); ++r) hashed[r] = order[r].second;
  const auto n_dev = static_cast<std::size_t>(
      std::llround(options.dev_fraction * static_cast<double>(hashed.size())));
  for (std::size_t rank = 0; rank < hashed.size(); ++rank) {
    const bool dev = rank < n_dev;
    items[hashed[rank]].split = dev ? Split::Dev : Split::Train;
    ++(dev ? local.hashed_dev : local.hashed_train);
  }

  if (stats != nullptr) *stats = local;
  return dropped;
}

QASet build_buckets(std::span<const Edge> edges, const TemplateTable& templates,
                    const QAOptions& options) {
  QASet set;
  QAReport& report = set.report;

  KgIndex index;
  CandidatePools pools;
  for (const Edge& edge : edges) {
    index.add(edge);
    pools.add(edge);
  }
  pools.finalize();

  std::array<std::vector<QAItem>, kDimensionCount> per_dimension;
  for (const Edge& edge : edges) {
    ++report.input_edges;
    if (!edge.dimension) {
      ++report.dimensionless;
      continue;
    }
    if (options.exclude_relations.count(edge.relation) > 0) {
      ++report.excluded_relation;
      continue;
    }
    Stem stem;
    try {
      stem = make_stem(edge, templates);
    } catch (const DataError&) {
      if (options.strict) throw;
      ++report.unlexicalizable;
      continue;
    }

    QAItem item;
    item.head_key = normalize_node(edge.node1_label);
    item.answer_key = normalize_node(stem.answer);
    item.relation = edge.relation;

    Rng rng(derive_seed(options.seed, edge.id));
    auto drawn = sample_distractors(item.head_key, edge.relation,
                                    item.answer_key, pools.pool(edge.relation),
                                    index, rng, options.attempts_per_phase);
    if (!drawn) {
      ++report.dropped_no_distractors;
      continue;
    }
    if (drawn->relaxed_token_rule) ++report.relaxed_token_rule;

    item.id = "qa:" + edge.id;
    item.question = std::move(stem.question);
    item.answer = std::move(stem.answer);
    item.distractors = std::move(drawn->distractors);
    item.seed_path = std::move(drawn->seed_path);
    item.relaxed_token_rule = drawn->relaxed_token_rule;
    item.dimension = *edge.dimension;
    item.source = edge.source;
    item.provenance_edge = edge.id;
    per_dimension[static_cast<std::size_t>(*edge.dimension)]
        .push_back(std::move(item));
  }

  SplitOptions split_options;
  split_options.source_aware = options.source_aware;
  split_options.dev_fraction = options.dev_fraction;
  split_options.seed = options.seed;
  split_options.atomic_split = options.atomic_split;
  split_options.atomic_source = options.atomic_source;
  split_options.strict = options.strict;

  for (const Dimension d : all_dimensions()) {
    auto& items = per_dimension[static_cast<std::size_t>(d)];
    if (items.empty()) continue;
    SplitStats stats;
    const auto dropped = split_items(items, split_options, &stats);
    report.split.hashed_train += stats.hashed_train;
    report.split.hashed_dev += stats.hashed_dev;
    report.split.atomic_from_table += stats.atomic_from_table;
    report.split.atomic_test_dropped += stats.atomic_test_dropped;
    report.split.atomic_fallback_hashed += stats.atomic_fallback_hashed;

    std::vector<char> is_dropped(items.size(), 0);
    for (const std::size_t i : dropped) is_dropped[i] = 1;

    QABucket bucket;
    bucket.dimension = d;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (is_dropped[i]) continue;
      auto& target = items[i].split == Split::Dev ? bucket.dev : bucket.train;
      target.push_back(std::move(items[i]));
    }
    if (bucket.train.empty() && bucket.dev.empty()) continue;
    report.buckets[d] = {static_cast<uint64_t>(bucket.train.size()),
                         static_cast<uint64_t>(bucket.dev.size())};
    set.buckets.push_back(std::move(bucket));
  }
  return set;
}

std::string to_jsonl(std::span<const QAItem> items) {
  std::string out;
  for (const QAItem& item : items) {
    nlohmann::ordered_json j;
    j["id"] = item.id;
    j["question"] = item.question;
    j["answer"] = item.answer;
    j["distractors"] = item.distractors;
    j["dimension"] = dimension_name(item.dimension);
    j["source"] = item.source;
    j["provenance_edge"] = item.provenance_edge;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string render_qa_report_csv(const QAReport& report) {
  std::ostringstream out;
  out << "dimension,train,dev\n";
  for (const auto& [dim, counts] : report.buckets) {
    out << dimension_name(dim) << ',' << counts.train << ',' << counts.dev
        << '\n';
  }
  return out.str();
}

}  // namespace kgdim
