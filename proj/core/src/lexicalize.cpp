#include "kgdim/lexicalize.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "kgdim/error.hpp"
#include "kgdim/text.hpp"

namespace kgdim {

SentenceTemplate SentenceTemplate::parse(std::string_view text) {
  constexpr std::string_view kHead = "{head}";
  constexpr std::string_view kTail = "{tail}";
  const auto head = text.find(kHead);
  const auto tail = text.find(kTail);
  if (head == std::string_view::npos || tail == std::string_view::npos ||
      text.find(kHead, head + 1) != std::string_view::npos ||
      text.find(kTail, tail + 1) != std::string_view::npos) {
    throw DataError("template must contain {head} and {tail} exactly once: '" +
                    std::string(text) + "'");
  }
  SentenceTemplate tpl;
  tpl.text_ = std::string(text);
  tpl.head_pos_ = head;
  tpl.tail_pos_ = tail;
  return tpl;
}

std::string SentenceTemplate::apply(std::string_view head,
                                    std::string_view tail) const {
  std::string out;
  out.reserve(text_.size() + head.size() + tail.size());
  const std::size_t first = std::min(head_pos_, tail_pos_);
  const std::size_t second = std::max(head_pos_, tail_pos_);
  const std::string_view first_sub = first == head_pos_ ? head : tail;
  const std::string_view second_sub = second == tail_pos_ ? tail : head;
  out += text_.substr(0, first);
  out += first_sub;
  out += text_.substr(first + 6, second - (first + 6));
  out += second_sub;
  out += text_.substr(second + 6);
  return out;
}

void TemplateTable::add(std::string relation, SentenceTemplate tpl) {
  by_relation_.insert_or_assign(std::move(relation), std::move(tpl));
}

const SentenceTemplate* TemplateTable::find(std::string_view relation) const {
  const auto it = by_relation_.find(relation);
  return it == by_relation_.end() ? nullptr : &it->second;
}

TemplateTable load_templates(std::istream& in) {
  TemplateTable table;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw DataError("template file line " + std::to_string(lineno) +
                      ": expected `relation\\ttemplate`");
    }
    try {
      table.add(std::string(fields[0]), SentenceTemplate::parse(fields[1]));
    } catch (const DataError& e) {
      throw DataError("template file line " + std::to_string(lineno) + ": " +
                      e.what());
    }
  }
  return table;
}

TemplateTable load_templates_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open template file: " + path);
  return load_templates(in);
}

std::string display_label(std::string_view label) {
  return collapse_whitespace(first_label(label));
}

namespace {

// "/r/CapableOf" -> "capable of", "at:xWant" -> "x want". Only used when an
// edge has no relation label and no template.
std::string humanize_relation(std::string_view relation) {
  std::string_view tail = relation;
  if (const auto pos = tail.rfind('/'); pos != std::string_view::npos) {
    tail = tail.substr(pos + 1);
  }
  if (const auto pos = tail.rfind(':'); pos != std::string_view::npos) {
    tail = tail.substr(pos + 1);
  }
  std::string out;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const char c = tail[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0) out.push_back(' ');
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (c == '_' || c == '-') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string lexicalize_edge_with_tail(const Edge& edge,
                                      const TemplateTable& templates,
                                      std::string_view tail_text) {
  const std::string head = display_label(edge.node1_label);
  const std::string tail = display_label(edge.node2_label);
  if (head.empty() || tail.empty()) {
    throw DataError("edge '" + edge.id + "': cannot lexicalize, " +
                    (head.empty() ? "node1" : "node2") + " label is empty");
  }
  if (const SentenceTemplate* tpl = templates.find(edge.relation)) {
    return tpl->apply(head, tail_text);
  }
  std::string rel = display_label(edge.relation_label);
  if (rel.empty()) rel = humanize_relation(edge.relation);
  std::string out = head;
  out += ' ';
  out += rel;
  out += ' ';
  out += tail_text;
  return out;
}

std::string lexicalize_edge(const Edge& edge, const TemplateTable& templates) {
  return lexicalize_edge_with_tail(edge, templates,
                                   display_label(edge.node2_label));
}

}  // namespace kgdim
