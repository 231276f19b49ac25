#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kgdim/edge.hpp"

namespace kgdim {

// "{head} is located at {tail}" -- both placeholders exactly once.
class SentenceTemplate {
public:
  // Throws DataError when a placeholder is missing or repeated.
  static SentenceTemplate parse(std::string_view text);

  std::string apply(std::string_view head, std::string_view tail) const;
  const std::string& text() const { return text_; }

private:
  SentenceTemplate() = default;
  std::string text_;
  std::size_t head_pos_ = 0;  // head placeholder offset
  std::size_t tail_pos_ = 0;
};

class TemplateTable {
public:
  void add(std::string relation, SentenceTemplate tpl);
  const SentenceTemplate* find(std::string_view relation) const;
  std::size_t size() const { return by_relation_.size(); }

private:
  std::map<std::string, SentenceTemplate, std::less<>> by_relation_;
};

// Built-in templates for every relation of the default mapping.
const TemplateTable& default_templates();

// Template TSV: `relation\ttemplate`, no header.
TemplateTable load_templates(std::istream& in);
TemplateTable load_templates_file(const std::string& path);

// First label of a node, trimmed and whitespace-collapsed, case preserved.
std::string display_label(std::string_view label);

// Renders the edge through its relation's template, falling back to
// "{head} <relation label> {tail}". Throws DataError (naming the edge id)
// when a node label is empty.
std::string lexicalize_edge(const Edge& edge, const TemplateTable& templates);

// Same rendering with the tail span replaced by `tail_text` (used for
// question stems). The edge's own tail label must still be non-empty.
std::string lexicalize_edge_with_tail(const Edge& edge,
                                      const TemplateTable& templates,
                                      std::string_view tail_text);

}  // namespace kgdim
