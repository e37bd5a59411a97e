#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covhom/character_table.hpp"
#include "covhom/cover_spec.hpp"

namespace covhom {

// Line-oriented input format. '#' starts a comment.
//
//   group: (1 2 3 4);(1 3)
//   base: closed g=1          (or: base: disk)
//   hyperbolic: a1=s1 b1=s2^-1
//   parabolic: l1=s1*s2 l2=(1 3)(2 4)
//   stabilizer: s1 s2^2
//
// Words multiply generators s1..sk with '*' and integer powers '^n'; 'e' and
// '()' denote the identity and a parenthesized cycle literal names any group
// element directly. The stabilizer line feeds the topological command.
struct ParsedInput {
  GroupPtr group;
  std::optional<CoverSpec> spec;
  std::optional<std::vector<Elem>> stabilizer;
};

ParsedInput parse_input_text(const std::string& text, long max_order = FiniteGroup::kOrderCap);

// Evaluates a word of the grammar above inside the group.
Elem eval_word(const GroupPtr& group, const std::string& word);

// Echo of a cover spec in the input grammar; elements render as cycle
// literals, so the echo parses back to the same spec.
std::string render_cover_spec(const CoverSpec& spec);

std::string render_element(const GroupPtr& group, Elem x);

// Tuple of exact values in class order, e.g. "(5, 1)".
std::string render_class_function(const ClassFunction& chi);

// Aligned grid with class sizes and representatives.
std::string render_character_table(const TablePtr& table);

}  // namespace covhom
