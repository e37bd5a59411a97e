#include "covhom/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "covhom/error.hpp"

namespace covhom {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail("ParseError", "line " + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Joins whitespace-separated fragments around '=' so each assignment forms
// one token regardless of spacing. Whitespace inside a cycle literal is part
// of the literal, never a separator.
std::vector<std::string> assignment_tokens(const std::string& value) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  std::size_t i = 0;
  while (i < value.size()) {
    const char ch = value[i];
    if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < value.size() && std::isspace(static_cast<unsigned char>(value[j]))) ++j;
      const bool next_eq = j < value.size() && value[j] == '=';
      const bool prev_eq = !cur.empty() && cur.back() == '=';
      if (!next_eq && !prev_eq && !cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
      i = j;
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')' && depth > 0) --depth;
    cur.push_back(ch);
    ++i;
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

struct WordScanner {
  const GroupPtr& group;
  const std::string& text;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& what) const {
    parse_fail(line, what + " at column " + std::to_string(pos + 1) + " of word '" + text + "'");
  }

  Elem atom() {
    if (pos >= text.size()) err("expected a generator, 'e' or a cycle literal");
    const char c = text[pos];
    if (c == 'e') {
      ++pos;
      return group->identity();
    }
    if (c == '(') return cycle_literal();
    if (c == 's') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) err("generator name needs an index");
      int idx = 0;
      try {
        idx = std::stoi(text.substr(start, pos - start));
      } catch (const std::exception&) {
        err("generator index out of range");
      }
      if (idx < 1 || idx > static_cast<int>(group->generators().size()))
        err("unknown generator s" + std::to_string(idx));
      return group->generators()[static_cast<std::size_t>(idx - 1)];
    }
    err(std::string("unexpected character '") + c + "'");
  }

  Elem cycle_literal() {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) err("unclosed cycle");
      pos = close + 1;
    }
    const std::string cycles = text.substr(start, pos - start);
    Perm p = Perm::parse_cycles(cycles);
    if (p.degree() > group->degree())
      err("cycle mentions point " + std::to_string(p.degree()) + " beyond the group's degree");
    const Elem x = group->index_of(p.padded(group->degree()));
    if (x < 0) err("permutation " + cycles + " is not an element of the group");
    return x;
  }

  Elem factor() {
    const Elem base = atom();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        err("expected an integer exponent");
      long k = 0;
      try {
        k = std::stol(text.substr(start, pos - start));
      } catch (const std::exception&) {
        err("exponent out of range");
      }
      return group->power(base, k);
    }
    return base;
  }

  Elem word() {
    Elem acc = factor();
    while (pos < text.size()) {
      if (text[pos] != '*') err("expected '*' between factors");
      ++pos;
      acc = group->mul(acc, factor());
    }
    return acc;
  }
};

Elem eval_word_at(const GroupPtr& group, const std::string& word, int line) {
  WordScanner scanner{group, word, line};
  return scanner.word();
}

GroupPtr parse_group_line(const std::string& value, int line, long max_order) {
  std::vector<Perm> gens;
  std::stringstream in(value);
  std::string part;
  while (std::getline(in, part, ';')) {
    part = strip(part);
    if (part.empty()) parse_fail(line, "empty generator between ';'");
    gens.push_back(Perm::parse_cycles(part));
  }
  if (gens.empty()) parse_fail(line, "group needs at least one generator");
  int degree = 1;
  for (const Perm& p : gens) degree = std::max(degree, p.degree());
  for (Perm& p : gens) p = p.padded(degree);
  return FiniteGroup::enumerate(std::move(gens), max_order);
}

}  // namespace

Elem eval_word(const GroupPtr& group, const std::string& word) { return eval_word_at(group, word, 0); }

ParsedInput parse_input_text(const std::string& text, long max_order) {
  ParsedInput input;
  std::optional<BaseKind> base_kind;
  int base_genus = 0;
  std::optional<std::string> hyperbolic_value;
  std::optional<std::string> parabolic_value;
  std::optional<std::string> stabilizer_value;
  int hyperbolic_line = 0;
  int parabolic_line = 0;
  int stabilizer_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string trimmed = strip(raw);
    if (trimmed.empty()) continue;
    const std::size_t colon = trimmed.find(':');
    if (colon == std::string::npos) parse_fail(line, "expected 'key: value'");
    const std::string key = strip(trimmed.substr(0, colon));
    const std::string value = strip(trimmed.substr(colon + 1));

    if (key == "group") {
      if (input.group) parse_fail(line, "duplicate group line");
      input.group = parse_group_line(value, line, max_order);
    } else if (key == "base") {
      if (base_kind) parse_fail(line, "duplicate base line");
      std::istringstream bv(value);
      std::string kind;
      bv >> kind;
      if (kind == "disk") {
        base_kind = BaseKind::Disk;
      } else if (kind == "closed") {
        std::string gtok;
        if (!(bv >> gtok) || gtok.rfind("g=", 0) != 0) parse_fail(line, "closed base needs 'g=<genus>'");
        try {
          base_genus = std::stoi(gtok.substr(2));
        } catch (const std::exception&) {
          parse_fail(line, "bad genus '" + gtok.substr(2) + "'");
        }
        base_kind = BaseKind::Closed;
      } else {
        parse_fail(line, "base must be 'closed g=<genus>' or 'disk'");
      }
      std::string extra;
      if (bv >> extra) parse_fail(line, "trailing text '" + extra + "' after base");
    } else if (key == "hyperbolic") {
      if (hyperbolic_value) parse_fail(line, "duplicate hyperbolic line");
      hyperbolic_value = value;
      hyperbolic_line = line;
    } else if (key == "parabolic") {
      if (parabolic_value) parse_fail(line, "duplicate parabolic line");
      parabolic_value = value;
      parabolic_line = line;
    } else if (key == "stabilizer") {
      if (stabilizer_value) parse_fail(line, "duplicate stabilizer line");
      stabilizer_value = value;
      stabilizer_line = line;
    } else {
      parse_fail(line, "unknown key '" + key + "'");
    }
  }

  if (!input.group) fail("ParseError", "missing group line");

  if (stabilizer_value) {
    std::vector<Elem> elems;
    std::istringstream sv(*stabilizer_value);
    std::string word;
    while (sv >> word) elems.push_back(eval_word_at(input.group, word, stabilizer_line));
    input.stabilizer = std::move(elems);
  }

  if (!base_kind) {
    if (hyperbolic_value) parse_fail(hyperbolic_line, "hyperbolic images need a base line");
    if (parabolic_value) parse_fail(parabolic_line, "parabolic images need a base line");
    return input;
  }

  CoverSpec spec;
  spec.group = input.group;
  spec.base_kind = *base_kind;
  spec.base_genus = base_genus;

  const auto read_assignments = [&](const std::string& value, char prefix, int at_line) {
    std::map<int, Elem> by_index;
    for (const std::string& tok : assignment_tokens(value)) {
      const std::size_t eq = tok.find('=');
      if (eq == std::string::npos) parse_fail(at_line, "expected '<name>=<word>', got '" + tok + "'");
      const std::string name = tok.substr(0, eq);
      if (name.size() < 2 || name[0] != prefix)
        parse_fail(at_line, "expected names starting with '" + std::string(1, prefix) + "', got '" + name + "'");
      int idx = 0;
      try {
        idx = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        parse_fail(at_line, "bad index in '" + name + "'");
      }
      if (by_index.count(idx)) parse_fail(at_line, "duplicate assignment for " + name);
      by_index[idx] = eval_word_at(input.group, tok.substr(eq + 1), at_line);
    }
    std::vector<Elem> out;
    for (int i = 1; i <= static_cast<int>(by_index.size()); ++i) {
      auto it = by_index.find(i);
      if (it == by_index.end())
        parse_fail(at_line, std::string(1, prefix) + std::to_string(i) + " is missing; indices must run 1..n");
      out.push_back(it->second);
    }
    return out;
  };

  if (hyperbolic_value) {
    std::map<int, Elem> as;
    std::map<int, Elem> bs;
    for (const std::string& tok : assignment_tokens(*hyperbolic_value)) {
      const std::size_t eq = tok.find('=');
      if (eq == std::string::npos) parse_fail(hyperbolic_line, "expected '<name>=<word>', got '" + tok + "'");
      const std::string name = tok.substr(0, eq);
      if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
        parse_fail(hyperbolic_line, "hyperbolic names are a<i> and b<i>, got '" + name + "'");
      int idx = 0;
      try {
        idx = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        parse_fail(hyperbolic_line, "bad index in '" + name + "'");
      }
      auto& side = name[0] == 'a' ? as : bs;
      if (side.count(idx)) parse_fail(hyperbolic_line, "duplicate assignment for " + name);
      side[idx] = eval_word_at(input.group, tok.substr(eq + 1), hyperbolic_line);
    }
    if (as.size() != bs.size())
      parse_fail(hyperbolic_line, "hyperbolic a's and b's must pair up");
    for (int i = 1; i <= static_cast<int>(as.size()); ++i) {
      if (!as.count(i) || !bs.count(i))
        parse_fail(hyperbolic_line, "hyperbolic pair " + std::to_string(i) + " is incomplete");
      spec.hyperbolic_images.emplace_back(as[i], bs[i]);
    }
  }
  if (parabolic_value) spec.parabolic_images = read_assignments(*parabolic_value, 'l', parabolic_line);

  input.spec = std::move(spec);
  return input;
}

std::string render_element(const GroupPtr& group, Elem x) { return group->perm(x).cycles(); }

std::string render_cover_spec(const CoverSpec& spec) {
  std::ostringstream out;
  out << "group: ";
  const auto& gens = spec.group->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ";";
    out << render_element(spec.group, gens[i]);
  }
  out << "\n";
  if (spec.is_closed())
    out << "base: closed g=" << spec.base_genus << "\n";
  else
    out << "base: disk\n";
  if (!spec.hyperbolic_images.empty()) {
    out << "hyperbolic:";
    for (std::size_t i = 0; i < spec.hyperbolic_images.size(); ++i)
      out << " a" << i + 1 << "=" << render_element(spec.group, spec.hyperbolic_images[i].first) << " b" << i + 1
          << "=" << render_element(spec.group, spec.hyperbolic_images[i].second);
    out << "\n";
  }
  if (!spec.parabolic_images.empty()) {
    out << "parabolic:";
    for (std::size_t i = 0; i < spec.parabolic_images.size(); ++i)
      out << " l" << i + 1 << "=" << render_element(spec.group, spec.parabolic_images[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_class_function(const ClassFunction& chi) {
  std::ostringstream out;
  out << "(";
  for (int c = 0; c < chi.size(); ++c) {
    if (c) out << ", ";
    out << chi.value(c).str();
  }
  out << ")";
  return out.str();
}

std::string render_character_table(const TablePtr& table) {
  const GroupPtr& G = table->group();
  const int r = G->class_count();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"class"};
  for (int c = 0; c < r; ++c) head.push_back(std::to_string(c + 1));
  grid.push_back(std::move(head));
  std::vector<std::string> sizes{"size"};
  for (int c = 0; c < r; ++c) sizes.push_back(std::to_string(G->conjugacy_class(c).size()));
  grid.push_back(std::move(sizes));
  std::vector<std::string> reps{"rep"};
  for (int c = 0; c < r; ++c) reps.push_back(render_element(G, G->conjugacy_class(c).rep));
  grid.push_back(std::move(reps));
  for (int i = 0; i < table->rows(); ++i) {
    std::vector<std::string> row{"chi_" + std::to_string(i + 1)};
    for (int c = 0; c < r; ++c) row.push_back(table->irreducible(i).value(c).str());
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(static_cast<std::size_t>(r) + 1, 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace covhom
