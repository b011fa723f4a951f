#include "csheaf/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "csheaf/error.hpp"

namespace csheaf {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'' || c == '.';
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_identifier(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) != 0 || s[0] == '_');
}

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (c == ':' || c == '*' || c == '+' || c == '-') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
    } else if (word_char(c)) {
      const std::size_t start = i;
      while (i < line.size() && word_char(line[i])) ++i;
      out.push_back({line.substr(start, i - start), start + 1});
    } else {
      throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::uint64_t parse_unsigned(const Token& t, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (!is_number(t.text) || ec != std::errc{} || ptr != last)
    throw ParseError(line_no, t.column, std::string("expected a non-negative integer for ") + what + ", got '" + t.text + "'");
  return v;
}

class Parser {
 public:
  AlgebraSpec run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto tokens = tokenize(line, line_no);
      if (tokens.empty()) continue;
      const auto& head = tokens[0];
      if (head.text == "field") {
        field(tokens, line_no);
      } else if (head.text == "vertices") {
        vertices(tokens, line_no);
      } else if (head.text == "arrow") {
        arrow(tokens, line_no);
      } else if (head.text == "relation") {
        relation(tokens, line_no);
      } else if (head.text == "option") {
        option(tokens, line_no);
      } else {
        throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
      }
    }
    if (!field_line_) throw ParseError(line_no + 1, 1, "missing 'field' declaration");
    if (spec_.vertices.empty()) throw ParseError(line_no + 1, 1, "missing 'vertices' declaration");
    return std::move(spec_);
  }

 private:
  static void expect_count(const std::vector<Token>& t, std::size_t n, std::size_t line_no, const char* usage) {
    if (t.size() < n) throw ParseError(line_no, t.back().column + t.back().text.size(), std::string("expected ") + usage);
    if (t.size() > n) throw ParseError(line_no, t[n].column, "unexpected '" + t[n].text + "'; expected " + usage);
  }

  void field(const std::vector<Token>& t, std::size_t line_no) {
    expect_count(t, 2, line_no, "'field <prime>'");
    if (field_line_) throw ParseError(line_no, t[0].column, "field declared twice");
    const auto p = parse_unsigned(t[1], line_no, "the field");
    if (!is_prime(p)) throw ParseError(line_no, t[1].column, "characteristic must be prime (got " + t[1].text + ")");
    if (p > (std::uint64_t{1} << 31)) throw ParseError(line_no, t[1].column, "characteristic too large");
    spec_.characteristic = static_cast<Residue>(p);
    field_line_ = line_no;
  }

  void vertices(const std::vector<Token>& t, std::size_t line_no) {
    if (t.size() < 2) throw ParseError(line_no, t[0].column + t[0].text.size(), "expected at least one vertex name");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!word_char(t[i].text[0])) throw ParseError(line_no, t[i].column, "bad vertex name '" + t[i].text + "'");
      if (!vertex_names_.insert(t[i].text).second)
        throw ParseError(line_no, t[i].column, "duplicate vertex '" + t[i].text + "'");
      spec_.vertices.push_back(t[i].text);
    }
  }

  void require_vertex(const Token& t, std::size_t line_no) const {
    if (vertex_names_.count(t.text) == 0) throw ParseError(line_no, t.column, "unknown vertex '" + t.text + "'");
  }

  void arrow(const std::vector<Token>& t, std::size_t line_no) {
    expect_count(t, 6, line_no, "'arrow <name> : <source> -> <target>'");
    if (!is_identifier(t[1].text)) throw ParseError(line_no, t[1].column, "arrow names must start with a letter");
    if (t[2].text != ":") throw ParseError(line_no, t[2].column, "expected ':'");
    if (t[4].text != "->") throw ParseError(line_no, t[4].column, "expected '->'");
    require_vertex(t[3], line_no);
    require_vertex(t[5], line_no);
    if (arrow_index_.count(t[1].text) != 0) throw ParseError(line_no, t[1].column, "duplicate arrow '" + t[1].text + "'");
    arrow_index_[t[1].text] = spec_.arrows.size();
    spec_.arrows.push_back({t[1].text, t[3].text, t[5].text});
  }

  // relation [sign] [coeff *] arrow (* arrow)* ((+|-) ...)*
  void relation(const std::vector<Token>& t, std::size_t line_no) {
    SpecRelation rel;
    rel.line = line_no;
    std::size_t i = 1;
    std::string source, target;
    if (i == t.size()) throw ParseError(line_no, t[0].column + t[0].text.size(), "empty relation");
    while (i < t.size()) {
      SpecTerm term;
      std::int64_t sign = 1;
      if (t[i].text == "+" || t[i].text == "-") {
        if (t[i].text == "-") sign = -1;
        ++i;
      } else if (!rel.terms.empty()) {
        throw ParseError(line_no, t[i].column, "expected '+' or '-' between terms");
      }
      if (i == t.size()) throw ParseError(line_no, t[i - 1].column + 1, "malformed relation: missing term");
      const std::size_t term_column = t[i].column;
      if (is_number(t[i].text)) {
        const auto c = parse_unsigned(t[i], line_no, "a coefficient");
        term.coefficient = static_cast<std::int64_t>(c % (std::uint64_t{1} << 62));
        ++i;
        if (i == t.size() || t[i].text != "*")
          throw ParseError(line_no, i == t.size() ? t[i - 1].column + t[i - 1].text.size() : t[i].column,
                           "malformed relation: a coefficient must be followed by '*' and a path");
        ++i;
      }
      term.coefficient *= sign;
      // arrow names, written right to left
      std::vector<Token> arrows;
      while (true) {
        if (i == t.size()) throw ParseError(line_no, t[i - 1].column + 1, "malformed relation: missing arrow name");
        const auto& a = t[i];
        if (is_number(a.text))
          throw ParseError(line_no, a.column, "malformed relation: coefficients go in front of the path");
        if (!is_identifier(a.text)) throw ParseError(line_no, a.column, "malformed relation: unexpected '" + a.text + "'");
        if (arrow_index_.count(a.text) == 0) throw ParseError(line_no, a.column, "unknown arrow '" + a.text + "'");
        arrows.push_back(a);
        ++i;
        if (i < t.size() && t[i].text == "*") {
          ++i;
          continue;
        }
        break;
      }
      if (arrows.size() < 2)
        throw ParseError(line_no, term_column, "relation terms must be paths of length at least 2");
      // composability: the rightmost arrow is applied first
      for (std::size_t k = arrows.size() - 1; k > 0; --k) {
        const auto& first = spec_.arrows[arrow_index_.at(arrows[k].text)];
        const auto& then = spec_.arrows[arrow_index_.at(arrows[k - 1].text)];
        if (first.target != then.source)
          throw ParseError(line_no, arrows[k - 1].column,
                           "malformed relation: '" + then.name + "' does not start where '" + first.name + "' ends");
      }
      const auto& src = spec_.arrows[arrow_index_.at(arrows.back().text)].source;
      const auto& tgt = spec_.arrows[arrow_index_.at(arrows.front().text)].target;
      if (rel.terms.empty()) {
        source = src;
        target = tgt;
      } else if (src != source || tgt != target) {
        throw ParseError(line_no, term_column,
                         "malformed relation: term " + tgt + "<-" + src + " is not parallel to the first term " + target +
                             "<-" + source);
      }
      for (const auto& a : arrows) term.arrows.push_back(a.text);
      rel.terms.push_back(std::move(term));
    }
    spec_.relations.push_back(std::move(rel));
  }

  void option(const std::vector<Token>& t, std::size_t line_no) {
    expect_count(t, 3, line_no, "'option <key> <value>'");
    const auto v = parse_unsigned(t[2], line_no, "the option value");
    if (t[1].text == "budget") {
      spec_.options.budget = static_cast<Index>(v);
    } else if (t[1].text == "jmax") {
      spec_.options.jmax = static_cast<Index>(v);
    } else if (t[1].text == "seed") {
      spec_.options.seed = v;
    } else {
      throw ParseError(line_no, t[1].column, "unknown option '" + t[1].text + "' (known: budget, jmax, seed)");
    }
  }

  AlgebraSpec spec_;
  std::size_t field_line_ = 0;
  std::set<std::string> vertex_names_;
  std::map<std::string, std::size_t> arrow_index_;
};

}  // namespace

AlgebraSpec parse_spec(const std::string& text) { return Parser().run(text); }

BoundAlgebra build_algebra(const AlgebraSpec& spec) {
  Quiver q(spec.vertices, {});
  for (const auto& a : spec.arrows) q.add_arrow(a.name, *q.find_vertex(a.source), *q.find_vertex(a.target));
  std::vector<Relation> relations;
  for (const auto& r : spec.relations) {
    Relation rel;
    for (const auto& t : r.terms) {
      std::vector<Index> written;
      for (const auto& name : t.arrows) written.push_back(*q.find_arrow(name));
      rel.terms.push_back({t.coefficient, path_from_written(q, written)});
    }
    relations.push_back(std::move(rel));
  }
  return build_algebra(q, spec.characteristic, std::move(relations));
}

std::string format_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "field " << spec.characteristic << '\n';
  out << "vertices";
  for (const auto& v : spec.vertices) out << ' ' << v;
  out << '\n';
  for (const auto& a : spec.arrows) out << "arrow " << a.name << " : " << a.source << " -> " << a.target << '\n';
  for (const auto& r : spec.relations) {
    out << "relation";
    bool first = true;
    for (const auto& t : r.terms) {
      const auto c = t.coefficient;
      if (first) {
        out << ' ' << (c < 0 ? "-" : "");
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      const auto mag = c < 0 ? -c : c;
      if (mag != 1) out << mag << '*';
      for (std::size_t k = 0; k < t.arrows.size(); ++k) out << (k ? "*" : "") << t.arrows[k];
    }
    out << '\n';
  }
  if (spec.options.budget) out << "option budget " << *spec.options.budget << '\n';
  if (spec.options.jmax) out << "option jmax " << *spec.options.jmax << '\n';
  if (spec.options.seed) out << "option seed " << *spec.options.seed << '\n';
  return out.str();
}

}  // namespace csheaf
