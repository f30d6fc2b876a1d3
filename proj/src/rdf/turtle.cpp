#include "amlcheck/rdf/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

#include "amlcheck/rdf/isomorphism.hpp"

namespace amlcheck::rdf {

namespace {

bool has_scheme(const std::string& iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return false;
}

struct IriParts {
  std::string scheme;     // without ':'
  std::string authority;  // without '//', empty() distinguished by has_authority
  bool has_authority = false;
  std::string path;
  std::string query;  // without '?'
  bool has_query = false;
  std::string fragment;  // without '#'
  bool has_fragment = false;
};

IriParts split_iri(const std::string& iri) {
  IriParts parts;
  std::string rest = iri;
  auto hash = rest.find('#');
  if (hash != std::string::npos) {
    parts.has_fragment = true;
    parts.fragment = rest.substr(hash + 1);
    rest = rest.substr(0, hash);
  }
  auto q = rest.find('?');
  if (q != std::string::npos) {
    parts.has_query = true;
    parts.query = rest.substr(q + 1);
    rest = rest.substr(0, q);
  }
  if (has_scheme(rest)) {
    auto colon = rest.find(':');
    parts.scheme = rest.substr(0, colon);
    rest = rest.substr(colon + 1);
  }
  if (rest.rfind("//", 0) == 0) {
    parts.has_authority = true;
    auto end = rest.find('/', 2);
    if (end == std::string::npos) {
      parts.authority = rest.substr(2);
      rest.clear();
    } else {
      parts.authority = rest.substr(2, end - 2);
      rest = rest.substr(end);
    }
  }
  parts.path = rest;
  return parts;
}

std::string remove_dot_segments(const std::string& path) {
  std::string input = path;
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0) {
      input.replace(0, 4, "/");
      auto slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "/..") {
      input = "/";
      auto slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      auto next = input.find('/', 1);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

// RFC 3986 section 5.3 reference resolution, enough for Turtle @base use.
std::string resolve_iri(const std::string& base, const std::string& ref) {
  if (has_scheme(ref)) return ref;
  IriParts b = split_iri(base);
  IriParts r = split_iri(ref);
  IriParts t;
  t.scheme = b.scheme;
  if (r.has_authority) {
    t.has_authority = true;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.has_query = r.has_query;
    t.query = r.query;
  } else {
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.has_query = r.has_query ? true : b.has_query;
      t.query = r.has_query ? r.query : b.query;
    } else {
      if (r.path[0] == '/') {
        t.path = remove_dot_segments(r.path);
      } else {
        std::string merged;
        if (b.has_authority && b.path.empty()) {
          merged = "/" + r.path;
        } else {
          auto slash = b.path.find_last_of('/');
          merged = (slash == std::string::npos ? "" : b.path.substr(0, slash + 1)) + r.path;
        }
        t.path = remove_dot_segments(merged);
      }
      t.has_query = r.has_query;
      t.query = r.query;
    }
  }
  t.has_fragment = r.has_fragment;
  t.fragment = r.fragment;

  std::string out;
  if (!t.scheme.empty()) out += t.scheme + ":";
  if (t.has_authority) out += "//" + t.authority;
  out += t.path;
  if (t.has_query) out += "?" + t.query;
  if (t.has_fragment) out += "#" + t.fragment;
  return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_pn_char_base(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
}

class Parser {
public:
  explicit Parser(const std::string& text) : in_(text) {}

  RdfGraph run() {
    skip_ws();
    while (!eof()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

private:
  const std::string& in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  RdfGraph graph_;
  std::string base_;
  std::map<std::string, std::string> user_blanks_;
  int anon_counter_ = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw TurtleSyntaxError(line_, message);
  }

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return eof() ? '\0' : in_[pos_]; }
  char peek_at(std::size_t off) const {
    return pos_ + off < in_.size() ? in_[pos_ + off] : '\0';
  }

  char advance() {
    char c = in_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void expect(char c, const std::string& what) {
    if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    advance();
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool match_keyword(const std::string& kw, bool case_insensitive) {
    if (pos_ + kw.size() > in_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = in_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    char after = pos_ + kw.size() < in_.size() ? in_[pos_ + kw.size()] : '\0';
    if (is_pn_char_base(after) || after == '_' || after == '-' || after == ':') return false;
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }

  void statement() {
    if (peek() == '@') {
      advance();
      if (match_keyword("prefix", false)) {
        prefix_directive(true);
      } else if (match_keyword("base", false)) {
        base_directive(true);
      } else {
        fail("unknown directive");
      }
      return;
    }
    // SPARQL-style directives (no trailing dot, case-insensitive).
    std::size_t save_pos = pos_;
    int save_line = line_;
    if (match_keyword("PREFIX", true)) {
      prefix_directive(false);
      return;
    }
    pos_ = save_pos;
    line_ = save_line;
    if (match_keyword("BASE", true)) {
      base_directive(false);
      return;
    }
    pos_ = save_pos;
    line_ = save_line;
    triples();
  }

  void prefix_directive(bool turtle_style) {
    skip_ws();
    std::string prefix = pname_ns();
    skip_ws();
    std::string iri = iriref();
    graph_.set_prefix(prefix, iri);
    if (turtle_style) {
      skip_ws();
      expect('.', "after @prefix directive");
    }
  }

  void base_directive(bool turtle_style) {
    skip_ws();
    base_ = iriref();
    if (turtle_style) {
      skip_ws();
      expect('.', "after @base directive");
    }
  }

  void triples() {
    skip_ws();
    Term subject;
    if (peek() == '[' && !is_anon_ahead()) {
      subject = blank_node_property_list();
      skip_ws();
      if (peek() == '.') {  // bnode property list alone is a valid statement
        advance();
        return;
      }
    } else {
      subject = term_subject();
    }
    predicate_object_list(subject);
    skip_ws();
    expect('.', "after triples");
  }

  bool is_anon_ahead() const {
    // '[' followed only by whitespace then ']' is an anonymous blank node.
    std::size_t i = pos_ + 1;
    while (i < in_.size() &&
           (in_[i] == ' ' || in_[i] == '\t' || in_[i] == '\r' || in_[i] == '\n'))
      ++i;
    return i < in_.size() && in_[i] == ']';
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() == ';') {
        advance();
        skip_ws();
        // Allow trailing ';' before '.', ']' per grammar.
        if (peek() == '.' || peek() == ']' || peek() == ';') {
          while (peek() == ';') {
            advance();
            skip_ws();
          }
          if (peek() == '.' || peek() == ']') return;
        }
        continue;
      }
      return;
    }
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      skip_ws();
      Term object = term_object();
      graph_.insert(subject, predicate, object);
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      return;
    }
  }

  Term verb() {
    if (peek() == 'a') {
      char after = peek_at(1);
      if (!is_pn_char_base(after) && after != '_' && after != '-' && after != ':') {
        advance();
        return Term::iri(iris::rdf_type);
      }
    }
    Term t = iri_term();
    return t;
  }

  Term term_subject() {
    skip_ws();
    char c = peek();
    if (c == '<' || is_pname_start(c)) return iri_term();
    if (c == '_') return blank_node_label();
    if (c == '(') return collection();
    if (c == '[') return anon_or_property_list();
    fail("expected subject");
  }

  Term term_object() {
    skip_ws();
    char c = peek();
    if (c == '<') return iri_term();
    if (c == '_') return blank_node_label();
    if (c == '(') return collection();
    if (c == '[') return anon_or_property_list();
    if (c == '"' || c == '\'') return rdf_literal();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return numeric_literal();
    if (match_keyword("true", false)) return Term::boolean(true);
    if (match_keyword("false", false)) return Term::boolean(false);
    if (is_pname_start(c)) return iri_term();
    fail("expected object");
  }

  Term anon_or_property_list() {
    if (is_anon_ahead()) {
      advance();  // '['
      skip_ws();
      advance();  // ']'
      return fresh_anon();
    }
    return blank_node_property_list();
  }

  Term blank_node_property_list() {
    expect('[', "to open blank node property list");
    Term node = fresh_anon();
    predicate_object_list(node);
    skip_ws();
    expect(']', "to close blank node property list");
    return node;
  }

  Term collection() {
    expect('(', "to open collection");
    std::vector<Term> items;
    while (true) {
      skip_ws();
      if (peek() == ')') {
        advance();
        break;
      }
      if (eof()) fail("unterminated collection");
      items.push_back(term_object());
    }
    if (items.empty()) return Term::iri(iris::rdf_nil);
    Term head = fresh_anon();
    Term node = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      graph_.insert(node, Term::iri(iris::rdf_first), items[i]);
      if (i + 1 < items.size()) {
        Term next = fresh_anon();
        graph_.insert(node, Term::iri(iris::rdf_rest), next);
        node = next;
      } else {
        graph_.insert(node, Term::iri(iris::rdf_rest), Term::iri(iris::rdf_nil));
      }
    }
    return head;
  }

  Term fresh_anon() { return Term::blank("a_" + std::to_string(anon_counter_++)); }

  Term blank_node_label() {
    expect('_', "to start blank node label");
    expect(':', "after '_' in blank node label");
    std::string label;
    if (eof() || !(is_pn_char_base(peek()) || peek() == '_' ||
                   std::isdigit(static_cast<unsigned char>(peek()))))
      fail("invalid blank node label");
    while (!eof()) {
      char c = peek();
      if (is_pn_char_base(c) || c == '_' || c == '-' || c == '.') {
        if (c == '.') {
          // dots allowed inside but not at the end
          char after = peek_at(1);
          if (!(is_pn_char_base(after) || after == '_' || after == '-' || after == '.')) break;
        }
        label += advance();
      } else {
        break;
      }
    }
    auto it = user_blanks_.find(label);
    if (it == user_blanks_.end()) it = user_blanks_.emplace(label, "u_" + label).first;
    return Term::blank(it->second);
  }

  static bool is_pname_start(char c) {
    return is_pn_char_base(c) || c == ':';
  }

  Term iri_term() {
    if (peek() == '<') return Term::iri(iriref());
    return Term::iri(prefixed_name());
  }

  std::string iriref() {
    expect('<', "to open IRI");
    std::string raw;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = advance();
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`')
        fail("invalid character in IRI");
      if (c == '\\') {
        char e = eof() ? '\0' : advance();
        if (e == 'u') {
          append_utf8(raw, hex_codepoint(4));
        } else if (e == 'U') {
          append_utf8(raw, hex_codepoint(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      raw += c;
    }
    std::string full = base_.empty() ? raw : resolve_iri(base_, raw);
    if (!has_scheme(full)) fail("IRI is not absolute and no @base is in effect: <" + raw + ">");
    return full;
  }

  std::uint32_t hex_codepoint(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof()) fail("truncated unicode escape");
      char c = advance();
      cp <<= 4;
      if (c >= '0' && c <= '9')
        cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f')
        cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else
        fail("invalid hex digit in unicode escape");
    }
    return cp;
  }

  std::string pname_ns() {
    std::string prefix;
    while (!eof()) {
      char c = peek();
      if (c == ':') break;
      if (is_pn_char_base(c) || c == '_' || c == '-' || c == '.') {
        prefix += advance();
      } else {
        fail("invalid prefix name");
      }
    }
    expect(':', "after prefix name");
    return prefix;
  }

  std::string prefixed_name() {
    std::string prefix;
    while (!eof()) {
      char c = peek();
      if (c == ':') break;
      if (is_pn_char_base(c) || c == '-' || c == '_' || c == '.') {
        prefix += advance();
      } else {
        break;
      }
    }
    if (eof() || peek() != ':') fail("expected ':' in prefixed name");
    advance();
    std::string local;
    while (!eof()) {
      char c = peek();
      if (is_pn_char_base(c) || c == '_' || c == '-' || c == ':' ||
          std::isdigit(static_cast<unsigned char>(c))) {
        local += advance();
      } else if (c == '.') {
        char after = peek_at(1);
        if (is_pn_char_base(after) || after == '_' || after == '-' || after == ':' ||
            after == '.' || after == '%' || after == '\\') {
          local += advance();
        } else {
          break;
        }
      } else if (c == '%') {
        advance();
        std::string hex;
        for (int i = 0; i < 2; ++i) {
          if (eof() || !std::isxdigit(static_cast<unsigned char>(peek())))
            fail("invalid percent escape in prefixed name");
          hex += advance();
        }
        local += '%';
        local += hex;
      } else if (c == '\\') {
        advance();
        char e = eof() ? '\0' : advance();
        static const std::string escapable = "_~.-!$&'()*+,;=/?#@%";
        if (escapable.find(e) == std::string::npos)
          fail("invalid local name escape");
        local += e;
      } else {
        break;
      }
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) fail("undeclared prefix '" + prefix + ":'");
    return it->second + local;
  }

  Term rdf_literal() {
    std::string lexical = string_body();
    if (peek() == '@') {
      advance();
      std::string tag;
      while (!eof()) {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
          tag += advance();
        } else {
          break;
        }
      }
      if (tag.empty()) fail("empty language tag");
      return Term::lang_literal(lexical, tag);
    }
    if (peek() == '^' && peek_at(1) == '^') {
      advance();
      advance();
      Term dt = iri_term();
      return Term::typed_literal(lexical, dt.as_iri().value);
    }
    return Term::literal(lexical);
  }

  std::string string_body() {
    char quote = advance();  // '"' or '\''
    bool long_form = false;
    if (peek() == quote && peek_at(1) == quote) {
      advance();
      advance();
      long_form = true;
    } else if (peek() == quote) {
      advance();
      return "";
    }
    std::string out;
    while (true) {
      if (eof()) fail("unterminated string");
      char c = advance();
      if (c == quote) {
        if (!long_form) return out;
        if (peek() == quote && peek_at(1) == quote) {
          advance();
          advance();
          return out;
        }
        out += c;
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("newline in single-quoted string");
      if (c == '\\') {
        char e = eof() ? '\0' : advance();
        switch (e) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u': append_utf8(out, hex_codepoint(4)); break;
          case 'U': append_utf8(out, hex_codepoint(8)); break;
          default: fail("invalid string escape");
        }
        continue;
      }
      out += c;
    }
  }

  Term numeric_literal() {
    std::string text;
    if (peek() == '+' || peek() == '-') text += advance();
    bool digits_before = false, digits_after = false, has_dot = false, has_exp = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      text += advance();
      digits_before = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek_at(1)))) {
      has_dot = true;
      text += advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text += advance();
        digits_after = true;
      }
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek_at(1))) ||
         ((peek_at(1) == '+' || peek_at(1) == '-') &&
          std::isdigit(static_cast<unsigned char>(peek_at(2)))))) {
      has_exp = true;
      text += advance();
      if (peek() == '+' || peek() == '-') text += advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
    }
    if (!digits_before && !digits_after) fail("invalid numeric literal");
    if (has_exp) return Term::typed_literal(text, iris::xsd_double);
    if (has_dot) return Term::typed_literal(text, iris::xsd_decimal);
    return Term::typed_literal(text, iris::xsd_integer);
  }
};

// --- serialization ---------------------------------------------------------

bool local_part_ok(const std::string& local) {
  if (local.empty()) return true;  // "ex:" is a valid prefixed name
  char first = local.front();
  if (first == '-' || first == '.') return false;
  if (local.back() == '.') return false;
  for (char c : local) {
    if (!(is_pn_char_base(c) || c == '_' || c == '-' || c == '.')) return false;
  }
  return true;
}

std::string render_iri(const std::string& iri, const std::map<std::string, std::string>& prefixes) {
  const std::string* best_prefix = nullptr;
  const std::string* best_ns = nullptr;
  for (const auto& [prefix, ns_iri] : prefixes) {
    if (ns_iri.empty() || iri.rfind(ns_iri, 0) != 0) continue;
    if (best_ns && ns_iri.size() <= best_ns->size()) continue;
    std::string local = iri.substr(ns_iri.size());
    if (!local_part_ok(local)) continue;
    best_prefix = &prefix;
    best_ns = &ns_iri;
  }
  if (best_prefix) return *best_prefix + ":" + iri.substr(best_ns->size());
  return "<" + iri + ">";
}

void escape_string_into(std::ostringstream& out, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      case '\b': out << "\\b"; break;
      case '\f': out << "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out << "\\u00" << hex[(c >> 4) & 0xF] << hex[c & 0xF];
        } else {
          out << c;
        }
    }
  }
}

bool lexical_is_integer(const std::string& s) {
  std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool lexical_is_decimal(const std::string& s) {
  std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  auto dot = s.find('.', i);
  if (dot == std::string::npos || dot + 1 >= s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (k == dot) continue;
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string render_term(const Term& term, const std::map<std::string, std::string>& prefixes) {
  std::ostringstream out;
  if (term.is_iri()) {
    out << render_iri(term.as_iri().value, prefixes);
  } else if (term.is_blank()) {
    out << "_:" << term.as_blank().label;
  } else {
    const Literal& lit = term.as_literal();
    const std::string& dt = lit.datatype.value;
    if (dt == iris::xsd_integer && lexical_is_integer(lit.lexical)) return lit.lexical;
    if (dt == iris::xsd_decimal && lexical_is_decimal(lit.lexical)) return lit.lexical;
    if (dt == iris::xsd_boolean && (lit.lexical == "true" || lit.lexical == "false"))
      return lit.lexical;
    out << '"';
    escape_string_into(out, lit.lexical);
    out << '"';
    if (lit.language) {
      out << '@' << *lit.language;
    } else if (dt != iris::xsd_string) {
      out << "^^" << render_iri(dt, prefixes);
    }
  }
  return out.str();
}

std::string sort_key(const Term& term, const std::map<std::string, std::uint64_t>& colors) {
  std::string key;
  if (term.is_iri()) {
    key = "0" + term.as_iri().value;
  } else if (term.is_blank()) {
    char buf[17];
    std::uint64_t color = 0;
    auto it = colors.find(term.as_blank().label);
    if (it != colors.end()) color = it->second;
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(color));
    key = "1" + std::string(buf) + "|" + term.as_blank().label;
  } else {
    const Literal& lit = term.as_literal();
    key = "2" + lit.lexical + "\x01" + lit.datatype.value + "\x01" + lit.language.value_or("");
  }
  return key;
}

}  // namespace

RdfGraph parse_turtle(const std::string& text) {
  Parser parser(text);
  return parser.run();
}

std::string serialize_turtle(const RdfGraph& graph, bool sort) {
  std::ostringstream out;
  for (const auto& [prefix, iri] : graph.prefixes())
    out << "@prefix " << prefix << ": <" << iri << "> .\n";
  if (!graph.empty()) out << "\n";

  std::vector<Triple> triples(graph.triples().begin(), graph.triples().end());
  std::map<std::string, std::string> renames;
  if (sort) {
    auto colors = blank_node_signatures(graph);
    std::stable_sort(triples.begin(), triples.end(), [&](const Triple& a, const Triple& b) {
      auto ka = std::make_tuple(sort_key(a.subject, colors), sort_key(a.predicate, colors),
                                sort_key(a.object, colors));
      auto kb = std::make_tuple(sort_key(b.subject, colors), sort_key(b.predicate, colors),
                                sort_key(b.object, colors));
      return ka < kb;
    });
    int next = 0;
    auto canonical = [&](const Term& t) {
      if (!t.is_blank()) return;
      const std::string& label = t.as_blank().label;
      if (!renames.count(label)) renames[label] = "b" + std::to_string(next++);
    };
    for (const auto& t : triples) {
      canonical(t.subject);
      canonical(t.predicate);
      canonical(t.object);
    }
  }

  auto rendered = [&](const Term& t) {
    if (t.is_blank()) {
      auto it = renames.find(t.as_blank().label);
      if (it != renames.end()) return render_term(Term::blank(it->second), graph.prefixes());
    }
    return render_term(t, graph.prefixes());
  };
  for (const auto& t : triples)
    out << rendered(t.subject) << " " << rendered(t.predicate) << " " << rendered(t.object)
        << " .\n";
  return out.str();
}

}  // namespace amlcheck::rdf
