#include "amlcheck/rdf/isomorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <vector>

namespace amlcheck::rdf {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string term_token(const Term& t, const std::map<std::string, std::uint64_t>& colors) {
  if (t.is_iri()) return "I" + t.as_iri().value;
  if (t.is_literal()) {
    const Literal& lit = t.as_literal();
    return "L" + lit.lexical + "\x01" + lit.datatype.value + "\x01" + lit.language.value_or("");
  }
  auto it = colors.find(t.as_blank().label);
  return "B" + hex64(it == colors.end() ? 0 : it->second);
}

}  // namespace

std::map<std::string, std::uint64_t> blank_node_signatures(const RdfGraph& graph) {
  std::map<std::string, std::uint64_t> colors;
  for (const auto& t : graph.triples()) {
    if (t.subject.is_blank()) colors[t.subject.as_blank().label] = 0;
    if (t.object.is_blank()) colors[t.object.as_blank().label] = 0;
  }
  if (colors.empty()) return colors;

  std::size_t rounds = colors.size() + 1;
  std::set<std::vector<std::string>> last_partition;
  for (std::size_t round = 0; round < rounds; ++round) {
    std::map<std::string, std::uint64_t> next;
    for (auto& [label, color] : colors) {
      std::vector<std::string> tokens;
      Term self = Term::blank(label);
      for (const auto& t : graph.triples()) {
        if (t.subject == self)
          tokens.push_back("S|" + term_token(t.predicate, colors) + "|" +
                           term_token(t.object, colors));
        if (t.object == self)
          tokens.push_back("O|" + term_token(t.subject, colors) + "|" +
                           term_token(t.predicate, colors));
      }
      std::sort(tokens.begin(), tokens.end());
      std::uint64_t h = fnv1a(hex64(color));
      for (const auto& token : tokens) h = fnv1a(token, h);
      next[label] = h;
    }
    colors = std::move(next);

    // stop once the partition stabilizes
    std::map<std::uint64_t, std::vector<std::string>> groups;
    for (const auto& [label, color] : colors) groups[color].push_back(label);
    std::set<std::vector<std::string>> partition;
    for (auto& [color, members] : groups) partition.insert(members);
    if (partition == last_partition) break;
    last_partition = std::move(partition);
  }
  return colors;
}

namespace {

struct Matcher {
  const RdfGraph& g1;
  const RdfGraph& g2;
  std::vector<std::string> order;                 // g1 blanks in assignment order
  std::map<std::string, std::vector<std::string>> candidates;  // g1 label -> g2 labels
  std::map<std::string, std::string> assignment;  // g1 label -> g2 label
  std::set<std::string> used;                     // assigned g2 labels
  std::map<std::string, std::vector<Triple>> involving;  // g1 label -> triples

  Term mapped(const Term& t) const {
    if (!t.is_blank()) return t;
    auto it = assignment.find(t.as_blank().label);
    return Term::blank(it->second);
  }

  bool triple_ready(const Triple& t) const {
    if (t.subject.is_blank() && !assignment.count(t.subject.as_blank().label)) return false;
    if (t.object.is_blank() && !assignment.count(t.object.as_blank().label)) return false;
    return true;
  }

  bool search(std::size_t idx) {
    if (idx == order.size()) return true;
    const std::string& label = order[idx];
    for (const auto& candidate : candidates.at(label)) {
      if (used.count(candidate)) continue;
      assignment[label] = candidate;
      used.insert(candidate);
      bool ok = true;
      for (const auto& t : involving.at(label)) {
        if (!triple_ready(t)) continue;
        if (!g2.contains(Triple(mapped(t.subject), t.predicate, mapped(t.object)))) {
          ok = false;
          break;
        }
      }
      if (ok && search(idx + 1)) return true;
      assignment.erase(label);
      used.erase(candidate);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const RdfGraph& g1, const RdfGraph& g2) {
  if (g1.size() != g2.size()) return false;

  std::set<Triple> ground1, ground2;
  for (const auto& t : g1.triples())
    if (!t.subject.is_blank() && !t.object.is_blank()) ground1.insert(t);
  for (const auto& t : g2.triples())
    if (!t.subject.is_blank() && !t.object.is_blank()) ground2.insert(t);
  if (ground1 != ground2) return false;

  auto sig1 = blank_node_signatures(g1);
  auto sig2 = blank_node_signatures(g2);
  if (sig1.size() != sig2.size()) return false;
  if (sig1.empty()) return true;

  std::map<std::uint64_t, std::vector<std::string>> groups2;
  for (const auto& [label, color] : sig2) groups2[color].push_back(label);
  {
    std::map<std::uint64_t, std::size_t> count1;
    for (const auto& [label, color] : sig1) ++count1[color];
    for (const auto& [color, n] : count1) {
      auto it = groups2.find(color);
      if (it == groups2.end() || it->second.size() != n) return false;
    }
  }

  Matcher m{g1, g2, {}, {}, {}, {}, {}};
  for (const auto& [label, color] : sig1) {
    m.order.push_back(label);
    m.candidates[label] = groups2.at(color);
    m.involving[label] = {};
  }
  // assign the most constrained blanks first
  std::stable_sort(m.order.begin(), m.order.end(), [&](const std::string& a, const std::string& b) {
    return m.candidates.at(a).size() < m.candidates.at(b).size();
  });
  for (const auto& t : g1.triples()) {
    if (t.subject.is_blank()) m.involving[t.subject.as_blank().label].push_back(t);
    if (t.object.is_blank() && !(t.object == t.subject))
      m.involving[t.object.as_blank().label].push_back(t);
  }
  return m.search(0);
}

}  // namespace amlcheck::rdf
