#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "amlcheck/rdf/term.hpp"

namespace amlcheck::rdf {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  Triple(Term s, Term p, Term o);

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// In-memory triple set with registered prefixes. Mutable while being built;
/// downstream code takes `const RdfGraph&` and may share it across threads.
class RdfGraph {
public:
  RdfGraph();

  void insert(Triple t);
  void insert(Term s, Term p, Term o);

  /// All triples agreeing with every bound position; nullopt is a wildcard.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const std::set<Triple>& triples() const { return triples_; }

  /// Objects of (subject, predicate, ?), in term order.
  std::vector<Term> objects_of(const Term& subject, const Term& predicate) const;
  /// Subjects of (?, predicate, object), in term order.
  std::vector<Term> subjects_of(const Term& predicate, const Term& object) const;
  std::optional<Term> first_object(const Term& subject, const Term& predicate) const;

  void set_prefix(const std::string& prefix, const std::string& iri);
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  /// Walks an RDF collection (rdf:first/rdf:rest) starting at `head`.
  /// Returns nullopt if the structure is not a well-formed list.
  std::optional<std::vector<Term>> collection(const Term& head) const;

private:
  std::set<Triple> triples_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace amlcheck::rdf
