#include "amlcheck/rdf/graph.hpp"

namespace amlcheck::rdf {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal())
    throw std::invalid_argument("triple subject must not be a literal");
  if (!predicate.is_iri())
    throw std::invalid_argument("triple predicate must be an IRI");
}

RdfGraph::RdfGraph() {
  prefixes_["rdf"] = ns::rdf;
  prefixes_["rdfs"] = ns::rdfs;
  prefixes_["xsd"] = ns::xsd;
  prefixes_["sh"] = ns::sh;
}

void RdfGraph::insert(Triple t) { triples_.insert(std::move(t)); }

void RdfGraph::insert(Term s, Term p, Term o) {
  triples_.emplace(std::move(s), std::move(p), std::move(o));
}

std::vector<Triple> RdfGraph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                    const std::optional<Term>& o) const {
  std::vector<Triple> out;
  if (s && s->is_literal()) return out;
  if (s) {
    // Subject bound: the set ordering lets us scan just that subject's range.
    auto lo = triples_.lower_bound(Triple(*s, Term::iri(""), Term::iri("")));
    for (auto it = lo; it != triples_.end() && it->subject == *s; ++it) {
      if (p && !(it->predicate == *p)) continue;
      if (o && !(it->object == *o)) continue;
      out.push_back(*it);
    }
    return out;
  }
  for (const auto& t : triples_) {
    if (p && !(t.predicate == *p)) continue;
    if (o && !(t.object == *o)) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Term> RdfGraph::objects_of(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  for (const auto& t : match(subject, predicate, std::nullopt)) out.push_back(t.object);
  return out;
}

std::vector<Term> RdfGraph::subjects_of(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const auto& t : match(std::nullopt, predicate, object)) out.push_back(t.subject);
  return out;
}

std::optional<Term> RdfGraph::first_object(const Term& subject, const Term& predicate) const {
  auto objs = objects_of(subject, predicate);
  if (objs.empty()) return std::nullopt;
  return objs.front();
}

void RdfGraph::set_prefix(const std::string& prefix, const std::string& iri) {
  prefixes_[prefix] = iri;
}

std::optional<std::vector<Term>> RdfGraph::collection(const Term& head) const {
  std::vector<Term> items;
  Term node = head;
  std::set<Term> seen;
  const Term nil = Term::iri(iris::rdf_nil);
  const Term first = Term::iri(iris::rdf_first);
  const Term rest = Term::iri(iris::rdf_rest);
  while (!(node == nil)) {
    if (!seen.insert(node).second) return std::nullopt;  // cyclic list
    auto f = first_object(node, first);
    auto r = first_object(node, rest);
    if (!f || !r) return std::nullopt;
    items.push_back(*f);
    node = *r;
  }
  return items;
}

}  // namespace amlcheck::rdf
