#include "garside/simultaneous.hpp"

#include <unordered_map>
#include <utility>

#include "garside/errors.hpp"

namespace garside {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<Element>& t) const noexcept {
    std::size_t h = t.size();
    for (const Element& x : t) {
      h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Element> conjugate_all(const std::vector<Element>& t,
                                   const Element& x) {
  std::vector<Element> out;
  out.reserve(t.size());
  for (const Element& e : t) out.push_back(conjugate(e, x));
  return out;
}

std::vector<Element> powers_up_to(const Element& g, int top) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(top));
  Element p = g;
  for (int n = 1; n <= top; ++n) {
    out.push_back(p);
    p = multiply(p, g);
  }
  return out;
}

}  // namespace

CommutingTuple::CommutingTuple(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("empty tuple");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (!commute(elements_[i], elements_[j])) {
        throw DomainError("tuple entries " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

CommutingTuple CommutingTuple::conjugated(const Element& x) const {
  return CommutingTuple(conjugate_all(elements_, x), Trusted{});
}

TupleConjugation tuple_to_uss(const CommutingTuple& t,
                              const SearchLimits& limits) {
  std::vector<Element> cur = t.elements();
  Element x(cur.front().structure_ptr());
  for (std::size_t i = 0; i < cur.size(); ++i) {
    const Conjugation step = summit_seek(cur[i], limits);
    if (step.conjugator.is_identity()) continue;
    cur = conjugate_all(cur, step.conjugator);
    x = multiply(x, step.conjugator);
  }
  return {t.conjugated(x), x};
}

// Closes the set of ultra summit tuples simultaneously conjugate to `seed`
// under minimal simple conjugators, stopping as soon as `target` shows up.
// The simples keeping every coordinate ultra summit are closed under ∧_L, so
// minimal ones connect the whole set, exactly as for single elements.
std::optional<Element> is_simultaneously_conjugate(const CommutingTuple& t1,
                                                   const CommutingTuple& t2,
                                                   const SearchLimits& limits) {
  if (t1.size() != t2.size()) {
    throw DomainError("tuples of length " + std::to_string(t1.size()) +
                      " and " + std::to_string(t2.size()));
  }
  for (std::size_t i = 0; i < t1.size(); ++i) {
    require_same_structure(t1[i], t2[i]);
  }
  if (t1 == t2) return Element(t1[0].structure_ptr());
  // Cheap invariants first: every coordinate pair must be conjugate.
  for (std::size_t i = 0; i < t1.size(); ++i) {
    const SummitInvariants a = summit_invariants(t1[i], limits);
    const SummitInvariants b = summit_invariants(t2[i], limits);
    if (a.inf_s != b.inf_s || a.sup_s != b.sup_s) return std::nullopt;
  }

  const TupleConjugation u1 = tuple_to_uss(t1, limits);
  const TupleConjugation u2 = tuple_to_uss(t2, limits);
  const Element back = inverse(u2.conjugator);
  const auto& target = u2.tuple.elements();
  if (u1.tuple.elements() == target) return multiply(u1.conjugator, back);

  const auto& ptr = t1[0].structure_ptr();
  const Structure& S = *ptr;
  StepCounter steps(limits, "is_simultaneously_conjugate");
  std::vector<std::vector<Element>> members{u1.tuple.elements()};
  std::vector<Element> witnesses{u1.conjugator};
  std::unordered_map<std::vector<Element>, std::size_t, TupleHash> index{
      {members.front(), 0}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::vector<Element> h = members[i];
    for (int a = 0; a < S.atom_count(); ++a) {
      steps.tick();
      const Simple c = minimal_simple_conjugator(h, S.atom(a), true, limits);
      const Element ce = from_simple(ptr, c);
      std::vector<Element> next = conjugate_all(h, ce);
      if (index.count(next)) continue;
      Element w = multiply(witnesses[i], ce);
      if (next == target) return multiply(w, back);
      index.emplace(next, members.size());
      members.push_back(std::move(next));
      witnesses.push_back(std::move(w));
      check_set_size(members.size(), limits, "is_simultaneously_conjugate");
    }
  }
  return std::nullopt;
}

bool is_stable_up_to(const Element& h, int max_power,
                     const SearchLimits& limits) {
  Element p = h;
  for (int n = 1; n <= max_power; ++n) {
    if (!is_super_summit(p, limits)) return false;
    p = multiply(p, h);
  }
  return true;
}

bool is_stable(const Element& h, const SearchLimits& limits) {
  return is_stable_up_to(h, h.structure().delta_length(), limits);
}

Conjugation stable_representative(const Element& g,
                                  const SearchLimits& limits) {
  if (g.is_delta_power()) return {g, Element(g.structure_ptr())};
  const CommutingTuple powers(powers_up_to(g, g.structure().delta_length()));
  const TupleConjugation u = tuple_to_uss(powers, limits);
  return {u.tuple[0], u.conjugator};
}

SummitSet stable_sss(const Element& g, const SearchLimits& limits) {
  return summit_set(g, SummitKind::stable, limits);
}

}  // namespace garside
