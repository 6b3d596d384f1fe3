#include "garside/garside.h"

#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "garside/abelian.hpp"
#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/errors.hpp"
#include "garside/simultaneous.hpp"
#include "garside/translation.hpp"
#include "garside/word.hpp"

struct garside_structure {
  std::shared_ptr<const garside::Structure> ptr;
};

struct garside_element {
  garside::Element value;
};

struct garside_summit_set {
  garside::SummitSet value;
};

namespace {

using namespace garside;

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

garside_status fail(garside_status code, const std::string& what,
                    std::int64_t offset = -1) {
  last_error = what;
  last_offset = offset;
  return code;
}

// Runs f, translating exceptions into status codes.
template <typename F>
garside_status guarded(F&& f) {
  last_error.clear();
  last_offset = -1;
  try {
    return f();
  } catch (const InputError& e) {
    return fail(GARSIDE_ERR_INPUT, e.what(),
                e.position() == InputError::npos
                    ? -1
                    : static_cast<std::int64_t>(e.position()));
  } catch (const StructureMismatch& e) {
    return fail(GARSIDE_ERR_MISMATCH, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(GARSIDE_ERR_BUDGET, e.what());
  } catch (const DomainError& e) {
    return fail(GARSIDE_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GARSIDE_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(GARSIDE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GARSIDE_ERR_INTERNAL, "unknown error");
  }
}

class NullArgument : public InputError {
 public:
  NullArgument() : InputError("null argument") {}
};

template <typename... T>
void require(const T*... p) {
  if (((p == nullptr) || ...)) throw NullArgument();
}

SearchLimits to_limits(const garside_limits* l) {
  SearchLimits out;
  if (l != nullptr) {
    out.max_steps = l->max_steps;
    out.max_set_size = static_cast<std::size_t>(l->max_set_size);
  }
  return out;
}

garside_element* wrap(Element x) { return new garside_element{std::move(x)}; }

std::vector<Element> unwrap(const garside_element* const* xs, std::size_t n) {
  if (n > 0) require(xs);
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(xs[i]);
    out.push_back(xs[i]->value);
  }
  return out;
}

garside_status write_atoms(const std::vector<int>& word, int* atoms,
                           std::size_t cap, std::size_t* len) {
  require(len);
  *len = word.size();
  if (cap < word.size()) {
    return fail(GARSIDE_ERR_BUFFER, "atom buffer too small");
  }
  if (!word.empty()) require(atoms);
  for (std::size_t i = 0; i < word.size(); ++i) atoms[i] = word[i];
  return GARSIDE_OK;
}

garside_status write_text(const std::string& text, char* buf, std::size_t cap,
                          std::size_t* len) {
  require(len);
  *len = text.size();
  if (cap < text.size() + 1) {
    return fail(GARSIDE_ERR_BUFFER, "text buffer too small");
  }
  require(buf);
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return GARSIDE_OK;
}

std::vector<int> simple_word(const Structure& S, const Simple& s) {
  std::vector<int> out = S.word(s);
  for (int& a : out) ++a;
  return out;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded("integer result does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

void write_vector(const IntVector& v, std::int64_t* out) {
  if (!v.empty()) require(out);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(v[i]);
}

garside_rational to_c(const Rational& r) {
  return {to_int64(boost::multiprecision::numerator(r)),
          to_int64(boost::multiprecision::denominator(r))};
}

Rational from_c(const garside_rational& r) {
  if (r.den == 0) throw InputError("rational with zero denominator");
  return Rational(BigInt(r.num), BigInt(r.den));
}

std::string rational_text(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return r.str();
}

SummitKind to_kind(garside_summit_kind k) {
  switch (k) {
    case GARSIDE_SUPER:
      return SummitKind::super;
    case GARSIDE_ULTRA:
      return SummitKind::ultra;
    case GARSIDE_STABLE:
      return SummitKind::stable;
  }
  throw InputError("unknown summit kind");
}

std::shared_ptr<const Structure> structure_of(const garside_structure* s,
                                              const std::vector<Element>& a,
                                              const garside_element* fallback) {
  if (s != nullptr) return s->ptr;
  if (!a.empty()) return a.front().structure_ptr();
  if (fallback != nullptr) return fallback->value.structure_ptr();
  throw InputError("no structure given for an empty generator list");
}

}  // namespace

extern "C" {

const char* garside_last_error(void) { return last_error.c_str(); }

int64_t garside_last_error_offset(void) { return last_offset; }

garside_limits garside_default_limits(void) {
  const SearchLimits d;
  return {d.max_steps, static_cast<uint64_t>(d.max_set_size)};
}

// --------------------------------------------------------------- structures

garside_status garside_structure_new(const char* selector,
                                     garside_structure** out) {
  return guarded([&] {
    require(selector, out);
    *out = new garside_structure{make_structure(selector)};
    return GARSIDE_OK;
  });
}

void garside_structure_free(garside_structure* s) { delete s; }

int garside_structure_atom_count(const garside_structure* s) {
  return s == nullptr ? 0 : s->ptr->atom_count();
}

int garside_structure_delta_length(const garside_structure* s) {
  return s == nullptr ? 0 : s->ptr->delta_length();
}

garside_status garside_is_simple(const garside_structure* s, const int* word,
                                 size_t len, int* out) {
  return guarded([&] {
    require(s, out);
    if (len > 0) require(word);
    *out = is_simple(std::span<const int>(word, len), *s->ptr) ? 1 : 0;
    return GARSIDE_OK;
  });
}

// ----------------------------------------------------------------- elements

garside_status garside_element_parse(const garside_structure* s,
                                     const char* text, garside_element** out) {
  return guarded([&] {
    require(s, text, out);
    *out = wrap(parse_element(text, s->ptr));
    return GARSIDE_OK;
  });
}

garside_status garside_element_from_word(const garside_structure* s,
                                         const int* word, size_t len,
                                         garside_element** out) {
  return guarded([&] {
    require(s, out);
    if (len > 0) require(word);
    *out = wrap(normalize(s->ptr, std::span<const int>(word, len)));
    return GARSIDE_OK;
  });
}

garside_status garside_element_clone(const garside_element* x,
                                     garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(x->value);
    return GARSIDE_OK;
  });
}

void garside_element_free(garside_element* x) { delete x; }

int64_t garside_element_delta_power(const garside_element* x) {
  return x == nullptr ? 0 : x->value.delta_power();
}

size_t garside_element_factor_count(const garside_element* x) {
  return x == nullptr ? 0 : x->value.factors().size();
}

garside_status garside_element_factor(const garside_element* x, size_t i,
                                      int* atoms, size_t cap, size_t* len) {
  return guarded([&] {
    require(x);
    if (i >= x->value.factors().size()) {
      throw InputError("factor index out of range");
    }
    return write_atoms(simple_word(x->value.structure(), x->value.factors()[i]),
                       atoms, cap, len);
  });
}

garside_status garside_element_format(const garside_element* x, char* buf,
                                      size_t cap, size_t* len) {
  return guarded([&] {
    require(x);
    return write_text(format_element(x->value), buf, cap, len);
  });
}

void garside_element_invariants(const garside_element* x, int64_t* inf,
                                int64_t* sup, uint64_t* len) {
  if (x == nullptr) return;
  if (inf != nullptr) *inf = x->value.inf();
  if (sup != nullptr) *sup = x->value.sup();
  if (len != nullptr) *len = x->value.canonical_length();
}

garside_status garside_multiply(const garside_element* x,
                                const garside_element* y,
                                garside_element** out) {
  return guarded([&] {
    require(x, y, out);
    *out = wrap(multiply(x->value, y->value));
    return GARSIDE_OK;
  });
}

garside_status garside_inverse(const garside_element* x,
                               garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(inverse(x->value));
    return GARSIDE_OK;
  });
}

garside_status garside_power(const garside_element* x, int64_t n,
                             garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(power(x->value, n));
    return GARSIDE_OK;
  });
}

garside_status garside_conjugate(const garside_element* g,
                                 const garside_element* x,
                                 garside_element** out) {
  return guarded([&] {
    require(g, x, out);
    require_same_structure(g->value, x->value);
    *out = wrap(conjugate(g->value, x->value));
    return GARSIDE_OK;
  });
}

garside_status garside_equals(const garside_element* x,
                              const garside_element* y, int* out) {
  return guarded([&] {
    require(x, y, out);
    *out = equals(x->value, y->value) ? 1 : 0;
    return GARSIDE_OK;
  });
}

garside_status garside_commute(const garside_element* x,
                               const garside_element* y, int* out) {
  return guarded([&] {
    require(x, y, out);
    *out = commute(x->value, y->value) ? 1 : 0;
    return GARSIDE_OK;
  });
}

garside_status garside_left_divides(const garside_element* x,
                                    const garside_element* y, int* out) {
  return guarded([&] {
    require(x, y, out);
    *out = left_divides(x->value, y->value) ? 1 : 0;
    return GARSIDE_OK;
  });
}

garside_status garside_left_meet(const garside_element* x,
                                 const garside_element* y,
                                 garside_element** out) {
  return guarded([&] {
    require(x, y, out);
    *out = wrap(left_meet(x->value, y->value));
    return GARSIDE_OK;
  });
}

garside_status garside_left_join(const garside_element* x,
                                 const garside_element* y,
                                 garside_element** out) {
  return guarded([&] {
    require(x, y, out);
    *out = wrap(left_join(x->value, y->value));
    return GARSIDE_OK;
  });
}

garside_status garside_tau(const garside_element* x, int64_t power,
                           garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(tau(x->value, power));
    return GARSIDE_OK;
  });
}

// ---------------------------------------------------------------- conjugacy

garside_status garside_cycling(const garside_element* x,
                               garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(cycling(x->value));
    return GARSIDE_OK;
  });
}

garside_status garside_decycling(const garside_element* x,
                                 garside_element** out) {
  return guarded([&] {
    require(x, out);
    *out = wrap(decycling(x->value));
    return GARSIDE_OK;
  });
}

garside_status garside_summit_seek(const garside_element* g,
                                   const garside_limits* limits,
                                   garside_element** h, garside_element** x) {
  return guarded([&] {
    require(g, h, x);
    Conjugation c = summit_seek(g->value, to_limits(limits));
    *h = wrap(std::move(c.element));
    *x = wrap(std::move(c.conjugator));
    return GARSIDE_OK;
  });
}

garside_status garside_min_conjugator(const garside_element* h, int atom,
                                      garside_summit_kind kind,
                                      const garside_limits* limits, int* atoms,
                                      size_t cap, size_t* len) {
  return guarded([&] {
    require(h);
    const Simple c =
        min_conjugator(h->value, atom, to_kind(kind), to_limits(limits));
    return write_atoms(simple_word(h->value.structure(), c), atoms, cap, len);
  });
}

garside_status garside_is_conjugate(const garside_element* x,
                                    const garside_element* y,
                                    const garside_limits* limits, int* found,
                                    garside_element** conjugator) {
  return guarded([&] {
    require(x, y, found, conjugator);
    auto w = is_conjugate(x->value, y->value, to_limits(limits));
    *found = w ? 1 : 0;
    *conjugator = w ? wrap(std::move(*w)) : nullptr;
    return GARSIDE_OK;
  });
}

garside_status garside_summit_set_new(const garside_element* g,
                                  garside_summit_kind kind, int minimal_graph,
                                  const garside_limits* limits,
                                  garside_summit_set** out) {
  return guarded([&] {
    require(g, out);
    const SummitKind k = to_kind(kind);
    const SearchLimits l = to_limits(limits);
    *out = new garside_summit_set{minimal_graph != 0
                                      ? conjugacy_graph(g->value, k, l)
                                      : summit_set(g->value, k, l)};
    return GARSIDE_OK;
  });
}

void garside_summit_set_free(garside_summit_set* set) { delete set; }

size_t garside_summit_set_size(const garside_summit_set* set) {
  return set == nullptr ? 0 : set->value.members.size();
}

void garside_summit_set_invariants(const garside_summit_set* set,
                                   int64_t* inf_s, int64_t* sup_s) {
  if (set == nullptr) return;
  if (inf_s != nullptr) *inf_s = set->value.inf_s;
  if (sup_s != nullptr) *sup_s = set->value.sup_s;
}

garside_status garside_summit_set_member(const garside_summit_set* set,
                                         size_t i, garside_element** out) {
  return guarded([&] {
    require(set, out);
    if (i >= set->value.members.size()) {
      throw InputError("member index out of range");
    }
    *out = wrap(set->value.members[i]);
    return GARSIDE_OK;
  });
}

garside_status garside_summit_set_witness(const garside_summit_set* set,
                                          size_t i, garside_element** out) {
  return guarded([&] {
    require(set, out);
    if (i >= set->value.witnesses.size()) {
      throw InputError("member index out of range");
    }
    *out = wrap(set->value.witnesses[i]);
    return GARSIDE_OK;
  });
}

size_t garside_summit_set_edge_count(const garside_summit_set* set) {
  return set == nullptr ? 0 : set->value.edges.size();
}

garside_status garside_summit_set_edge(const garside_summit_set* set, size_t i,
                                       size_t* from, size_t* to, int* label,
                                       size_t cap, size_t* len) {
  return guarded([&] {
    require(set, from, to);
    if (i >= set->value.edges.size()) {
      throw InputError("edge index out of range");
    }
    const SummitEdge& e = set->value.edges[i];
    *from = e.from;
    *to = e.to;
    const Structure& S = set->value.members.front().structure();
    return write_atoms(simple_word(S, e.label), label, cap, len);
  });
}

// ------------------------------------------------------------------- tuples

garside_status garside_tuple_to_uss(const garside_element* const* tuple,
                                    size_t n, const garside_limits* limits,
                                    garside_element** out,
                                    garside_element** conjugator) {
  return guarded([&] {
    require(conjugator);
    if (n > 0) require(out);
    const CommutingTuple t(unwrap(tuple, n));
    TupleConjugation r = tuple_to_uss(t, to_limits(limits));
    for (std::size_t i = 0; i < n; ++i) out[i] = wrap(r.tuple[i]);
    *conjugator = wrap(std::move(r.conjugator));
    return GARSIDE_OK;
  });
}

garside_status garside_is_simultaneously_conjugate(
    const garside_element* const* t1, size_t n1,
    const garside_element* const* t2, size_t n2, const garside_limits* limits,
    int* found, garside_element** conjugator) {
  return guarded([&] {
    require(found, conjugator);
    if (n1 != n2) {
      throw DomainError("tuples of length " + std::to_string(n1) + " and " +
                        std::to_string(n2));
    }
    const CommutingTuple a(unwrap(t1, n1));
    const CommutingTuple b(unwrap(t2, n2));
    auto w = is_simultaneously_conjugate(a, b, to_limits(limits));
    *found = w ? 1 : 0;
    *conjugator = w ? wrap(std::move(*w)) : nullptr;
    return GARSIDE_OK;
  });
}

garside_status garside_is_stable(const garside_element* h,
                                 const garside_limits* limits, int* out) {
  return guarded([&] {
    require(h, out);
    *out = is_stable(h->value, to_limits(limits)) ? 1 : 0;
    return GARSIDE_OK;
  });
}

garside_status garside_stable_representative(const garside_element* g,
                                             const garside_limits* limits,
                                             garside_element** h,
                                             garside_element** x) {
  return guarded([&] {
    require(g, h, x);
    Conjugation c = stable_representative(g->value, to_limits(limits));
    *h = wrap(std::move(c.element));
    *x = wrap(std::move(c.conjugator));
    return GARSIDE_OK;
  });
}

// -------------------------------------------------------------- translation

uint64_t garside_word_length(const garside_element* x) {
  return x == nullptr ? 0 : word_length(x->value);
}

garside_status garside_summit_slopes(const garside_element* g,
                                     const garside_limits* limits,
                                     garside_rational* t_inf,
                                     garside_rational* t_sup) {
  return guarded([&] {
    require(g, t_inf, t_sup);
    const SummitSlopes s = summit_slopes(g->value, to_limits(limits));
    *t_inf = to_c(s.t_inf);
    *t_sup = to_c(s.t_sup);
    return GARSIDE_OK;
  });
}

garside_status garside_translation_number(const garside_element* g,
                                          const garside_limits* limits,
                                          garside_rational* out) {
  return guarded([&] {
    require(g, out);
    *out = to_c(translation_number(g->value, to_limits(limits)));
    return GARSIDE_OK;
  });
}

// ------------------------------------------------------------------ abelian

garside_status garside_dirichlet_approx(const garside_rational* x, size_t n,
                                        int64_t M, const garside_limits* limits,
                                        int64_t* k, int64_t* a) {
  return guarded([&] {
    require(k);
    if (n > 0) require(x, a);
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(from_c(x[i]));
    const DirichletApprox r = dirichlet_approx(xs, M, to_limits(limits));
    *k = to_int64(r.k);
    write_vector(r.a, a);
    return GARSIDE_OK;
  });
}

garside_status garside_norm_constants(size_t n, garside_rational K, int L,
                                      char* d1, size_t cap1, size_t* len1,
                                      char* d2, size_t cap2, size_t* len2) {
  return guarded([&] {
    const NormConstants c = norm_constants(n, from_c(K), L);
    const garside_status s1 = write_text(rational_text(c.D1), d1, cap1, len1);
    const garside_status s2 = write_text(rational_text(c.D2), d2, cap2, len2);
    return s1 != GARSIDE_OK ? s1 : s2;
  });
}

garside_status garside_hnf_complement(const int64_t* a, size_t n,
                                      int64_t* out) {
  return guarded([&] {
    if (n > 0) require(a, out);
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(a[i]);
    const IntMatrix m = hnf_complement(v);
    for (std::size_t r = 0; r < n; ++r) write_vector(m[r], out + r * n);
    return GARSIDE_OK;
  });
}

garside_status garside_integer_relation(const garside_structure* s,
                                        const garside_element* const* gens,
                                        size_t n, const garside_limits* limits,
                                        int* found, int64_t* relation) {
  return guarded([&] {
    require(found);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> g = unwrap(gens, n);
    auto structure = structure_of(s, g, nullptr);
    const AbelianPresentation p = make_presentation(structure, std::move(g), l);
    auto rel = integer_relation(p, l);
    *found = rel ? 1 : 0;
    if (rel) write_vector(*rel, relation);
    return GARSIDE_OK;
  });
}

garside_status garside_abelian_basis(const garside_structure* s,
                                     const garside_element* const* gens,
                                     size_t n, const garside_limits* limits,
                                     garside_element** basis, size_t* count,
                                     int64_t* expression) {
  return guarded([&] {
    require(count);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> g = unwrap(gens, n);
    auto structure = structure_of(s, g, nullptr);
    const AbelianPresentation b =
        abelian_basis(make_presentation(structure, std::move(g), l), l);
    *count = b.generators.size();
    if (!b.generators.empty()) require(basis, expression);
    for (std::size_t i = 0; i < b.expression.size(); ++i) {
      write_vector(b.expression[i], expression + i * n);
    }
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
      basis[i] = wrap(b.generators[i]);
    }
    return GARSIDE_OK;
  });
}

garside_status garside_abelian_member(const garside_element* g,
                                      const garside_element* const* gens,
                                      size_t n, const garside_limits* limits,
                                      int* found, int64_t* exponents) {
  return guarded([&] {
    require(g, found);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> h = unwrap(gens, n);
    auto structure = structure_of(nullptr, h, g);
    auto r = member(g->value, make_presentation(structure, std::move(h), l), l);
    *found = r ? 1 : 0;
    if (r) write_vector(*r, exponents);
    return GARSIDE_OK;
  });
}

garside_status garside_abelian_conj_member(const garside_element* g,
                                           const garside_element* const* gens,
                                           size_t n,
                                           const garside_limits* limits,
                                           int* found, int64_t* exponents,
                                           garside_element** conjugator) {
  return guarded([&] {
    require(g, found, conjugator);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> h = unwrap(gens, n);
    auto structure = structure_of(nullptr, h, g);
    auto r =
        conj_member(g->value, make_presentation(structure, std::move(h), l), l);
    *found = r ? 1 : 0;
    *conjugator = nullptr;
    if (r) {
      write_vector(r->exponents, exponents);
      *conjugator = wrap(std::move(r->conjugator));
    }
    return GARSIDE_OK;
  });
}

garside_status garside_subgroups_equal(const garside_structure* s,
                                       const garside_element* const* gens1,
                                       size_t n1,
                                       const garside_element* const* gens2,
                                       size_t n2, const garside_limits* limits,
                                       int* out) {
  return guarded([&] {
    require(out);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> a = unwrap(gens1, n1);
    std::vector<Element> b = unwrap(gens2, n2);
    auto structure = structure_of(s, a.empty() ? b : a, nullptr);
    *out = subgroups_equal(make_presentation(structure, std::move(a), l),
                           make_presentation(structure, std::move(b), l), l)
               ? 1
               : 0;
    return GARSIDE_OK;
  });
}

garside_status garside_subgroups_conjugate(
    const garside_structure* s, const garside_element* const* gens1, size_t n1,
    const garside_element* const* gens2, size_t n2,
    const garside_limits* limits, int* found, garside_element** conjugator) {
  return guarded([&] {
    require(found, conjugator);
    const SearchLimits l = to_limits(limits);
    std::vector<Element> a = unwrap(gens1, n1);
    std::vector<Element> b = unwrap(gens2, n2);
    auto structure = structure_of(s, a.empty() ? b : a, nullptr);
    auto w =
        subgroups_conjugate(make_presentation(structure, std::move(a), l),
                            make_presentation(structure, std::move(b), l), l);
    *found = w ? 1 : 0;
    *conjugator = w ? wrap(std::move(*w)) : nullptr;
    return GARSIDE_OK;
  });
}

}  // extern "C"
