#include "garside/abelian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "garside/conjugacy.hpp"
#include "garside/errors.hpp"
#include "garside/simultaneous.hpp"

namespace garside {

namespace {

namespace mp = boost::multiprecision;

BigInt floor_of(const Rational& r) {
  const BigInt n = mp::numerator(r);
  const BigInt d = mp::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded(std::string(what) + ": value exceeds 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

// Cheap necessary conditions on an exponent vector a for x = Π hᵢ^{aᵢ} to
// equal, or be conjugate to, an element of the given degree and translation
// number. Both structures have homogeneous relations, so the atom-length
// degree is a homomorphism to ℤ and conjugation invariant; t is a seminorm on
// the abelian subgroup, so each |aᵢ|·t(hᵢ) is at most t(x) plus the other
// terms. Relations are torsion-free (Garside groups are), so a relation
// search only needs primitive vectors.
struct Prefilter {
  std::vector<std::int64_t> degrees;
  std::int64_t degree = 0;
  std::vector<Rational> translation;
  Rational t;
  bool primitive = false;

  bool admits(const std::vector<std::int64_t>& a) const {
    if (primitive) {
      std::int64_t g = 0;
      for (std::int64_t x : a) g = std::gcd(g, x);
      if (g != 1) return false;
    }
    Rational total = t;
    for (std::size_t i = 0; i < a.size(); ++i) {
      total += Rational(a[i] < 0 ? -a[i] : a[i]) * translation[i];
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational own = Rational(a[i] < 0 ? -a[i] : a[i]) * translation[i];
      if (2 * own > total) return false;
    }
    return 2 * t <= total;
  }
};

std::int64_t degree_of(const Element& x) {
  const Structure& S = x.structure();
  std::int64_t d = x.delta_power() * S.delta_length();
  for (const Simple& f : x.factors()) d += S.length(f);
  return d;
}

Prefilter make_prefilter(const AbelianPresentation& p, std::int64_t degree,
                         const Rational& t, bool primitive) {
  Prefilter f;
  for (const Element& h : p.generators) f.degrees.push_back(degree_of(h));
  f.degree = degree;
  f.translation = p.translation;
  f.t = t;
  f.primitive = primitive;
  return f;
}

// Evaluating Π hᵢ^{aᵢ} costs roughly quadratically in the length of the
// product; searches are charged accordingly.
std::uint64_t evaluation_cost(const std::vector<std::int64_t>& a,
                              const AbelianPresentation& p) {
  std::uint64_t len = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(a[i] < 0 ? -a[i] : a[i]);
    len += k * (p.generators[i].factors().size() + 1);
  }
  return len * len / 64 + 1;
}

// Visits the vectors of ‖a‖∞ = s that satisfy the degree equation of `f`, in
// lexicographic order; stops as soon as `visit` returns true. With `half`,
// only vectors whose first nonzero entry is positive are visited.
class ShellWalker {
 public:
  ShellWalker(const Prefilter& f, bool half,
              const std::function<bool(const std::vector<std::int64_t>&)>& visit)
      : f_(f), half_(half), visit_(visit), a_(f.degrees.size()) {}

  bool shell(std::int64_t s) {
    s_ = s;
    return walk(0, 0, false, false);
  }

 private:
  bool emit(std::size_t i, std::int64_t v, std::int64_t partial, bool on_shell,
            bool signed_) {
    if (half_ && !signed_ && v < 0) return false;
    a_[i] = v;
    const bool shell_now = on_shell || v == s_ || v == -s_;
    const bool sign_now = signed_ || v != 0;
    const std::int64_t sum = partial + v * f_.degrees[i];
    if (i + 1 == a_.size()) {
      if (!shell_now || sum != f_.degree || (half_ && !sign_now)) return false;
      return visit_(a_);
    }
    return walk(i + 1, sum, shell_now, sign_now);
  }

  bool walk(std::size_t i, std::int64_t partial, bool on_shell, bool signed_) {
    const std::int64_t d = f_.degrees[i];
    if (i + 1 == a_.size() && d != 0) {
      const std::int64_t need = f_.degree - partial;
      if (need % d != 0) return false;
      const std::int64_t v = need / d;
      if (v < -s_ || v > s_) return false;
      return emit(i, v, partial, on_shell, signed_);
    }
    if (i + 1 == a_.size() && !on_shell) {
      return emit(i, -s_, partial, on_shell, signed_) ||
             emit(i, s_, partial, on_shell, signed_);
    }
    for (std::int64_t v = -s_; v <= s_; ++v) {
      if (emit(i, v, partial, on_shell, signed_)) return true;
    }
    return false;
  }

  const Prefilter& f_;
  bool half_;
  const std::function<bool(const std::vector<std::int64_t>&)>& visit_;
  std::vector<std::int64_t> a_;
  std::int64_t s_ = 0;
};

// Shells lo ≤ s ≤ hi in increasing order; each admitted vector is charged its
// evaluation cost before `visit` sees it.
bool scan_shells(const AbelianPresentation& p, const Prefilter& f,
                 const BigInt& lo, const BigInt& hi, bool half,
                 StepCounter& steps,
                 const std::function<bool(const IntVector&)>& visit) {
  const std::size_t n = p.generators.size();
  if (n == 0) return false;
  const BigInt first = std::max(lo, BigInt(1));
  if (first > hi) return false;
  std::int64_t weight = 1;
  for (std::int64_t d : f.degrees) weight += d < 0 ? -d : d;
  // Past this norm the degree arithmetic could overflow; no search ever gets
  // there within a step budget.
  const BigInt cap = std::numeric_limits<std::int64_t>::max() / 4 / weight;
  const std::int64_t from = to_int64(first, "shell scan");
  const std::int64_t to = to_int64(std::min(hi, cap), "shell scan");
  IntVector big(n);
  const std::function<bool(const std::vector<std::int64_t>&)> admitted =
      [&](const std::vector<std::int64_t>& a) {
        steps.tick();
        if (!f.admits(a)) return false;
        steps.tick(evaluation_cost(a, p));
        for (std::size_t i = 0; i < n; ++i) big[i] = a[i];
        return visit(big);
      };
  ShellWalker walker(f, half, admitted);
  for (std::int64_t s = from; s <= to; ++s) {
    steps.tick();
    if (walker.shell(s)) return true;
  }
  if (hi > cap) throw BudgetExceeded("shell scan: norm bound exceeds 64 bits");
  return false;
}

IntVector times(const IntVector& a, const IntMatrix& E, std::size_t cols) {
  IntVector out(cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += a[i] * E[i][j];
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigInt determinant(IntMatrix m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

AbelianPresentation rebuild(const AbelianPresentation& base,
                            std::vector<Element> gens, IntMatrix expression,
                            const SearchLimits& limits) {
  AbelianPresentation p = make_presentation(base.structure, std::move(gens),
                                            limits);
  p.expression = std::move(expression);
  p.original_count = base.original_count;
  return p;
}

const AbelianPresentation& ensure_basis(const AbelianPresentation& p,
                                        AbelianPresentation& storage,
                                        const SearchLimits& limits) {
  if (p.is_basis) return p;
  storage = abelian_basis(p, limits);
  return storage;
}

// Runs `visit` over the exponent vectors a (basis coordinates) whose norm is
// compatible with translation number t, as forced by the norm comparison, and
// that pass the prefilter for an element of the given degree.
bool scan_for_translation(const AbelianPresentation& basis, const Rational& t,
                          std::int64_t degree, StepCounter& steps,
                          const std::function<bool(const IntVector&)>& visit) {
  const std::size_t n = basis.generators.size();
  if (n == 0) return false;
  const ScanBounds b =
      scan_bounds(n, basis.K, basis.structure->delta_length());
  const Prefilter f = make_prefilter(basis, degree, t, false);
  return scan_shells(basis, f, ceil_of(t / b.D2), floor_of(t * Rational(b.D1)),
                     false, steps, visit);
}

}  // namespace

AbelianPresentation make_presentation(std::shared_ptr<const Structure> structure,
                                      std::vector<Element> generators,
                                      const SearchLimits& limits) {
  AbelianPresentation p;
  p.structure = std::move(structure);
  for (const Element& g : generators) {
    if (g.structure().name() != p.structure->name()) {
      throw StructureMismatch("generator over " + g.structure().name() +
                              " in a presentation over " +
                              p.structure->name());
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commute(generators[i], generators[j])) {
        throw DomainError("generators " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " do not commute");
      }
    }
  }
  p.K = 0;
  for (const Element& g : generators) {
    p.translation.push_back(translation_number(g, limits));
    p.K = std::max(p.K, p.translation.back());
  }
  p.original_count = generators.size();
  p.expression = identity_matrix(generators.size());
  p.generators = std::move(generators);
  return p;
}

Element evaluate(const std::shared_ptr<const Structure>& structure,
                 const std::vector<Element>& generators, const IntVector& a) {
  if (a.size() != generators.size()) {
    throw DomainError("exponent vector of length " + std::to_string(a.size()) +
                      " for " + std::to_string(generators.size()) +
                      " generators");
  }
  Element out(structure);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out = multiply(out, power(generators[i], to_int64(a[i], "evaluate")));
  }
  return out;
}

// ---------------------------------------------------------------- numerics --

DirichletApprox dirichlet_approx(const std::vector<Rational>& x,
                                 const BigInt& M, const SearchLimits& limits) {
  if (x.empty()) throw DomainError("dirichlet_approx: empty vector");
  if (M < 1) throw DomainError("dirichlet_approx: M must be positive");
  StepCounter steps(limits, "dirichlet_approx");
  const Rational m(M);
  std::map<IntVector, BigInt> cells;
  for (BigInt k = 0;; ++k) {
    steps.tick();
    IntVector cell(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Rational kx = Rational(k) * x[i];
      cell[i] = floor_of((kx - Rational(floor_of(kx))) * m);
    }
    auto [it, inserted] = cells.try_emplace(std::move(cell), k);
    if (inserted) continue;
    const BigInt& k1 = it->second;
    DirichletApprox out{k - k1, IntVector(x.size())};
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.a[i] = floor_of(Rational(k) * x[i]) - floor_of(Rational(k1) * x[i]);
    }
    return out;
  }
}

NormConstants norm_constants(std::size_t n, const Rational& K, int L) {
  if (n == 0 || L < 1 || K <= 0) {
    throw DomainError("norm_constants needs n >= 1, L >= 1 and K > 0");
  }
  const auto e = static_cast<unsigned>(n);
  const Rational nK = Rational(static_cast<long long>(n)) * K;
  Rational D1 = Rational(mp::pow(BigInt(2 * L), e + 1));
  for (unsigned i = 0; i < e; ++i) D1 *= nK;
  return {D1, nK};
}

ScanBounds scan_bounds(std::size_t n, const Rational& K, int L) {
  const NormConstants c = norm_constants(n, K, L);
  ScanBounds b;
  b.M = ceil_of(Rational(2 * L) * c.D2);
  b.relation_bound = mp::pow(b.M, static_cast<unsigned>(n));
  b.D1 = BigInt(2 * L) * b.relation_bound;
  b.D2 = c.D2;
  return b;
}

// ------------------------------------------------------------ subgroups --

std::optional<IntVector> integer_relation(const AbelianPresentation& p,
                                          const SearchLimits& limits) {
  const std::size_t n = p.generators.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.generators[i].is_identity()) {
      IntVector e(n);
      e[i] = 1;
      return e;
    }
  }
  if (n == 0) return std::nullopt;
  StepCounter steps(limits, "integer_relation");
  const ScanBounds b = scan_bounds(n, p.K, p.structure->delta_length());
  std::optional<IntVector> found;
  const Prefilter f = make_prefilter(p, 0, Rational(0), true);
  scan_shells(p, f, 1, b.relation_bound, true, steps, [&](const IntVector& a) {
    if (!evaluate(p.structure, p.generators, a).is_identity()) return false;
    found = a;
    return true;
  });
  return found;
}

// Row-reduces the column vector a to e₁ with unimodular steps v ← E v while
// keeping W with a = W v, so that W e₁ = a at the end and Wᵀ is the answer.
IntMatrix hnf_complement(const IntVector& a) {
  const std::size_t n = a.size();
  BigInt g = 0;
  for (const BigInt& x : a) g = mp::gcd(g, x);
  if (n == 0 || g == 0) throw DomainError("hnf_complement: zero vector");
  if (g != 1) throw DomainError("hnf_complement: vector is not primitive");

  IntVector v = a;
  IntMatrix W = identity_matrix(n);
  for (;;) {
    std::size_t pivot = n;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      ++nonzero;
      if (pivot == n || mp::abs(v[i]) < mp::abs(v[pivot])) pivot = i;
    }
    if (nonzero == 1) {
      if (pivot != 0) {
        std::swap(v[0], v[pivot]);
        for (std::size_t r = 0; r < n; ++r) std::swap(W[r][0], W[r][pivot]);
      }
      if (v[0] < 0) {
        v[0] = -v[0];
        for (std::size_t r = 0; r < n; ++r) W[r][0] = -W[r][0];
      }
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot || v[i] == 0) continue;
      const BigInt q = v[i] / v[pivot];
      if (q == 0) continue;
      v[i] -= q * v[pivot];
      // W ← W·E⁻¹ adds q·(column i) to column pivot.
      for (std::size_t r = 0; r < n; ++r) W[r][pivot] += q * W[r][i];
    }
  }
  IntMatrix out(n, IntVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = W[c][r];
  return out;
}

AbelianPresentation abelian_basis(const AbelianPresentation& p,
                                  const SearchLimits& limits) {
  AbelianPresentation cur = p;
  for (;;) {
    const std::optional<IntVector> rel = integer_relation(cur, limits);
    if (!rel) break;
    BigInt g = 0;
    for (const BigInt& x : *rel) g = mp::gcd(g, x);
    IntVector primitive = *rel;
    for (BigInt& x : primitive) x /= g;
    const IntMatrix W = hnf_complement(primitive);
    std::vector<Element> gens;
    IntMatrix expression;
    for (std::size_t r = 1; r < W.size(); ++r) {
      gens.push_back(evaluate(cur.structure, cur.generators, W[r]));
      expression.push_back(times(W[r], cur.expression, cur.original_count));
    }
    cur = rebuild(cur, std::move(gens), std::move(expression), limits);
  }
  for (std::size_t i = 0; i < cur.generators.size(); ++i) {
    Element& h = cur.generators[i];
    const Element inv = inverse(h);
    const std::int64_t weight = h.inf() + h.sup();
    if (weight < 0 || (weight == 0 && canonical_less(h, inv))) {
      h = inv;
      for (BigInt& x : cur.expression[i]) x = -x;
    }
  }
  cur.is_basis = true;
  return cur;
}

std::optional<IntVector> member(const Element& g, const AbelianPresentation& p,
                                const SearchLimits& limits) {
  if (g.structure().name() != p.structure->name()) {
    throw StructureMismatch("element over " + g.structure().name() +
                            " against a subgroup of " + p.structure->name());
  }
  if (g.is_identity()) return IntVector(p.original_count);
  AbelianPresentation storage;
  const AbelianPresentation& basis = ensure_basis(p, storage, limits);
  StepCounter steps(limits, "member");
  // Members commute with every generator.
  for (const Element& h : basis.generators) {
    if (!commute(g, h)) return std::nullopt;
  }
  const Rational t = translation_number(g, limits);
  std::optional<IntVector> found;
  scan_for_translation(basis, t, degree_of(g), steps, [&](const IntVector& a) {
    if (!(evaluate(basis.structure, basis.generators, a) == g)) return false;
    found = times(a, basis.expression, basis.original_count);
    return true;
  });
  return found;
}

std::optional<ConjugateMember> conj_member(const Element& g,
                                           const AbelianPresentation& p,
                                           const SearchLimits& limits) {
  if (g.structure().name() != p.structure->name()) {
    throw StructureMismatch("element over " + g.structure().name() +
                            " against a subgroup of " + p.structure->name());
  }
  if (g.is_identity()) {
    return ConjugateMember{IntVector(p.original_count), Element(p.structure)};
  }
  AbelianPresentation storage;
  const AbelianPresentation& basis = ensure_basis(p, storage, limits);
  StepCounter steps(limits, "conj_member");
  const Rational t = translation_number(g, limits);
  const SummitInvariants target = summit_invariants(g, limits);
  std::optional<ConjugateMember> found;
  scan_for_translation(basis, t, degree_of(g), steps, [&](const IntVector& a) {
    const Element h = evaluate(basis.structure, basis.generators, a);
    const SummitInvariants inv = summit_invariants(h, limits);
    if (inv.inf_s != target.inf_s || inv.sup_s != target.sup_s) return false;
    std::optional<Element> w = is_conjugate(g, h, limits);
    if (!w) return false;
    found = ConjugateMember{times(a, basis.expression, basis.original_count),
                            std::move(*w)};
    return true;
  });
  return found;
}

bool subgroups_equal(const AbelianPresentation& p1,
                     const AbelianPresentation& p2,
                     const SearchLimits& limits) {
  AbelianPresentation s1;
  AbelianPresentation s2;
  const AbelianPresentation& b1 = ensure_basis(p1, s1, limits);
  const AbelianPresentation& b2 = ensure_basis(p2, s2, limits);
  for (const Element& h : p1.generators) {
    if (!member(h, b2, limits)) return false;
  }
  for (const Element& h : p2.generators) {
    if (!member(h, b1, limits)) return false;
  }
  return true;
}

// Candidates for the images of H₂'s basis inside H₁ are the elements of H₁
// conjugate to some basis element of H₂; their exponent vectors are bounded
// through the translation number. A tuple of candidates is accepted when its
// exponent matrix is unimodular (so it is a basis of H₁) and it is
// simultaneously conjugate to H₂'s basis.
std::optional<Element> subgroups_conjugate(const AbelianPresentation& p1,
                                           const AbelianPresentation& p2,
                                           const SearchLimits& limits) {
  if (p1.structure->name() != p2.structure->name()) {
    throw StructureMismatch("subgroups of " + p1.structure->name() + " and " +
                            p2.structure->name());
  }
  AbelianPresentation s1;
  AbelianPresentation s2;
  const AbelianPresentation& b1 = ensure_basis(p1, s1, limits);
  const AbelianPresentation& b2 = ensure_basis(p2, s2, limits);
  const std::size_t n = b1.generators.size();
  if (n != b2.generators.size()) return std::nullopt;
  if (n == 0) return Element(b1.structure);

  StepCounter steps(limits, "subgroups_conjugate");
  struct Candidate {
    IntVector a;
    Element h;
  };
  std::vector<std::vector<Candidate>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element& target = b2.generators[i];
    const SummitInvariants inv = summit_invariants(target, limits);
    scan_for_translation(
        b1, b2.translation[i], degree_of(target), steps,
        [&](const IntVector& a) {
          Element h = evaluate(b1.structure, b1.generators, a);
          const SummitInvariants hi = summit_invariants(h, limits);
          if (hi.inf_s != inv.inf_s || hi.sup_s != inv.sup_s) return false;
          if (is_conjugate(h, target, limits)) {
            candidates[i].push_back({a, std::move(h)});
          }
          return false;
        });
    if (candidates[i].empty()) return std::nullopt;
  }

  const CommutingTuple goal(b2.generators);
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    steps.tick();
    IntMatrix exps;
    std::vector<Element> tuple;
    for (std::size_t i = 0; i < n; ++i) {
      exps.push_back(candidates[i][pick[i]].a);
      tuple.push_back(candidates[i][pick[i]].h);
    }
    const BigInt det = determinant(exps);
    if (det == 1 || det == -1) {
      if (auto w = is_simultaneously_conjugate(CommutingTuple(std::move(tuple)),
                                               goal, limits)) {
        return w;
      }
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] + 1 == candidates[i - 1].size()) pick[--i] = 0;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
  }
}

}  // namespace garside
