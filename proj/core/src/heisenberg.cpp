#include "lagcorr/heisenberg.hpp"

#include <algorithm>
#include <set>

namespace lag {

Int FinAb::order() const {
  Int o = 1;
  for (long f : factors) o *= f;
  return o;
}

FinAb::Elem FinAb::reduce(Elem e) const {
  LAG_CHECK(e.size() == factors.size(), "BadShape", "element rank mismatch");
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] %= factors[i];
    if (e[i] < 0) e[i] += factors[i];
  }
  return e;
}

FinAb::Elem FinAb::add(const Elem& x, const Elem& y) const {
  Elem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return reduce(std::move(z));
}

FinAb::Elem FinAb::neg(const Elem& x) const {
  Elem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return reduce(std::move(z));
}

FinAb::Elem FinAb::mul(const Elem& x, long n) const {
  Elem z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] * n;
  return reduce(std::move(z));
}

long FinAb::size_checked(long bound) const {
  Int o = order();
  LAG_CHECK(o <= bound, "BruteBound", "group too large for dense enumeration");
  return o.get_si();
}

long FinAb::index_of(const Elem& e) const {
  long idx = 0;
  for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + e[i];
  return idx;
}

FinAb::Elem FinAb::elem_at(long idx) const {
  Elem e(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    e[i] = idx % factors[i];
    idx /= factors[i];
  }
  return e;
}

Rat SkewPairing::eval(const FinAb::Elem& x, const FinAb::Elem& y) const {
  Rat v = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      if (x[i] && y[j]) v += Rat(x[i]) * gram[i][j] * Rat(y[j]);
  return mod1(v);
}

bool SkewPairing::is_perfect() const {
  return integral_preimage_index(gram) == group.order();
}

SkewPairing make_pairing(FinAb group, std::vector<std::vector<Rat>> gram) {
  int k = group.rank();
  LAG_CHECK(static_cast<int>(gram.size()) == k, "BadShape", "Gram rank mismatch");
  for (const auto& row : gram)
    LAG_CHECK(static_cast<int>(row.size()) == k, "BadShape", "Gram rank mismatch");
  // Well-defined modulo the orders and alternating.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      LAG_CHECK(is_integer(gram[i][j] * Rat(group.factors[i])), "BadPairing",
                "pairing not defined modulo the orders");
      LAG_CHECK(is_integer(gram[i][j] * Rat(group.factors[j])), "BadPairing",
                "pairing not defined modulo the orders");
      LAG_CHECK(mod1(gram[i][j] + gram[j][i]) == 0, "BadPairing", "pairing not skew");
    }
    LAG_CHECK(mod1(gram[i][i]) == 0, "BadPairing", "pairing not alternating");
  }
  return SkewPairing{std::move(group), std::move(gram)};
}

SkewPairing standard_split_pairing(const std::vector<long>& h_factors) {
  // K = H x H^*, e((h1,x1),(h2,x2)) = x1(h2) - x2(h1).
  int r = static_cast<int>(h_factors.size());
  FinAb k;
  k.factors = h_factors;
  for (long f : h_factors) k.factors.push_back(f);
  std::vector<std::vector<Rat>> gram(2 * r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) {
    gram[r + i][i] = rat(1, h_factors[i]);   // x1(h2)
    gram[i][r + i] = rat(-1, h_factors[i]);  // -x2(h1)
  }
  return make_pairing(std::move(k), std::move(gram));
}

Rat HeisenbergData::c(long i, long j) const {
  long n = pairing.group.size_checked();
  return cocycle[static_cast<size_t>(i) * n + j];
}

Rat HeisenbergData::c(const FinAb::Elem& x, const FinAb::Elem& y) const {
  return c(pairing.group.index_of(x), pairing.group.index_of(y));
}

HeisenbergData make_heisenberg_table(SkewPairing pairing, std::vector<Rat> table) {
  const FinAb& g = pairing.group;
  long n = g.size_checked();
  LAG_CHECK(static_cast<long>(table.size()) == n * n, "BadShape", "cocycle table size mismatch");
  HeisenbergData h{std::move(pairing), std::move(table)};
  // Normalized, 2-cocycle, and commutator = e.
  for (long i = 0; i < n; ++i) {
    LAG_CHECK(mod1(h.c(i, 0)) == 0 && mod1(h.c(0, i)) == 0, "BadCocycle",
              "cocycle not normalized");
  }
  const FinAb& k = h.pairing.group;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      FinAb::Elem x = k.elem_at(i), y = k.elem_at(j);
      Rat comm = mod1(h.c(i, j) - h.c(j, i));
      LAG_CHECK(comm == h.pairing.eval(x, y), "BadCocycle",
                "commutator of the cocycle differs from the pairing");
    }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long l = 0; l < n; ++l) {
        FinAb::Elem x = k.elem_at(i), y = k.elem_at(j), z = k.elem_at(l);
        Rat lhs = h.c(i, j) + h.c(k.index_of(k.add(x, y)), l);
        Rat rhs = h.c(j, l) + h.c(i, k.index_of(k.add(y, z)));
        LAG_CHECK(mod1(lhs - rhs) == 0, "BadCocycle", "cocycle identity fails");
      }
  return h;
}

HeisenbergData make_heisenberg(SkewPairing pairing, std::vector<std::vector<Rat>> cocycle_gram) {
  const FinAb& g = pairing.group;
  long n = g.size_checked();
  int r = g.rank();
  LAG_CHECK(static_cast<int>(cocycle_gram.size()) == r, "BadShape", "cocycle Gram rank mismatch");
  std::vector<Rat> table(static_cast<size_t>(n) * n, Rat(0));
  for (long i = 0; i < n; ++i) {
    FinAb::Elem x = g.elem_at(i);
    for (long j = 0; j < n; ++j) {
      FinAb::Elem y = g.elem_at(j);
      Rat v = 0;
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t)
          if (x[s] && y[t]) v += Rat(x[s]) * cocycle_gram[s][t] * Rat(y[t]);
      table[static_cast<size_t>(i) * n + j] = mod1(v);
    }
  }
  return make_heisenberg_table(std::move(pairing), std::move(table));
}

HeisenbergData standard_split_heisenberg(const std::vector<long>& h_factors) {
  SkewPairing p = standard_split_pairing(h_factors);
  int r = static_cast<int>(h_factors.size());
  std::vector<std::vector<Rat>> c(2 * r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) c[r + i][i] = rat(1, h_factors[i]);  // chi_1(h_2)
  return make_heisenberg(std::move(p), std::move(c));
}

Subgroup span_subgroup(const FinAb& g, const std::vector<FinAb::Elem>& gens) {
  // Invariant-factor basis of the span, via the torsion machinery on the
  // coordinates a_i / n_i in (Q/Z)^rank.
  std::vector<std::vector<Rat>> qgens;
  for (const auto& e : gens) {
    std::vector<Rat> v(g.rank());
    for (int i = 0; i < g.rank(); ++i) v[i] = rat(e[i], g.factors[i]);
    qgens.push_back(std::move(v));
  }
  TorsionGroup t = torsion_from_generators(g.rank(), qgens);
  Subgroup s;
  for (size_t i = 0; i < t.factors.size(); ++i) {
    FinAb::Elem w(g.rank());
    for (int r = 0; r < g.rank(); ++r) {
      Rat coord = mod1(t.lifts[i][r]) * Rat(g.factors[r]);
      LAG_ASSERT(is_integer(coord), "Subgroup", "basis lift not in the group");
      w[r] = num(coord).get_si();
    }
    s.basis.push_back(g.reduce(std::move(w)));
    s.basis_orders.push_back(t.factors[i]);
  }
  // Enumerate as tuples over the basis, recording coordinates.
  std::vector<long> radix = s.basis_orders;
  long total = 1;
  for (long o : radix) total *= o;
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    std::vector<long> tuple(radix.size());
    FinAb::Elem e = g.zero();
    for (size_t i = radix.size(); i-- > 0;) {
      tuple[i] = rem % radix[i];
      rem /= radix[i];
      e = g.add(e, g.mul(s.basis[i], tuple[i]));
    }
    s.elements.push_back(e);
    s.coordinates.push_back(tuple);
  }
  // Put zero first (it is: all tuples zero at idx 0).
  return s;
}

std::vector<Subgroup> all_subgroups(const FinAb& g, long order_bound) {
  long n = g.size_checked(order_bound);
  std::vector<FinAb::Elem> elems;
  for (long i = 0; i < n; ++i) elems.push_back(g.elem_at(i));
  std::set<std::set<long>> seen;
  std::vector<Subgroup> out;
  // Closure BFS: grow subgroups one generator at a time.
  std::vector<std::set<long>> frontier = {{g.index_of(g.zero())}};
  seen.insert(frontier[0]);
  std::vector<std::vector<FinAb::Elem>> gens_of = {{}};
  while (!frontier.empty()) {
    std::vector<std::set<long>> next;
    std::vector<std::vector<FinAb::Elem>> next_gens;
    for (size_t f = 0; f < frontier.size(); ++f) {
      for (long i = 0; i < n; ++i) {
        if (frontier[f].count(i)) continue;
        std::vector<FinAb::Elem> gens = gens_of[f];
        gens.push_back(elems[i]);
        Subgroup s = span_subgroup(g, gens);
        std::set<long> key;
        for (const auto& e : s.elements) key.insert(g.index_of(e));
        if (seen.insert(key).second) {
          next.push_back(key);
          next_gens.push_back(gens);
        }
      }
    }
    frontier = std::move(next);
    gens_of = std::move(next_gens);
  }
  for (const auto& key : seen) {
    std::vector<FinAb::Elem> gens;
    for (long i : key) gens.push_back(elems[i]);
    out.push_back(span_subgroup(g, gens));
  }
  return out;
}

bool is_isotropic(const SkewPairing& p, const Subgroup& s) {
  for (const auto& x : s.basis)
    for (const auto& y : s.basis)
      if (p.eval(x, y) != 0) return false;
  return true;
}

namespace {

bool maximal_isotropic_dfs(const SkewPairing& p, const std::vector<FinAb::Elem>& elems,
                           Subgroup& current, const Int& target, size_t start, long& budget,
                           Subgroup& out) {
  if (--budget < 0) return false;
  if (Int(current.size()) == target) {
    out = current;
    return true;
  }
  for (size_t i = start; i < elems.size(); ++i) {
    const FinAb::Elem& x = elems[i];
    bool inside = std::find(current.elements.begin(), current.elements.end(), x) !=
                  current.elements.end();
    if (inside) continue;
    bool orthogonal = true;
    for (const auto& b : current.basis)
      if (p.eval(x, b) != 0 || p.eval(x, x) != 0) {
        orthogonal = false;
        break;
      }
    if (!current.basis.empty() && !orthogonal) continue;
    if (current.basis.empty() && p.eval(x, x) != 0) continue;
    std::vector<FinAb::Elem> gens = current.basis;
    gens.push_back(x);
    Subgroup bigger = span_subgroup(p.group, gens);
    if (!is_isotropic(p, bigger)) continue;
    Int sz(bigger.size());
    if (!mpz_divisible_p(target.get_mpz_t(), sz.get_mpz_t())) continue;
    if (maximal_isotropic_dfs(p, elems, bigger, target, i + 1, budget, out)) return true;
  }
  return false;
}

}  // namespace

Subgroup maximal_isotropic(const SkewPairing& p, long node_budget) {
  LAG_CHECK(p.is_perfect(), "PairingNotPerfect", "maximal isotropic needs a perfect pairing");
  Int order = p.group.order();
  Int target;
  LAG_CHECK(perfect_square(order, &target), "BadPairing",
            "perfect pairing on a group of non-square order");
  long n = p.group.size_checked();
  std::vector<FinAb::Elem> elems;
  for (long i = 0; i < n; ++i) elems.push_back(p.group.elem_at(i));
  Subgroup start = span_subgroup(p.group, {});
  Subgroup out;
  long budget = node_budget;
  if (maximal_isotropic_dfs(p, elems, start, target, 0, budget, out)) return out;
  throw ValidationError("SearchExhausted", "no maximal isotropic found within the budget");
}

std::vector<Subgroup> all_maximal_isotropics(const SkewPairing& p) {
  Int target;
  LAG_CHECK(perfect_square(p.group.order(), &target), "BadPairing", "group order not a square");
  std::vector<Subgroup> out;
  for (Subgroup& s : all_subgroups(p.group))
    if (Int(s.size()) == target && is_isotropic(p, s)) out.push_back(std::move(s));
  return out;
}

std::vector<Rat> cocycle_splitting(const HeisenbergData& h, const Subgroup& i) {
  const FinAb& k = h.pairing.group;
  LAG_CHECK(is_isotropic(h.pairing, i), "NotIsotropic",
            "cocycle splittings exist on isotropic subgroups only");
  size_t n = i.elements.size();
  std::vector<Rat> s(n, Rat(0));
  // s on the basis: o s(w) = -sum_{t<o} c(t w, w).
  std::vector<Rat> sbasis(i.basis.size(), Rat(0));
  for (size_t bi = 0; bi < i.basis.size(); ++bi) {
    Rat acc = 0;
    FinAb::Elem cur = i.basis[bi];
    for (long t = 1; t < i.basis_orders[bi]; ++t) {
      acc += h.c(cur, i.basis[bi]);
      cur = k.add(cur, i.basis[bi]);
    }
    sbasis[bi] = mod1(-acc / Rat(i.basis_orders[bi]));
  }
  // Accumulate lexicographically: s(x + w_i) = s(x) + s(w_i) + c(x, w_i).
  for (size_t e = 0; e < n; ++e) {
    const std::vector<long>& tuple = i.coordinates[e];
    Rat val = 0;
    FinAb::Elem acc = k.zero();
    for (size_t bi = 0; bi < tuple.size(); ++bi) {
      for (long t = 0; t < tuple[bi]; ++t) {
        val += sbasis[bi] + h.c(acc, i.basis[bi]);
        acc = k.add(acc, i.basis[bi]);
      }
    }
    s[e] = mod1(val);
  }
  // Hard verification: delta s = c on I x I.
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      FinAb::Elem sum = k.add(i.elements[a], i.elements[b]);
      size_t cidx = 0;
      for (; cidx < n; ++cidx)
        if (i.elements[cidx] == sum) break;
      LAG_CHECK(cidx < n, "NotIsotropic", "subgroup not closed");
      Rat want = mod1(s[a] + s[b] + h.c(i.elements[a], i.elements[b]));
      LAG_CHECK(want == s[cidx], "LiftObstructed",
                "no splitting of the cocycle on the isotropic subgroup");
    }
  return s;
}

MonomialRep schrodinger(const HeisenbergData& h, const Subgroup& iso) {
  const FinAb& k = h.pairing.group;
  Int ko = k.order();
  Int target;
  LAG_CHECK(perfect_square(ko, &target), "BadPairing", "group order not a square");
  LAG_CHECK(Int(iso.size()) == target, "NotIsotropic",
            "Schroedinger induction needs a maximal isotropic (order |K|^{1/2})");
  std::vector<Rat> s = cocycle_splitting(h, iso);

  long n = k.size_checked();
  // Coset representatives of K / I.
  std::vector<long> coset_of(n, -1);
  std::vector<long> reps;
  std::vector<long> s_index_of(n, -1);  // index in iso.elements for members
  for (size_t j = 0; j < iso.elements.size(); ++j)
    s_index_of[k.index_of(iso.elements[j])] = static_cast<long>(j);
  for (long x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    long rep_id = static_cast<long>(reps.size());
    reps.push_back(x);
    FinAb::Elem xe = k.elem_at(x);
    for (const auto& i_el : iso.elements) coset_of[k.index_of(k.add(xe, i_el))] = rep_id;
  }
  int dim = static_cast<int>(reps.size());
  LAG_ASSERT(Int(dim) == target, "Schrodinger", "coset count mismatch");

  MonomialRep rep;
  rep.group = k;
  rep.dim = dim;
  rep.perm.assign(n, std::vector<int>(dim, 0));
  rep.phase.assign(n, std::vector<Rat>(dim, Rat(0)));
  for (long gi = 0; gi < n; ++gi) {
    FinAb::Elem g = k.elem_at(gi);
    for (int j = 0; j < dim; ++j) {
      FinAb::Elem rj = k.elem_at(reps[j]);
      // Target coset m with r_m = r_j - g mod I; i = r_m + g - r_j in I.
      FinAb::Elem diff = k.add(rj, k.neg(g));
      int mcoset = static_cast<int>(coset_of[k.index_of(diff)]);
      FinAb::Elem rm = k.elem_at(reps[mcoset]);
      FinAb::Elem i_el = k.add(k.add(rm, g), k.neg(rj));
      long si = s_index_of[k.index_of(i_el)];
      LAG_ASSERT(si >= 0, "Schrodinger", "coset bookkeeping failed");
      rep.perm[gi][j] = mcoset;
      rep.phase[gi][j] = mod1(h.c(rm, g) - s[si] - h.c(i_el, rj));
    }
  }
  LAG_ASSERT(satisfies_representation_property(rep, h), "Schrodinger",
             "induced action violates the representation property");
  return rep;
}

CycloSum MonomialRep::trace(long elem_idx) const {
  CycloSum t;
  for (int j = 0; j < dim; ++j)
    if (perm[elem_idx][j] == j) t = t + CycloSum::phase(phase[elem_idx][j]);
  return t;
}

bool satisfies_representation_property(const MonomialRep& rep, const HeisenbergData& h) {
  const FinAb& k = rep.group;
  long n = k.size_checked();
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      FinAb::Elem xe = k.elem_at(x), ye = k.elem_at(y);
      long xy = k.index_of(k.add(xe, ye));
      for (int j = 0; j < rep.dim; ++j) {
        // rho(x) rho(y) e_j vs e(c(x,y)) rho(x+y) e_j
        int t1 = rep.perm[x][rep.perm[y][j]];
        Rat p1 = mod1(rep.phase[y][j] + rep.phase[x][rep.perm[y][j]]);
        int t2 = rep.perm[xy][j];
        Rat p2 = mod1(rep.phase[xy][j] + h.c(x, y));
        if (t1 != t2 || p1 != p2) return false;
      }
    }
  return true;
}

bool is_irreducible_weight1(const MonomialRep& rep, const HeisenbergData& h) {
  LAG_CHECK(satisfies_representation_property(rep, h), "NotARepresentation",
            "input does not satisfy the representation property");
  const FinAb& k = rep.group;
  long n = k.size_checked();
  CycloSum total;
  for (long x = 0; x < n; ++x) {
    CycloSum t = rep.trace(x);
    total = total + t * t.conj();
  }
  return total == CycloSum::rational(Rat(k.order()));
}

MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b) {
  LAG_CHECK(a.group == b.group, "BadShape", "direct sum over different groups");
  MonomialRep out;
  out.group = a.group;
  out.dim = a.dim + b.dim;
  long n = a.group.size_checked();
  out.perm.assign(n, std::vector<int>(out.dim, 0));
  out.phase.assign(n, std::vector<Rat>(out.dim, Rat(0)));
  for (long x = 0; x < n; ++x) {
    for (int j = 0; j < a.dim; ++j) {
      out.perm[x][j] = a.perm[x][j];
      out.phase[x][j] = a.phase[x][j];
    }
    for (int j = 0; j < b.dim; ++j) {
      out.perm[x][a.dim + j] = a.dim + b.perm[x][j];
      out.phase[x][a.dim + j] = b.phase[x][j];
    }
  }
  return out;
}

bool same_character(const MonomialRep& a, const MonomialRep& b) {
  if (!(a.group == b.group)) return false;
  long n = a.group.size_checked();
  for (long x = 0; x < n; ++x)
    if (!(a.trace(x) == b.trace(x))) return false;
  return true;
}

Int invariant_dimension(const MonomialRep& rep, const HeisenbergData& h, const Subgroup& iso) {
  std::vector<Rat> s = cocycle_splitting(h, iso);
  CycloSum acc;
  for (size_t j = 0; j < iso.elements.size(); ++j) {
    long idx = rep.group.index_of(iso.elements[j]);
    acc = acc + CycloSum::phase(s[j]) * rep.trace(idx);
  }
  Rat v = acc.rational_value() / Rat(static_cast<long>(iso.elements.size()));
  LAG_ASSERT(is_integer(v) && v >= 0, "InvariantDim", "projector trace not a nonnegative integer");
  return num(v);
}

MultiplicityReport restrict_multiplicities(const HeisenbergData& h, const Subgroup& c,
                                           bool brute_force_check) {
  const FinAb& k = h.pairing.group;
  LAG_CHECK(h.pairing.is_perfect(), "PairingNotPerfect",
            "multiplicity formula needs a Heisenberg input");
  LAG_CHECK(is_isotropic(h.pairing, c), "NotCentral",
            "C must be isotropic to lift to a central subgroup");

  // C-perp and the induced pairing on C-perp / C.
  long n = k.size_checked();
  std::vector<FinAb::Elem> perp;
  for (long x = 0; x < n; ++x) {
    FinAb::Elem xe = k.elem_at(x);
    bool ok = true;
    for (const auto& b : c.basis)
      if (h.pairing.eval(xe, b) != 0) {
        ok = false;
        break;
      }
    if (ok) perp.push_back(xe);
  }
  Int perp_order(static_cast<long>(perp.size()));
  Int c_order(c.size());
  Int kbar_order;
  LAG_ASSERT(mpz_divisible_p(perp_order.get_mpz_t(), c_order.get_mpz_t()), "Multiplicity",
             "|C| does not divide |C-perp|");
  mpz_divexact(kbar_order.get_mpz_t(), perp_order.get_mpz_t(), c_order.get_mpz_t());

  // Radical of the induced pairing on C-perp/C must be trivial.
  for (const auto& x : perp) {
    bool in_radical = true;
    for (const auto& y : perp)
      if (h.pairing.eval(x, y) != 0) {
        in_radical = false;
        break;
      }
    if (in_radical) {
      bool in_c = std::find(c.elements.begin(), c.elements.end(), x) != c.elements.end();
      LAG_CHECK(in_c, "QuotientNotHeisenberg", "induced pairing on C-perp/C is degenerate");
    }
  }

  MultiplicityReport rep;
  LAG_CHECK(perfect_square(k.order(), &rep.dim_v), "BadPairing", "|K| not a square");
  LAG_CHECK(perfect_square(kbar_order, &rep.dim_vbar), "QuotientNotHeisenberg",
            "|C-perp/C| not a square");
  rep.pi_order = c_order;

  // m_chi = dim V / (|Pi| dim Vbar) for every character chi of C.
  Int denom = rep.pi_order * rep.dim_vbar;
  LAG_ASSERT(mpz_divisible_p(rep.dim_v.get_mpz_t(), denom.get_mpz_t()), "Multiplicity",
             "multiplicity formula does not yield an integer");
  Int m;
  mpz_divexact(m.get_mpz_t(), rep.dim_v.get_mpz_t(), denom.get_mpz_t());

  std::vector<long> radix = c.basis_orders;
  long chars = 1;
  for (long o : radix) chars *= o;
  for (long t = 0; t < chars; ++t) {
    long rem = t;
    std::vector<long> tuple(radix.size());
    for (size_t i = radix.size(); i-- > 0;) {
      tuple[i] = rem % radix[i];
      rem /= radix[i];
    }
    rep.characters.push_back(tuple);
    rep.multiplicities.push_back(m);
  }

  if (brute_force_check) {
    // Isotypic dimensions of the chi-components of the Schroedinger
    // representation, via exact projector traces; each must equal
    // m_chi * dim Vbar.
    MonomialRep v = schrodinger(h, maximal_isotropic(h.pairing));
    std::vector<Rat> s = cocycle_splitting(h, c);
    for (long t = 0; t < chars; ++t) {
      CycloSum acc;
      for (size_t e = 0; e < c.elements.size(); ++e) {
        Rat chi_val = 0;
        for (size_t i = 0; i < radix.size(); ++i)
          chi_val += rat(rep.characters[t][i] * c.coordinates[e][i], radix[i]);
        long idx = k.index_of(c.elements[e]);
        acc = acc + CycloSum::phase(mod1(s[e] - chi_val)) * v.trace(idx);
      }
      Rat dim_chi = acc.rational_value() / Rat(c.size());
      LAG_ASSERT(is_integer(dim_chi), "Multiplicity", "isotypic dimension not an integer");
      LAG_ASSERT(num(dim_chi) == rep.multiplicities[t] * rep.dim_vbar, "Multiplicity",
                 "formula disagrees with the brute-force isotypic decomposition");
    }
  }
  return rep;
}

namespace {

// Generators of the finite kernel {x : M x integral}/lattice as rational
// vectors, from the Z-expansion of an O-matrix with full column rank.
std::vector<std::vector<Rat>> torsion_kernel_generators(const Mat& m_o) {
  Mat mz = expand_to_z(m_o);
  LAG_ASSERT(mz.is_integral(), "Torsion", "expansion not integral");
  SnfResult s = smith_normal_form(mz);
  LAG_CHECK(s.rank == mz.cols(), "NotTransversal", "kernel is not finite");
  std::vector<std::vector<Rat>> gens;
  for (int i = 0; i < s.rank; ++i) {
    Int d = abs(num(s.divisors[i].a()));
    if (d == 1) continue;
    std::vector<Rat> v(mz.cols());
    for (int r = 0; r < mz.cols(); ++r) v[r] = s.V.at(r, i).a() / Rat(d);
    gens.push_back(std::move(v));
  }
  return gens;
}

}  // namespace

IntersectionData intersection_heisenberg(const ParamCorrespondence& y,
                                         const ParamCorrespondence& z) {
  LAG_CHECK(y.src.g == 0 && z.src.g == 0 && y.dst == z.dst, "BadShape",
            "intersection requires two Lagrangians in one X");
  LAG_CHECK(is_lagrangian(y) && is_lagrangian(z), "BadInput",
            "intersection requires Lagrangian presentations");
  BaseRing ring = y.j.ring();
  Mat delta = Mat::hstack(y.j, -z.j);
  LAG_CHECK(rank_K(delta) == delta.cols(), "NotTransversal", "Y x_X Z is not finite");

  std::vector<std::vector<Rat>> gens = torsion_kernel_generators(delta);
  int nz = 2 * delta.cols();  // Z-rank of the expanded parameter lattice
  TorsionGroup t = torsion_from_generators(nz, gens);

  FinAb k;
  k.factors = t.factors;

  // Pairing e(k1, k2) = omega(i_Y(y-lift of k1), i_Z(z-lift of k2)) mod 1.
  Mat jy_z = expand_to_z(y.j);
  Mat jz_z = expand_to_z(z.j);
  Mat gram_z = symplectic_gram_z(ring, standard_form(y.dst));
  int my2 = 2 * y.m();
  std::vector<std::vector<Rat>> gram(k.rank(), std::vector<Rat>(k.rank(), Rat(0)));
  auto apply = [](const Mat& m, const std::vector<Rat>& v, int offset) {
    std::vector<Rat> out(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j).a() * v[offset + j];
    return out;
  };
  for (int i = 0; i < k.rank(); ++i) {
    std::vector<Rat> ylift = apply(jy_z, t.lifts[i], 0);
    for (int j = 0; j < k.rank(); ++j) {
      std::vector<Rat> zlift = apply(jz_z, t.lifts[j], my2);
      Rat v = 0;
      for (int r = 0; r < gram_z.rows(); ++r)
        for (int cidx = 0; cidx < gram_z.cols(); ++cidx)
          if (!gram_z.at(r, cidx).is_zero()) v += ylift[r] * gram_z.at(r, cidx).a() * zlift[cidx];
      gram[i][j] = mod1(v);
    }
  }
  SkewPairing pairing = make_pairing(k, std::move(gram));
  Int root;
  LAG_ASSERT(perfect_square(k.order(), &root), "PairingNotPerfect",
             "|Y x_X Z| is not a perfect square; inputs not Lagrangian");
  LAG_ASSERT(pairing.is_perfect(), "PairingNotPerfect",
             "intersection pairing is not perfect; normalization bug");
  return IntersectionData{k, std::move(pairing)};
}

HomSpace hom_space(const ParamCorrespondence& y, const ParamCorrespondence& z) {
  LAG_CHECK(y.src.g == 0 && z.src.g == 0 && y.dst == z.dst, "BadShape",
            "hom space requires two Lagrangians in one X");
  BaseRing ring = y.j.ring();
  int g = y.dst.g;
  Mat delta = Mat::hstack(y.j, -z.j);
  LAG_CHECK(rank_K(delta) == delta.cols(), "NotTransversal", "Y x_X Z is not finite");
  KernelScheme kk = kernel_scheme(delta);
  LAG_CHECK(kk.component_dim == 0, "NotTransversal", "Y x_X Z is not finite");

  HomSpace out;
  LAG_ASSERT(perfect_square(kk.pi0_order, &out.dimension), "HomSpace",
             "|Y x_X Z| is not a perfect square");

  // F = Y x_A Z: kernel of the A-part difference map.
  std::vector<int> a_rows, ahat_rows;
  for (int i = 0; i < g; ++i) a_rows.push_back(i);
  for (int i = g; i < 2 * g; ++i) ahat_rows.push_back(i);
  Mat delta_a = Mat::hstack(y.j.select_rows(a_rows), -z.j.select_rows(a_rows));
  LAG_CHECK(rank_K(delta_a) == g, "Degenerate", "projection of F to A is not an isogeny");
  Mat vk = kernel_lattice(delta_a);

  // f = common projection to A, g = difference of the Ahat parts
  // (Z minus Y; the orientation reproduces h^0 of an ample bundle).
  Mat f_mat = Mat::hstack(y.j.select_rows(a_rows), Mat::zero(ring, g, z.m())) * vk;
  Mat g_mat = Mat::hstack(-y.j.select_rows(ahat_rows), z.j.select_rows(ahat_rows)) * vk;
  Mat h = f_mat.conj_transpose() * g_mat;
  LAG_ASSERT(is_hermitian(h), "HomSpace", "f-hat g is not Hermitian; normalization bug");
  // ker(g restricted to F) is the full intersection, so transversality
  // makes g_0 an isogeny; directions where f_0 degenerates lie in the
  // kernel of the Hermitian form and contribute to degree 0.
  LAG_ASSERT(rank_K(g_mat) == g, "HomSpace", "g_0 degenerate despite transversality");
  out.degree = pencil_index(h).negative;

  if (rank_K(f_mat) == g) {
    // f_0 is an isogeny as well: both kernels are finite and the counting
    // identity of the cohomology lemma applies.
    KernelScheme kf = kernel_scheme(Mat::vstack(
        delta_a, Mat::hstack(y.j.select_rows(a_rows), Mat::zero(ring, g, z.m()))));
    KernelScheme kg = kernel_scheme(Mat::vstack(
        delta_a, Mat::hstack(-y.j.select_rows(ahat_rows), z.j.select_rows(ahat_rows))));
    LAG_ASSERT(kf.component_dim == 0 && kg.component_dim == 0, "HomSpace",
               "kernels of f, g are not finite");
    LAG_ASSERT(kf.pi0_order * kg.pi0_order == kk.pi0_order, "HomSpace",
               "|ker f| |ker g| != |Y x_X Z|");
  }
  return out;
}

}  // namespace lag
