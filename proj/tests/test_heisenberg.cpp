#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagcorr/heisenberg.hpp"
#include "lagcorr/verify.hpp"

using namespace lag;

TEST_CASE("FinAb basics") {
  FinAb g{{2, 4}};
  CHECK(g.order() == 8);
  CHECK(g.index_of(g.elem_at(5)) == 5);
  CHECK(g.add({1, 3}, {1, 2}) == FinAb::Elem{0, 1});
  CHECK(g.neg({1, 1}) == FinAb::Elem{1, 3});
}

TEST_CASE("standard split pairing is perfect and alternating") {
  for (std::vector<long> hf : {std::vector<long>{2}, {3}, {4}, {2, 2}, {6}}) {
    SkewPairing p = standard_split_pairing(hf);
    CHECK(p.is_perfect());
    long n = p.group.size_checked();
    for (long i = 0; i < n; ++i) {
      FinAb::Elem x = p.group.elem_at(i);
      CHECK(p.eval(x, x) == 0);
      for (long j = 0; j < n; ++j) {
        FinAb::Elem y = p.group.elem_at(j);
        CHECK(mod1(p.eval(x, y) + p.eval(y, x)) == 0);
      }
    }
  }
}

TEST_CASE("imperfect pairings are detected") {
  FinAb g{{2, 2}};
  std::vector<std::vector<Rat>> gram(2, std::vector<Rat>(2, Rat(0)));
  SkewPairing p = make_pairing(g, gram);
  CHECK_FALSE(p.is_perfect());
}

TEST_CASE("maximal isotropic subgroups") {
  SUBCASE("(Z/2)^2: {0} x Z/2 works, order 2") {
    SkewPairing p = standard_split_pairing({2});
    Subgroup i = maximal_isotropic(p);
    CHECK(i.size() == 2);
    CHECK(is_isotropic(p, i));
  }
  SUBCASE("(Z/3)^2: order 3") {
    SkewPairing p = standard_split_pairing({3});
    CHECK(maximal_isotropic(p).size() == 3);
  }
  SUBCASE("trivial group") {
    SkewPairing p = standard_split_pairing({1});
    CHECK(maximal_isotropic(p).size() == 1);
  }
  SUBCASE("(Z/2)^4 has the expected count of maximal isotropics") {
    SkewPairing p = standard_split_pairing({2, 2});
    // Sp(4, F_2): (2^2+1)(2+1) = 15 maximal isotropics
    CHECK(all_maximal_isotropics(p).size() == 15);
  }
}

TEST_CASE("schrodinger representation") {
  SUBCASE("(Z/2)^2: dimension 2") {
    HeisenbergData h = standard_split_heisenberg({2});
    MonomialRep v = schrodinger(h, maximal_isotropic(h.pairing));
    CHECK(v.dim == 2);
    CHECK(satisfies_representation_property(v, h));
    CHECK(is_irreducible_weight1(v, h));
  }
  SUBCASE("(Z/3)^2: dimension 3") {
    HeisenbergData h = standard_split_heisenberg({3});
    MonomialRep v = schrodinger(h, maximal_isotropic(h.pairing));
    CHECK(v.dim == 3);
    CHECK(is_irreducible_weight1(v, h));
  }
  SUBCASE("trivial group: dimension 1") {
    HeisenbergData h = standard_split_heisenberg({1});
    MonomialRep v = schrodinger(h, maximal_isotropic(h.pairing));
    CHECK(v.dim == 1);
    CHECK(is_irreducible_weight1(v, h));
  }
  SUBCASE("direct sums are reducible and have doubled invariants") {
    HeisenbergData h = standard_split_heisenberg({2});
    Subgroup i = maximal_isotropic(h.pairing);
    MonomialRep v = schrodinger(h, i);
    CHECK(invariant_dimension(v, h, i) == 1);
    MonomialRep w = direct_sum(v, v);
    CHECK_FALSE(is_irreducible_weight1(w, h));
    CHECK(invariant_dimension(w, h, i) == 2);
    CHECK(w.dim == v.dim * invariant_dimension(w, h, i));
  }
  SUBCASE("non-maximal isotropic inputs are rejected") {
    HeisenbergData h = standard_split_heisenberg({2});
    Subgroup trivial = span_subgroup(h.pairing.group, {});
    CHECK_THROWS_AS(schrodinger(h, trivial), ValidationError);
  }
}

TEST_CASE("Stone-von Neumann at desk scale") {
  for (std::vector<long> hf : {std::vector<long>{2}, {3}, {4}, {2, 2}}) {
    HeisenbergData h = standard_split_heisenberg(hf);
    std::vector<Subgroup> isos = all_maximal_isotropics(h.pairing);
    REQUIRE(!isos.empty());
    std::vector<MonomialRep> reps;
    for (const Subgroup& i : isos) reps.push_back(schrodinger(h, i));
    for (size_t a = 1; a < reps.size(); ++a) CHECK(same_character(reps[0], reps[a]));
    // dim V^I = 1 for every lifted maximal isotropic and any model of V.
    for (const Subgroup& i : isos) CHECK(invariant_dimension(reps[0], h, i) == 1);
  }
}

TEST_CASE("restrict_multiplicities") {
  SUBCASE("trivial C gives a single multiplicity 1") {
    HeisenbergData h = standard_split_heisenberg({2, 2});
    Subgroup c = span_subgroup(h.pairing.group, {});
    MultiplicityReport r = restrict_multiplicities(h, c, true);
    CHECK(r.multiplicities.size() == 1);
    CHECK(r.multiplicities[0] == 1);
    CHECK(r.dim_v == r.dim_vbar);
  }
  SUBCASE("order-2 isotropic C in (Z/2)^4: dims 4/2, all multiplicities 1") {
    HeisenbergData h = standard_split_heisenberg({2, 2});
    // C = the isotropic line of the first hyperbolic plane.
    Subgroup c = span_subgroup(h.pairing.group, {{1, 0, 0, 0}});
    MultiplicityReport r = restrict_multiplicities(h, c, true);
    CHECK(r.dim_v == 4);
    CHECK(r.dim_vbar == 2);
    CHECK(r.pi_order == 2);
    CHECK(r.multiplicities.size() == 2);
    for (const Int& m : r.multiplicities) CHECK(m == 1);
  }
  SUBCASE("C = full maximal isotropic: trivial Heisenberg quotient") {
    HeisenbergData h = standard_split_heisenberg({2, 2});
    Subgroup c = maximal_isotropic(h.pairing);
    MultiplicityReport r = restrict_multiplicities(h, c, true);
    CHECK(r.dim_vbar == 1);
    CHECK(Int(static_cast<long>(r.multiplicities.size())) == r.pi_order);
    for (const Int& m : r.multiplicities) CHECK(m == 1);
  }
  SUBCASE("non-isotropic C is rejected") {
    HeisenbergData h = standard_split_heisenberg({2});
    Subgroup bad = span_subgroup(h.pairing.group, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(restrict_multiplicities(h, bad, false), ValidationError);
  }
}

TEST_CASE("intersection Heisenberg groups") {
  BaseRing z = BaseRing::integers();
  SymplecticSpace x{1, z};
  ParamCorrespondence y = lagrangian_a_side(x);
  SUBCASE("A x {0} against the degree-n polarization graph: K = (Z/n)^2") {
    for (long n : {2L, 3L}) {
      Mat phi(z, 1, 1);
      phi.at(0, 0) = QuadElem(z, Rat(n), 0);
      IntersectionData k = intersection_heisenberg(y, lagrangian_graph_of_polarization(x, phi));
      CHECK(k.group.order() == n * n);
      CHECK(k.group.factors == std::vector<long>{n, n});
      CHECK(k.pairing.is_perfect());
      // with a perfect alternating pairing, a Schroedinger representation exists
      HeisenbergData h = make_heisenberg_table(
          k.pairing, [&] {
            long nn = k.group.size_checked();
            std::vector<Rat> table(static_cast<size_t>(nn) * nn, Rat(0));
            // split cocycle from the pairing: c(x,y) = sum_{i<j} x_i E_ij y_j
            for (long a = 0; a < nn; ++a)
              for (long b = 0; b < nn; ++b) {
                FinAb::Elem xa = k.group.elem_at(a), yb = k.group.elem_at(b);
                Rat v = 0;
                for (int i = 0; i < k.group.rank(); ++i)
                  for (int j = 0; j < i; ++j)
                    v += Rat(xa[i]) * k.pairing.gram[i][j] * Rat(yb[j]);
                table[static_cast<size_t>(a) * nn + b] = mod1(v);
              }
            return table;
          }());
      MonomialRep v = schrodinger(h, maximal_isotropic(h.pairing));
      CHECK(Int(v.dim) * Int(v.dim) == k.group.order());
      CHECK(is_irreducible_weight1(v, h));
    }
  }
  SUBCASE("coordinate Lagrangians meet trivially") {
    IntersectionData k = intersection_heisenberg(y, lagrangian_dual_side(x));
    CHECK(k.group.order() == 1);
  }
  SUBCASE("Y = Z is not transversal") {
    CHECK_THROWS_AS(intersection_heisenberg(y, y), ValidationError);
  }
}

TEST_CASE("intersection Heisenberg over a CM ring") {
  BaseRing gauss = BaseRing::quadratic(-1);
  SymplecticSpace x{1, gauss};
  ParamCorrespondence y = lagrangian_a_side(x);
  Mat phi(gauss, 1, 1);
  phi.at(0, 0) = QuadElem(gauss, 2, 0);
  IntersectionData k = intersection_heisenberg(y, lagrangian_graph_of_polarization(x, phi));
  CHECK(k.group.order() == 4);
  CHECK(k.pairing.is_perfect());
}

TEST_CASE("hom_space worked values") {
  BaseRing z = BaseRing::integers();
  SymplecticSpace x{1, z};
  ParamCorrespondence y = lagrangian_a_side(x);
  for (long d : {1L, 2L, 3L, 5L}) {
    Mat phi(z, 1, 1);
    phi.at(0, 0) = QuadElem(z, Rat(d), 0);
    HomSpace ample = hom_space(y, lagrangian_graph_of_polarization(x, phi));
    CHECK(ample.degree == 0);
    CHECK(ample.dimension == d);
    phi.at(0, 0) = QuadElem(z, Rat(-d), 0);
    HomSpace anti = hom_space(y, lagrangian_graph_of_polarization(x, phi));
    CHECK(anti.degree == 1);
    CHECK(anti.dimension == d);
  }
  SUBCASE("coordinate Lagrangians: Poincare-type kernel") {
    HomSpace hs = hom_space(y, lagrangian_dual_side(x));
    CHECK(hs.degree == 0);
    CHECK(hs.dimension == 1);
  }
  SUBCASE("transversality is required") {
    CHECK_THROWS_AS(hom_space(y, y), ValidationError);
  }
}

TEST_CASE("hom_space between two polarization graphs matches the relative index") {
  // Hom-data of (graph(phi1), graph(phi2)): the degree is the index of the
  // difference form and the dimension is |Y x_X Z|^{1/2}.
  for (int d : {0, -1, -3, -11}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 777u + static_cast<unsigned>(-d));
    for (int g = 1; g <= 2; ++g) {
      SymplecticSpace x{g, ring};
      for (int i = 0; i < 12; ++i) {
        Mat phi1 = ra.hermitian(g, 3);
        Mat phi2 = ra.hermitian(g, 3);
        if (!phi1.is_integral() || !phi2.is_integral()) continue;
        if (det_K(phi1 - phi2).is_zero()) continue;
        ParamCorrespondence y = lagrangian_graph_of_polarization(x, phi1);
        ParamCorrespondence z = lagrangian_graph_of_polarization(x, phi2);
        HomSpace hs = hom_space(y, z);
        CHECK(hs.degree == index_symmetric(phi2 - phi1));
        Int root;
        REQUIRE(perfect_square(kernel_scheme(Mat::hstack(y.j, -z.j)).pi0_order, &root));
        CHECK(hs.dimension == root);
      }
    }
  }
}

TEST_CASE("cyclotomic sums evaluate exactly") {
  // zeta_3 + zeta_3^2 = -1
  CycloSum s = CycloSum::phase(rat(1, 3)) + CycloSum::phase(rat(2, 3));
  CHECK(s.is_rational());
  CHECK(s.rational_value() == -1);
  // 1 + zeta_5 + ... + zeta_5^4 = 0
  CycloSum t;
  for (int k = 0; k < 5; ++k) t = t + CycloSum::phase(rat(k, 5));
  CHECK(t.is_zero());
  CHECK_FALSE(CycloSum::phase(rat(1, 8)).is_rational());
  // |1 + zeta_4|^2 = 2
  CycloSum u = CycloSum::phase(0) + CycloSum::phase(rat(1, 4));
  CHECK((u * u.conj()).rational_value() == 2);
}
