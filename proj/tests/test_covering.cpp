#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "normcat/covering.hpp"
#include "normcat/group.hpp"
#include "normcat/groupoid.hpp"
#include "normcat/indexing.hpp"

using namespace normcat;

namespace {

FiniteGroup c2() { return group_from_permutations({perm_from_cycles({{1, 2}}, 2)}); }

FiniteGroup s3() {
  return group_from_permutations(
      {perm_from_cycles({{1, 2}}, 3), perm_from_cycles({{1, 2, 3}}, 3)});
}

// the poset 2: objects 0, 1 and one non-identity arrow 0 -> 1
FiniteCategory arrow_category() {
  FiniteCategory c;
  c.num_objects = 2;
  c.dom = {0, 1, 0};
  c.cod = {0, 1, 1};
  c.identity = {0, 1};
  c.compose_tab.assign(9, -1);
  auto set = [&](int g, int f, int r) { c.compose_tab[g * 3 + f] = r; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(1, 2, 2);
  check_category(c);
  return c;
}

FiniteCategory discrete_category(int k) {
  FiniteCategory c;
  c.num_objects = k;
  c.dom.resize(k);
  c.cod.resize(k);
  c.identity.resize(k);
  std::iota(c.dom.begin(), c.dom.end(), 0);
  std::iota(c.cod.begin(), c.cod.end(), 0);
  std::iota(c.identity.begin(), c.identity.end(), 0);
  c.compose_tab.assign(static_cast<std::size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i) c.compose_tab[i * k + i] = i;
  return c;
}

} // namespace

TEST_CASE("is_covering_category") {
  // the coset groupoid projection is a covering with n = [G:H]
  FiniteGroup g = s3();
  Subgroup h = subgroup_generated(g, {1});
  Transversal t = transversal_minimal(g, h);
  TranslationGroupoid bg = coset_translation_groupoid(t);
  CoveringCategory cov = translation_projection(bg);
  CHECK(cov.n == 3);
  CHECK(cov.fibers[0] == std::vector<int>{0, 1, 2});

  // the projection B_n Sigma_n x H -> H has non-discrete fibers for n >= 2
  {
    SymmetricGroup s2 = symmetric_group(2);
    TranslationGroupoid b2 = b_n_sigma_n(s2, 2);
    FiniteCategory hcat = one_object_category(c2());
    FiniteCategory prod = product_category(b2.category, hcat);
    CatFunctor proj = projection_to_h(prod, hcat, 2);
    CoveringReport rep = is_covering_category(proj);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->kind == "nondiscrete-fiber");
  }

  // identities are coverings with n = 1
  {
    CoveringReport rep = is_covering_category(identity_functor(bg.category));
    CHECK(rep.ok);
    CHECK(rep.n == 1);
  }

  // the empty category over the point is vacuously a covering with n = 0
  {
    FiniteCategory empty;
    CatFunctor p{empty, discrete_category(1), {}, {}};
    CoveringReport rep = is_covering_category(p);
    CHECK(rep.ok);
    CHECK(rep.n == 0);
  }
}

TEST_CASE("grothendieck_set") {
  // constant P at a 3-element set over the arrow category: ob C x J -> J
  {
    FinSetIsoDiagram P{arrow_category(), {3, 3}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
    CoveringCategory cov = grothendieck_set(P);
    CHECK(cov.p.source.num_objects == 6); // |S| * |ob J|
    CHECK(cov.n == 3);
  }

  // J = *, P(*) a 3-set: a discrete category over the point
  {
    FinSetIsoDiagram P{discrete_category(1), {3}, {{0, 1, 2}}};
    CoveringCategory cov = grothendieck_set(P);
    CHECK(cov.p.source.num_objects == 3);
    CHECK(cov.p.source.num_morphisms() == 3); // identities only
  }

  // J = one-object C2, P(g) = swap: the result is exactly B_2 Sigma_2
  {
    FinSetIsoDiagram P{one_object_category(c2()), {2}, {{0, 1}, {1, 0}}};
    CoveringCategory cov = grothendieck_set(P);
    TranslationGroupoid b2 = b_n_sigma_n(symmetric_group(2), 2);
    CHECK(cov.p.source == b2.category);
  }

  // a non-bijective morphism value is rejected
  {
    FinSetIsoDiagram bad{one_object_category(c2()), {2}, {{0, 1}, {0, 0}}};
    CHECK_THROWS_AS(grothendieck_set(bad), Error);
  }
}

TEST_CASE("grothendieck_cat") {
  FiniteCategory bc2 = one_object_category(c2());

  // constant P at C: the opfibration C x J -> J, counts agree with the product
  {
    FiniteCategory j = arrow_category();
    CatValuedDiagram P{j,
                       {bc2, bc2},
                       {identity_functor(bc2), identity_functor(bc2),
                        identity_functor(bc2)}};
    CatFunctor q = grothendieck_cat(P);
    FiniteCategory prod = product_category(bc2, j);
    CHECK(q.source.num_objects == prod.num_objects);
    CHECK(q.source.num_morphisms() == prod.num_morphisms());
    check_category(q.source);
  }

  // all fibers the point: the result is J itself up to relabeling
  {
    FiniteCategory j = arrow_category();
    FiniteCategory pt = discrete_category(1);
    CatValuedDiagram P{j,
                       {pt, pt},
                       {identity_functor(pt), identity_functor(pt),
                        identity_functor(pt)}};
    CatFunctor q = grothendieck_cat(P);
    CHECK(q.source.num_objects == j.num_objects);
    CHECK(q.source.num_morphisms() == j.num_morphisms());
    CHECK(q.ob_map == std::vector<int>{0, 1});
  }

  // hand-enumerated custom instance: J = 2, P(0) = *, P(1) = C2
  {
    FiniteCategory j = arrow_category();
    FiniteCategory pt = discrete_category(1);
    CatFunctor collapse{pt, bc2, {0}, {bc2.identity[0]}};
    CatValuedDiagram P{j, {pt, bc2},
                       {identity_functor(pt), identity_functor(bc2), collapse}};
    CatFunctor q = grothendieck_cat(P);
    CHECK(q.source.num_objects == 2);
    CHECK(q.source.num_morphisms() == 5); // id, 2 endos of (1,*), 2 crossings
    check_category(q.source);
  }

  // on discrete fibers the categorified construction equals the set-based one
  {
    FinSetIsoDiagram Pset{one_object_category(c2()), {2}, {{0, 1}, {1, 0}}};
    CoveringCategory cov = grothendieck_set(Pset);

    FiniteCategory d2 = discrete_category(2);
    CatFunctor swap{d2, d2, {1, 0}, {1, 0}};
    CatValuedDiagram Pcat{one_object_category(c2()), {d2},
                          {identity_functor(d2), swap}};
    CatFunctor q = grothendieck_cat(Pcat);
    CHECK(q.source == cov.p.source);
    CHECK(q.ob_map == cov.p.ob_map);
    CHECK(q.mor_map == cov.p.mor_map);
  }
}

TEST_CASE("sections") {
  FiniteCategory bc2 = one_object_category(c2());

  // sections(C x J -> J) recovers the functor category C^J
  {
    FiniteCategory prod = product_category(bc2, bc2); // C = J = one-object C2
    // projection onto the second factor
    CatFunctor proj{prod, bc2, {0}, {}};
    proj.mor_map.resize(prod.num_morphisms());
    for (int u = 0; u < prod.num_morphisms(); ++u)
      proj.mor_map[u] = u % bc2.num_morphisms();
    SectionsResult secs = sections(proj);
    FunctorCategoryResult funs = functor_category(bc2, bc2);
    REQUIRE(secs.objects.size() == funs.objects.size()); // two group endomorphisms
    CHECK(secs.category.num_morphisms() == funs.category.num_morphisms());
    CHECK(secs.objects.size() == 2);
    CHECK(secs.category.num_morphisms() == 4);
    check_category(secs.category);
    check_category(funs.category);

    // canonical identification: a section s corresponds to the functor
    // sending f to the first component of s(f)
    for (const CatFunctor& s : secs.objects) {
      std::vector<int> x_mor;
      for (int f = 0; f < bc2.num_morphisms(); ++f)
        x_mor.push_back(s.mor_map[f] / bc2.num_morphisms());
      bool found = false;
      for (const CatFunctor& X : funs.objects)
        if (X.mor_map == x_mor) found = true;
      CHECK(found);
    }
  }

  // sections of the identity: a single object with its identity
  {
    SectionsResult secs = sections(identity_functor(bc2));
    CHECK(secs.objects.size() == 1);
    CHECK(secs.category.num_morphisms() == 1);
  }
}

TEST_CASE("fat_diagonal_quotient") {
  // discrete I with k = n objects: a single object with its identity
  {
    FatDiagonalQuotient q = fat_diagonal_quotient(discrete_category(3), 3);
    CHECK(q.category.num_objects == 1);
    CHECK(q.category.num_morphisms() == 1);
  }

  // I = B_2 Sigma_2, n = 2: one object, the identity set and the swap set
  {
    TranslationGroupoid b2 = b_n_sigma_n(symmetric_group(2), 2);
    FatDiagonalQuotient q = fat_diagonal_quotient(b2.category, 2);
    CHECK(q.category.num_objects == 1);
    REQUIRE(q.category.num_morphisms() == 2);
    CHECK(q.morphism_sets[0] == std::vector<int>{0, 1}); // {id_0, id_1}
    CHECK(q.morphism_sets[1] == std::vector<int>{2, 3}); // {swap_0, swap_1}
    check_category(q.category);
  }

  // n = 1 recovers I up to relabeling of morphisms
  {
    TranslationGroupoid b2 = b_n_sigma_n(symmetric_group(2), 2);
    FatDiagonalQuotient q = fat_diagonal_quotient(b2.category, 1);
    REQUIRE(q.category.num_objects == b2.category.num_objects);
    REQUIRE(q.category.num_morphisms() == b2.category.num_morphisms());
    std::vector<int> back(q.category.num_morphisms());
    for (int m = 0; m < q.category.num_morphisms(); ++m) {
      REQUIRE(q.morphism_sets[m].size() == 1);
      back[m] = q.morphism_sets[m][0];
    }
    for (int a = 0; a < q.category.num_morphisms(); ++a)
      for (int b = 0; b < q.category.num_morphisms(); ++b)
        if (q.category.composable(a, b))
          CHECK(back[q.category.compose(a, b)] ==
                b2.category.compose(back[a], back[b]));
  }

  CHECK_THROWS_AS(fat_diagonal_quotient(discrete_category(2), 3), Error);
}

TEST_CASE("covering_to_P") {
  // the coset groupoid projection: P(*) = G/H, P(g) = its lift set
  {
    FiniteGroup g = s3();
    Subgroup h = subgroup_generated(g, {1});
    TranslationGroupoid bg = coset_translation_groupoid(transversal_minimal(g, h));
    CoveringCategory cov = translation_projection(bg);
    IndexingFunctor P = covering_to_P(cov);
    check_indexing_functor(P);
    CHECK(P.n == 3);
    CHECK(P.on_objects[0] == std::vector<int>{0, 1, 2});
    for (int ge = 0; ge < g.order; ++ge)
      CHECK(P.on_morphisms[ge] ==
            std::vector<int>{bg.morphism(ge, 0), bg.morphism(ge, 1),
                             bg.morphism(ge, 2)});
  }

  // identity covering: P_j = {j}, P_f = {f}
  {
    TranslationGroupoid b2 = b_n_sigma_n(symmetric_group(2), 2);
    CoveringCategory cov = make_covering(identity_functor(b2.category));
    IndexingFunctor P = covering_to_P(cov);
    check_indexing_functor(P);
    for (int j = 0; j < b2.category.num_objects; ++j)
      CHECK(P.on_objects[j] == std::vector<int>{j});
    for (int f = 0; f < b2.category.num_morphisms(); ++f)
      CHECK(P.on_morphisms[f] == std::vector<int>{f});
  }

  // round trip from a FinSetIsoDiagram: the bijections are recovered
  {
    FinSetIsoDiagram P0{one_object_category(c2()), {2}, {{0, 1}, {1, 0}}};
    CoveringCategory cov = grothendieck_set(P0);
    IndexingFunctor P = covering_to_P(cov);
    check_indexing_functor(P);
    for (int f = 0; f < P0.shape.num_morphisms(); ++f) {
      std::vector<int> rebuilt(P0.sizes[0]);
      for (int u : P.on_morphisms[f])
        rebuilt[cov.p.source.dom[u]] = cov.p.source.cod[u]; // offsets are 0 here
      CHECK(rebuilt == P0.maps[f]);
    }
  }

  // disconnected bases are rejected
  {
    FiniteCategory d2 = discrete_category(2);
    CoveringCategory cov = make_covering(identity_functor(d2));
    CHECK_THROWS_AS(covering_to_P(cov), Error);
  }
}

TEST_CASE("wreath_P") {
  Subgroup h2 = full_subgroup(c2());

  // n = 1: the indexing functor is the identification Sigma_1 wr H = H
  {
    WreathIndexing w = wreath_P(1, h2);
    CHECK(w.P.J == one_object_category(h2.as_group()));
    for (int e = 0; e < 2; ++e)
      CHECK(w.P.on_morphisms[e] == std::vector<int>{e});
    check_indexing_functor(w.P);
  }

  // n = 2, H = C2: P(swap; a, b) = {(swap at 1, a), (swap at 2, b)}
  {
    WreathIndexing w = wreath_P(2, h2);
    check_indexing_functor(w.P);
    Perm swap{1, 0};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        WreathElement e{swap, {a, b}};
        std::vector<int> expect{w.slot_morphism(swap, 0, a),
                                w.slot_morphism(swap, 1, b)};
        std::sort(expect.begin(), expect.end());
        CHECK(w.P.on_morphisms[w.wreath.encode(e)] == expect);
      }
  }

  // the composite condition is exactly the wreath product law
  {
    FiniteGroup c3 = group_from_permutations({perm_from_cycles({{1, 2, 3}}, 3)});
    check_indexing_functor(wreath_P(3, h2).P);
    check_indexing_functor(wreath_P(2, full_subgroup(c3)).P);
  }
}

TEST_CASE("non_covering_witness") {
  Subgroup h2 = full_subgroup(c2());

  // smallest witness for n = 2, H = C2
  {
    NonCoveringWitness w = non_covering_witness(2, h2);
    CHECK(w.a.sigma == w.b.sigma);
    CHECK(w.a.sigma == perm_identity(2));
    CHECK(w.a.hs == std::vector<int>{0, 0});
    CHECK(w.b.hs == std::vector<int>{0, 1});
    CHECK(w.slot == 0);

    // the witness exhibits P_f and P_f' sharing a morphism
    WreathIndexing wp = wreath_P(2, h2);
    const auto& pf = wp.P.on_morphisms[wp.wreath.encode(w.a)];
    const auto& pf2 = wp.P.on_morphisms[wp.wreath.encode(w.b)];
    CHECK(std::binary_search(pf.begin(), pf.end(), w.shared_morphism));
    CHECK(std::binary_search(pf2.begin(), pf2.end(), w.shared_morphism));
  }

  // H trivial: the indexing functor is injective on morphisms, no witness
  CHECK_THROWS_AS(non_covering_witness(2, trivial_subgroup(c2())), Error);

  // n = 3: a witness still exists
  {
    NonCoveringWitness w = non_covering_witness(3, h2);
    CHECK(w.a.sigma == w.b.sigma);
    CHECK(!(w.a == w.b));
    CHECK(w.a.hs[w.slot] == w.b.hs[w.slot]);
  }
}
