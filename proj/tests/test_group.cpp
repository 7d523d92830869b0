#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "normcat/group.hpp"
#include "normcat/perm.hpp"
#include "normcat/wreath.hpp"

using namespace normcat;

namespace {

// Independent closure oracle: plain set-based saturation over permutation
// words, no BFS indexing shared with the library path.
std::set<Perm> closure_oracle(const std::vector<Perm>& gens) {
  std::set<Perm> elems(gens.begin(), gens.end());
  elems.insert(perm_identity(static_cast<int>(gens[0].size())));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(elems.begin(), elems.end());
    for (const Perm& a : snapshot)
      for (const Perm& b : snapshot)
        if (elems.insert(perm_compose(a, b)).second) grew = true;
  }
  return elems;
}

Perm cycles(std::vector<std::vector<int>> cyc, int n) {
  return perm_from_cycles(cyc, n);
}

FiniteGroup s3() {
  return group_from_permutations({cycles({{1, 2}}, 3), cycles({{1, 2, 3}}, 3)});
}

} // namespace

TEST_CASE("group_from_permutations closes generators") {
  // <(1 2)> is C2
  FiniteGroup c2 = group_from_permutations({cycles({{1, 2}}, 2)});
  CHECK(c2.order == 2);
  check_group(c2);

  // (1 2) and (1 2 3) generate S3
  FiniteGroup g6 = s3();
  CHECK(g6.order == 6);
  CHECK(g6.order == static_cast<int>(
                        closure_oracle({cycles({{1, 2}}, 3), cycles({{1, 2, 3}}, 3)})
                            .size()));
  check_group(g6);

  // (1 2 3 4) and (1 3) generate D4; oracle confirms order 8
  std::vector<Perm> d4gens{cycles({{1, 2, 3, 4}}, 4), cycles({{1, 3}}, 4)};
  FiniteGroup d4 = group_from_permutations(d4gens);
  CHECK(d4.order == 8);
  CHECK(closure_oracle(d4gens).size() == 8);
  check_group(d4);

  CHECK(d4.label(0) == "()");
}

TEST_CASE("group_from_permutations respects the order cap") {
  CHECK_THROWS_AS(
      group_from_permutations({cycles({{1, 2, 3, 4, 5}}, 5), cycles({{1, 2}}, 5)}, 30),
      Error); // S5 has order 120 > 30
}

TEST_CASE("cosets partition the group deterministically") {
  FiniteGroup c2 = group_from_permutations({cycles({{1, 2}}, 2)});
  auto cs = cosets(c2, trivial_subgroup(c2));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<int>{0});
  CHECK(cs[1] == std::vector<int>{1});

  FiniteGroup g = s3();
  Subgroup h = subgroup_generated(g, {1}); // (1 2) has index 1 in BFS order
  REQUIRE(h.elements == std::vector<int>{0, 1});
  check_subgroup(h);
  auto cs3 = cosets(g, h);
  REQUIRE(cs3.size() == 3);
  for (const auto& c : cs3) CHECK(c.size() == 2);
  // oracle: direct enumeration of gH with deduplication
  std::set<std::vector<int>> expect;
  for (int a = 0; a < g.order; ++a) {
    std::vector<int> coset{g.mul(a, 0), g.mul(a, 1)};
    std::sort(coset.begin(), coset.end());
    expect.insert(coset);
  }
  CHECK(expect == std::set<std::vector<int>>(cs3.begin(), cs3.end()));

  auto whole = cosets(g, full_subgroup(g));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 6);
}

TEST_CASE("transversal policies") {
  FiniteGroup c2 = group_from_permutations({cycles({{1, 2}}, 2)});
  Transversal tc2 = transversal_minimal(c2, trivial_subgroup(c2));
  CHECK(tc2.reps == std::vector<int>{0, 1});

  FiniteGroup g = s3();
  Subgroup h = subgroup_generated(g, {1});
  Transversal tm = transversal_minimal(g, h);
  REQUIRE(tm.index() == 3);
  CHECK(tm.reps[0] == g.identity);
  // least element of each non-identity coset
  CHECK(tm.reps == std::vector<int>{0, 2, 3});

  // (1 2 3) and (1 3) lie in the same coset of <(1 2)>
  // oracle: coset membership of both indices
  auto cs = cosets(g, h);
  CHECK(coset_of(cs, 2) == coset_of(cs, 4));
  CHECK_THROWS_AS(transversal_explicit(g, h, {0, 2, 4}), Error);

  // explicit transversal used by the alpha example below is valid
  CHECK_NOTHROW(transversal_explicit(g, h, {0, 2, 5}));
}

TEST_CASE("alpha solves g t_i = t_sigma(i) h_i exactly") {
  FiniteGroup g = s3();
  Subgroup h = subgroup_generated(g, {1});
  Transversal t = transversal_explicit(g, h, {0, 2, 5}); // [e, (123), (132)]

  SECTION("identity maps to the identity wreath element") {
    WreathElement w = alpha(g.identity, t);
    CHECK(w.sigma == perm_identity(3));
    CHECK(w.hs == std::vector<int>(3, g.identity));
  }

  SECTION("an element of H fixes slot 1 with h_1 = h") {
    for (int e : h.elements) {
      WreathElement w = alpha(e, t);
      CHECK(w.sigma[0] == 0);
      CHECK(w.hs[0] == e);
    }
  }

  SECTION("frozen value for g = (1 2)") {
    REQUIRE(g.label(1) == "(1 2)");
    WreathElement w = alpha(1, t);
    CHECK(w.sigma == Perm{0, 2, 1}); // the transposition (2 3) on 1-based slots
    CHECK(w.hs == std::vector<int>{1, 1, 1});
  }

  SECTION("agrees with the exhaustive solver for every g and i") {
    for (int ge = 0; ge < g.order; ++ge) {
      WreathElement w = alpha(ge, t);
      for (int i = 0; i < 3; ++i) {
        // oracle: scan all (j, h) pairs for solutions; uniqueness included
        int hits = 0;
        for (int j = 0; j < 3; ++j)
          for (int e : h.elements)
            if (g.mul(ge, t.reps[i]) == g.mul(t.reps[j], e)) {
              ++hits;
              CHECK(w.sigma[i] == j);
              CHECK(w.hs[i] == e);
            }
        CHECK(hits == 1);
      }
    }
  }

  SECTION("defining equation holds verbatim") {
    for (int ge = 0; ge < g.order; ++ge) {
      WreathElement w = alpha(ge, t);
      for (int i = 0; i < 3; ++i)
        CHECK(g.mul(ge, t.reps[i]) == g.mul(t.reps[w.sigma[i]], w.hs[i]));
    }
  }
}

TEST_CASE("wreath multiplication") {
  FiniteGroup c2 = group_from_permutations({cycles({{1, 2}}, 2)});
  Subgroup h = full_subgroup(c2);

  SECTION("identity law") {
    WreathElement e = wreath_identity(h, 2);
    CHECK(wreath_mul(h, e, e) == e);
  }

  SECTION("swap times swap, straight from the product formula") {
    // (swap; a, b) · (swap; c, d) = (id; b·c, a·d)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            WreathElement x{{1, 0}, {a, b}};
            WreathElement y{{1, 0}, {c, d}};
            WreathElement r = wreath_mul(h, x, y);
            CHECK(r.sigma == perm_identity(2));
            CHECK(r.hs == std::vector<int>{c2.mul(b, c), c2.mul(a, d)});
          }
  }

  SECTION("mismatched n is rejected") {
    CHECK_THROWS_AS(
        wreath_mul(h, wreath_identity(h, 2), wreath_identity(h, 3)), Error);
  }
}

TEST_CASE("wreath group realizes the product law") {
  FiniteGroup c2 = group_from_permutations({cycles({{1, 2}}, 2)});
  Subgroup h = full_subgroup(c2);

  WreathGroup w2 = wreath_group(2, h);
  CHECK(w2.group.order == 8); // 2! * 2^2
  check_group(w2.group);

  WreathGroup w3 = wreath_group(3, h);
  CHECK(w3.group.order == 48); // 3! * 2^3
  check_group(w3.group);

  // oracle: the imprimitive action on {0..n-1} x H gives a faithful
  // permutation image; multiplication must match composition there.
  auto action_perm = [&](const WreathElement& e) {
    int n = e.n(), k = h.size();
    Perm p(n * k);
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < k; ++x)
        p[i * k + x] =
            e.sigma[i] * k + h.local(c2.mul(e.hs[i], h.elements[x]));
    return p;
  };
  std::set<Perm> images;
  for (int a = 0; a < w3.group.order; ++a) images.insert(action_perm(w3.decode(a)));
  CHECK(images.size() == static_cast<std::size_t>(w3.group.order)); // faithful
  for (int a = 0; a < w3.group.order; ++a)
    for (int b = 0; b < w3.group.order; ++b) {
      Perm lhs = action_perm(w3.decode(w3.group.mul(a, b)));
      Perm rhs = perm_compose(action_perm(w3.decode(a)), action_perm(w3.decode(b)));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("alpha is a homomorphism and satisfies the cocycle identities") {
  struct Case {
    FiniteGroup g;
    Subgroup h;
  };
  std::vector<Case> cases;
  {
    FiniteGroup g = s3();
    cases.push_back({g, subgroup_generated(g, {1})}); // S3 / C2
    cases.push_back({g, subgroup_generated(g, {2})}); // S3 / C3
    FiniteGroup c4 = group_from_permutations({cycles({{1, 2, 3, 4}}, 4)});
    cases.push_back({c4, subgroup_generated(c4, {2})}); // C4 / C2
  }
  for (const auto& [g, h] : cases) {
    Transversal t = transversal_minimal(g, h);
    const int n = t.index();
    for (int ga = 0; ga < g.order; ++ga) {
      WreathElement wa = alpha(ga, t);
      for (int gb = 0; gb < g.order; ++gb) {
        WreathElement wb = alpha(gb, t);
        WreathElement prod = wreath_mul(h, wa, wb);
        WreathElement direct = alpha(g.mul(ga, gb), t);
        REQUIRE(prod == direct);
        // cocycle identities, component by component
        CHECK(direct.sigma == perm_compose(wa.sigma, wb.sigma));
        for (int i = 0; i < n; ++i)
          CHECK(direct.hs[i] == g.mul(wa.hs[wb.sigma[i]], wb.hs[i]));
      }
    }
  }
}
