#include <numeric>
#include <random>

#include "doctest.h"
#include "nakajima/pgroup.hpp"

using namespace nakajima;

namespace {

void check_associative(const FiniteGroup& G, int samples = 2000) {
  std::mt19937 rng(static_cast<unsigned>(G.order()));
  for (int i = 0; i < samples; ++i) {
    const int a = static_cast<int>(rng() % G.order()), b = static_cast<int>(rng() % G.order()),
              c = static_cast<int>(rng() % G.order());
    REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
  }
}

int perm_order(const Perm& p) {
  int o = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len) o = std::lcm(o, len);
  }
  return o;
}

std::map<int, int> census_of(const FiniteGroup& G) { return fingerprint(G).census; }

}  // namespace

TEST_CASE("permutation parsing") {
  Perm p = perm_parse("(1 2 3)(4 5)");
  CHECK(p == Perm{1, 2, 0, 4, 3});
  CHECK(perm_to_string(p) == "(1 2 3)(4 5)");
  CHECK(perm_parse("()", 3) == Perm{0, 1, 2});
  CHECK(perm_parse("(1,2)", 4) == Perm{1, 0, 2, 3});
  CHECK_THROWS_AS(perm_parse("(1 2 1)"), Error);
  CHECK_THROWS_AS(perm_parse("(1 2"), Error);
  CHECK_THROWS_AS(perm_parse("(1 5)", 3), Error);
}

TEST_CASE("UT(3,3) against direct matrix enumeration") {
  const FiniteGroup G = ut3(3);
  CHECK(G.order() == 27);
  check_associative(G);
  // oracle: every unipotent upper triangular matrix, order by repeated products
  std::map<int, int> census;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        // [[1,a,c],[0,1,b],[0,0,1]]; its k-th power has entries k a, k b, k c + C(k,2) a b
        int k = 1;
        while ((k * a) % 3 || (k * b) % 3 || (k * c + k * (k - 1) / 2 * a * b) % 3) ++k;
        ++census[k];
      }
  const Fingerprint f = fingerprint(G);
  CHECK(f.census == census);
  CHECK(f.census == std::map<int, int>{{1, 1}, {3, 26}});
  CHECK(f.center_order == 3);
  CHECK(f.nilpotency_class == 2);
  CHECK(f.exponent == 3);
  CHECK(f.d == 2);
  CHECK(f.derived_order == 3);
  CHECK(f.frattini_order == 3);
  CHECK(f.abelian_invariants == std::vector<long long>{3, 3});
  const auto maxs = maximal_subgroups(G);
  CHECK(maxs.size() == 4);
  for (const auto& M : maxs) {
    CHECK(M.size() == 9);
    CHECK(is_normal(G, M));
    CHECK(is_isomorphic(subgroup(G, M), abelian_group({3, 3})));
  }
  CHECK(ut3(5).order() == 125);
  CHECK(fingerprint(ut3(5)).exponent == 5);
}

TEST_CASE("abelian groups") {
  const FiniteGroup G = abelian_group({9, 3});
  const Fingerprint f = fingerprint(G);
  CHECK(f.nilpotency_class == 1);
  CHECK(f.exponent == 9);
  CHECK(f.d == 2);
  CHECK(f.abelian_invariants == std::vector<long long>{3, 9});
  CHECK(f.census == std::map<int, int>{{1, 1}, {3, 8}, {9, 18}});
  CHECK(maximal_subgroups(cyclic_group(27)).size() == 1);
  CHECK(maximal_subgroups(abelian_group({3, 3, 3})).size() == 13);
  CHECK(!is_isomorphic(cyclic_group(9), abelian_group({3, 3})));
  CHECK(is_isomorphic(abelian_group({3, 9}), abelian_group({9, 3})));
  CHECK(fingerprint(cyclic_group(1)).order == 1);
  CHECK(generate(cyclic_group(1), {0}).size() == 1);
}

TEST_CASE("wreath product C3 wr C3") {
  auto res = closure_perms({perm_parse("(1 2 3)", 9), perm_parse("(1 4 7)(2 5 8)(3 6 9)")});
  const FiniteGroup& G = res.group;
  CHECK(G.order() == 81);
  check_associative(G);
  // oracle 1: orders read off cycle types of the enumerated permutations
  std::map<int, int> by_cycles;
  for (const auto& p : res.elements) ++by_cycles[perm_order(p)];
  // oracle 2: (v; s) with v in F_3^3; for s != 1 the cube is (sum v, sum v, sum v; 1)
  std::map<int, int> by_formula;
  for (int v = 0; v < 27; ++v)
    for (int s = 0; s < 3; ++s) {
      const int sum = v % 3 + (v / 3) % 3 + v / 9;
      if (s == 0)
        ++by_formula[v == 0 ? 1 : 3];
      else
        ++by_formula[sum % 3 == 0 ? 3 : 9];
    }
  const Fingerprint f = fingerprint(G);
  CHECK(f.census == by_cycles);
  CHECK(f.census == by_formula);
  CHECK(f.census == std::map<int, int>{{1, 1}, {3, 44}, {9, 36}});
  CHECK(f.nilpotency_class == 3);
  CHECK(f.d == 2);
  CHECK(frattini(G) == derived_subgroup(G));
  CHECK(is_isomorphic(G, wreath_cp_cp(3)));
  // maximal subgroups: C3^3, UT(3,3) and two copies of C9 x| C3
  const FiniteGroup c9c3 = split_extension({9}, {{4}}, 3, "C9:C3");
  int elem = 0, heis = 0, meta = 0;
  for (const auto& M : maximal_subgroups(G)) {
    const FiniteGroup H = subgroup(G, M);
    elem += is_isomorphic(H, abelian_group({3, 3, 3}));
    heis += is_isomorphic(H, ut3(3));
    meta += is_isomorphic(H, c9c3);
  }
  CHECK(elem == 1);
  CHECK(heis == 1);
  CHECK(meta == 2);
  // actions rebuilt from generator images agree with the enumerated permutations
  const auto act = element_actions(G, {res.elements[G.generators()[0]], res.elements[G.generators()[1]]});
  for (int e = 0; e < G.order(); ++e) CHECK(act[e] == res.elements[e]);
}

TEST_CASE("S(81,9) and S(81,8)") {
  const FiniteGroup S9 = build_presentation(s81_9_presentation());
  const FiniteGroup S8 = build_presentation(s81_8_presentation());
  check_associative(S9);
  CHECK(S9.order() == 81);
  const Fingerprint f9 = fingerprint(S9), f8 = fingerprint(S8);
  CHECK(f9.census == std::map<int, int>{{1, 1}, {3, 62}, {9, 18}});
  CHECK(f8.census.at(3) == 26);
  CHECK(f9.nilpotency_class == 3);
  CHECK(f8.nilpotency_class == 3);
  CHECK(f9.d == 2);
  CHECK(!is_isomorphic(S9, S8));
  CHECK(!is_isomorphic(S9, wreath_cp_cp(3)));
  int heis = 0, ab = 0;
  for (const auto& M : maximal_subgroups(S9)) {
    const FiniteGroup H = subgroup(S9, M);
    heis += is_isomorphic(H, ut3(3));
    ab += is_isomorphic(H, abelian_group({9, 3}));
  }
  CHECK(heis == 3);
  CHECK(ab == 1);
  // one maximal subgroup of S(81,8) is UT(3,3) and holds every element of order 3
  bool found = false;
  for (const auto& M : maximal_subgroups(S8)) {
    const FiniteGroup H = subgroup(S8, M);
    if (is_isomorphic(H, ut3(3))) found = fingerprint(H).census.at(3) == 26;
  }
  CHECK(found);
}

TEST_CASE("presentations") {
  const FiniteGroup U = ut3(3);
  const std::vector<std::string> names{"a", "b"};
  CHECK(presentation_check(U, names, {"a^3", "b^3", "[a,b]^3", "[[a,b],a]", "[[a,b],b]"}, U.generators()));
  CHECK(!presentation_check(U, names, {"ab=ba"}, U.generators()));
  const FiniteGroup C9 = cyclic_group(9);
  CHECK(!presentation_check(C9, {"a"}, {"a^3"}, C9.generators()));
  CHECK(presentation_check(C9, {"a"}, {"a^9=1"}, C9.generators()));
  // generators of a proper subgroup do not give a presentation of G
  CHECK(!presentation_check(C9, {"a"}, {"a^9"}, {C9.pow(C9.generators()[0], 3)}));
  CHECK(eval_word(U, "a b a^-1 b^-1", names, U.generators()) == eval_word(U, "[a^-1,b^-1]", names, U.generators()));
  CHECK_THROWS_AS(presentation_check(U, names, {"a"}, {0, 999}), Error);
  CHECK_THROWS_AS(eval_word(U, "a x", names, U.generators()), Error);
  CHECK_THROWS_AS(eval_word(U, "(a b", names, U.generators()), Error);
}

TEST_CASE("automorphism counts") {
  // oracles: |GL(2,3)| = 48, |GL(3,3)| = 11232, |GL(2,Z/9)| = 9^4 (2/3)(8/9) = 3888,
  // |Aut(UT(3,3))| = 9 * |GL(2,3)| = 432, |(Z/9)^*| = 6
  CHECK(count_automorphisms(abelian_group({3, 3})) == 48);
  CHECK(count_automorphisms(cyclic_group(9)) == 6);
  CHECK(count_automorphisms(ut3(3)) == 432);
  CHECK(count_automorphisms(abelian_group({9, 9})) == 3888);
  CHECK(count_automorphisms(abelian_group({3, 3, 3})) == 11232);
}

TEST_CASE("coset actions and semiregularity") {
  const FiniteGroup G = abelian_group({3, 3});
  const auto H = generate(G, {G.generators()[0]});
  const auto act = coset_action(G, H);
  const auto summary = semiregular_on(G, act);
  for (int e = 0; e < G.order(); ++e) {
    const bool in_h = std::find(H.begin(), H.end(), e) != H.end();
    CHECK(summary.fixed_points[e] == (in_h ? 3 : 0));
  }
  CHECK(!summary.semiregular(all_elements(G)));
  CHECK(summary.semiregular(generate(G, {G.generators()[1]})));
  CHECK(summary.semiregular({0}));
  CHECK_THROWS_AS(element_actions(G, {perm_parse("(1 2 3)"), perm_parse("(1 2)", 3)}), Error);
}

TEST_CASE("closure limits") {
  CHECK_THROWS_AS(closure_perms({perm_parse("(1 2 3 4 5 6 7)")}, 5), Error);
  CHECK(closure_perms({perm_parse("()", 4)}).group.order() == 1);
}
