#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "algcat/catalog.hpp"
#include "algcat/constructions.hpp"
#include "algcat/hom.hpp"
#include "algcat/words.hpp"

using namespace algcat;

TEST_CASE("product carries componentwise structure and projections") {
  auto t = subtraction_T();
  auto prod = product(t, t);
  const auto& p = prod.algebra;
  REQUIRE(p.size == 4);
  CHECK(p.element_names[2] == "(a,0)");
  // (a,a) - (0,a) = (a-0, a-a) = (a,0)
  CHECK(p.op(0, 3, 1) == 2);
  CHECK(is_homomorphism(p, t, prod.to_first.map));
  CHECK(is_homomorphism(p, t, prod.to_second.map));
  for (int i = 0; i < p.size; ++i) {
    CHECK(prod.to_first(i) == i / 2);
    CHECK(prod.to_second(i) == i % 2);
  }

  auto diag = pairing(prod, identity_hom(t), identity_hom(t));
  CHECK(diag.map == std::vector<int>{0, 3});
}

TEST_CASE("generated subalgebra records one derivation per non-seed element") {
  auto prod = product(subtraction_T(), subtraction_T());
  // seeds: kernel of the first projection plus the diagonal; (a,0) is derived
  auto clo = generated_subalgebra(prod.algebra, {1, 3});
  CHECK(clo.elements == std::vector<int>{0, 1, 2, 3});
  CHECK(clo.is_all);
  REQUIRE(clo.steps.size() == 1);
  CHECK(clo.steps[0].result == 2);
  CHECK(clo.steps[0].op == 0);
  CHECK(clo.steps[0].lhs == 3);
  CHECK(clo.steps[0].rhs == 1);
}

TEST_CASE("closure is extensive, monotone, and idempotent") {
  std::mt19937 rng(20240817);
  std::vector<FiniteAlgebra> samples = {zmod_ring(4), idempotent_monoid_2(),
                                        subtraction_X(), cyclic_group(3)};
  for (const auto& a : samples) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> seeds, more;
      for (int i = 0; i < a.size; ++i) {
        if (rng() % 3 == 0) seeds.push_back(i);
        if (rng() % 3 == 0) more.push_back(i);
      }
      auto c1 = generated_subalgebra(a, seeds).elements;
      for (int s : seeds)  // extensive
        CHECK(std::find(c1.begin(), c1.end(), s) != c1.end());
      auto bigger = seeds;
      bigger.insert(bigger.end(), more.begin(), more.end());
      auto c2 = generated_subalgebra(a, bigger).elements;
      CHECK(std::includes(c2.begin(), c2.end(), c1.begin(), c1.end()));  // monotone
      CHECK(generated_subalgebra(a, c1).elements == c1);                 // idempotent
      CHECK(generated_subalgebra(a, c1).steps.empty());
    }
  }
}

TEST_CASE("subalgebra restriction keeps only contained optional constants") {
  auto z4 = zmod_ring(4);
  auto sub = subalgebra_restrict(z4, {0, 2});
  CHECK(sub.algebra.size == 2);
  CHECK(sub.algebra.constant("zero").has_value());
  CHECK_FALSE(sub.algebra.constant("one").has_value());  // 1 not in {0,2}
  CHECK(is_homomorphism(sub.algebra, z4, sub.inclusion.map));
  CHECK_THROWS_AS(subalgebra_restrict(z4, {0, 1}), input_error);  // not closed: 1+1=2
  CHECK_THROWS_AS(subalgebra_restrict(z4, {1, 3}), input_error);  // missing zero
}

TEST_CASE("subalgebra enumeration on small catalog objects") {
  auto subs_m2 = enumerate_subalgebras(idempotent_monoid_2());
  CHECK(subs_m2 == std::vector<std::vector<int>>{{0}, {0, 1}});

  // submonoids of the 4-element cyclic group: trivial, {e,g^2}, everything
  CHECK(enumerate_subalgebras(cyclic_group(4)).size() == 3);

  // every enumerated subset really is closed
  for (const auto& a : catalog_finite()) {
    if (a.size > 4) continue;
    for (const auto& s : enumerate_subalgebras(a)) {
      CHECK(generated_subalgebra(a, s).elements == s);
    }
  }
}

TEST_CASE("joint strong epimorphicity agrees with the subalgebra oracle") {
  auto cat = catalog_finite();
  int checked = 0;
  for (const auto& y : cat) {
    if (y.size > 4) continue;
    for (const auto& a : cat) {
      if (!signature_compatible(a, y) || a.size > 3) continue;
      for (const auto& b : cat) {
        if (!signature_compatible(b, y) || b.size > 3) continue;
        auto fs = enumerate_homs(a, y);
        auto gs = enumerate_homs(b, y);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            auto cospan = make_cospan(f, g);
            auto res = jointly_strongly_epimorphic(cospan);
            // oracle: no proper subalgebra of Y contains both images
            bool oracle = true;
            for (const auto& s : enumerate_subalgebras(y)) {
              if (static_cast<int>(s.size()) == y.size) continue;
              auto contains = [&](const Hom& h) {
                for (int v : h.map)
                  if (!std::binary_search(s.begin(), s.end(), v)) return false;
                return true;
              };
              if (contains(f) && contains(g)) oracle = false;
            }
            CHECK(res.jse == oracle);
            ++checked;
          }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("pullback is the equalising subobject of the product") {
  auto z4 = zmod_ring(4);
  auto z2 = zmod_ring(2);
  auto q = make_hom(z4, z2, {0, 1, 0, 1});
  auto pb = pullback(q, q);
  REQUIRE(pb.algebra.size == 8);
  for (const auto& [a, c] : pb.pairs) CHECK(q(a) == q(c));
  // commuting square
  for (int i = 0; i < pb.algebra.size; ++i)
    CHECK(q(pb.to_first(i)) == q(pb.to_second(i)));
  CHECK(is_homomorphism(pb.algebra, z4, pb.to_first.map));
  CHECK(is_homomorphism(pb.algebra, z4, pb.to_second.map));
  CHECK(pb.index_of(1, 3) >= 0);
  CHECK(pb.index_of(1, 2) == -1);

  // universal pairing: diagonal into the pullback of q with itself
  auto u = pairing_into_pullback(pb, identity_hom(z4), identity_hom(z4));
  for (int x = 0; x < z4.size; ++x) CHECK(pb.pairs[u(x)] == std::make_pair(x, x));
  CHECK_THROWS_AS(
      pairing_into_pullback(pb, identity_hom(z4), constant_pointed_hom(z4, z4)),
      input_error);  // square does not commute
}

TEST_CASE("kernel pair is a congruence-like relation") {
  auto q = make_hom(zmod_ring(4), zmod_ring(2), {0, 1, 0, 1});
  auto kp = kernel_pair(q);
  CHECK(is_reflexive(kp));
  CHECK(is_symmetric(kp));
  CHECK(is_transitive(kp));
  CHECK(kp.contains(0, 2));
  CHECK_FALSE(kp.contains(0, 1));
  auto comp = relation_compose(kp, kp);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(comp.contains(a, b) == kp.contains(a, b));
  CHECK(relations_commute(kp, kp));
}

TEST_CASE("reflexive internal relations on the idempotent 2-monoid") {
  auto rels = reflexive_relations(idempotent_monoid_2());
  CHECK_FALSE(rels.truncated);
  REQUIRE(rels.relations.size() == 4);
  for (const auto& r : rels.relations) {
    CHECK(is_reflexive(r));
    // subalgebra of the square: re-closing the pair set changes nothing
    std::vector<int> idx;
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        if (r.contains(a, c)) idx.push_back(a * 2 + c);
    CHECK(generated_subalgebra(rels.square.algebra, idx).elements == idx);
  }
}

TEST_CASE("monoid coproduct injections and small word census") {
  auto cop = coproduct_monoid(cyclic_group(2), cyclic_group(2));
  const auto& m = cop.monoid;
  CHECK(cop.inject_left(0).letters.empty());
  auto g0 = cop.inject_left(1);
  auto g1 = cop.inject_right(1);
  CHECK(multiply_words(m, g0, g0).letters.empty());  // g has order 2 in its copy
  auto g01 = multiply_words(m, g0, g1);
  CHECK(g01.letters.size() == 2);
  // epsilon, g@0, g@1, g@0.g@1, g@1.g@0
  CHECK(enumerate_words(m, 2).size() == 5);

  auto fold = make_fold(m, cyclic_group(2),
                        {identity_hom(cyclic_group(2)).map, identity_hom(cyclic_group(2)).map});
  CHECK(fold_word(m, fold, g01) == 0);  // g * g = e under the codiagonal
  CHECK(fold_word(m, fold, g0) == 1);
}
