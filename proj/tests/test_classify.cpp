#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "algcat/catalog.hpp"
#include "algcat/classify.hpp"
#include "algcat/hom.hpp"
#include "algcat/io.hpp"
#include "algcat/words.hpp"

using namespace algcat;

namespace {

// One mark per property in report order: + holds, - fails, ? unknown.
std::string grid(const ClassificationReport& rep) {
  std::string out;
  for (const auto& r : rep.records) out += status_mark(r.status);
  return out;
}

ClassificationReport classify_exact(const FiniteAlgebra& a) {
  return classify_finite(a, Mode::exact, default_pool(a.kind));
}

ClassificationReport classify_bounded(const FiniteAlgebra& a) {
  return classify_finite(a, Mode::bounded, default_pool(a.kind));
}

}  // namespace

TEST_CASE("exact classification of the stock monoids") {
  CHECK(grid(classify_exact(cyclic_group(3))) == "+++++");
  auto m2 = classify_exact(idempotent_monoid_2());
  CHECK(grid(m2) == "+----");
  CHECK(m2.record(Property::unital).method == "exact:jonsson-tarski");
  CHECK(m2.record(Property::strongly_unital).method == "exact:gregarious");
  CHECK(m2.record(Property::strongly_unital).witness == "a");
  CHECK(m2.record(Property::maltsev).method == "exact:group");
  CHECK(m2.record(Property::maltsev).witness == "a");
  CHECK(m2.record(Property::protomodular).witness == "a");
}

TEST_CASE("exact classification of the stock semirings") {
  CHECK(grid(classify_exact(zmod_ring(4))) == "+++++");
  CHECK(grid(classify_exact(natural_semiring_truncated(3))) == "+----");
  auto b = classify_exact(boolean_semiring());
  CHECK(grid(b) == "+----");
  CHECK(b.record(Property::subtractive).method == "exact:additive-inverses");
  CHECK(b.record(Property::subtractive).witness == "1");  // 1 + x is never 0
  CHECK(b.record(Property::maltsev).method == "exact:additive-inverses");
}

TEST_CASE("exact classification of the subtraction algebras") {
  auto t = classify_exact(subtraction_T());
  CHECK(grid(t) == "?+???");
  CHECK(t.record(Property::subtractive).method == "exact:subtraction-term");
  CHECK(t.record(Property::unital).method == "exact:zero-complements-inconclusive");
  CHECK(t.record(Property::maltsev).method == "exact:none");
  CHECK(grid(classify_exact(subtraction_X())) == "?+???");
  // every element of subtraction_3 is its own zero-complement
  CHECK(grid(classify_exact(subtraction_3())) == "+++??");
  CHECK(classify_exact(subtraction_3()).record(Property::unital).method ==
        "exact:zero-complements");
}

TEST_CASE("group, gregarious, ring, and complement primitives") {
  CHECK(is_group_monoid(cyclic_group(4)).yes);
  auto m2 = is_group_monoid(idempotent_monoid_2());
  CHECK_FALSE(m2.yes);
  CHECK(m2.witness == 1);

  // on finite monoids the sandwich condition is equivalent to being a group
  for (const auto& a : catalog_finite()) {
    if (!kind_is_monoidal(a.kind)) continue;
    INFO(a.name);
    CHECK(is_gregarious_monoid(a).yes == is_group_monoid(a).yes);
  }
  auto greg = is_gregarious_monoid(cyclic_group(3));
  REQUIRE(greg.yes);
  for (int y = 0; y < 3; ++y) {
    auto [u, v] = greg.sandwich[y];
    int uy = cyclic_group(3).op(0, u, y);
    CHECK(cyclic_group(3).op(0, uy, v) == 0);
  }

  CHECK(is_ring_semiring(zmod_ring(3)).yes);
  CHECK(is_ring_semiring(boolean_semiring()).witness == 1);
  CHECK_THROWS_AS(is_ring_semiring(cyclic_group(2)), input_error);

  CHECK(has_zero_complements(subtraction_3()).yes);
  auto t = has_zero_complements(subtraction_T());
  CHECK_FALSE(t.yes);
  CHECK(t.witness == 1);
}

TEST_CASE("bounded classification is pool-relative") {
  auto m2 = classify_bounded(idempotent_monoid_2());
  CHECK(grid(m2) == "?\?-??");
  auto& su = m2.record(Property::strongly_unital);
  CHECK(su.method == "bounded:product-point");
  CHECK(su.witness ==
        "X=idempotent_monoid_2, f={1->1,a->a}: proper subalgebra {(1,1),(1,a),(a,a)}");
  REQUIRE(su.bound.has_value());
  // Mal'tsev and protomodularity stay open: the only pool point over the
  // object is the Schreier identity point
  CHECK(m2.record(Property::maltsev).method == "bounded:pool-exhausted");
  CHECK(m2.record(Property::protomodular).method == "bounded:pool-exhausted");

  auto t = classify_bounded(subtraction_T());
  CHECK(grid(t) == "-?---");
  CHECK(t.record(Property::unital).method == "bounded:product-point");
  CHECK(t.record(Property::subtractive).method == "bounded:pool-exhausted");

  auto x = classify_bounded(subtraction_X());
  CHECK(x.record(Property::unital).status == Status::fails);
  CHECK(x.record(Property::unital).witness ==
        "X=subtraction_T: proper subalgebra {(0,0),(0,u),(0,v),(a,0)}");

  // a genuine group yields no bounded counterexample anywhere
  CHECK(grid(classify_bounded(cyclic_group(2))) == "?????");
  CHECK(grid(classify_bounded(zmod_ring(2))) == "?????");
}

TEST_CASE("both mode runs exact first and falls back to bounded") {
  auto t = classify_finite(subtraction_T(), Mode::both, default_pool(Kind::subtraction_algebra));
  CHECK(grid(t) == "-+---");
  CHECK(t.record(Property::subtractive).method == "exact:subtraction-term");
  CHECK(t.record(Property::unital).method == "bounded:product-point");
}

TEST_CASE("commutative monoid rules differ from plain monoid rules") {
  auto m2c = with_kind(idempotent_monoid_2(), Kind::commutative_monoid);
  auto rep = classify_finite(m2c, Mode::exact, default_pool(Kind::commutative_monoid));
  CHECK(grid(rep) == "+----");
  CHECK(rep.record(Property::subtractive).method == "exact:abelian-group");
  CHECK(rep.record(Property::maltsev).method == "exact:abelian-group");
  // as a plain monoid, subtractivity of M2 is settled by gregariousness instead
  CHECK(classify_exact(idempotent_monoid_2()).record(Property::subtractive).method ==
        "exact:gregarious");
}

TEST_CASE("every catalog verdict is chain-consistent and mode-coherent") {
  for (const auto& a : catalog_finite()) {
    INFO(a.name);
    auto exact = classify_exact(a);
    auto bounded = classify_bounded(a);
    auto both = classify_finite(a, Mode::both, default_pool(a.kind));
    std::string why;
    CHECK(chain_consistent(exact, &why));
    CHECK(chain_consistent(bounded, &why));
    CHECK(chain_consistent(both, &why));
    for (auto p : all_properties) {
      // a bounded counterexample must never contradict an exact certificate
      if (exact.record(p).status == Status::holds)
        CHECK(bounded.record(p).status != Status::fails);
      if (exact.record(p).status != Status::unknown)
        CHECK(both.record(p).status == exact.record(p).status);
      if (bounded.record(p).status == Status::fails)
        CHECK(both.record(p).status == Status::fails);
    }
  }
}

TEST_CASE("chain consistency rejects fabricated reports") {
  auto rep = classify_exact(cyclic_group(2));
  std::string why;
  REQUIRE(chain_consistent(rep, &why));
  for (auto& r : rep.records)
    if (r.property == Property::unital) r.status = Status::fails;
  CHECK_FALSE(chain_consistent(rep, &why));
  CHECK(why.find("strongly-unital") != std::string::npos);
}

TEST_CASE("lazy monoid classification") {
  auto bi = bicyclic_monoid();
  auto group = is_group_lazy(bi, 20);
  CHECK(group.status == Status::fails);
  CHECK(group.witness == "x");

  auto greg = is_gregarious_lazy(bi, 20);
  CHECK(greg.status == Status::holds);
  REQUIRE(greg.checked.size() == 441);
  for (size_t i = 0; i < greg.checked.size(); ++i) {
    auto prod = multiply_words(bi, greg.sandwich[i].first,
                               multiply_words(bi, greg.checked[i], greg.sandwich[i].second));
    CHECK(prod.letters.empty());
  }

  auto rep = classify_lazy(bi, Mode::exact, 20);
  CHECK(rep.object_name == "bicyclic");
  CHECK(grid(rep) == "+++--");
  CHECK(rep.record(Property::strongly_unital).method == "exact:gregarious-normal-form");
  CHECK(rep.record(Property::maltsev).method == "exact:group-normal-form");
  CHECK(rep.record(Property::maltsev).witness == "x");

  // free product of two groups: every letter is invertible
  auto c2c2 = free_product({cyclic_group(2), cyclic_group(2)}, false, "C2 + C2");
  CHECK(is_group_lazy(c2c2, 4).status == Status::holds);
  auto with_n = free_product({cyclic_group(2)}, true, "C2 + N");
  auto gn = is_group_lazy(with_n, 4);
  CHECK(gn.status == Status::fails);
  CHECK(gn.witness == "n^1@1");

  // a non-group without naturals letters stays open at the bound
  auto m2m2 = free_product({idempotent_monoid_2(), idempotent_monoid_2()}, false, "M2 + M2");
  CHECK(is_group_lazy(m2m2, 4).status == Status::unknown);

  for (const auto& r : classify_lazy(bi, Mode::bounded, 20).records) {
    CHECK(r.status == Status::unknown);
    CHECK(r.method == "bounded:unsupported-lazy");
  }
}

TEST_CASE("classify_table mirrors per-object classification") {
  std::vector<Algebra> objs = {cyclic_group(3), idempotent_monoid_2(), bicyclic_monoid()};
  auto table = classify_table(objs, Mode::exact);
  REQUIRE(table.size() == 3);
  CHECK(grid(table[0]) == "+++++");
  CHECK(grid(table[1]) == "+----");
  CHECK(grid(table[2]) == "+++--");
  CHECK(table[2].object_name == "bicyclic");
}

TEST_CASE("protomodularity probe over the binary coproduct") {
  auto m2 = idempotent_monoid_2();
  auto via_sum = check_pm_via_sum(m2, identity_hom(m2), 6);
  CHECK_FALSE(via_sum.covered);
  CHECK(via_sum.kernel_words == 1);   // only the empty word folds to the unit
  CHECK(via_sum.closure_words == 2);  // kernel + section image never grow
  CHECK_FALSE(via_sum.first_missing.letters.empty());

  auto c2 = cyclic_group(2);
  CHECK(check_pm_via_sum(c2, identity_hom(c2), 4).covered);
}

TEST_CASE("Mal'tsev probe in the free product with the naturals") {
  auto absent = maltsev_freeproduct_probe(idempotent_monoid_2(), 1, 8);
  CHECK_FALSE(absent.generated);
  CHECK(absent.entries.size() == 1037);
  CHECK(absent.target_index == -1);

  auto found = maltsev_freeproduct_probe(cyclic_group(2), 1, 6);
  CHECK(found.generated);
  CHECK(found.entries.size() == 351);
  CHECK(found.target_index == 65);
  // replay the discovery: recompute each recorded product
  auto mn = free_product({cyclic_group(2)}, true, "m + N");
  auto mm = free_product({cyclic_group(2), cyclic_group(2)}, false, "m + m");
  for (const auto& e : found.entries) {
    if (e.parent_a < 0) continue;
    const auto& pa = found.entries[e.parent_a];
    const auto& pb = found.entries[e.parent_b];
    CHECK(multiply_words(mn, pa.left, pb.left) == e.left);
    CHECK(multiply_words(mm, pa.right, pb.right) == e.right);
  }

  CHECK_THROWS_AS(maltsev_freeproduct_probe(cyclic_group(2), 0, 4), input_error);
}
