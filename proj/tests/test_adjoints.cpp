#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "dualkit/generators.hpp"
#include "dualkit/morphisms.hpp"

using namespace dualkit;

namespace {

BoxAlgebra discrete(const std::vector<std::string>& labels) {
  const std::size_t carrier = std::size_t{1} << labels.size();
  std::vector<Mask> box(carrier);
  for (Mask x = 0; x < static_cast<Mask>(carrier); ++x) box[x] = x;
  return BoxAlgebra(WorldSet(labels), std::move(box));
}

} // namespace

TEST_CASE("relation images") {
  // n = 2, relation {(0,0),(0,1)}.
  const Rel r = rel_bit(2, 0, 0) | rel_bit(2, 0, 1);
  CHECK(relation_image(r, 2, Mask{1}, ImageDir::Up) == Mask{3});
  CHECK(relation_image(r, 2, Mask{2}, ImageDir::Up) == Mask{0});
  CHECK(relation_image(r, 2, Mask{1}, ImageDir::Down) == Mask{1});
  CHECK(relation_image(r, 2, Mask{2}, ImageDir::Down) == Mask{1});
  CHECK(relation_image(r, 2, Mask{0}, ImageDir::Down) == Mask{0});
  CHECK_THROWS_AS(relation_image(r, 2, Mask{4}, ImageDir::Up), ValidationError);
}

TEST_CASE("worked adjoint example") {
  // h: P{a,b} -> P{c} induced by the atom map c -> a; h(X) = {c | a in X}.
  const BoxAlgebra a = discrete({"a", "b"});
  const BoxAlgebra b = discrete({"c"});
  const ElementMap h = cba_hom_from_atom_map(a, b, {0});
  CHECK(h.apply(0) == 0);
  CHECK(h.apply(1) == 1);
  CHECK(h.apply(2) == 0);
  CHECK(h.apply(3) == 1);

  CHECK(adjoint(h, Mask{1}, AdjointSide::Right) == Mask{3}); // join of everything
  CHECK(adjoint(h, Mask{0}, AdjointSide::Right) == Mask{2}); // {b}
  CHECK(adjoint(h, Mask{1}, AdjointSide::Left) == Mask{1});  // {a}
  CHECK(adjoint(h, Mask{0}, AdjointSide::Left) == Mask{0});
}

TEST_CASE("adjoint rejects non-homomorphisms") {
  const BoxAlgebra a = discrete({"a"});
  const ElementMap constant(a, a, {1, 1});
  CHECK_THROWS_AS(adjoint(constant, 0, AdjointSide::Right), ValidationError);
}

TEST_CASE("Galois equivalences on every small atom-map homomorphism") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      std::vector<std::string> l1, l2;
      for (int i = 0; i < n1; ++i) l1.push_back("a" + std::to_string(i));
      for (int i = 0; i < n2; ++i) l2.push_back("b" + std::to_string(i));
      const BoxAlgebra a = discrete(l1);
      const BoxAlgebra b = discrete(l2);
      // All atom maps g : atoms(b) -> atoms(a).
      std::vector<int> g(static_cast<std::size_t>(n2), 0);
      for (;;) {
        const ElementMap f = cba_hom_from_atom_map(a, b, g);
        REQUIRE(is_cba_hom(f).ok);
        const auto ca = static_cast<Mask>(a.carrier_size());
        const auto cb = static_cast<Mask>(b.carrier_size());
        for (Mask x = 0; x < ca; ++x)
          for (Mask y = 0; y < cb; ++y) {
            // f(x) <= y iff x <= right(y); left(y) <= x iff y <= f(x).
            CHECK(mask_leq(f.apply(x), y) ==
                  mask_leq(x, adjoint(f, y, AdjointSide::Right)));
            CHECK(mask_leq(adjoint(f, y, AdjointSide::Left), x) ==
                  mask_leq(y, f.apply(x)));
          }
        // Monotonicity of both adjoints.
        for (Mask y1 = 0; y1 < cb; ++y1)
          for (Mask y2 = 0; y2 < cb; ++y2) {
            if (!mask_leq(y1, y2)) continue;
            CHECK(mask_leq(adjoint(f, y1, AdjointSide::Right),
                           adjoint(f, y2, AdjointSide::Right)));
            CHECK(mask_leq(adjoint(f, y1, AdjointSide::Left),
                           adjoint(f, y2, AdjointSide::Left)));
          }
        // The left adjoint maps atoms to atoms.
        for (int atom = 0; atom < n2; ++atom)
          CHECK(std::popcount(adjoint(f, Mask{1} << atom, AdjointSide::Left)) == 1);

        int i = 0;
        while (i < n2 && ++g[static_cast<std::size_t>(i)] == n1)
          g[static_cast<std::size_t>(i++)] = 0;
        if (i == n2) break;
      }
    }
}

TEST_CASE("p element") {
  const BoxAlgebra id2(WorldSet({"a", "b"}), {0, 1, 2, 3});
  // p(X, a) joins the members of X whose box avoids the atom a.
  CHECK(p_element(id2, {1, 2}, Mask{1}) == Mask{2});
  CHECK(p_element(id2, {1, 2}, Mask{2}) == Mask{1});
  CHECK(p_element(id2, {3}, Mask{1}) == Mask{0});
  CHECK(p_element(id2, {}, Mask{1}) == Mask{0});
  CHECK_THROWS_AS(p_element(id2, {1}, Mask{3}), ValidationError);
  CHECK_THROWS_AS(p_element(id2, {4}, Mask{1}), ValidationError);
}

TEST_CASE("up closure properties") {
  const std::vector<Mask> family{2, 4};
  const auto closed = up_closure(family, 3);
  CHECK(closed == std::vector<Mask>{2, 3, 4, 5, 6, 7});
  CHECK(up_closure(closed, 3) == closed); // idempotent
  for (Mask x : family)
    CHECK(std::find(closed.begin(), closed.end(), x) != closed.end()); // extensive
  CHECK(up_closure({}, 3).empty());
  CHECK(up_closure({0}, 2) == std::vector<Mask>{0, 1, 2, 3});
}

TEST_CASE("atom characterizations agree on all small algebras") {
  GenParams p;
  p.max_atoms = 3;
  for (const BoxAlgebra& a : enumerate_normal_algebras(p))
    CHECK(check_atom_characterizations(a));
  CHECK_THROWS_AS(
      check_atom_characterizations(discrete({"a", "b", "c", "d", "e"})),
      CapExceeded);
}
