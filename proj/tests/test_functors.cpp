#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualkit/duality.hpp"
#include "dualkit/generators.hpp"

using namespace dualkit;

TEST_CASE("variance table") {
  CHECK(is_contravariant(FunctorTag::G_mkf_to_alg));
  CHECK(is_contravariant(FunctorTag::F_alg_to_mkf));
  CHECK(is_contravariant(FunctorTag::J_alg_to_nfr));
  CHECK(is_contravariant(FunctorTag::K_nfr_to_alg));
  CHECK_FALSE(is_contravariant(FunctorTag::N_mkf_to_nfr));
  CHECK_FALSE(is_contravariant(FunctorTag::H_nfr_to_mkf));
  CHECK_FALSE(is_contravariant(FunctorTag::M_kfr_to_mkf));
  CHECK_FALSE(is_contravariant(FunctorTag::L_mkf_to_kfr));
  CHECK_FALSE(is_contravariant(FunctorTag::U_underlying));
}

TEST_CASE("G on the fork frame") {
  const BoxAlgebra a = functor_G_obj(*fixture("FX4_fork").m1);
  CHECK(a.box_table() == std::vector<Mask>{0, 0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("G map is the preimage map and is contravariantly functorial") {
  const Fixture fx = fixture("FX2_pair");
  const ElementMap g = functor_G_map(*fx.map, *fx.m1, *fx.m2);
  CHECK(g.source.atoms() == fx.m2->worlds());
  CHECK(g.target.atoms() == fx.m1->worlds());
  for (Mask x = 0; x < static_cast<Mask>(g.source.carrier_size()); ++x)
    CHECK(g.apply(x) == fx.map->preimage(x));
  CHECK(is_modal_hom(g).ok);

  const Fixture bad = fixture("FX3_triple");
  CHECK_THROWS_AS(functor_G_map(*bad.map, *bad.m1, *bad.m2), ValidationError);
}

TEST_CASE("F on the identity box") {
  const MRFrame f = functor_F_obj(*fixture("FX5_idbox2").algebra);
  CHECK(f.worlds().labels() == std::vector<std::string>{"a", "b"});
  CHECK(f.rels() == std::vector<Rel>{9, 11, 13, 15});
}

TEST_CASE("F rejects non-normal algebras but the raw construction accepts them") {
  const BoxAlgebra fork = functor_G_obj(*fixture("FX4_fork").m1);
  CHECK_THROWS_AS(functor_F_obj(fork), ValidationError);
  const MRFrame raw = box_relation_frame(fork, round_trip_caps());
  CHECK(check_kappa_dd(raw, Kappa::all()).ok); // closure makes it directed
}

TEST_CASE("the relation family of F(A) is the full R(X) family") {
  // R(X) factors through singletons, so the closure of the singleton relations
  // must contain R(X) for every subset X of the carrier.
  GenParams p;
  p.max_atoms = 2;
  for (const BoxAlgebra& a : enumerate_normal_algebras(p)) {
    const MRFrame f = functor_F_obj(a, round_trip_caps());
    const int n = a.atom_count();
    const auto carrier = static_cast<Mask>(a.carrier_size());
    for (std::size_t xs = 0; xs < (std::size_t{1} << carrier); ++xs) {
      Rel r = rel_total(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (Mask x = 0; x < carrier; ++x)
            if (((xs >> x) & 1) && ((x >> j) & 1) && !((a.box(x) >> i) & 1))
              r &= ~rel_bit(n, i, j);
      CHECK(std::binary_search(f.rels().begin(), f.rels().end(), r));
    }
  }
}

TEST_CASE("F map is the left adjoint on atoms") {
  const BoxAlgebra id1(WorldSet({"c"}), {0, 1});
  const BoxAlgebra id2(WorldSet({"a", "b"}), {0, 1, 2, 3});
  const ElementMap h = cba_hom_from_atom_map(id2, id1, {0});
  REQUIRE(is_modal_hom(h).ok);
  const WorldMap ff = functor_F_map(h);
  CHECK(ff.source == id1.atoms());
  CHECK(ff.target == id2.atoms());
  CHECK(ff.table == std::vector<int>{0}); // left adjoint of {c} is {a}
}

TEST_CASE("N up-closes the successor families, U does not") {
  const MRFrame fork = *fixture("FX4_fork").m1;
  const NFrame n = functor_N_obj(fork);
  CHECK(n.nbhd(0) == std::vector<Mask>{2, 3, 4, 5, 6, 7});
  CHECK(n.nbhd(1) == std::vector<Mask>{0, 1, 2, 3, 4, 5, 6, 7});
  const NFrame u = underlying_U(fork);
  CHECK(u.nbhd(0) == std::vector<Mask>{2, 4});
  CHECK(u.nbhd(1) == std::vector<Mask>{0});
}

TEST_CASE("H builds one relation per selector") {
  const WorldSet w({"0", "1"});
  const NFrame z(w, {{Mask{1}, Mask{3}}, {Mask{3}}});
  REQUIRE(check_nfr(z, Kappa::all()).ok);
  const MRFrame h = functor_H_obj(z, Kappa::all());
  // Selectors: ({0},{0,1}) and ({0,1},{0,1}); rows become relations.
  const Rel r1 = rel_bit(2, 0, 0) | rel_bit(2, 1, 0) | rel_bit(2, 1, 1);
  const Rel r2 = rel_total(2);
  CHECK(h.rels() == std::vector<Rel>{r1, r2});

  CHECK_THROWS_AS(functor_H_obj(underlying_U(*fixture("FX1_single").m1), Kappa::all()),
                  ValidationError);
}

TEST_CASE("H respects the selector cap") {
  Caps tight = kDefaultCaps;
  tight.max_selectors = 1;
  const WorldSet w({"0", "1"});
  const NFrame z(w, {{Mask{1}, Mask{3}}, {Mask{3}}});
  CHECK_THROWS_AS(functor_H_obj(z, Kappa::all(), tight), CapExceeded);
}

TEST_CASE("J neighborhoods of the identity box") {
  const NFrame j = functor_J_obj(*fixture("FX5_idbox2").algebra);
  CHECK(j.nbhd(0) == std::vector<Mask>{1, 3});
  CHECK(j.nbhd(1) == std::vector<Mask>{2, 3});
}

TEST_CASE("K recovers the box from neighborhoods") {
  const BoxAlgebra id2 = *fixture("FX5_idbox2").algebra;
  const BoxAlgebra back = functor_K_obj(functor_J_obj(id2));
  CHECK(back.box_table() == id2.box_table());
}

TEST_CASE("route consistency J = N after F and K = G after H") {
  GenParams p;
  p.max_atoms = 2;
  for (const BoxAlgebra& a : enumerate_normal_algebras(p)) {
    const NFrame via_f = functor_N_obj(functor_F_obj(a, round_trip_caps()));
    const NFrame direct = functor_J_obj(a);
    CHECK(via_f == direct);
  }

  const WorldSet w({"0", "1"});
  for (unsigned f0 = 0; f0 < 16; ++f0)
    for (unsigned f1 = 0; f1 < 16; ++f1) {
      std::vector<std::vector<Mask>> nbhd(2);
      for (Mask x = 0; x < 4; ++x) {
        if ((f0 >> x) & 1) nbhd[0].push_back(x);
        if ((f1 >> x) & 1) nbhd[1].push_back(x);
      }
      if (nbhd[0].empty() || nbhd[1].empty()) continue;
      const NFrame z(w, nbhd);
      if (!check_nfr(z, Kappa::all()).ok) continue;
      const BoxAlgebra via_h =
          functor_G_obj(functor_H_obj(z, Kappa::all(), round_trip_caps()),
                        round_trip_caps());
      CHECK(via_h == functor_K_obj(z));
    }
}

TEST_CASE("M and L between single- and multi-relational frames") {
  const KripkeFrame k(WorldSet({"0", "1"}), rel_bit(2, 0, 1));
  const MRFrame m = functor_M_obj(k);
  CHECK(m.rels() == std::vector<Rel>{rel_bit(2, 0, 1)});
  CHECK(functor_L_obj(m) == k);

  CHECK_THROWS_AS(functor_L_obj(*fixture("FX4_fork").m1), ValidationError);

  // L collapses a directed family to its intersection member.
  const MRFrame directed(WorldSet({"0", "1"}),
                         {rel_bit(2, 0, 1), rel_total(2), rel_bit(2, 0, 1) | rel_bit(2, 1, 1)});
  CHECK(functor_L_obj(directed).rel == rel_bit(2, 0, 1));
}
