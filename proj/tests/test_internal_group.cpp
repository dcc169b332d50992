#include <doctest.h>

#include <vector>

#include "hopfft/internal_group.hpp"
#include "support/fixture_rings.hpp"

using namespace hopfft;

namespace {

Morphism delta_state(const RingPtr& ring, std::uint32_t n, std::uint32_t g) {
  Morphism st = Morphism::zero(ring, {}, {primal(n)});
  st.set(g, 0, ring->one());
  return st;
}

}  // namespace

TEST_CASE("structure maps of the two algebras on Z3") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);

  // point matches equal elements, conv pushes pairs through the group law.
  CHECK(rat->is_one(ig.point.mult.at(1, 1 * 3 + 1)));
  CHECK(rat->is_zero(ig.point.mult.at(0, 1 * 3 + 2)));
  CHECK(rat->is_one(ig.conv.mult.at(0, 1 * 3 + 2)));
  CHECK(rat->is_one(ig.conv.mult.at(2, 1 * 3 + 1)));

  // point's unit is uniform, conv's is the group identity.
  for (std::uint32_t g = 0; g < 3; ++g)
    CHECK(rat->is_one(ig.point.unit.at(g, 0)));
  CHECK(rat->is_one(ig.conv.unit.at(0, 0)));
  CHECK(rat->is_zero(ig.conv.unit.at(1, 0)));

  // The assembled antipode is basis inversion: 1 and 2 swap, 0 stays.
  CHECK(rat->is_one(ig.antipode.at(0, 0)));
  CHECK(rat->is_one(ig.antipode.at(2, 1)));
  CHECK(rat->is_one(ig.antipode.at(1, 2)));
  CHECK(rat->is_zero(ig.antipode.at(1, 1)));

  CHECK(rat->equal(ig.N, rat->from_integer(3)));
  CHECK(ig.point.is_special);
  CHECK_FALSE(ig.conv.is_special);
  REQUIRE(ig.conv.norm.has_value());
  CHECK(rat->equal(*ig.conv.norm, Scalar(Rational(3))));
}

TEST_CASE("full axiom suite passes across groups and rings") {
  std::vector<FiniteGroup> groups;
  groups.push_back(group_from_cyclics({4}));
  groups.push_back(group_from_cyclics({2, 2}));
  for (const FiniteGroup& g : groups) {
    for (const char* ring_name : {"bool", "rat", "cyc:4", "c64"}) {
      RingPtr ring = semiring_by_name(ring_name);
      InternalGroup ig = build_internal_group(g, ring);
      CAPTURE(g.name);
      CAPTURE(ring_name);

      for (const FrobeniusAlgebra* f : {&ig.point, &ig.conv}) {
        CheckReport frob = check_frobenius(*f);
        INFO(frob.to_text());
        CHECK(frob.all_passed());
        CheckReport quasi = check_quasi_special(*f);
        INFO(quasi.to_text());
        CHECK(quasi.all_passed());
      }
      CheckReport coherence = check_coherence(ig.point, ig.conv);
      INFO(coherence.to_text());
      CHECK(coherence.all_passed());
      CheckReport bialg = check_bialgebra(ig.point, ig.conv);
      INFO(bialg.to_text());
      CHECK(bialg.all_passed());
      CheckReport hopf = check_hopf(ig.point, ig.conv, ig.antipode);
      INFO(hopf.to_text());
      CHECK(hopf.all_passed());
      CheckReport anti = check_antipode(ig);
      INFO(anti.to_text());
      CHECK(anti.all_passed());
    }
  }
}

TEST_CASE("group order appears as the loop scalar of conv") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({2, 3}), rat);
  CHECK(rat->equal(ig.N, Scalar(Rational(6))));

  // Over booleans the order collapses to one, making conv special too.
  InternalGroup igb =
      build_internal_group(group_from_cyclics({2, 3}), semiring_by_name("bool"));
  CHECK(igb.conv.is_special);
  CHECK(igb.point.is_special);
}

TEST_CASE("noncommutative conv still forms a dagger frobenius structure") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(symmetric3(), rat);
  CHECK_FALSE(ig.conv.is_commutative);

  CheckReport frob = check_frobenius(ig.conv);
  INFO(frob.to_text());
  CHECK(frob.all_passed());
  CheckReport hopf = check_hopf(ig.point, ig.conv, ig.antipode);
  INFO(hopf.to_text());
  CHECK(hopf.all_passed());
  CheckReport anti = check_antipode(ig);
  INFO(anti.to_text());
  CHECK(anti.all_passed());

  // The three-cycles are each other's inverses; transpositions fix themselves.
  CHECK(rat->is_one(ig.antipode.at(5, 4)));
  CHECK(rat->is_one(ig.antipode.at(4, 5)));
  CHECK(rat->is_one(ig.antipode.at(1, 1)));
}

TEST_CASE("a corrupted multiplication is reported, not thrown") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);
  ig.conv.mult.set(0, 1 * 3 + 2, rat->zero());

  CheckReport frob = check_frobenius(ig.conv);
  CHECK_FALSE(frob.all_passed());
  const CheckLine* assoc = frob.find("mult is associative");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed);
  CHECK(assoc->detail.find("at basis") != std::string::npos);
  // The dagger pairing breaks as well: comult still copies the old table.
  const CheckLine* dagger = frob.find("comult is the dagger of mult");
  REQUIRE(dagger != nullptr);
  CHECK_FALSE(dagger->passed);
}

TEST_CASE("declared commutativity flag is verified against the table") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({4}), rat);
  FrobeniusAlgebra lying = ig.conv;
  lying.is_commutative = false;
  CheckReport frob = check_frobenius(lying);
  const CheckLine* flag = frob.find("commutativity matches the declared flag");
  REQUIRE(flag != nullptr);
  CHECK_FALSE(flag->passed);
  CHECK(flag->detail.find("measured commutative") != std::string::npos);
}

TEST_CASE("a tampered antipode fails exactly the inversion line") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);
  ig.antipode = Morphism::identity(rat, {primal(3u)});
  CheckReport anti = check_antipode(ig);
  CHECK_FALSE(anti.all_passed());
  CHECK_FALSE(anti.find("antipode permutes basis states by inversion")->passed);
  CHECK(anti.find("antipode is an involution")->passed);
  CHECK(anti.find("antipode is self-adjoint")->passed);
  CHECK(anti.find("antipode fixes the conv unit")->passed);
}

TEST_CASE("antipode assembly rejects mismatched carriers") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup a = build_internal_group(group_from_cyclics({2}), rat);
  InternalGroup b = build_internal_group(group_from_cyclics({3}), rat);
  CHECK_THROWS_AS(antipode_of(a.point, b.conv), std::invalid_argument);
}

TEST_CASE("delta states classify as a classical orthogonal basis for point") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);
  std::vector<Morphism> deltas;
  for (std::uint32_t g = 0; g < 3; ++g)
    deltas.push_back(delta_state(rat, 3, g));

  StateFamilyReport rep = classify_state_family(deltas, ig.point);
  CHECK(rep.orthogonal);
  CHECK(rep.normalisable);
  CHECK(rep.matchable);
  CHECK(rep.classical);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK(*rep.resolution_of_identity);
  REQUIRE(rep.partition_of_counit.has_value());
  CHECK(*rep.partition_of_counit);
  REQUIRE(rep.basis.has_value());
  CHECK(*rep.basis);
  CHECK(rep.note.empty());
}

TEST_CASE("delta states against conv: orthogonal but neither classical nor matchable") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);
  std::vector<Morphism> deltas;
  for (std::uint32_t g = 0; g < 3; ++g)
    deltas.push_back(delta_state(rat, 3, g));

  StateFamilyReport rep = classify_state_family(deltas, ig.conv);
  CHECK(rep.orthogonal);
  CHECK(rep.normalisable);
  CHECK_FALSE(rep.matchable);
  CHECK_FALSE(rep.classical);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK(*rep.resolution_of_identity);
  REQUIRE(rep.partition_of_counit.has_value());
  CHECK_FALSE(*rep.partition_of_counit);
}

TEST_CASE("uniform boolean state is classical for conv") {
  RingPtr boolean = semiring_by_name("bool");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), boolean);
  Morphism uniform = Morphism::zero(boolean, {}, {primal(2u)});
  uniform.set(0, 0, boolean->one());
  uniform.set(1, 0, boolean->one());

  StateFamilyReport rep = classify_state_family({uniform}, ig.conv);
  CHECK(rep.classical);
  CHECK(rep.matchable);
  CHECK(rep.normalisable);
  REQUIRE(rep.basis.has_value());
  CHECK_FALSE(*rep.basis);
}

TEST_CASE("norms without inverses leave resolution and partition undecided") {
  RingPtr nat = semiring_by_name("nat");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), nat);
  Morphism doubled = Morphism::zero(nat, {}, {primal(2u)});
  doubled.set(0, 0, nat->from_integer(2));
  std::vector<Morphism> family = {doubled, delta_state(nat, 2, 1)};

  StateFamilyReport rep = classify_state_family(family, ig.point);
  CHECK(rep.orthogonal);
  CHECK_FALSE(rep.normalisable);
  CHECK_FALSE(rep.resolution_of_identity.has_value());
  CHECK_FALSE(rep.partition_of_counit.has_value());
  CHECK(rep.note.find("normalisation unavailable") != std::string::npos);
  // No subtraction in the naturals either, so the basis question falls back
  // to permutation structure, which a doubled entry fails.
  REQUIRE(rep.basis.has_value());
  CHECK_FALSE(*rep.basis);
}

TEST_CASE("non-orthogonal families go through the determinant route") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);

  Morphism mixed = Morphism::zero(rat, {}, {primal(2u)});
  mixed.set(0, 0, rat->one());
  mixed.set(1, 0, rat->one());
  std::vector<Morphism> family = {mixed, delta_state(rat, 2, 1)};

  StateFamilyReport rep = classify_state_family(family, ig.point);
  CHECK_FALSE(rep.orthogonal);
  CHECK(rep.normalisable);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK_FALSE(*rep.resolution_of_identity);
  REQUIRE(rep.basis.has_value());
  CHECK(*rep.basis);

  // Same family over the integers: the determinant is still a unit.
  RingPtr ints = semiring_by_name("int");
  InternalGroup igz = build_internal_group(group_from_cyclics({2}), ints);
  Morphism mixed_z = Morphism::zero(ints, {}, {primal(2u)});
  mixed_z.set(0, 0, ints->one());
  mixed_z.set(1, 0, ints->one());
  StateFamilyReport repz = classify_state_family(
      {mixed_z, delta_state(ints, 2, 1)}, igz.point);
  REQUIRE(repz.basis.has_value());
  CHECK(*repz.basis);

  // A non-unit determinant over the integers cannot be decided.
  Morphism stretched = Morphism::zero(ints, {}, {primal(2u)});
  stretched.set(1, 0, ints->from_integer(2));
  StateFamilyReport rep2 = classify_state_family(
      {mixed_z, stretched}, igz.point);
  CHECK_FALSE(rep2.basis.has_value());
  CHECK(rep2.note.find("change-of-basis determinant") != std::string::npos);
}

TEST_CASE("repeated boolean deltas cannot rebuild the basis") {
  RingPtr boolean = semiring_by_name("bool");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), boolean);
  std::vector<Morphism> family = {delta_state(boolean, 2, 0),
                                  delta_state(boolean, 2, 0)};
  StateFamilyReport rep = classify_state_family(family, ig.point);
  CHECK_FALSE(rep.orthogonal);
  REQUIRE(rep.basis.has_value());
  CHECK_FALSE(*rep.basis);
}

TEST_CASE("over the two-element field a tripled state resolves the identity") {
  RingPtr gf2 = hopfft::testing::two_element_field();
  InternalGroup ig = build_internal_group(group_from_cyclics({}), gf2);
  Morphism x = delta_state(gf2, 1, 0);
  std::vector<Morphism> family = {x, x, x};

  StateFamilyReport rep = classify_state_family(family, ig.point);
  CHECK_FALSE(rep.orthogonal);
  CHECK(rep.normalisable);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK(*rep.resolution_of_identity);
  REQUIRE(rep.partition_of_counit.has_value());
  CHECK(*rep.partition_of_counit);
  REQUIRE(rep.basis.has_value());
  CHECK_FALSE(*rep.basis);
}

TEST_CASE("repeated relational co-states partition the counit") {
  RingPtr boolean = semiring_by_name("bool");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), boolean);
  std::vector<Morphism> family = {delta_state(boolean, 2, 0),
                                  delta_state(boolean, 2, 0),
                                  delta_state(boolean, 2, 1)};
  StateFamilyReport rep = classify_state_family(family, ig.point);
  CHECK_FALSE(rep.orthogonal);
  REQUIRE(rep.partition_of_counit.has_value());
  CHECK(*rep.partition_of_counit);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK(*rep.resolution_of_identity);
}

TEST_CASE("empty families are handled without surprises") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
  StateFamilyReport rep = classify_state_family({}, ig.point);
  CHECK(rep.orthogonal);
  CHECK(rep.normalisable);
  REQUIRE(rep.resolution_of_identity.has_value());
  CHECK_FALSE(*rep.resolution_of_identity);
  REQUIRE(rep.basis.has_value());
  CHECK_FALSE(*rep.basis);
}

TEST_CASE("state families validate carrier and semiring") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup ig = build_internal_group(group_from_cyclics({3}), rat);
  CHECK_THROWS_AS(
      classify_state_family({delta_state(rat, 2, 0)}, ig.point),
      std::invalid_argument);
  CHECK_THROWS_AS(
      classify_state_family({delta_state(semiring_by_name("int"), 3, 0)},
                            ig.point),
      std::invalid_argument);
}
