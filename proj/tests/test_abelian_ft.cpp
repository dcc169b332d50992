#include <doctest.h>

#include <random>
#include <vector>

#include "hopfft/abelian_ft.hpp"

using namespace hopfft;

namespace {

Morphism delta_state(const RingPtr& ring, std::uint32_t n, std::uint32_t g) {
  Morphism st = Morphism::zero(ring, {}, {primal(n)});
  st.set(g, 0, ring->one());
  return st;
}

Morphism random_state(const RingPtr& ring, std::uint32_t n,
                      std::mt19937_64& rng) {
  Morphism st = Morphism::zero(ring, {}, {primal(n)});
  for (std::uint32_t g = 0; g < n; ++g) st.set(g, 0, ring->sample(rng));
  return st;
}

}  // namespace

TEST_CASE("character tables of the small cyclic groups") {
  SUBCASE("Z2 over the rationals") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual = characters(ig);
    REQUIRE(dual.characters.size() == 2);
    CHECK(dual.factors == std::vector<std::uint32_t>{2});

    const Morphism& trivial = dual.characters[0].costate;
    const Morphism& sign = dual.characters[1].costate;
    CHECK(rat->is_one(trivial.at(0, 0)));
    CHECK(rat->is_one(trivial.at(0, 1)));
    CHECK(rat->is_one(sign.at(0, 0)));
    CHECK(rat->equal(sign.at(0, 1), Scalar(Rational(-1))));
  }

  SUBCASE("Z3 over its cyclotomic field") {
    RingPtr cyc = semiring_by_name("cyc:3");
    InternalGroup ig = build_internal_group(group_from_cyclics({3}), cyc);
    DualGroup dual = characters(ig);
    REQUIRE(dual.characters.size() == 3);

    Scalar zeta = *cyc->root_of_unity(3);
    Scalar zeta2 = cyc->mul(zeta, zeta);
    const Morphism& chi1 = dual.characters[1].costate;
    CHECK(cyc->is_one(chi1.at(0, 0)));
    CHECK(cyc->equal(chi1.at(0, 1), zeta));
    CHECK(cyc->equal(chi1.at(0, 2), zeta2));
    const Morphism& chi2 = dual.characters[2].costate;
    CHECK(cyc->equal(chi2.at(0, 1), zeta2));
    CHECK(cyc->equal(chi2.at(0, 2), zeta));
  }

  SUBCASE("the trivial group has one trivial character everywhere") {
    for (const char* name : {"bool", "rat", "cyc:5", "c64"}) {
      RingPtr ring = semiring_by_name(name);
      InternalGroup ig = build_internal_group(group_from_cyclics({}), ring);
      DualGroup dual = characters(ig);
      REQUIRE(dual.characters.size() == 1);
      CHECK(ring->is_one(dual.characters[0].costate.at(0, 0)));
    }
  }

  SUBCASE("rings without the needed roots are refused") {
    RingPtr boolean = semiring_by_name("bool");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), boolean);
    CHECK_THROWS_WITH_AS(characters(ig),
                         doctest::Contains("no roots of unity of required order"),
                         std::invalid_argument);

    RingPtr rat = semiring_by_name("rat");
    InternalGroup z3 = build_internal_group(group_from_cyclics({3}), rat);
    CHECK_THROWS_AS(characters(z3), std::invalid_argument);
  }
}

TEST_CASE("transform and inverse are mutually inverse") {
  SUBCASE("random rational states on Z2 x Z3") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 3}), rat);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      Morphism f = random_state(rat, 6, rng);
      CHECK(inverse_fourier_transform(ig, fourier_transform(ig, f)).equal(f));
    }
    // And in the other order, starting from a co-state.
    Morphism r = random_state(rat, 6, rng).dagger();
    CHECK(fourier_transform(ig, inverse_fourier_transform(ig, r)).equal(r));
  }

  SUBCASE("the zero state maps to the zero co-state") {
    RingPtr boolean = semiring_by_name("bool");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 2}), boolean);
    Morphism zero = Morphism::zero(boolean, {}, {primal(4)});
    Morphism image = fourier_transform(ig, zero);
    for (std::uint32_t g = 0; g < 4; ++g) CHECK(boolean->is_zero(image.at(0, g)));
  }

  SUBCASE("boolean delta bases round trip without any division") {
    RingPtr boolean = semiring_by_name("bool");
    for (const auto& orders :
         {std::vector<std::uint32_t>{2}, {3}, {2, 2}, {6}}) {
      InternalGroup ig = build_internal_group(group_from_cyclics(orders), boolean);
      for (std::uint32_t g = 0; g < ig.group.order; ++g) {
        Morphism f = delta_state(boolean, ig.group.order, g);
        CHECK(inverse_fourier_transform(ig, fourier_transform(ig, f)).equal(f));
      }
    }
  }

  SUBCASE("c64 round trips stay inside tolerance") {
    RingPtr c64 = semiring_by_name("c64");
    InternalGroup ig = build_internal_group(group_from_cyclics({5}), c64);
    std::mt19937_64 rng(7);
    Morphism f = random_state(c64, 5, rng);
    CHECK(inverse_fourier_transform(ig, fourier_transform(ig, f)).equal(f));
  }
}

TEST_CASE("character coefficients") {
  SUBCASE("the 1/2-weighted coefficients of a delta on Z2") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual = characters(ig);
    std::vector<Scalar> coeff =
        ft_coefficients(ig, dual, delta_state(rat, 2, 0));
    REQUIRE(coeff.size() == 2);
    CHECK(rat->equal(coeff[0], Scalar(Rational(1, 2))));
    CHECK(rat->equal(coeff[1], Scalar(Rational(1, 2))));
  }

  SUBCASE("the constant function on Z3 concentrates on the trivial character") {
    RingPtr cyc = semiring_by_name("cyc:3");
    InternalGroup ig = build_internal_group(group_from_cyclics({3}), cyc);
    DualGroup dual = characters(ig);
    Morphism constant = Morphism::zero(cyc, {}, {primal(3)});
    for (std::uint32_t g = 0; g < 3; ++g) constant.set(g, 0, cyc->one());
    std::vector<Scalar> coeff = ft_coefficients(ig, dual, constant);
    CHECK(cyc->is_one(coeff[0]));
    CHECK(cyc->is_zero(coeff[1]));
    CHECK(cyc->is_zero(coeff[2]));
  }

  SUBCASE("a scaled delta on the trivial group keeps its scale") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({}), rat);
    DualGroup dual = characters(ig);
    Morphism f = Morphism::zero(rat, {}, {primal(1)});
    f.set(0, 0, Scalar(Rational(7, 3)));
    std::vector<Scalar> coeff = ft_coefficients(ig, dual, f);
    REQUIRE(coeff.size() == 1);
    CHECK(rat->equal(coeff[0], Scalar(Rational(7, 3))));
  }

  SUBCASE("pairing the abstract transform against character kets") {
    RingPtr cyc = semiring_by_name("cyc:4");
    InternalGroup ig = build_internal_group(group_from_cyclics({4}), cyc);
    DualGroup dual = characters(ig);
    std::mt19937_64 rng(23);
    Morphism f = random_state(cyc, 4, rng);
    Morphism transformed = fourier_transform(ig, f);
    std::vector<Scalar> coeff = ft_coefficients(ig, dual, f);
    for (std::uint32_t h = 0; h < 4; ++h) {
      Morphism ket = dual.characters[h].costate.dagger();
      Scalar paired = ket.then(transformed).scalar_value();
      CHECK(cyc->equal(paired, cyc->mul(ig.N, coeff[h])));
    }
  }

  SUBCASE("rings that cannot divide by the order are refused by name") {
    RingPtr ints = semiring_by_name("int");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), ints);
    DualGroup dual = characters(ig);  // roots of order two exist over int
    CHECK_THROWS_WITH_AS(
        ft_coefficients(ig, dual, delta_state(ints, 2, 0)),
        doctest::Contains("no inverse in int"), std::invalid_argument);
  }
}

TEST_CASE("convolution and pointwise products") {
  RingPtr rat = semiring_by_name("rat");
  InternalGroup z3 = build_internal_group(group_from_cyclics({3}), rat);

  CHECK(convolve(z3, delta_state(rat, 3, 1), delta_state(rat, 3, 2))
            .equal(delta_state(rat, 3, 0)));
  CHECK(pointwise(z3, delta_state(rat, 3, 2), delta_state(rat, 3, 2))
            .equal(delta_state(rat, 3, 2)));
  Morphism mixed = pointwise(z3, delta_state(rat, 3, 1), delta_state(rat, 3, 2));
  for (std::uint32_t g = 0; g < 3; ++g) CHECK(rat->is_zero(mixed.at(g, 0)));

  // Boolean convolution acts as elementwise subset products of the group law.
  RingPtr boolean = semiring_by_name("bool");
  InternalGroup z4 = build_internal_group(group_from_cyclics({4}), boolean);
  Morphism evens = Morphism::zero(boolean, {}, {primal(4)});
  evens.set(0, 0, boolean->one());
  evens.set(2, 0, boolean->one());
  Morphism shifted = convolve(z4, evens, delta_state(boolean, 4, 1));
  CHECK(boolean->is_one(shifted.at(1, 0)));
  CHECK(boolean->is_one(shifted.at(3, 0)));
  CHECK(boolean->is_zero(shifted.at(0, 0)));
}

TEST_CASE("convolution theorem") {
  SUBCASE("exact over the rationals on Z6") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({6}), rat);
    CheckReport report = check_convolution_theorem(ig, 50, 42);
    CHECK(report.all_passed());
    CHECK(report.max_deviation() == 0.0);
  }

  SUBCASE("convolving against the unit changes nothing") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 3}), rat);
    std::mt19937_64 rng(5);
    Morphism f = random_state(rat, 6, rng);
    CHECK(fourier_transform(ig, convolve(ig, f, ig.conv.unit))
              .equal(fourier_transform(ig, f)));
  }

  SUBCASE("boolean instances compare as relations") {
    RingPtr boolean = semiring_by_name("bool");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 2}), boolean);
    CheckReport report = check_convolution_theorem(ig, 50, 9);
    CHECK(report.all_passed());
  }

  SUBCASE("floating instances stay inside tolerance") {
    RingPtr c64 = semiring_by_name("c64");
    InternalGroup ig = build_internal_group(group_from_cyclics({5}), c64);
    CheckReport report = check_convolution_theorem(ig, 25, 3);
    CHECK(report.all_passed());
    CHECK(report.max_deviation() < 1e-9);
  }
}

TEST_CASE("character orthogonality") {
  SUBCASE("Z4 Gram matrix is four times the identity, exactly") {
    RingPtr cyc = semiring_by_name("cyc:4");
    InternalGroup ig = build_internal_group(group_from_cyclics({4}), cyc);
    DualGroup dual = characters(ig);
    CheckReport report = check_character_orthogonality(ig, dual);
    CHECK(report.all_passed());
    CHECK(report.max_deviation() == 0.0);
    const CheckLine* gram =
        report.find("character Gram matrix is N times the identity");
    REQUIRE(gram != nullptr);
    CHECK(gram->passed);
  }

  SUBCASE("Z2 over the rationals, including the family battery") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual = characters(ig);
    CheckReport report = check_character_orthogonality(ig, dual, true);
    CHECK(report.all_passed());
    const CheckLine* matchable =
        report.find("character kets: matching family for the multiplication");
    REQUIRE(matchable != nullptr);
    CHECK(matchable->passed);
  }

  SUBCASE("orders without an inverse are refused") {
    RingPtr ints = semiring_by_name("int");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), ints);
    DualGroup dual = characters(ig);
    CHECK_THROWS_AS(check_character_orthogonality(ig, dual),
                    std::invalid_argument);
  }
}

TEST_CASE("transform matrices") {
  SUBCASE("Z2 yields the familiar sign matrix") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual = characters(ig);
    GroupHom psi = GroupHom::make(ig.group, dual.label_group(), {0, 1});
    Morphism h = fourier_matrix(ig, dual, psi);
    CHECK(rat->is_one(h.at(0, 0)));
    CHECK(rat->is_one(h.at(0, 1)));
    CHECK(rat->is_one(h.at(1, 0)));
    CHECK(rat->equal(h.at(1, 1), Scalar(Rational(-1))));
    CHECK(check_comonoid_monoid_iso(ig, h).all_passed());
  }

  SUBCASE("Z3 matrix in root powers") {
    RingPtr cyc = semiring_by_name("cyc:3");
    InternalGroup ig = build_internal_group(group_from_cyclics({3}), cyc);
    DualGroup dual = characters(ig);
    GroupHom psi = GroupHom::make(ig.group, dual.label_group(), {0, 1, 2});
    Morphism h = fourier_matrix(ig, dual, psi);
    Scalar zeta = *cyc->root_of_unity(3);
    Scalar zeta2 = cyc->mul(zeta, zeta);
    for (std::uint32_t g = 0; g < 3; ++g) {
      CHECK(cyc->is_one(h.at(0, g)));
      CHECK(cyc->is_one(h.at(g, 0)));
    }
    CHECK(cyc->equal(h.at(1, 1), zeta));
    CHECK(cyc->equal(h.at(1, 2), zeta2));
    CHECK(cyc->equal(h.at(2, 1), zeta2));
    CHECK(cyc->equal(h.at(2, 2), zeta));
    CHECK(check_comonoid_monoid_iso(ig, h).all_passed());
  }

  SUBCASE("Z2 x Z2 with the componentwise identification is a tensor square") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 2}), rat);
    DualGroup dual = characters(ig);
    GroupHom psi = GroupHom::make(ig.group, dual.label_group(), {0, 1, 2, 3});
    Morphism h = fourier_matrix(ig, dual, psi);

    InternalGroup z2 = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual2 = characters(z2);
    GroupHom psi2 = GroupHom::make(z2.group, dual2.label_group(), {0, 1});
    Morphism h2 = fourier_matrix(z2, dual2, psi2);
    Morphism square = h2.tensor(h2);
    for (std::uint32_t r = 0; r < 4; ++r)
      for (std::uint32_t c = 0; c < 4; ++c)
        CHECK(rat->equal(h.at(r, c), square.at(r, c)));
    CHECK(check_comonoid_monoid_iso(ig, h).all_passed());
  }

  SUBCASE("non-isomorphic identifications are rejected") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    DualGroup dual = characters(ig);
    GroupHom collapse = GroupHom::make(ig.group, dual.label_group(), {0, 0});
    CHECK_THROWS_AS(fourier_matrix(ig, dual, collapse), std::invalid_argument);
  }
}

TEST_CASE("naturality of the transform") {
  SUBCASE("the doubling automorphism of Z3") {
    RingPtr cyc = semiring_by_name("cyc:3");
    InternalGroup ig = build_internal_group(group_from_cyclics({3}), cyc);
    GroupHom twice = GroupHom::make(ig.group, ig.group, {0, 2, 1});
    CheckReport report = check_canonicity(ig, ig, twice);
    CHECK(report.all_passed());
    CHECK(report.max_deviation() == 0.0);
  }

  SUBCASE("the identity is trivially natural") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2, 2}), rat);
    GroupHom id = GroupHom::make(ig.group, ig.group, {0, 1, 2, 3});
    CHECK(check_canonicity(ig, ig, id).all_passed());
  }

  SUBCASE("Z6 against Z2 x Z3 through a found isomorphism") {
    RingPtr cyc = semiring_by_name("cyc:6");
    InternalGroup z6 = build_internal_group(group_from_cyclics({6}), cyc);
    InternalGroup grid = build_internal_group(group_from_cyclics({2, 3}), cyc);
    auto phi = find_isomorphism(z6.group, grid.group);
    REQUIRE(phi.has_value());
    CheckReport report = check_canonicity(z6, grid, *phi);
    CHECK(report.all_passed());
    CHECK(report.max_deviation() == 0.0);
  }

  SUBCASE("maps that are not isomorphisms are rejected") {
    RingPtr rat = semiring_by_name("rat");
    InternalGroup ig = build_internal_group(group_from_cyclics({2}), rat);
    GroupHom collapse = GroupHom::make(ig.group, ig.group, {0, 0});
    CHECK_THROWS_AS(check_canonicity(ig, ig, collapse), std::invalid_argument);
  }
}

TEST_CASE("the dual group structure on characters") {
  RingPtr cyc = semiring_by_name("cyc:6");
  InternalGroup ig = build_internal_group(group_from_cyclics({6}), cyc);
  DualGroup dual = characters(ig);
  const std::uint32_t n = ig.group.order;

  SUBCASE("closure under the pointwise product and antipode inversion") {
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        Morphism product = pointwise_costate_product(
            ig, dual.characters[a].costate, dual.characters[b].costate);
        CHECK(product.equal(
            dual.characters[dual.product_index(a, b)].costate));
      }
      Morphism inverted = ig.antipode.then(dual.characters[a].costate);
      CHECK(inverted.equal(dual.characters[dual.inverse_index(a)].costate));
    }
  }

  SUBCASE("the trivial character is the point counit") {
    CHECK(dual.characters[0].costate.equal(ig.point.counit));
  }

  SUBCASE("the dual label group is isomorphic to the group itself") {
    CHECK(dual.presentation.is_bijective());
    auto witness = find_isomorphism(dual.label_group(), ig.group);
    REQUIRE(witness.has_value());
    CHECK(witness->is_bijective());
  }

  SUBCASE("double dual: delta co-states are the characters of the dual") {
    // Characters are the co-states that are multiplicative for the group
    // algebra; against the point monoid that role is played by the deltas.
    for (std::uint32_t g = 0; g < n; ++g) {
      Morphism row = delta_state(cyc, n, g).dagger();
      CHECK(ig.point.mult.then(row).equal(row.tensor(row)));
      CHECK(cyc->is_one(ig.point.unit.then(row).scalar_value()));
    }
    // Their table against evaluation kets is the transpose of the character
    // table: pairing <g| with the unconjugated vector of chi_h recovers
    // chi_h(g).
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h) {
        Morphism ket = Morphism::zero(cyc, {}, {primal(n)});
        for (std::uint32_t x = 0; x < n; ++x)
          ket.set(x, 0, dual.characters[h].costate.at(0, x));
        Scalar paired =
            ket.then(delta_state(cyc, n, g).dagger()).scalar_value();
        CHECK(cyc->equal(paired, dual.characters[h].costate.at(0, g)));
      }
  }
}
