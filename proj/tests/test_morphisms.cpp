#include <doctest.h>

#include "sgr/morphism.hpp"

using namespace sgr;

namespace {

const ShiftSum kR0{{0}};

Polynomial gen_poly(const RingPresentation& ring, int g) {
    return Polynomial::term(ring.generator_monomial(g), 1);
}

PolyMatrixMorphism generator_row(const RingPresentation& ring, Semantics semantics) {
    ShiftSum source;
    std::vector<std::vector<Polynomial>> row(1);
    for (int g = 0; g < ring.num_generators(); ++g) {
        source.shifts.push_back(-1);
        row[0].push_back(gen_poly(ring, g));
    }
    return make_morphism(ring, source, kR0, std::move(row), semantics);
}

// Chevalley-Eilenberg relations as an explicit d2, independent of the
// syzygy engine: columns (f, -e, 1), (h - 2, 0, -e), (0, h + 2, -f).
PolyMatrixMorphism usl2_ce_d2(const RingPresentation& usl2) {
    const Polynomial e = gen_poly(usl2, 0), f = gen_poly(usl2, 1), h = gen_poly(usl2, 2);
    const Polynomial one = Polynomial::term(usl2.unit(), 1);
    std::vector<std::vector<Polynomial>> entries(3, std::vector<Polynomial>(3));
    entries[0][0] = f;
    entries[1][0] = -e;
    entries[2][0] = one;
    entries[0][1] = h - one * rational(2);
    entries[2][1] = -e;
    entries[1][2] = h + one * rational(2);
    entries[2][2] = -f;
    return make_morphism(usl2, ShiftSum{{-2, -2, -2}}, ShiftSum{{-1, -1, -1}}, std::move(entries),
                         Semantics::filtered);
}

}  // namespace

TEST_CASE("make_morphism validates the homogeneity certificate") {
    const auto usl2 = load_example("usl2");
    SUBCASE("the usl2 relations row is a valid strict d1") {
        const auto d1 = generator_row(usl2, Semantics::strict);
        CHECK(d1.rows() == 1);
        CHECK(d1.cols() == 3);
    }
    SUBCASE("identity is strict") {
        const auto id = identity_morphism(usl2, ShiftSum{{0, -2}});
        CHECK(id.semantics == Semantics::strict);
    }
    SUBCASE("a degree-1 entry between equal shifts violates strictness") {
        const auto weyl = load_example("weyl");
        std::vector<std::vector<Polynomial>> entries{{gen_poly(weyl, 0)}};
        CHECK_THROWS_WITH_AS(make_morphism(weyl, kR0, kR0, entries, Semantics::strict),
                             doctest::Contains("degree 1"), ValidationError);
        // the same entry is fine under the filtered certificate? no: bound 0
        CHECK_THROWS_AS(make_morphism(weyl, kR0, kR0, entries, Semantics::filtered), ValidationError);
        // and legal with a shifted source
        CHECK_NOTHROW(make_morphism(weyl, ShiftSum{{-1}}, kR0, entries, Semantics::strict));
    }
    SUBCASE("usl2 CE d2 is filtered but not strict") {
        const auto d2 = usl2_ce_d2(usl2);
        CHECK(satisfies_certificate(d2.source, d2.target, d2.entries, Semantics::filtered));
        CHECK(!satisfies_certificate(d2.source, d2.target, d2.entries, Semantics::strict));
    }
}

TEST_CASE("apply realizes left multiplication by the entry matrix") {
    const auto usl2 = load_example("usl2");
    const auto d1 = generator_row(usl2, Semantics::filtered);
    SUBCASE("basis vectors map to the generators") {
        ModuleElement eps1 = ModuleElement::zero(d1.source);
        eps1.entries[0] = Polynomial::term(usl2.unit(), 1);
        CHECK(apply(usl2, d1, eps1).entries[0] == gen_poly(usl2, 0));
    }
    SUBCASE("zero maps to zero") {
        CHECK(apply(usl2, d1, ModuleElement::zero(d1.source)).is_zero());
    }
    SUBCASE("weyl row (x, y) applied to (y, -x) gives the commutator 1") {
        const auto weyl = load_example("weyl");
        const auto row = generator_row(weyl, Semantics::filtered);
        ModuleElement v = ModuleElement::zero(row.source);
        v.entries[0] = gen_poly(weyl, 1);
        v.entries[1] = -gen_poly(weyl, 0);
        const ModuleElement image = apply(weyl, row, v);
        CHECK(image.entries[0] == Polynomial::term(weyl.unit(), 1));

        // under strict semantics the leading (degree-2) part is kept instead
        const auto strict_row = generator_row(weyl, Semantics::strict);
        CHECK(apply(weyl, strict_row, v).is_zero());
    }
    SUBCASE("strict application rejects inhomogeneous input") {
        const auto weyl = load_example("weyl");
        const auto strict_row = generator_row(weyl, Semantics::strict);
        ModuleElement v = ModuleElement::zero(strict_row.source);
        v.entries[0] = Polynomial::term(weyl.unit(), 1) + gen_poly(weyl, 0);
        CHECK_THROWS_AS(apply(weyl, strict_row, v), Error);
    }
}

TEST_CASE("compose multiplies entry matrices with left coefficients") {
    const auto usl2 = load_example("usl2");
    const auto d1 = generator_row(usl2, Semantics::filtered);
    SUBCASE("f composed with the identity is f") {
        const auto id = identity_morphism(usl2, d1.source);
        const auto c = compose(usl2, d1, id);
        CHECK(c.entries == d1.entries);
    }
    SUBCASE("d1 ∘ d2 vanishes for the Chevalley-Eilenberg relations") {
        const auto composite = compose(usl2, d1, usl2_ce_d2(usl2));
        for (const auto& row : composite.entries)
            for (const auto& e : row) CHECK(e.is_zero());
    }
    SUBCASE("the jordan paper syzygy leaves the residual 1 - y") {
        const auto jordan = load_example("jordan_def");
        const auto d1j = generator_row(jordan, Semantics::filtered);
        Polynomial y_minus_x = gen_poly(jordan, 1) - gen_poly(jordan, 0);
        Polynomial minus_x_minus_1 = -gen_poly(jordan, 0) - Polynomial::term(jordan.unit(), 1);
        const auto s = make_morphism(jordan, ShiftSum{{-2}}, d1j.source,
                                     {{y_minus_x}, {minus_x_minus_1}}, Semantics::filtered);
        const auto composite = compose(jordan, d1j, s);
        const Polynomial expected = Polynomial::term(jordan.unit(), 1) - gen_poly(jordan, 1);
        CHECK(composite.entries[0][0] == expected);
    }
    SUBCASE("shape mismatch is rejected") {
        CHECK_THROWS_AS(compose(usl2, d1, d1), ValidationError);
    }
}

TEST_CASE("component matrices in the deterministic filtered bases") {
    const auto weyl = load_example("weyl");
    const auto row = generator_row(weyl, Semantics::filtered);
    SUBCASE("weyl (x, y) at level 1: columns (0,1,0) and (0,0,1)") {
        const QMatrix m = component_matrix(weyl, row, 1);
        REQUIRE(m.rows() == 3);  // {1, x, y}
        REQUIRE(m.cols() == 2);  // a unit in each R(-1) summand
        CHECK(m(0, 0) == 0);
        CHECK(m(1, 0) == 1);
        CHECK(m(2, 0) == 0);
        CHECK(m(0, 1) == 0);
        CHECK(m(1, 1) == 0);
        CHECK(m(2, 1) == 1);
    }
    SUBCASE("zero morphism gives a zero matrix of the right shape") {
        const auto z = zero_morphism(ShiftSum{{-1, -1}}, kR0, Semantics::filtered);
        const QMatrix m = component_matrix(weyl, z, 2);
        CHECK(m.rows() == filtered_basis(weyl, kR0, 2).dim());
        CHECK(m.cols() == filtered_basis(weyl, ShiftSum{{-1, -1}}, 2).dim());
        CHECK(m.isZero());
    }
    SUBCASE("usl2 d1 has rank 3 at level 1") {
        const auto usl2 = load_example("usl2");
        const auto d1 = generator_row(usl2, Semantics::filtered);
        CHECK(rank_of(component_matrix(usl2, d1, 1)) == 3);
    }
    SUBCASE("strict semantics zeroes the sub-leading blocks") {
        const auto strict_row = generator_row(weyl, Semantics::strict);
        const QMatrix filtered = component_matrix(weyl, row, 2);
        const QMatrix strict = component_matrix(weyl, strict_row, 2);
        CHECK(filtered != strict);
        // the (0, y) column picks up the constant from y*x = x*y + 1 only
        // under the filtered semantics
        const FilteredBasis src = filtered_basis(weyl, row.source, 2);
        const FilteredBasis dst = filtered_basis(weyl, kR0, 2);
        const auto col = src.find(0, weyl.generator_monomial(1));
        const auto unit_row = dst.find(0, weyl.unit());
        REQUIRE(col);
        REQUIRE(unit_row);
        CHECK(filtered(*unit_row, *col) == 1);
        CHECK(strict(*unit_row, *col) == 0);
    }
    SUBCASE("functoriality: component matrices compose, filtered, k <= 4") {
        const auto usl2 = load_example("usl2");
        const auto d1 = generator_row(usl2, Semantics::filtered);
        const auto d2 = usl2_ce_d2(usl2);
        const auto composite = compose(usl2, d1, d2);
        for (int k = 0; k <= 4; ++k) {
            CHECK(component_matrix(usl2, composite, k) ==
                  component_matrix(usl2, d1, k) * component_matrix(usl2, d2, k));
        }
    }
}

TEST_CASE("certificate soundness: filtered never raises the level, strict preserves the degree") {
    const auto usl2 = load_example("usl2");
    const auto d2 = usl2_ce_d2(usl2);
    for (int level = 2; level <= 5; ++level) {
        const auto basis = filtered_basis(usl2, d2.source, level);
        for (Index i = 0; i < basis.dim(); ++i) {
            QVector unit = QVector::Zero(basis.dim());
            unit(i) = 1;
            const ModuleElement v = decode_element(d2.source, basis, unit);
            const auto lvl = element_level(d2.source, v);
            const ModuleElement image = apply(usl2, d2, v);
            const auto image_lvl = element_level(d2.target, image);
            if (image_lvl) CHECK(*image_lvl <= *lvl);
        }
    }
    // strict morphisms send degree-k homogeneous elements to degree-k ones
    const auto d1_strict = generator_row(usl2, Semantics::strict);
    for (int deg = 1; deg <= 4; ++deg) {
        for (const auto& ref : component_basis_shift(usl2, d1_strict.source, deg)) {
            ModuleElement v = ModuleElement::zero(d1_strict.source);
            v.entries[static_cast<size_t>(ref.summand)] = Polynomial::term(ref.mono, 1);
            const ModuleElement image = apply(usl2, d1_strict, v);
            int image_deg = 0;
            CHECK(element_homogeneous(d1_strict.target, image, &image_deg));
            if (!image.is_zero()) CHECK(image_deg == deg);
        }
    }
}

TEST_CASE("leading component maps isolate the strict part of r*m") {
    const auto weyl = load_example("weyl");
    SUBCASE("m = 1 acts as the identity on homogeneous elements") {
        const ModuleElement m{{Polynomial::term(weyl.unit(), 1)}};
        const auto map = leading_component_map(weyl, kR0, m);
        const Polynomial xy = Polynomial::term(weyl.monomial({1, 1}), 1);
        CHECK(phi_bar(weyl, map, xy) == ModuleElement{{xy}});
    }
    SUBCASE("m = x sends y to the leading part of y*x") {
        const ModuleElement m{{gen_poly(weyl, 0)}};
        const auto map = leading_component_map(weyl, kR0, m);
        const ModuleElement image = phi_bar(weyl, map, gen_poly(weyl, 1));
        CHECK(image.entries[0] == Polynomial::term(weyl.monomial({1, 1}), 1));
    }
    SUBCASE("phi_bar(1) = m across rings and degrees <= 4") {
        for (const char* name : {"weyl", "qweyl(2)", "usl2", "jordan_def", "poly2"}) {
            const auto ring = load_example(name);
            const Polynomial one = Polynomial::term(ring.unit(), 1);
            for (int j = 0; j <= 4; ++j) {
                for (const auto& mono : component_basis(ring, j)) {
                    const ModuleElement m{{Polynomial::term(mono, 1)}};
                    const auto map = leading_component_map(ring, kR0, m);
                    CHECK(phi_bar(ring, map, one) == m);
                }
            }
        }
    }
    SUBCASE("finite-module flavor agrees with the shift-sum flavor") {
        const auto q = truncate_cyclic_module(weyl, {}, 5);
        const QVector m_vec = q.class_of(weyl, gen_poly(weyl, 0));
        const auto map = leading_component_map(weyl, q.module, m_vec);
        const QVector image = phi_bar(weyl, map, gen_poly(weyl, 1));
        CHECK(image == q.class_of(weyl, Polynomial::term(weyl.monomial({1, 1}), 1)));
    }
    SUBCASE("zero or inhomogeneous m is rejected") {
        CHECK_THROWS_AS(leading_component_map(weyl, kR0, ModuleElement{{Polynomial()}}), ValidationError);
        const ModuleElement bad{{Polynomial::term(weyl.unit(), 1) + gen_poly(weyl, 0)}};
        CHECK_THROWS_AS(leading_component_map(weyl, kR0, bad), ValidationError);
    }
}

TEST_CASE("the strict-linearity audit is exhaustive and matches a direct oracle") {
    const auto weyl = load_example("weyl");
    SUBCASE("weyl with m = x: the (y, y) witness appears with the expected sides") {
        const ModuleElement m{{gen_poly(weyl, 0)}};
        const auto report = check_strict_linearity(weyl, kR0, m, 4);
        CHECK(!report.pass());
        bool found = false;
        for (const auto& w : report.violations) {
            if (w.ra.exps == std::vector<int>{0, 1} && w.rk.exps == std::vector<int>{0, 1}) {
                found = true;
                CHECK(w.lhs.entries[0] == Polynomial::term(weyl.monomial({1, 2}), 1));
                CHECK(w.rhs.entries[0] ==
                      Polynomial::term(weyl.monomial({1, 2}), 1) + gen_poly(weyl, 1));
                CHECK(w.residual.entries[0] == -gen_poly(weyl, 1));
            }
        }
        CHECK(found);

        // independent oracle: phi(r) = (r*x)_{deg r + 1} computed from raw
        // normal forms; a pair violates iff the report lists it
        long oracle_violations = 0;
        for (int a = 0; a <= 4; ++a) {
            for (int k = 0; a + k <= 4; ++k) {
                for (const auto& ra : component_basis(weyl, a)) {
                    for (const auto& rk : component_basis(weyl, k)) {
                        const Polynomial prod = multiply(weyl, ra, rk);
                        Polynomial lhs;
                        for (const auto& [d, part] : prod.homogeneous_components())
                            lhs += multiply(weyl, part, gen_poly(weyl, 0)).homogeneous_component(d + 1);
                        const Polynomial phik =
                            multiply(weyl, Polynomial::term(rk, 1), gen_poly(weyl, 0)).homogeneous_component(k + 1);
                        const Polynomial rhs = multiply(weyl, Polynomial::term(ra, 1), phik);
                        if (lhs != rhs) ++oracle_violations;
                    }
                }
            }
        }
        CHECK(oracle_violations == static_cast<long>(report.violations.size()));
    }
    SUBCASE("weyl with m = 1 has no violations") {
        const ModuleElement m{{Polynomial::term(weyl.unit(), 1)}};
        CHECK(check_strict_linearity(weyl, kR0, m, 4).pass());
    }
    SUBCASE("poly2 is graded: no violations for any generator") {
        const auto poly2 = load_example("poly2");
        for (int g = 0; g < 2; ++g) {
            const ModuleElement m{{gen_poly(poly2, g)}};
            CHECK(check_strict_linearity(poly2, kR0, m, 4).pass());
        }
    }
}
