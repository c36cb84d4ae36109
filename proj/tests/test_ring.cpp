#include <doctest.h>

#include "sgr/ring.hpp"

using namespace sgr;

namespace {

Polynomial nf(const RingPresentation& ring, std::initializer_list<int> word) {
    return normal_form(ring, Word(word));
}

Polynomial term(const RingPresentation& ring, std::vector<int> exps, long num, long den = 1) {
    return Polynomial::term(ring.monomial(std::move(exps)), rational(num, den));
}

// independent count of monomials of weighted degree k (degree-1 generators):
// multisets of size k from g symbols
long binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    long out = 1;
    for (long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

TEST_CASE("weyl normal forms match the defining relation") {
    const auto weyl = load_example("weyl");
    // y*x -> x*y + 1
    CHECK(nf(weyl, {1, 0}) == term(weyl, {1, 1}, 1) + term(weyl, {0, 0}, 1));
    // already normal
    CHECK(nf(weyl, {0, 1}) == term(weyl, {1, 1}, 1));
    // y*x*x -> x^2*y + 2x   (rewrite by hand: (xy+1)x = x(yx) + x = x(xy+1) + x)
    CHECK(nf(weyl, {1, 0, 0}) == term(weyl, {2, 1}, 1) + term(weyl, {1, 0}, 2));
}

TEST_CASE("usl2 normal forms realize the Lie bracket rules") {
    const auto usl2 = load_example("usl2");
    CHECK(nf(usl2, {1, 0}) == term(usl2, {1, 1, 0}, 1) + term(usl2, {0, 0, 1}, -1));  // fe = ef - h
    CHECK(nf(usl2, {2, 0}) == term(usl2, {1, 0, 1}, 1) + term(usl2, {1, 0, 0}, 2));   // he = eh + 2e
    CHECK(nf(usl2, {2, 1}) == term(usl2, {0, 1, 1}, 1) + term(usl2, {0, 1, 0}, -2));  // hf = fh - 2f
}

TEST_CASE("qweyl instantiates the deformation parameter") {
    const auto q2 = load_example("qweyl(2)");
    CHECK(nf(q2, {1, 0}) == term(q2, {1, 1}, 2) + term(q2, {0, 0}, 1));
    const auto q32 = load_example("qweyl(3/2)");
    CHECK(nf(q32, {1, 0}) == term(q32, {1, 1}, 3, 2) + term(q32, {0, 0}, 1));
    CHECK_THROWS_AS(load_example("qweyl(0)"), Error);
    CHECK_THROWS_AS(load_example("qweyl(1)"), Error);
    CHECK_THROWS_AS(load_example("nope"), Error);
}

TEST_CASE("multiply satisfies unit laws and left/right distribution") {
    const auto weyl = load_example("weyl");
    const Polynomial one = Polynomial::term(weyl.unit(), 1);
    const Polynomial p = nf(weyl, {1, 0, 1});
    CHECK(multiply(weyl, one, p) == p);
    CHECK(multiply(weyl, p, one) == p);
    const Polynomial x = Polynomial::term(weyl.generator_monomial(0), 1);
    const Polynomial y = Polynomial::term(weyl.generator_monomial(1), 1);
    CHECK(multiply(weyl, y, x) == term(weyl, {1, 1}, 1) + term(weyl, {0, 0}, 1));
    CHECK(multiply(weyl, y, x + y) == multiply(weyl, y, x) + multiply(weyl, y, y));
}

TEST_CASE("component bases are canonical and match the counting oracle") {
    const auto weyl = load_example("weyl");
    SUBCASE("degree 0 is the unit") {
        const auto b = component_basis(weyl, 0);
        REQUIRE(b.size() == 1);
        CHECK(b[0].is_unit());
    }
    SUBCASE("degree 2 lists x^2, x*y, y^2 in order") {
        const auto b = component_basis(weyl, 2);
        REQUIRE(b.size() == 3);
        CHECK(b[0].exps == std::vector<int>{2, 0});
        CHECK(b[1].exps == std::vector<int>{1, 1});
        CHECK(b[2].exps == std::vector<int>{0, 2});
    }
    SUBCASE("negative degrees are empty") { CHECK(component_basis(weyl, -1).empty()); }
    SUBCASE("dimensions match C(k + g - 1, g - 1)") {
        for (int k = 0; k <= 8; ++k) {
            CHECK(component_dim(weyl, k) == binomial(k + 1, 1));
        }
        const auto usl2 = load_example("usl2");
        for (int k = 0; k <= 8; ++k) {
            CHECK(component_dim(usl2, k) == binomial(k + 2, 2));
        }
    }
}

TEST_CASE("confluence: corpus passes, the synthetic nonpbw system fails with residual z") {
    for (const char* name : {"weyl", "qweyl(2)", "jordan_def", "poly2"}) {
        const auto ring = load_example(name);
        const auto report = check_confluence(ring, 6);
        CHECK(report.pass);
        CHECK(report.overlaps.empty());  // two generators: no triple overlaps
    }
    SUBCASE("usl2 overlap h*f*e closes (Jacobi)") {
        const auto usl2 = load_example("usl2");
        const auto report = check_confluence(usl2, 6);
        CHECK(report.pass);
        REQUIRE(report.overlaps.size() == 1);
        // both branches reduce to e*f*h - h^2, checked by hand:
        //   (hf)e = (fh-2f)e -> efh - h^2 after expanding fe and he
        //   h(fe) = h(ef-h)  -> efh - h^2
        const Polynomial expected =
            Polynomial::term(usl2.monomial({1, 1, 1}), 1) + Polynomial::term(usl2.monomial({0, 0, 2}), -1);
        CHECK(report.overlaps[0].reduce_left == expected);
        CHECK(report.overlaps[0].reduce_right == expected);
        CHECK(report.overlaps[0].residual.is_zero());
    }
}

TEST_CASE("verify_sg_axioms passes on the corpus up to degree 6") {
    for (const char* name : {"weyl", "poly2", "usl2", "jordan_def"}) {
        const auto ring = load_example(name);
        const auto report = verify_sg_axioms(ring, 6);
        CHECK(report.unit_in_degree_zero);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("verify_sg_axioms reports a witness for a degree-violating rule") {
    // y*x -> x^3 on degree-1 generators breaks R_1 R_1 ⊆ R_{<=2}
    RingPresentation bad;
    bad.name = "bad";
    bad.generators = {{"x", 1}, {"y", 1}};
    RawRule rule{1, 0, {{Word{0, 0, 0}, rational(1)}}};
    install_rules(bad, {rule}, /*enforce_degree_bounds=*/false);
    const auto report = verify_sg_axioms(bad, 4);
    CHECK(!report.pass());
    REQUIRE(!report.violations.empty());
    CHECK(report.violations[0].u.exps == std::vector<int>{0, 1});
    CHECK(report.violations[0].v.exps == std::vector<int>{1, 0});
    CHECK(report.violations[0].product.degree() == 3);
    CHECK(report.violations[0].bound == 2);
}

TEST_CASE("normal form is idempotent on corpus algebras up to degree 6") {
    for (const char* name : {"weyl", "usl2", "jordan_def"}) {
        const auto ring = load_example(name);
        for (int k = 0; k <= 6; ++k) {
            for (const auto& m : component_basis(ring, k)) {
                CHECK(normal_form(ring, word_of(m)) == Polynomial::term(m, 1));
            }
        }
    }
}

TEST_CASE("bounded associativity across the corpus") {
    for (const char* name : {"weyl", "qweyl(2)", "usl2", "jordan_def", "poly2"}) {
        const auto ring = load_example(name);
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; a + b <= 3; ++b) {
                for (int c = 0; a + b + c <= 3; ++c) {
                    for (const auto& u : component_basis(ring, a)) {
                        const Polynomial up = Polynomial::term(u, 1);
                        for (const auto& v : component_basis(ring, b)) {
                            const Polynomial vp = Polynomial::term(v, 1);
                            for (const auto& w : component_basis(ring, c)) {
                                const Polynomial wp = Polynomial::term(w, 1);
                                CHECK(multiply(ring, multiply(ring, up, vp), wp) ==
                                      multiply(ring, up, multiply(ring, vp, wp)));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("weighted generator degrees flow through enumeration and rewriting") {
    RingPresentation ring;
    ring.name = "weighted";
    ring.generators = {{"x", 1}, {"y", 2}};
    // y*x -> x*y + x^2: degree 3 lhs, rhs terms of degree 3 and 2
    Polynomial rhs = Polynomial::term(ring.monomial({1, 1}), 1);
    rhs.add_term(ring.monomial({2, 0}), 1);
    install_rules(ring, {RawRule{1, 0, {{Word{0, 1}, rational(1)}, {Word{0, 0}, rational(1)}}}});
    CHECK(ring.confluent());  // two generators, vacuously

    CHECK(ring.monomial({0, 1}).wdeg == 2);
    CHECK(component_dim(ring, 0) == 1);
    CHECK(component_dim(ring, 1) == 1);  // {x}
    CHECK(component_dim(ring, 2) == 2);  // {x^2, y}
    CHECK(component_dim(ring, 3) == 2);  // {x^3, x*y}
    CHECK(component_dim(ring, 4) == 3);  // {x^4, x^2*y, y^2}
    const auto b4 = component_basis(ring, 4);
    CHECK(b4[0].exps == std::vector<int>{4, 0});
    CHECK(b4[1].exps == std::vector<int>{2, 1});
    CHECK(b4[2].exps == std::vector<int>{0, 2});

    CHECK(normal_form(ring, Word{1, 0}) == rhs);
    CHECK(verify_sg_axioms(ring, 6).pass());

    // rhs degree bound uses weighted degrees: y*x -> y^2 has degree 4 > 3
    RingPresentation bad;
    bad.name = "weighted_bad";
    bad.generators = {{"x", 1}, {"y", 2}};
    CHECK_THROWS_AS(install_rules(bad, {RawRule{1, 0, {{Word{1, 1}, rational(1)}}}}), ValidationError);
}

TEST_CASE("homogeneous components partition and rebuild a polynomial") {
    const auto weyl = load_example("weyl");
    const Polynomial p = nf(weyl, {1, 1, 0, 0}) + term(weyl, {0, 1}, 5, 3) + term(weyl, {0, 0}, -2);
    Polynomial rebuilt;
    for (const auto& [d, part] : p.homogeneous_components()) {
        CHECK(part.is_homogeneous());
        CHECK(part.degree() == d);
        rebuilt += part;
    }
    CHECK(rebuilt == p);
}

TEST_CASE("degree bound: products of homogeneous elements stay under m + n") {
    for (const char* name : {"weyl", "usl2", "jordan_def"}) {
        const auto ring = load_example(name);
        for (int m = 0; m <= 4; ++m) {
            for (int n = 0; m + n <= 4; ++n) {
                for (const auto& u : component_basis(ring, m)) {
                    for (const auto& v : component_basis(ring, n)) {
                        CHECK(multiply(ring, u, v).degree() <= m + n);
                    }
                }
            }
        }
    }
}

TEST_CASE("install_rules rejects malformed presentations") {
    SUBCASE("duplicate generator") {
        RingPresentation r;
        r.name = "dup";
        r.generators = {{"x", 1}, {"x", 1}};
        CHECK_THROWS_AS(install_rules(r, {RawRule{1, 0, {{Word{0, 1}, rational(1)}}}}), ValidationError);
    }
    SUBCASE("missing rule") {
        RingPresentation r;
        r.name = "missing";
        r.generators = {{"x", 1}, {"y", 1}};
        CHECK_THROWS_AS(install_rules(r, {}), ValidationError);
    }
    SUBCASE("rhs degree exceeds lhs degree") {
        RingPresentation r;
        r.name = "toobig";
        r.generators = {{"x", 1}, {"y", 1}};
        CHECK_THROWS_AS(install_rules(r, {RawRule{1, 0, {{Word{0, 0, 0}, rational(1)}}}}), ValidationError);
    }
    SUBCASE("termination order violated by an equal-degree term") {
        RingPresentation r;
        r.name = "noterm";
        r.generators = {{"x", 1}, {"y", 1}};
        // y*x -> y^2 is deglex-above the lhs
        CHECK_THROWS_AS(install_rules(r, {RawRule{1, 0, {{Word{1, 1}, rational(1)}}}}), ValidationError);
    }
    SUBCASE("in-order pair rejected") {
        RingPresentation r;
        r.name = "inorder";
        r.generators = {{"x", 1}, {"y", 1}};
        CHECK_THROWS_AS(install_rules(r, {RawRule{0, 1, {{Word{}, rational(1)}}}}), ValidationError);
    }
}

TEST_CASE("printing uses canonical term order and rational formatting") {
    const auto weyl = load_example("weyl");
    CHECK(poly_to_string(weyl, nf(weyl, {1, 0})) == "x*y + 1");
    CHECK(poly_to_string(weyl, nf(weyl, {1, 0, 0})) == "x^2*y + 2*x");
    CHECK(poly_to_string(weyl, Polynomial()) == "0");
    CHECK(poly_to_string(weyl, term(weyl, {0, 1}, -5, 3) + term(weyl, {1, 0}, 1)) == "x - 5/3*y");
    const auto usl2 = load_example("usl2");
    CHECK(poly_to_string(usl2, nf(usl2, {2, 1})) == "f*h - 2*f");
}
