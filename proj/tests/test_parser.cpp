#include <doctest.h>

#include "sgr/parser.hpp"

using namespace sgr;

namespace {

const char* kWeylSource =
    "ring weyl\n"
    "gen x degree 1\n"
    "gen y degree 1\n"
    "rule y*x -> x*y + 1\n";

}

TEST_CASE("a parsed presentation matches the built-in example") {
    const auto parsed = parse_presentation(kWeylSource);
    const auto builtin = load_example("weyl");
    CHECK(parsed.name == "weyl");
    REQUIRE(parsed.generators.size() == 2);
    CHECK(parsed.generators[0].name == "x");
    CHECK(parsed.generators[1].name == "y");
    REQUIRE(parsed.rules.size() == 1);
    CHECK(parsed.rules[0].rhs == builtin.rules[0].rhs);
    CHECK(parsed.confluent());
}

TEST_CASE("the scalar ring parses from a bare ring statement") {
    const auto scalar = parse_presentation("ring scalar\n");
    CHECK(scalar.num_generators() == 0);
    const auto basis = component_basis(scalar, 0);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].is_unit());
    CHECK(component_basis(scalar, 1).empty());
    CHECK(normal_form(scalar, Word{}) == Polynomial::term(scalar.unit(), 1));
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_presentation("ring w\ngen x degree !\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col >= 14);
    }
    CHECK_THROWS_AS(parse_presentation("ring w\ngen x degree 1\nrule x*z -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gen x degree 1\n"), ParseError);  // no ring statement
}

TEST_CASE("validation failures: duplicates, missing rules, degree bound") {
    CHECK_THROWS_AS(parse_presentation("ring w\ngen x degree 1\ngen x degree 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_presentation("ring w\ngen x degree 1\ngen y degree 1\n"), ValidationError);
    // rhs degree 3 exceeds the lhs degree 2
    CHECK_THROWS_AS(parse_presentation("ring w\ngen x degree 1\ngen y degree 1\nrule y*x -> x^3\n"), ValidationError);
    // in-order pair
    CHECK_THROWS_AS(parse_presentation("ring w\ngen x degree 1\ngen y degree 1\nrule x*y -> x*y\n"), ValidationError);
}

TEST_CASE("polynomial expression grammar") {
    const auto weyl = load_example("weyl");
    const Polynomial x = Polynomial::term(weyl.generator_monomial(0), 1);
    const Polynomial y = Polynomial::term(weyl.generator_monomial(1), 1);
    const Polynomial one = Polynomial::term(weyl.unit(), 1);

    CHECK(parse_polynomial(weyl, "y*x") == multiply(weyl, y, x));
    CHECK(parse_polynomial(weyl, " y * x ") == multiply(weyl, y, x));
    CHECK(parse_polynomial(weyl, "2/3*x*y - (x + 1)^2") ==
          multiply(weyl, x, y) * rational(2, 3) - (multiply(weyl, x, x) + x * rational(2) + one));
    CHECK(parse_polynomial(weyl, "-x + y") == y - x);
    CHECK(parse_polynomial(weyl, "x*(-y)") == -multiply(weyl, x, y));
    CHECK(parse_polynomial(weyl, "5/3") == one * rational(5, 3));
    CHECK(parse_polynomial(weyl, "x^3") == multiply(weyl, x, multiply(weyl, x, x)));

    CHECK_THROWS_AS(parse_polynomial(weyl, "x^0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(weyl, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(weyl, "z + 1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(weyl, "x +"), ParseError);
}

TEST_CASE("shift sum literals round-trip") {
    const ShiftSum sum = parse_shift_sum("R(0) + R(-1)^2 + R(-3)");
    CHECK(sum.shifts == std::vector<int>{0, -1, -1, -3});
    CHECK(shift_sum_to_string(sum) == "R(0) + R(-1)^2 + R(-3)");
    CHECK(parse_shift_sum("0").shifts.empty());
    CHECK(shift_sum_to_string(ShiftSum{}) == "0");
    CHECK_THROWS_AS(parse_shift_sum("R(1) + Q(2)"), ParseError);
}

TEST_CASE("certificate files parse with normalized entries") {
    const std::string text = std::string(kWeylSource) +
                             "map d1 : R(-1)^2 -> R(0) = [ x, y ]\n"
                             "map d2 : R(-3) -> R(-1)^2 = [ y*x,\n"
                             "                              -x^2 ]\n"
                             "augment x, y\n";
    const CertificateFile file = parse_certificate_file(text);
    CHECK(file.ring.name == "weyl");
    REQUIRE(file.maps.size() == 2);
    CHECK(file.maps[0].source.shifts == std::vector<int>{-1, -1});
    CHECK(file.maps[0].target.shifts == std::vector<int>{0});
    REQUIRE(file.maps[1].entries.size() == 2);
    // y*x is not normal; the parser normalizes it
    const Polynomial expected = multiply(file.ring, Polynomial::term(file.ring.generator_monomial(1), 1),
                                         Polynomial::term(file.ring.generator_monomial(0), 1));
    CHECK(file.maps[1].entries[0][0] == expected);
    REQUIRE(file.augment_gens.size() == 2);

    CHECK_THROWS_AS(parse_certificate_file(std::string(kWeylSource) + "map d1 : R(-1)^2 -> R(0) = [ x ]\n"),
                    ParseError);
}

TEST_CASE("baer problem files parse in both module forms") {
    const std::string truncated = std::string(kWeylSource) +
                                  "ideal y\n"
                                  "module truncate R/{} to 6\n"
                                  "values y\n";
    const BaerProblemFile p = parse_baer_problem(truncated);
    CHECK(p.ideal_gens.size() == 1);
    CHECK(p.module.truncate);
    CHECK(p.module.D == 6);
    CHECK(p.module.quotient_gens.empty());
    REQUIRE(p.values.size() == 1);
    CHECK(std::holds_alternative<Polynomial>(p.values[0]));

    const std::string explicit_mod = std::string(kWeylSource) +
                                     "ideal y\n"
                                     "module dims 1 1\n"
                                     "action x 0 = [ 0 ; 1 ]\n"
                                     "action x 1 = [ 0 ; 0 ]\n"
                                     "action y 0 = [ 0 ; 0 ]\n"
                                     "action y 1 = [ 0 ; 0 ]\n"
                                     "values [ 1 ]\n";
    const BaerProblemFile q = parse_baer_problem(explicit_mod);
    CHECK(!q.module.truncate);
    CHECK(q.module.dims == std::vector<long>{1, 1});
    CHECK(q.module.actions.size() == 4);
    CHECK(q.module.actions[0].matrix.rows() == 2);
    REQUIRE(q.values.size() == 1);
    CHECK(std::holds_alternative<QVector>(q.values[0]));

    CHECK_THROWS_AS(parse_baer_problem(std::string(kWeylSource) + "ideal y\n"), ParseError);
}
