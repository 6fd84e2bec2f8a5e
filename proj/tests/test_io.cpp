#include <doctest.h>

#include "ballframes/io.hpp"

using namespace ballframes;

TEST_SUITE_BEGIN("io");

TEST_CASE("config parsing applies defaults and validates fields") {
    const ExperimentConfig c = parse_config(
        R"({"n":1,"sigma":3.0,"alpha":0.0,"p":2.0,"epsilon":0.1,"box_radius":1.5,"K":8})");
    CHECK(c.n == 1);
    CHECK(c.atom_is_psi);
    CHECK(c.seed == 1);

    // strict inequality alpha < p(sigma-n)-1
    CHECK_THROWS_AS(parse_config(R"({"n":1,"sigma":3.0,"alpha":3.0,"p":2.0})"), ConfigError);
    // sigma = n is out
    CHECK_THROWS_AS(parse_config(R"({"n":2,"sigma":2.0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"n":1,"epsilon":0.0})"), ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"atom":"gaussian"})"), ConfigError);
}

TEST_CASE("polynomial atom configs parse into terms") {
    const ExperimentConfig c = parse_config(
        R"({"n":1,"sigma":3.0,"alpha":0.0,"p":2.0,
            "atom":{"terms":[{"gamma":[1],"coef":[1.0,0.0]}]}})");
    CHECK_FALSE(c.atom_is_psi);
    REQUIRE(c.atom_terms.size() == 1);
    CHECK(c.atom_terms[0].gamma == MultiIndex{1});
}

TEST_CASE("function files round-trip") {
    HoloFunction f(2);
    f.add_monomial({1, 0}, Complex(0.5, -0.25));
    f.add_monomial({0, 3}, Complex(1.0 / 3.0, 0.0));
    const std::string text = function_to_json(f);
    const HoloFunction g = parse_function(text);
    CHECK(function_to_json(g) == text);
    CVector z(2);
    z[0] = Complex(0.3, 0.1);
    z[1] = Complex(-0.2, 0.4);
    CHECK(std::abs(f.eval(z) - g.eval(z)) == 0.0);
}

TEST_CASE("family serialization is deterministic and re-loadable") {
    const PointFamily fam = generate_lattice(0.3, 1.0, 1);
    const std::string a = family_to_json(fam);
    const std::string b = family_to_json(generate_lattice(0.3, 1.0, 1));
    CHECK(a == b); // bit-identical across runs

    const PointFamily back = family_from_json(a);
    CHECK(back.size() == fam.size());
    CHECK(family_to_json(back) == a);
}

TEST_CASE("seventeen-digit floats survive the round trip") {
    const double v = 0.1234567890123456789;
    const double parsed = std::stod(fmt17(v));
    CHECK(parsed == v);
    CHECK(fmt17(1.0) == "1");
}

TEST_CASE("verification battery passes on the default configuration") {
    ExperimentConfig c;
    c.n = 1;
    c.sigma = 3.0;
    c.alpha = 0.0;
    c.p = 2.0;
    c.epsilon = 0.15;
    c.box_radius = 1.0;
    c.K = 5;
    c.seed = 9;
    const VerifyReport rep = run_verification(c);
    for (const auto& item : rep.items) {
        INFO(item.name, " residual=", item.residual, " tol=", item.tolerance);
        CHECK(item.pass);
    }
    CHECK(rep.all_pass());
    const std::string js = verify_report_to_json(rep);
    CHECK(js.find("\"all_pass\":true") != std::string::npos);
}

TEST_SUITE_END();
