#include <catch2/catch_amalgamated.hpp>

#include "essalg/essalg.hpp"

using namespace essalg;

namespace {

// nonunital free algebra on x, y and the arrow into the model that inverts
// x - 1, presented on generators x, y, t
struct LocalizationPair {
    NCPresentation source;
    NCPresentation target;
    AlgebraMorphism arrow;
};

LocalizationPair plane_at_x_minus_1() {
    Field Q = Field::rationals();
    NCPresentation source = NCPresentation::parse(Q, {"x", "y"}, {}, false);
    NCPresentation target = NCPresentation::parse(
        Q, {"x", "y", "t"},
        {"x*y - y*x", "x*t - t*x", "y*t - t*y", "t*x - t - 1"}, true);
    AlgebraMorphism arrow = AlgebraMorphism::make(
        source, target, {target.parse_poly("x"), target.parse_poly("y")});
    return {source, target, arrow};
}

LocalizationWitness identity_witness(const CommPresentation& tgt,
                                     const CommPresentation& model) {
    LocalizationWitness w;
    for (std::size_t i = 0; i < tgt.nvars(); ++i)
        w.to_model.push_back(model.parse_poly(tgt.vars[i]));
    for (std::size_t i = 0; i < model.nvars(); ++i)
        w.to_target.push_back(tgt.parse_poly(model.vars[i]));
    return w;
}

}  // namespace

TEST_CASE("the canonical witness certifies the localization arrow", "[localize]") {
    LocalizationPair L = plane_at_x_minus_1();
    StandardizedAlgebra src = standardize(L.source);
    StandardizedAlgebra tgt = standardize(L.target);
    Polynomial f = src.principal.parse_poly("x - 1");
    LocalizationModel model = localization_model(src.principal, f);
    LocalizationWitness w = identity_witness(tgt.principal, model.ring);

    LocalizationVerdict v = verify_essential_localization(L.arrow, f, w);
    REQUIRE(v.certified);
    REQUIRE(v.detail.find("isomorphism onto the canonical model") != std::string::npos);
    REQUIRE((v.morphism.status == MorphismStatus::Verified ||
             v.morphism.status == MorphismStatus::VerifiedUpToDegree));
    REQUIRE(v.model.t_index == 2);
    REQUIRE(v.model.ring.vars == std::vector<std::string>{"x", "y", "t"});
}

TEST_CASE("no witness means no certification", "[localize]") {
    LocalizationPair L = plane_at_x_minus_1();
    Polynomial f = standardize(L.source).principal.parse_poly("x - 1");
    LocalizationVerdict v = verify_essential_localization(L.arrow, f, std::nullopt);
    REQUIRE(!v.certified);
    REQUIRE(v.detail == "cannot certify: no isomorphism witness supplied");
}

TEST_CASE("a witness that breaks a model relation is refused", "[localize]") {
    LocalizationPair L = plane_at_x_minus_1();
    StandardizedAlgebra src = standardize(L.source);
    StandardizedAlgebra tgt = standardize(L.target);
    Polynomial f = src.principal.parse_poly("x - 1");
    LocalizationModel model = localization_model(src.principal, f);
    LocalizationWitness w = identity_witness(tgt.principal, model.ring);
    // sending t to y cannot respect t*(x - 1) = 1
    w.to_target.back() = tgt.principal.parse_poly("y");
    LocalizationVerdict v = verify_essential_localization(L.arrow, f, w);
    REQUIRE(!v.certified);
    REQUIRE(v.detail.find("backward witness") != std::string::npos);
}

TEST_CASE("a broken arrow fails before any witness is read", "[localize]") {
    Field Q = Field::rationals();
    NCPresentation source = NCPresentation::parse(Q, {"x"}, {"x*x"}, true);
    NCPresentation target = NCPresentation::parse(Q, {"x"}, {}, true);
    AlgebraMorphism bad = AlgebraMorphism::make(source, target, {target.parse_poly("x")});
    StandardizedAlgebra src = standardize(source);
    Polynomial f = src.principal.parse_poly("x");
    LocalizationVerdict v = verify_essential_localization(bad, f, std::nullopt);
    REQUIRE(!v.certified);
    REQUIRE(v.detail.find("fails verification") != std::string::npos);
}

TEST_CASE("an element in the wrong ring is an input error", "[localize]") {
    LocalizationPair L = plane_at_x_minus_1();
    Polynomial wrong = Polynomial::variable(5, 0, Field::rationals());
    REQUIRE_THROWS_AS(verify_essential_localization(L.arrow, wrong, std::nullopt),
                      InputError);
}

TEST_CASE("complementary elements cover the line with an exact partition", "[cover]") {
    Field Q = Field::rationals();
    NCPresentation base = NCPresentation::parse(Q, {"x"}, {}, false);
    CommPresentation P = standardize(base).principal;
    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("x"), std::nullopt, std::nullopt});
    charts.push_back({P.parse_poly("x - 1"), std::nullopt, std::nullopt});
    CoverReport r = cover_check(base, charts);
    REQUIRE(r.verified);
    REQUIRE(r.charts.size() == 2);
    REQUIRE(r.charts[0].certified);
    REQUIRE(r.charts[1].certified);
    REQUIRE(r.unity.size() == 2);
    REQUIRE(r.unity[0].str(P.vars) == "1");
    REQUIRE(r.unity[1].str(P.vars) == "-1");
}

TEST_CASE("elements sharing a zero cannot cover", "[cover]") {
    Field Q = Field::rationals();
    NCPresentation base = NCPresentation::parse(Q, {"x"}, {}, false);
    CommPresentation P = standardize(base).principal;
    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("x"), std::nullopt, std::nullopt});
    charts.push_back({P.parse_poly("x^2"), std::nullopt, std::nullopt});
    CoverReport r = cover_check(base, charts);
    REQUIRE(!r.verified);
    REQUIRE(r.unity.empty());
    REQUIRE(r.failure_basis.size() == 1);
    REQUIRE(r.failure_basis[0].str(P.vars) == "x");
    REQUIRE(r.detail.find("1 is not in the ideal") != std::string::npos);
}

TEST_CASE("a unit element covers on its own", "[cover]") {
    Field Q = Field::rationals();
    NCPresentation base = NCPresentation::parse(Q, {"x"}, {}, false);
    CommPresentation P = standardize(base).principal;
    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("1"), std::nullopt, std::nullopt});
    CoverReport r = cover_check(base, charts);
    REQUIRE(r.verified);
    REQUIRE(r.unity.size() == 1);
    REQUIRE(r.unity[0].str(P.vars) == "1");
}

TEST_CASE("an explicit arrow chart certifies through its witness", "[cover]") {
    LocalizationPair L = plane_at_x_minus_1();
    StandardizedAlgebra src = standardize(L.source);
    const CommPresentation& P = src.principal;
    Polynomial f = P.parse_poly("x - 1");
    LocalizationModel model = localization_model(P, f);
    LocalizationWitness w = identity_witness(standardize(L.target).principal, model.ring);

    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("x")});
    charts.push_back({f, L.arrow, w});
    CoverReport r = cover_check(L.source, charts);
    REQUIRE(r.verified);
    REQUIRE(r.charts[1].certified);
    REQUIRE(r.charts[1].detail.find("isomorphism") != std::string::npos);
    REQUIRE(r.unity.size() == 2);

    // an uncertified chart blocks the cover even when the elements partition
    charts[1].witness.reset();
    CoverReport bad = cover_check(L.source, charts);
    REQUIRE(!bad.verified);
    REQUIRE(bad.detail.find("chart") != std::string::npos);
}

TEST_CASE("covers over relations use the quotient, not the free ring", "[cover]") {
    // on the circle, 1 - x and 1 + x miss no point:
    // (1-x) + (1+x) = 2 is already a unit
    Field Q = Field::rationals();
    NCPresentation base =
        NCPresentation::parse(Q, {"x", "y"}, {"x*y - y*x", "x*x + y*y - 1"}, true);
    CommPresentation P = standardize(base).principal;
    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("1 - x")});
    charts.push_back({P.parse_poly("1 + x")});
    CoverReport r = cover_check(base, charts);
    REQUIRE(r.verified);
    Polynomial acc = Polynomial::zero(P.nvars());
    std::vector<Polynomial> elems{P.parse_poly("1 - x"), P.parse_poly("1 + x")};
    for (std::size_t i = 0; i < 2; ++i)
        acc = add(acc, mul(r.unity[i], elems[i], P.ideal.order), P.ideal.order);
    Polynomial residue =
        sub(acc, Polynomial::constant(P.nvars(), Scalar::one(Q)), P.ideal.order);
    REQUIRE(ideal_contains(residue, P.ideal));
}

TEST_CASE("degenerate covers are input errors", "[cover]") {
    Field Q = Field::rationals();
    NCPresentation base = NCPresentation::parse(Q, {"x"}, {}, false);
    REQUIRE_THROWS_AS(cover_check(base, {}), InputError);

    NCPresentation weyl =
        NCPresentation::parse(Q, {"x", "y"}, {"x*y - y*x - 1"}, true);
    CommPresentation P = standardize(base).principal;
    std::vector<CoverChart> charts;
    charts.push_back({P.parse_poly("x"), std::nullopt, std::nullopt});
    REQUIRE_THROWS_AS(cover_check(weyl, charts), InputError);
}
