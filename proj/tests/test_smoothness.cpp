#include <catch2/catch_amalgamated.hpp>

#include "essalg/essalg.hpp"

using namespace essalg;

namespace {

CommPresentation qring(const std::vector<std::string>& vars,
                       const std::vector<std::string>& rels) {
    return CommPresentation::parse(Field::rationals(), vars, rels);
}

}  // namespace

TEST_CASE("the Jacobian matrix holds the partial derivatives", "[jacobian]") {
    CommPresentation A = qring({"x", "y"}, {"y - x^2"});
    KahlerPresentation K = kahler_presentation(A);
    REQUIRE(K.jacobian.size() == 1);
    REQUIRE(K.jacobian[0].size() == 2);
    REQUIRE(K.jacobian[0][0] == A.parse_poly("-2*x"));
    REQUIRE(K.jacobian[0][1] == A.parse_poly("1"));
}

TEST_CASE("polynomial determinants expand by minors", "[jacobian]") {
    CommPresentation A = qring({"x", "y"}, {});
    std::vector<std::vector<Polynomial>> M{
        {A.parse_poly("x"), A.parse_poly("y")},
        {A.parse_poly("1"), A.parse_poly("x")}};
    REQUIRE(detail::poly_det(M, {0, 1}, {0, 1}, 2, A.ideal.order) ==
            A.parse_poly("x^2 - y"));
}

TEST_CASE("hypersurfaces with disjoint gradient locus are smooth", "[jacobian]") {
    CommPresentation circle = qring({"x", "y"}, {"x^2 + y^2 - 1"});
    SmoothResult r = jacobian_smooth(circle);
    REQUIRE(r.smooth);
    REQUIRE(r.dim == 1);
    REQUIRE(r.minor_size == 1);
    REQUIRE(r.note.find("rationals") != std::string::npos);

    CommPresentation sphere =
        qring({"x1", "x2", "x3", "x4"}, {"x1^2 + x2^2 + x3^2 + x4^2 - 1"});
    REQUIRE(jacobian_smooth(sphere).smooth);
}

TEST_CASE("free rings are smooth with an empty certificate", "[jacobian]") {
    CommPresentation A = qring({"x", "y", "z"}, {});
    SmoothResult r = jacobian_smooth(A);
    REQUIRE(r.smooth);
    REQUIRE(r.dim == 3);
    REQUIRE(r.minor_size == 0);
}

TEST_CASE("the cusp is singular with a small witness basis", "[jacobian]") {
    CommPresentation cusp = qring({"x", "y"}, {"y^2 - x^3"});
    SmoothResult r = jacobian_smooth(cusp);
    REQUIRE(!r.smooth);
    std::vector<std::string> got;
    for (const auto& w : r.witness) got.push_back(w.str(cusp.vars));
    REQUIRE(got == std::vector<std::string>{"y", "x^2"});
}

TEST_CASE("fat points are singular, reduced points are smooth", "[jacobian]") {
    CommPresentation fat = qring({"x"}, {"x^2"});
    REQUIRE(!jacobian_smooth(fat).smooth);

    CommPresentation pair = qring({"x"}, {"x^2 - 1"});
    SmoothResult r = jacobian_smooth(pair);
    REQUIRE(r.smooth);
    REQUIRE(r.dim == 0);

    REQUIRE_THROWS_AS(jacobian_smooth(qring({"x"}, {"x", "x - 1"})), InputError);
}

TEST_CASE("finite reduced schemes are unramified, positive-dimensional ones are not",
          "[unramified]") {
    CommPresentation pair = qring({"x"}, {"x^2 - 1"});
    UnramifiedResult u = unramified_check(pair);
    REQUIRE(u.unramified);
    REQUIRE(u.minor_size == 1);

    REQUIRE(!unramified_check(qring({"x"}, {})).unramified);
    REQUIRE(!unramified_check(qring({"x"}, {"x^2"})).unramified);
    REQUIRE_THROWS_AS(unramified_check(qring({"x"}, {"x", "x - 1"})), InputError);
}

TEST_CASE("free algebras are essentially smooth in both regimes", "[essential]") {
    Field Q = Field::rationals();
    for (bool unital : {false, true}) {
        NCPresentation A = NCPresentation::parse(Q, {"x", "y"}, {}, unital);
        EssentialVerdict v = essential_check(A, EssMode::Smooth);
        REQUIRE(v.passed);
        REQUIRE(!v.collapsed);
        REQUIRE(v.smooth.has_value());
        REQUIRE(v.smooth->smooth);
    }
}

TEST_CASE("the mode selects which criteria run", "[essential]") {
    Field Q = Field::rationals();
    NCPresentation A = NCPresentation::parse(Q, {"x"}, {"x*x - 1"}, true);

    EssentialVerdict s = essential_check(A, EssMode::Smooth);
    REQUIRE(s.passed);
    REQUIRE(!s.unramified.has_value());

    EssentialVerdict u = essential_check(A, EssMode::Unramified);
    REQUIRE(u.passed);
    REQUIRE(!u.smooth.has_value());

    EssentialVerdict e = essential_check(A, EssMode::Etale);
    REQUIRE(e.passed);
    REQUIRE(e.smooth.has_value());
    REQUIRE(e.unramified.has_value());
}

TEST_CASE("an affine line is smooth but not etale", "[essential]") {
    Field Q = Field::rationals();
    NCPresentation A = NCPresentation::parse(Q, {"x"}, {}, true);
    REQUIRE(essential_check(A, EssMode::Smooth).passed);
    REQUIRE(!essential_check(A, EssMode::Unramified).passed);
    REQUIRE(!essential_check(A, EssMode::Etale).passed);
}

TEST_CASE("a collapsed standardization passes vacuously with a note", "[essential]") {
    Field Q = Field::rationals();
    NCPresentation weyl = NCPresentation::parse(Q, {"x", "y"}, {"x*y - y*x - 1"}, true);
    EssentialVerdict v = essential_check(weyl, EssMode::Smooth);
    REQUIRE(v.collapsed);
    REQUIRE(v.passed);
    bool found = false;
    for (const auto& n : v.notes) found = found || n.find("vacuous") != std::string::npos;
    REQUIRE(found);
}

TEST_CASE("unital inputs note the scalar factor of the product model", "[essential]") {
    Field Q = Field::rationals();
    NCPresentation A = NCPresentation::parse(Q, {"x"}, {}, true);
    EssentialVerdict v = essential_check(A, EssMode::Smooth);
    bool found = false;
    for (const auto& n : v.notes)
        found = found || n.find("ground-field factor") != std::string::npos;
    REQUIRE(found);
}

TEST_CASE("a surjection with square-zero kernel fails smoothness", "[surjection]") {
    Field Q = Field::rationals();
    NCPresentation src = NCPresentation::parse(Q, {"x"}, {}, true);
    NCPresentation tgt = NCPresentation::parse(Q, {"x"}, {"x*x"}, true);
    SurjectionVerdict v = essential_surjection_check(src, tgt, EssMode::Smooth);
    REQUIRE(v.supported);
    REQUIRE(!v.passed);
    REQUIRE(v.failing_index == 1);
    REQUIRE(!v.kernel_gens.empty());
}

TEST_CASE("a surjection with idempotent kernel is formally smooth", "[surjection]") {
    // the kernel (x) modulo (x^2 - x) satisfies K = K^2
    Field Q = Field::rationals();
    NCPresentation src = NCPresentation::parse(Q, {"x"}, {"x*x - x"}, true);
    NCPresentation tgt = NCPresentation::parse(Q, {"x"}, {"x*x - x", "x"}, true);
    SurjectionVerdict v = essential_surjection_check(src, tgt, EssMode::Smooth);
    REQUIRE(v.supported);
    REQUIRE(v.passed);
}

TEST_CASE("every supported surjection is formally unramified", "[surjection]") {
    Field Q = Field::rationals();
    NCPresentation src = NCPresentation::parse(Q, {"x"}, {}, true);
    NCPresentation tgt = NCPresentation::parse(Q, {"x"}, {"x*x"}, true);
    SurjectionVerdict v = essential_surjection_check(src, tgt, EssMode::Unramified);
    REQUIRE(v.supported);
    REQUIRE(v.passed);
}

TEST_CASE("mismatched generator lists are unsupported", "[surjection]") {
    Field Q = Field::rationals();
    NCPresentation src = NCPresentation::parse(Q, {"x"}, {}, true);
    NCPresentation tgt = NCPresentation::parse(Q, {"u"}, {"u*u"}, true);
    SurjectionVerdict v = essential_surjection_check(src, tgt, EssMode::Smooth);
    REQUIRE(!v.supported);
    REQUIRE(!v.notes.empty());
}
