#include <catch2/catch_amalgamated.hpp>

#include "essalg/essalg.hpp"

using namespace essalg;

namespace {

CommPresentation plane() {
    return CommPresentation::parse(Field::rationals(), {"x", "y"}, {});
}

}  // namespace

TEST_CASE("regular elements are those with trivial colon", "[regular]") {
    CommPresentation A = plane();
    RegularElementCheck ok = is_regular_element(A, A.parse_poly("x"));
    REQUIRE(ok.regular);

    // x is a zero divisor modulo x*y
    CommPresentation B = CommPresentation::parse(Field::rationals(), {"x", "y"}, {"x*y"});
    RegularElementCheck zd = is_regular_element(B, B.parse_poly("x"));
    REQUIRE(!zd.regular);
    REQUIRE(zd.reason.find("colon") != std::string::npos);

    RegularElementCheck zero = is_regular_element(B, B.parse_poly("x*y"));
    REQUIRE(!zero.regular);
    REQUIRE(zero.reason == "the element is zero in the quotient");
}

TEST_CASE("coordinate sequences are regular with a replayable certificate", "[regular]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("y")};
    SequenceCheck c = is_regular_sequence(A, seq);
    REQUIRE(c.regular);
    REQUIRE(c.cert.steps.size() == 2);
    REQUIRE(c.cert.quotient_nonzero);
    REQUIRE(c.cert.consistent());
}

TEST_CASE("a repeated element fails at the right index", "[regular]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("x")};
    SequenceCheck c = is_regular_sequence(A, seq);
    REQUIRE(!c.regular);
    REQUIRE(c.failing_index == 2);
}

TEST_CASE("a sequence that empties the ring is rejected", "[regular]") {
    // x and x - 1 are each regular but their quotient is the zero ring
    CommPresentation A = CommPresentation::parse(Field::rationals(), {"x"}, {});
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("x - 1")};
    SequenceCheck c = is_regular_sequence(A, seq);
    REQUIRE(!c.regular);
    REQUIRE(c.failing_index == 2);
    REQUIRE(c.reason == "the final quotient is the zero ring");
    REQUIRE_THROWS_AS(is_regular_sequence(A, {}), InputError);
}

TEST_CASE("shifted and curved sequences work too", "[regular]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("y - x^2"), A.parse_poly("x - 1")};
    SequenceCheck c = is_regular_sequence(A, seq);
    REQUIRE(c.regular);
}

TEST_CASE("tampered certificates are rejected on replay", "[certificate]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("y")};
    SequenceCheck c = is_regular_sequence(A, seq);
    RegularSequenceCertificate bad = c.cert;
    bad.sequence.pop_back();
    REQUIRE(!bad.consistent());
    REQUIRE_THROWS_AS(tor_via_koszul(bad, 2), InputError);

    RegularSequenceCertificate junk = c.cert;
    junk.quotient_nonzero = false;
    REQUIRE(!junk.consistent());
}

TEST_CASE("the Koszul differential squares to zero", "[koszul]") {
    CommPresentation A = CommPresentation::parse(Field::rationals(), {"x", "y", "z"}, {});
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("y"), A.parse_poly("z")};
    KoszulComplex K = koszul_complex(A, seq);
    REQUIRE(K.length() == 3);
    REQUIRE(K.rank(0) == 1);
    REQUIRE(K.rank(1) == 3);
    REQUIRE(K.rank(2) == 3);
    REQUIRE(K.rank(3) == 1);
    for (std::size_t j = 2; j <= 3; ++j) {
        const auto& Dj = K.diff[j - 1];
        const auto& Dp = K.diff[j - 2];
        for (std::size_t r = 0; r < K.rank(j - 2); ++r)
            for (std::size_t c = 0; c < K.rank(j); ++c) {
                Polynomial acc = Polynomial::zero(3);
                for (std::size_t m = 0; m < K.rank(j - 1); ++m)
                    acc = add(acc, mul(Dp[r][m], Dj[m][c], A.ideal.order), A.ideal.order);
                REQUIRE(normal_form(acc, A.ideal).is_zero());
            }
    }
}

TEST_CASE("index subsets come out in lexicographic order", "[koszul]") {
    auto s = detail::subsets_lex(3, 2);
    REQUIRE(s == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(detail::subsets_lex(4, 0) == std::vector<std::vector<std::size_t>>{{}});
}

TEST_CASE("Tor of a length-two sequence has the square profile", "[koszul]") {
    CommPresentation A = plane();
    SequenceCheck c = is_regular_sequence(A, {A.parse_poly("x"), A.parse_poly("y")});
    TorProfile t = tor_via_koszul(c.cert, 3);
    REQUIRE(t.dims == std::vector<std::size_t>{1, 2, 1, 0});
}

TEST_CASE("Tor of a single regular element truncates immediately", "[koszul]") {
    CommPresentation A = CommPresentation::parse(Field::rationals(), {"x"}, {});
    SequenceCheck c = is_regular_sequence(A, {A.parse_poly("x")});
    TorProfile t = tor_via_koszul(c.cert, 2);
    REQUIRE(t.dims == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("Tor of the full coordinate cube", "[koszul]") {
    CommPresentation A =
        CommPresentation::parse(Field::rationals(), {"x", "y", "z", "w"}, {});
    std::vector<Polynomial> seq;
    for (const char* v : {"x", "y", "z", "w"}) seq.push_back(A.parse_poly(v));
    SequenceCheck c = is_regular_sequence(A, seq);
    TorProfile t = tor_via_koszul(c.cert, 5);
    REQUIRE(t.dims == std::vector<std::size_t>{1, 4, 6, 4, 1, 0});
}

TEST_CASE("the flat dimension ledger certifies length and vanishing", "[ledger]") {
    CommPresentation A = plane();
    FlatDimensionLedger L = fd_ledger(A, {A.parse_poly("x"), A.parse_poly("y")});
    REQUIRE(L.flat_dimension == 2);
    REQUIRE(L.koszul_confirmed);
    REQUIRE(L.tor_dims == std::vector<std::size_t>{1, 2, 1, 0});

    REQUIRE_THROWS_AS(fd_ledger(A, {A.parse_poly("x"), A.parse_poly("x")}), InputError);
}

TEST_CASE("a supplied regular sequence settles the verdict", "[degeneracy]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("y")};
    DegeneracyVerdict v = degeneracy_verdict(A, seq);
    REQUIRE(v.not_quasi_free);
    REQUIRE(v.route == "sequence");
    REQUIRE(v.ledger.has_value());
    REQUIRE(v.ledger->flat_dimension == 2);
    REQUIRE(v.provenance.size() == 2);
}

TEST_CASE("a failing sequence falls through to the smooth route", "[degeneracy]") {
    CommPresentation A = plane();
    std::vector<Polynomial> seq{A.parse_poly("x"), A.parse_poly("x")};
    DegeneracyVerdict v = degeneracy_verdict(A, seq);
    // the plane is regular of dimension two, so the fallback still decides
    REQUIRE(v.not_quasi_free);
    REQUIRE(v.route == "regular-ring");
    REQUIRE(v.report.find("sequence branch") != std::string::npos);
}

TEST_CASE("smooth surfaces need no sequence at all", "[degeneracy]") {
    CommPresentation sphere = CommPresentation::parse(
        Field::rationals(), {"x1", "x2", "x3", "x4"}, {"x1^2 + x2^2 + x3^2 + x4^2 - 1"});
    DegeneracyVerdict v = degeneracy_verdict(sphere);
    REQUIRE(v.not_quasi_free);
    REQUIRE(v.route == "regular-ring");
    REQUIRE(v.krull.dim == 3);
    REQUIRE(v.smooth.has_value());
    REQUIRE(v.smooth->smooth);
}

TEST_CASE("curves and singular rings stay inconclusive", "[degeneracy]") {
    CommPresentation line = CommPresentation::parse(Field::rationals(), {"x"}, {});
    DegeneracyVerdict v = degeneracy_verdict(line);
    REQUIRE(!v.not_quasi_free);
    REQUIRE(v.route.empty());
    REQUIRE(v.report.find("below the threshold") != std::string::npos);

    CommPresentation cusp =
        CommPresentation::parse(Field::rationals(), {"x", "y"}, {"y^2 - x^3"});
    DegeneracyVerdict w = degeneracy_verdict(cusp);
    REQUIRE(!w.not_quasi_free);
    REQUIRE(w.report.find("singular") != std::string::npos);
}

TEST_CASE("a length-one sequence is below the threshold", "[degeneracy]") {
    CommPresentation A = CommPresentation::parse(Field::rationals(), {"x"}, {});
    DegeneracyVerdict v = degeneracy_verdict(A, {{A.parse_poly("x")}});
    REQUIRE(!v.not_quasi_free);
    REQUIRE(v.report.find("length 1") != std::string::npos);
}

TEST_CASE("the zero ring has no verdict", "[degeneracy]") {
    CommPresentation zero =
        CommPresentation::parse(Field::rationals(), {"x"}, {"x", "x - 1"});
    REQUIRE_THROWS_AS(degeneracy_verdict(zero), InputError);
}
