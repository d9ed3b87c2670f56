#include <catch2/catch_amalgamated.hpp>

#include "essalg/essalg.hpp"

using namespace essalg;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("bracket tables are completed antisymmetrically and validated", "[lie]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    REQUIRE(g.dim() == 3);
    // [e,f] = h was given one-sided; [f,e] = -h must appear
    REQUIRE(g.bracket[0][2][1].str() == "-1");
    REQUIRE(g.bracket[1][2][2].str() == "2");

    // [x,x] != 0 violates antisymmetry
    REQUIRE_THROWS_AS(
        LieAlgebra::make(Q, {"x", "y"}, {{0, 0, 1, Scalar::one(Q)}}), InputError);
    REQUIRE_THROWS_AS(
        LieAlgebra::make(Q, {"x"}, {{0, 0, 5, Scalar::one(Q)}}), InputError);
}

TEST_CASE("the Jacobi identity is enforced", "[lie]") {
    Field Q = Field::rationals();
    // [x,y] = z, [y,z] = x, [z,x] = x fails Jacobi on (x,y,z)
    std::vector<BracketEntry> bad = {{0, 1, 2, Scalar::one(Q)},
                                     {1, 2, 0, Scalar::one(Q)},
                                     {2, 0, 0, Scalar::one(Q)}};
    REQUIRE_THROWS_AS(LieAlgebra::make(Q, {"x", "y", "z"}, bad), InputError);

    // the cross-product algebra satisfies it
    std::vector<BracketEntry> so3 = {{0, 1, 2, Scalar::one(Q)},
                                     {1, 2, 0, Scalar::one(Q)},
                                     {2, 0, 1, Scalar::one(Q)}};
    REQUIRE_NOTHROW(LieAlgebra::make(Q, {"x", "y", "z"}, so3));
}

TEST_CASE("module actions must represent the bracket", "[lie]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    REQUIRE_NOTHROW(LieModule::adjoint(g));
    REQUIRE_NOTHROW(LieModule::trivial(g));

    // the identity in every slot is not a representation of sl2
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix m(2, 2, Q);
        m.at(0, 0) = Scalar::one(Q);
        m.at(1, 1) = Scalar::one(Q);
        rho.push_back(m);
    }
    REQUIRE_THROWS_AS(LieModule::make(g, 2, rho), InputError);
}

TEST_CASE("the enveloping presentation straightens high against low", "[envelope]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    NCPresentation U = universal_envelope(g);
    REQUIRE(U.gens == std::vector<std::string>{"f", "h", "e"});
    REQUIRE(U.unital);
    REQUIRE(U.relations.size() == 3);
    RewriteSystem R = complete_bounded(U, 6);
    // e*f - f*e = h inside U(sl2)
    NCPolynomial comm = nc_sub(nc_mul(U.parse_poly("e"), U.parse_poly("f")),
                               nc_mul(U.parse_poly("f"), U.parse_poly("e")));
    REQUIRE(nc_reduce(comm, R) == U.parse_poly("h"));
}

TEST_CASE("straightening matches the rewriting normal form on sl2", "[envelope]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    NCPresentation U = universal_envelope(g);
    RewriteSystem R = complete_bounded(U, 6);
    REQUIRE(R.fully_confluent);
    for (const std::string& w : {"e*f", "e*h", "h*f", "e*e*f", "e*h*f", "e*f*h", "h*h*e"}) {
        NCPolynomial p = U.parse_poly(w);
        REQUIRE(pbw_normal_form(p, g) == nc_reduce(p, R));
    }
}

TEST_CASE("ordered monomials are already straight", "[envelope]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    NCPresentation U = universal_envelope(g);
    NCPolynomial p = U.parse_poly("f*h*e");
    REQUIRE(pbw_normal_form(p, g) == p);
}

TEST_CASE("cochain spaces have binomial dimensions and d squares to zero", "[cohomology]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    CochainComplex C = chevalley_eilenberg(g, LieModule::trivial(g), 3);
    REQUIRE(C.dims == std::vector<std::size_t>{1, 3, 3, 1});
    REQUIRE_NOTHROW(C.check_composition());

    CochainComplex D = chevalley_eilenberg(g, LieModule::adjoint(g), 3);
    REQUIRE(D.dims == std::vector<std::size_t>{3, 9, 9, 3});
    REQUIRE_NOTHROW(D.check_composition());

    REQUIRE_THROWS_AS(chevalley_eilenberg(g, LieModule::trivial(g), 4), InputError);
}

TEST_CASE("sl2 has one-dimensional cohomology exactly in degrees 0 and 3", "[cohomology]") {
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    auto dims = chevalley_eilenberg_dims(g, LieModule::trivial(g), 3);
    REQUIRE(dims == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("adjoint cohomology of sl2 vanishes", "[cohomology]") {
    // semisimplicity kills all Whitehead groups and H^0 = center = 0
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    auto dims = chevalley_eilenberg_dims(g, LieModule::adjoint(g), 3);
    REQUIRE(dims == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("abelian cohomology is the full exterior algebra", "[cohomology]") {
    Field Q = Field::rationals();
    for (std::size_t d = 1; d <= 4; ++d) {
        LieAlgebra g = LieAlgebra::abelian(Q, d);
        auto dims = chevalley_eilenberg_dims(g, LieModule::trivial(g), d);
        REQUIRE(dims.size() == d + 1);
        for (std::size_t n = 0; n <= d; ++n) REQUIRE(dims[n] == binom(d, n));
    }
}

TEST_CASE("abelian cohomology agrees with the Koszul resolution of the point", "[cohomology]") {
    // U(g) for abelian g is a polynomial ring; Ext over it against the
    // residue field has the same binomial ranks as the Lie cochain groups
    Field Q = Field::rationals();
    const std::size_t d = 3;
    LieAlgebra g = LieAlgebra::abelian(Q, d);
    auto lie_dims = chevalley_eilenberg_dims(g, LieModule::trivial(g), d);

    CommPresentation A = CommPresentation::parse(Q, {"x1", "x2", "x3"}, {});
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < d; ++i) coords.push_back(Polynomial::variable(d, i, Q));
    SequenceCheck sc = is_regular_sequence(A, coords);
    REQUIRE(sc.regular);
    TorProfile tor = tor_via_koszul(sc.cert, d);
    for (std::size_t n = 0; n <= d; ++n) REQUIRE(lie_dims[n] == tor.dims[n]);
}

TEST_CASE("a nonzero degree-two group rules out quasi-freeness", "[verdict]") {
    Field Q = Field::rationals();
    LieAlgebra ab2 = LieAlgebra::abelian(Q, 2);
    LieVerdict v = lie_quasifree_verdict(ab2, 2);
    REQUIRE(v.not_quasi_free);
    REQUIRE(v.witness_degree == 2);
    REQUIRE(v.witness_dim == 1);

    LieAlgebra g = LieAlgebra::sl2(Q);
    LieVerdict w = lie_quasifree_verdict(g, 3);
    REQUIRE(w.not_quasi_free);
    REQUIRE(w.witness_degree == 3);
    REQUIRE(w.dims == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("a short scan on sl2 is inconclusive", "[verdict]") {
    // degree 2 carries nothing for sl2; the obstruction sits in degree 3
    Field Q = Field::rationals();
    LieVerdict v = lie_quasifree_verdict(LieAlgebra::sl2(Q), 2);
    REQUIRE(!v.not_quasi_free);
    REQUIRE(v.scanned_up_to == 2);
}

TEST_CASE("the scan bound clamps to the dimension", "[verdict]") {
    Field Q = Field::rationals();
    LieVerdict v = lie_quasifree_verdict(LieAlgebra::abelian(Q, 1), 10);
    REQUIRE(v.scanned_up_to == 1);
    REQUIRE(!v.not_quasi_free);
}

TEST_CASE("verdicts by abelian dimension match the commutative route", "[verdict]") {
    // H^2 of the rank-two abelian algebra and the regular-sequence verdict on
    // the plane detect the same obstruction
    Field Q = Field::rationals();
    LieVerdict lie = lie_quasifree_verdict(LieAlgebra::abelian(Q, 2), 2);
    CommPresentation plane = CommPresentation::parse(Q, {"x", "y"}, {});
    std::vector<Polynomial> seq{plane.parse_poly("x"), plane.parse_poly("y")};
    DegeneracyVerdict comm = degeneracy_verdict(plane, seq);
    REQUIRE(lie.not_quasi_free);
    REQUIRE(comm.not_quasi_free);
}
