#include <catch2/catch_amalgamated.hpp>

#include "essalg/essalg.hpp"

using namespace essalg;

namespace {

CommPresentation ring(const std::vector<std::string>& vars,
                      const std::vector<std::string>& rels,
                      MonomialOrder ord = MonomialOrder::grevlex()) {
    return CommPresentation::parse(Field::rationals(), vars, rels, ord);
}

}  // namespace

TEST_CASE("rational scalars are exact", "[scalar]") {
    Field Q = Field::rationals();
    Scalar a = Scalar::rational(mpq_class(1, 3));
    Scalar b = Scalar::rational(mpq_class(1, 6));
    REQUIRE((a + b).str() == "1/2");
    REQUIRE((a * b).str() == "1/18");
    REQUIRE((a - a).is_zero());
    REQUIRE((a / b).str() == "2");
    REQUIRE(Scalar::one(Q).str() == "1");
    REQUIRE_THROWS_AS(a / Scalar::zero(Q), MathError);
}

TEST_CASE("prime field scalars reduce and invert", "[scalar]") {
    Field F5 = Field::prime(5);
    Scalar two = Scalar::fp(2, 5);
    Scalar seven = Scalar::fp(7, 5);
    REQUIRE(seven.fp_value() == 2);
    REQUIRE((two * two * two).fp_value() == 3);
    // 2 * 3 = 6 = 1 mod 5
    REQUIRE((Scalar::one(F5) / two).fp_value() == 3);
    REQUIRE((two - two).is_zero());
    REQUIRE_THROWS_AS(Field::prime(4), InputError);
    REQUIRE_THROWS_AS(Field::prime(1), InputError);
}

TEST_CASE("mixed-field arithmetic is rejected", "[scalar]") {
    Scalar q = Scalar::rational(mpq_class(1));
    Scalar p = Scalar::fp(1, 3);
    REQUIRE_THROWS_AS(q + p, MathError);
}

TEST_CASE("lex and grevlex disagree on the classic pair", "[order]") {
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grevlex = MonomialOrder::grevlex();
    Monomial xzz(std::vector<std::uint32_t>{1, 0, 2});
    Monomial yyz(std::vector<std::uint32_t>{0, 2, 1});
    // lex looks at x first, grevlex prefers the smaller last exponent
    REQUIRE(lex.greater(xzz, yyz));
    REQUIRE(grevlex.less(xzz, yyz));
}

TEST_CASE("grevlex ranks by total degree first", "[order]") {
    MonomialOrder ord = MonomialOrder::grevlex();
    Monomial x(std::vector<std::uint32_t>{1, 0});
    Monomial yy(std::vector<std::uint32_t>{0, 2});
    REQUIRE(ord.less(x, yy));
    REQUIRE(ord.cmp(x, x) == 0);
}

TEST_CASE("block order eliminates the leading block", "[order]") {
    // t placed in the elimination block outranks any power of x
    MonomialOrder ord = MonomialOrder::block({1, 0});
    Monomial t(std::vector<std::uint32_t>{1, 0});
    Monomial x5(std::vector<std::uint32_t>{0, 5});
    REQUIRE(ord.greater(t, x5));
    REQUIRE_THROWS_AS(MonomialOrder::block({0, 0}), InputError);
}

TEST_CASE("polynomial arithmetic expands binomials", "[poly]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Polynomial xy = parse_comm_polynomial("(x + y)^2", vars, Q, ord);
    Polynomial expect = parse_comm_polynomial("x^2 + 2*x*y + y^2", vars, Q, ord);
    REQUIRE(xy == expect);
    REQUIRE(xy.degree() == 2);
    REQUIRE(sub(xy, xy, ord).is_zero());
}

TEST_CASE("derivative and substitution behave pointwise", "[poly]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Polynomial p = parse_comm_polynomial("x^3*y + 2*x", vars, Q, ord);
    Polynomial dx = derivative(p, 0, Q);
    REQUIRE(dx == parse_comm_polynomial("3*x^2*y + 2", vars, Q, ord));
    Polynomial at1 = substitute_const(p, 0, Scalar::one(Q), ord, Q);
    REQUIRE(at1 == parse_comm_polynomial("y + 2", vars, Q, ord));
}

TEST_CASE("division leaves an irreducible remainder and exact quotients", "[groebner]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Polynomial p = parse_comm_polynomial("x^2*y + x*y^2 + y^2", vars, Q, ord);
    std::vector<Polynomial> divs{parse_comm_polynomial("x*y - 1", vars, Q, ord),
                                 parse_comm_polynomial("y^2 - 1", vars, Q, ord)};
    DivisionResult d = divide(p, divs, ord, Budget{});
    Polynomial recon = d.remainder;
    for (std::size_t k = 0; k < divs.size(); ++k)
        recon = add(recon, mul(d.quotients[k], divs[k], ord), ord);
    REQUIRE(recon == p);
    for (const auto& [m, c] : d.remainder.terms)
        for (const auto& g : divs) REQUIRE(!g.leading_monomial().divides(m));
}

TEST_CASE("reduced basis of a line on the circle", "[groebner]") {
    CommPresentation A = ring({"x", "y"}, {"x^2 + y^2 - 1", "x - y"});
    std::vector<std::string> got;
    for (const auto& g : A.ideal.gb.basis) got.push_back(g.str(A.vars));
    REQUIRE(got == std::vector<std::string>{"x - y", "y^2 - 1/2"});
}

TEST_CASE("cofactor rows replay the reduced basis exactly", "[groebner]") {
    CommPresentation A = ring({"x", "y", "z"}, {"x*y - z", "y*z - x", "x*z - y"});
    const auto& gb = A.ideal.gb;
    REQUIRE(gb.cofactors.size() == gb.basis.size());
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        Polynomial acc = Polynomial::zero(3);
        for (std::size_t j = 0; j < A.ideal.generators.size(); ++j)
            acc = add(acc, mul(gb.cofactors[i][j], A.ideal.generators[j], A.ideal.order),
                      A.ideal.order);
        REQUIRE(acc == gb.basis[i]);
    }
}

TEST_CASE("reduced bases do not depend on generator order", "[groebner]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    std::vector<Polynomial> gens{parse_comm_polynomial("x^2 - y", vars, Q, ord),
                                 parse_comm_polynomial("x*y - 1", vars, Q, ord)};
    Ideal a = Ideal::make(Q, ord, 2, gens);
    std::swap(gens[0], gens[1]);
    Ideal b = Ideal::make(Q, ord, 2, gens);
    REQUIRE(a.gb.basis.size() == b.gb.basis.size());
    for (std::size_t i = 0; i < a.gb.basis.size(); ++i)
        REQUIRE(a.gb.basis[i] == b.gb.basis[i]);
    REQUIRE(same_ideal(a, b));
}

TEST_CASE("zero and unit ideals are flagged", "[groebner]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal zero = Ideal::make(Q, ord, 2, {});
    REQUIRE(zero.is_zero_ideal());
    std::vector<std::string> vars{"x", "y"};
    Ideal unit = Ideal::make(Q, ord, 2,
                             {parse_comm_polynomial("x", vars, Q, ord),
                              parse_comm_polynomial("x - 1", vars, Q, ord)});
    REQUIRE(unit.is_unit_ideal());
}

TEST_CASE("normal form is idempotent and linear over the quotient", "[groebner]") {
    CommPresentation A = ring({"x", "y"}, {"x^2 - y", "y^2 - x"});
    Polynomial p = A.parse_poly("x^3 + x*y + 7");
    Polynomial n1 = normal_form(p, A.ideal);
    REQUIRE(normal_form(n1, A.ideal) == n1);
    Polynomial diff = sub(p, n1, A.ideal.order);
    REQUIRE(ideal_contains(diff, A.ideal));
}

TEST_CASE("membership witnesses expand back to the element", "[groebner]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Ideal I = Ideal::make(Q, ord, 2,
                          {parse_comm_polynomial("x - y", vars, Q, ord),
                           parse_comm_polynomial("x + y", vars, Q, ord)});
    Polynomial p = parse_comm_polynomial("x^2 - y^2", vars, Q, ord);
    auto w = membership_witness(p, I);
    REQUIRE(w.has_value());
    Polynomial acc = Polynomial::zero(2);
    for (std::size_t j = 0; j < I.generators.size(); ++j)
        acc = add(acc, mul((*w)[j], I.generators[j], ord), ord);
    REQUIRE(acc == p);

    REQUIRE(!membership_witness(parse_comm_polynomial("1", vars, Q, ord), I).has_value());
}

TEST_CASE("colon ideal divides out a factor", "[groebner]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Ideal I = Ideal::make(Q, ord, 2, {parse_comm_polynomial("x^2*y", vars, Q, ord)});
    Ideal C = colon_ideal(I, parse_comm_polynomial("x", vars, Q, ord));
    REQUIRE(C.gb.basis.size() == 1);
    REQUIRE(C.gb.basis[0].str(vars) == "x*y");

    Ideal J = Ideal::make(Q, ord, 2,
                          {parse_comm_polynomial("x*y", vars, Q, ord),
                           parse_comm_polynomial("y^2", vars, Q, ord)});
    Ideal D = colon_ideal(J, parse_comm_polynomial("y", vars, Q, ord));
    std::vector<std::string> got;
    for (const auto& g : D.gb.basis) got.push_back(g.str(vars));
    REQUIRE(got == std::vector<std::string>{"y", "x"});
}

TEST_CASE("elimination finds the cuspidal cubic from its parametrization", "[groebner]") {
    Field Q = Field::rationals();
    std::vector<std::string> vars{"t", "x", "y"};
    MonomialOrder ord = MonomialOrder::block({1, 0, 0});
    Ideal I = Ideal::make(Q, ord, 3,
                          {parse_comm_polynomial("x - t^2", vars, Q, ord),
                           parse_comm_polynomial("y - t^3", vars, Q, ord)});
    std::vector<Polynomial> elim = eliminate(I, {0, 1, 1});
    REQUIRE(!elim.empty());
    for (const auto& g : elim) {
        for (const auto& [m, c] : g.terms) REQUIRE(m.e[0] == 0);
        REQUIRE(ideal_contains(g, I));
    }
    Ideal E = Ideal::make(Q, ord, 3, elim);
    REQUIRE(ideal_contains(parse_comm_polynomial("y^2 - x^3", vars, Q, ord), E));
}

TEST_CASE("dimension of free rings, hypersurfaces, and fat points", "[krull]") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::string> vars;
        for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        CommPresentation A = ring(vars, {});
        KrullResult k = krull_dimension(A);
        REQUIRE(!k.zero_ring);
        REQUIRE(k.dim == static_cast<long>(n));
    }

    CommPresentation sphere =
        ring({"x1", "x2", "x3", "x4"}, {"x1^2 + x2^2 + x3^2 + x4^2 - 1"});
    REQUIRE(krull_dimension(sphere).dim == 3);

    CommPresentation fat = ring({"x"}, {"x^2"});
    REQUIRE(krull_dimension(fat).dim == 0);

    CommPresentation zero = ring({"x"}, {"x", "x - 1"});
    KrullResult z = krull_dimension(zero);
    REQUIRE(z.zero_ring);
    REQUIRE(z.dim == -1);
}

TEST_CASE("dimension agrees over a prime field", "[krull]") {
    CommPresentation A = CommPresentation::parse(Field::prime(5), {"x", "y"}, {"x*y - 1"});
    REQUIRE(krull_dimension(A).dim == 1);
}

TEST_CASE("localization model inverts the chosen element", "[localize]") {
    CommPresentation A = ring({"x", "y"}, {});
    Polynomial f = A.parse_poly("x - 1");
    LocalizationModel m = localization_model(A, f);
    REQUIRE(m.ring.vars == std::vector<std::string>{"x", "y", "t"});
    REQUIRE(m.t_index == 2);
    Polynomial tf = m.ring.parse_poly("t*(x - 1)");
    REQUIRE(normal_form(tf, m.ring.ideal) ==
            Polynomial::constant(3, Scalar::one(A.field)));

    CommPresentation B = ring({"x"}, {"x"});
    REQUIRE_THROWS_AS(localization_model(B, B.parse_poly("x")), InputError);
}

TEST_CASE("localization picks a fresh variable name", "[localize]") {
    CommPresentation A = ring({"t", "x"}, {});
    LocalizationModel m = localization_model(A, A.parse_poly("x"));
    REQUIRE(m.ring.vars == std::vector<std::string>{"t", "x", "t_1"});
}

TEST_CASE("degree budget stops runaway reductions", "[budget]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y"};
    Budget tight{1, 1'000'000};
    bool threw = false;
    try {
        Ideal::make(Q, ord, 2,
                    {parse_comm_polynomial("x^2 + y^2 - 1", vars, Q, ord),
                     parse_comm_polynomial("x - y", vars, Q, ord)},
                    tight);
    } catch (const ResourceError& e) {
        threw = true;
        REQUIRE(e.budget == "degree");
    }
    REQUIRE(threw);
}

TEST_CASE("pair budget stops the completion loop", "[budget]") {
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> vars{"x", "y", "z"};
    Budget tight{40, 0};
    bool threw = false;
    try {
        Ideal::make(Q, ord, 3,
                    {parse_comm_polynomial("x*y - z^2", vars, Q, ord),
                     parse_comm_polynomial("y*z - x^2", vars, Q, ord)},
                    tight);
    } catch (const ResourceError& e) {
        threw = true;
        REQUIRE(e.budget == "pairs");
    }
    REQUIRE(threw);
}

TEST_CASE("usage counters record the work done", "[budget]") {
    CommPresentation A = ring({"x", "y"}, {"x^2 + y^2 - 1", "x - y"});
    REQUIRE(A.ideal.gb.usage.max_degree_seen >= 2);
    BudgetUsage u;
    normal_form(A.parse_poly("x^4"), A.ideal, &u);
    REQUIRE(u.max_degree_seen >= 4);
}
