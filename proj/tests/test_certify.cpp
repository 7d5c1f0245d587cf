#include "jacpair/certify.hpp"
#include "jacpair/pipeline.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace jacpair;
using jacpair::testing::P;

TEST_CASE("jacobian sign status") {
    SignStatus st = jacobian_sign_status(Poly2::constant(1));
    CHECK(st.tag == SignStatus::Tag::PositiveConstant);
    CHECK(jacobian_sign_status(Poly2::constant(-3)).tag == SignStatus::Tag::NegativeConstant);
    CHECK(jacobian_sign_status(Poly2()).tag == SignStatus::Tag::IdenticallyZero);

    st = jacobian_sign_status(P("3*x^2*y^2-4*x*y+1"));
    REQUIRE(st.tag == SignStatus::Tag::SignChanges);
    REQUIRE(st.positive_witness.has_value());
    REQUIRE(st.negative_witness.has_value());
    CHECK(st.positive_witness->x == 0);
    CHECK(st.positive_witness->y == 0);
    CHECK(st.positive_value == 1);
    CHECK(st.negative_witness->x == 1);
    CHECK(st.negative_witness->y == Rational(1, 2));
    CHECK(st.negative_value == Rational(-1, 4));

    CHECK(jacobian_sign_status(P("x^2+y^2+1")).tag == SignStatus::Tag::UndecidedNonconstant);
    // a nonconstant square: no sign change, but an exact zero shows up in the summary
    SignStatus sq = jacobian_sign_status(P("(x-1)^2"));
    CHECK(sq.tag == SignStatus::Tag::UndecidedNonconstant);
    REQUIRE(sq.summary.zero_point.has_value());
    CHECK(sq.summary.zero_point->x == 1);
}

TEST_CASE("znak0 certificates") {
    auto cert = znak0_sign_change(P("x^2*y-x"), P("x*y^2-y"));
    REQUIRE(cert.has_value());
    const auto& c = std::get<Znak0Cert>(cert->payload);
    CHECK(c.F == UniPoly::from_coeffs({-1, 1}));
    CHECK(c.G == UniPoly::from_coeffs({-1, 1}));
    CHECK(c.H == UniPoly::t() * UniPoly::from_coeffs({-1, 1}).pow(2));
    CHECK(c.nonzero_root.contains(1));
    CHECK(verify_certificate(*cert, P("x^2*y-x"), P("x*y^2-y")));

    CHECK_FALSE(znak0_sign_change(P("x"), P("y")).has_value());

    auto cert2 = znak0_sign_change(P("x^2*y-x"), P("y"));
    REQUIRE(cert2.has_value());
    CHECK(std::get<Znak0Cert>(cert2->payload).G == UniPoly(Rational(1)));
    CHECK(verify_certificate(*cert2, P("x^2*y-x"), P("y")));

    // not of the diagonal shape at all
    CHECK_FALSE(znak0_sign_change(P("x+y"), P("y")).has_value());
}

TEST_CASE("znak certificates") {
    auto cert = znak_sign_change(P("x^2*y^3-2*x*y^2+y+x"), P("x"));
    REQUIRE(cert.has_value());
    const auto& c = std::get<ZnakCert>(cert->payload);
    CHECK(c.a == 1);
    CHECK(c.b == 1);
    CHECK(verify_certificate(*cert, P("x^2*y^3-2*x*y^2+y+x"), P("x")));

    CHECK_FALSE(znak_sign_change(P("y+x"), P("x")).has_value());
    CHECK_FALSE(znak_sign_change(P("x^2*y^3-2*x*y^2+y+x"), P("x+y")).has_value());
}

TEST_CASE("vertex parity certificates") {
    // alpha = (2,3), beta = (3,3): alpha + beta = (5,6) has an even coordinate
    Poly2 f = P("x^2*y^3 + x + y");
    Poly2 g = P("x^3*y^3 + x");
    auto cert = vertex_parity_sign_change(f, g, {6, 7});
    REQUIRE(cert.has_value());
    const auto& c = std::get<VertexParityCert>(cert->payload);
    CHECK(c.alpha == Monomial{2, 3});
    CHECK(c.beta == Monomial{3, 3});
    CHECK(verify_certificate(*cert, f, g));

    // alpha + beta = (1,1): both coordinates odd
    CHECK_FALSE(vertex_parity_sign_change(P("x"), P("y"), {2, 3}).has_value());
    // linearly dependent vertices
    CHECK_FALSE(vertex_parity_sign_change(P("x*y"), P("x^2*y^2"), {1, 1}).has_value());
    // edge faces do not qualify
    CHECK_FALSE(vertex_parity_sign_change(P("x+y"), P("x^2*y^3"), {1, 1}).has_value());
}

TEST_CASE("hrc exclusion") {
    Poly2 d49 = P("x + x^5 + x^2*y^2");   // hull D49 = conv{(1,0),(5,0),(2,2)}
    auto cert = hrc_excludes(d49);
    REQUIRE(cert.has_value());
    CHECK(std::get<HrcCert>(cert->payload).endpoint_ab == Monomial{2, 2});
    CHECK(verify_certificate(*cert, d49, P("y")));

    Poly2 d50 = P("x + x^5 + x^2*y");     // hull D50 = conv{(1,0),(5,0),(2,1)}
    auto cert2 = hrc_excludes(d50);
    REQUIRE(cert2.has_value());
    CHECK(std::get<HrcCert>(cert2->payload).endpoint_ab == Monomial{2, 1});

    CHECK_FALSE(hrc_excludes(P("1 + x^2 + y^2")).has_value());  // triangle (0,0),(2,0),(0,2)
}

TEST_CASE("critical point search") {
    auto found = no_critical_points(P("x^2+y^2"), 64);
    REQUIRE(found.status == CriticalPointAnswer::Status::DecidedFound);
    REQUIRE(found.witness.has_value());
    CHECK(found.witness->x == 0);
    CHECK(found.witness->y == 0);

    CHECK(no_critical_points(P("x+y^3"), 64).status == CriticalPointAnswer::Status::DecidedNone);
    CHECK(no_critical_points(P("x*y^2-2*y"), 64).status ==
          CriticalPointAnswer::Status::DecidedNone);
    CHECK_THROWS_AS(no_critical_points(P("7"), 64), std::domain_error);

    // critical points at irrational coordinates only: x^4/4 - x^2/2-ish via partials
    auto undec = no_critical_points(P("x^4 - 4*x^2 + 2*x + y^2"), 8);
    CHECK(undec.status != CriticalPointAnswer::Status::DecidedNone);

    // univariate-only dependence: any x works, y must be a root of 3y^2 - 3
    auto uni = no_critical_points(P("y^3 - 3*y"), 64);
    REQUIRE(uni.status == CriticalPointAnswer::Status::DecidedFound);
    REQUIRE(uni.witness.has_value());
    CHECK(abs(uni.witness->y) == 1);
    CHECK(P("y^3 - 3*y").derivative(Var::Y).eval(uni.witness->x, uni.witness->y) == 0);

    // decided-none spot check: partials never vanish together on random samples
    std::mt19937_64 rng(79);
    Poly2 f = P("x + y^3 + x^2*y");
    auto ans = no_critical_points(f, 64);
    if (ans.status == CriticalPointAnswer::Status::DecidedNone) {
        Poly2 px = f.derivative(Var::X), py = f.derivative(Var::Y);
        for (int k = 0; k < 1000; ++k) {
            Rational x0 = jacpair::testing::random_rational(rng, 50, 8);
            Rational y0 = jacpair::testing::random_rational(rng, 50, 8);
            bool both_vanish = px.eval(x0, y0) == 0 && py.eval(x0, y0) == 0;
            CHECK_FALSE(both_vanish);
        }
    }
}

TEST_CASE("inf typicality certificate") {
    auto cert = inf_typical(P("y+x^2"), 64);
    REQUIRE(cert.has_value());
    const auto& c = std::get<InfTypicalCert>(cert->payload);
    REQUIRE(c.edges.size() == 1);
    CHECK(c.edges[0].interior_points == 0);
    CHECK(verify_certificate(*cert, P("y+x^2"), P("y+x^2")));

    CHECK_FALSE(inf_typical(P("x+(y+x^2)^2"), 64).has_value());  // degenerate top edge
    CHECK_FALSE(inf_typical(P("x*y"), 64).has_value());          // not convenient
}

TEST_CASE("real points at infinity") {
    auto pts = infinity_real_points(P("(x^2+y^2)^2*y"));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 1);
    REQUIRE(pts[0].root.has_value());
    CHECK(*pts[0].root == 0);
    CHECK(one_real_branch_at_infinity(pts));

    auto x5 = infinity_real_points(P("x^5"));
    REQUIRE(x5.size() == 1);
    CHECK(x5[0].at_x_zero);
    CHECK(x5[0].multiplicity == 5);
    CHECK_FALSE(one_real_branch_at_infinity(x5));

    auto two = infinity_real_points(P("x^2*y*(x^2+y^2)"));
    REQUIRE(two.size() == 2);
    CHECK_FALSE(one_real_branch_at_infinity(two));

    CHECK_THROWS_AS(infinity_real_points(P("x+1")), std::invalid_argument);
}

TEST_CASE("certify_typical end to end") {
    Verdict v = certify_typical(P("x+(y+x^2)^2"), P("y+x^2"));
    REQUIRE(v.tag == Verdict::Tag::TypicalCertified);
    REQUIRE(v.certificates.size() == 1);
    REQUIRE(v.certificates[0].kind == Certificate::Kind::InfTypical);
    CHECK(std::get<InfTypicalCert>(v.certificates[0].payload).candidate == "g");
    CHECK(verify_certificate(v.certificates[0], P("x+(y+x^2)^2"), P("y+x^2")));

    Verdict neg = certify_typical(P("x^2*y-x"), P("x*y^2-y"));
    REQUIRE(neg.tag == Verdict::Tag::NotAJacobianPair);
    REQUIRE(neg.certificates[0].kind == Certificate::Kind::DirectWitness);
    CHECK(verify_certificate(neg.certificates[0], P("x^2*y-x"), P("x*y^2-y")));

    Verdict xy = certify_typical(P("x"), P("y"));
    REQUIRE(xy.tag == Verdict::Tag::TypicalCertified);
    REQUIRE(xy.certificates[0].kind == Certificate::Kind::InfTypical);
    const auto& c = std::get<InfTypicalCert>(xy.certificates[0].payload);
    CHECK(c.candidate == "f+mu*g");
    REQUIRE(c.mu.has_value());
    CHECK(*c.mu == 1);
    CHECK(verify_certificate(xy.certificates[0], P("x"), P("y")));
}

TEST_CASE("exclusions fire through swaps and transposes") {
    // the znak pattern with the roles of f and g swapped
    Verdict v = certify_typical(P("x"), P("x^2*y^3-2*x*y^2+y+x"));
    REQUIRE(v.tag == Verdict::Tag::NotAJacobianPair);
    // and on the transposed pair
    Verdict vt = certify_typical(P("x^3*y^2-2*x^2*y+x+y"), P("y"));
    CHECK(vt.tag == Verdict::Tag::NotAJacobianPair);
    CHECK(verify_certificate(v.certificates[0], P("x"), P("x^2*y^3-2*x*y^2+y+x")));
    CHECK(verify_certificate(vt.certificates[0], P("x^3*y^2-2*x^2*y+x+y"), P("y")));
}

TEST_CASE("soundness fuzz: tame pairs never excluded") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        TamePair tp = generate_tame_pair(seed, 1 + static_cast<int>(seed % 4), 3);
        REQUIRE(jacobian_det(tp.f, tp.g) == Poly2::constant(tp.jacobian));
        REQUIRE(tp.jacobian != 0);
        Verdict v = certify_typical(tp.f, tp.g);
        CHECK(v.tag != Verdict::Tag::NotAJacobianPair);
        for (const auto& cert : v.certificates) CHECK(verify_certificate(cert, tp.f, tp.g));
    }
}
