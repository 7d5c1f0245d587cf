#include "jacpair/pipeline.hpp"
#include "jacpair/serialize.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace jacpair;
using jacpair::testing::P;

TEST_CASE("normalize_pair strips constants and records the shifts") {
    NormalizedPair np = normalize_pair(P("x+3"), P("y-1"));
    CHECK(np.f == P("x"));
    CHECK(np.g == P("y"));
    REQUIRE(np.applied.size() == 1);
    CHECK(np.applied[0].op == PairTransform::Op::Shift);
    CHECK(np.applied[0].p1 == 3);
    CHECK(np.applied[0].p2 == -1);
}

TEST_CASE("normalize_pair achieves the support and polygon conditions") {
    NormalizedPair np = normalize_pair(P("x^2"), P("y+x"));
    CHECK(np.f == P("x^2+y+x"));
    REQUIRE(np.applied.size() == 1);
    CHECK(np.applied[0].op == PairTransform::Op::PencilF);
    CHECK(np.applied[0].p1 == 1);
    // conditions hold verbatim
    CHECK(np.f.coeff(1, 0) != 0);
    CHECK(np.f.coeff(0, 1) != 0);
    CHECK(np.f.constant_term() == 0);
    LatticePolygon df = newton_polygon(np.f);
    LatticePolygon dg = newton_polygon(np.g);
    for (const auto& v : dg.vertices()) CHECK(df.contains(v));

    CHECK_THROWS_AS(normalize_pair(P("x*y"), P("y")), std::domain_error);
}

TEST_CASE("normalize_pair transformations replay exactly") {
    std::mt19937_64 rng(83);
    int done = 0;
    while (done < 25) {
        Poly2 f = jacpair::testing::random_poly(rng, 4, 5, 3);
        Poly2 g = jacpair::testing::random_poly(rng, 4, 5, 3);
        NormalizedPair np;
        try {
            np = normalize_pair(f, g);
        } catch (const std::domain_error&) {
            continue;
        }
        Poly2 rf = f, rg = g;
        for (const auto& t : np.applied) std::tie(rf, rg) = apply_transform(rf, rg, t);
        CHECK(rf == np.f);
        CHECK(rg == np.g);
        ++done;
    }
}

TEST_CASE("leading gcd and h classification") {
    auto hc = leading_gcd_and_h(P("x^5+x+y"), P("x^5+y"));
    CHECK(hc.D == P("x^5"));
    CHECK(hc.h == P("x^5"));
    CHECK(hc.h_case == HCase::DegH5);

    hc = leading_gcd_and_h(P("x^2*(x^3+y^3)+x+y"), P("x^2*(x^3-y^3)+y"));
    CHECK(hc.D == P("x^2"));
    CHECK(hc.h == P("x^2"));
    CHECK(hc.h_case == HCase::DegH2);

    Poly2 D = P("(x^2+y^2)^2*(x-y)");
    hc = leading_gcd_and_h(D + P("x"), D + P("y"));
    CHECK(hc.h == P("(x^2+y^2)^2"));
    CHECK(hc.h_case == HCase::DegH4_irredsq);

    hc = leading_gcd_and_h(P("x^3*(x^2+x*y)+y"), P("x^4*(x+y)+x"));
    CHECK(hc.h == P("x^4"));
    CHECK(hc.h_case == HCase::DegH4_x4);

    hc = leading_gcd_and_h(P("x^2*y^2*(x+y)+x"), P("x^2*y^2*(x+y)+y"));
    CHECK(hc.h == P("x^2*y^2"));
    CHECK(hc.h_case == HCase::DegH4_x2y2);

    // (y - x)^2 (y - 2x)^2: two rational lines squared
    hc = leading_gcd_and_h(P("(y-x)^2*(y-2*x)^2*x + y"), P("(y-x)^2*(y-2*x)^2*y + x"));
    CHECK(hc.h_case == HCase::DegH4_x2y2);

    // (x^2 - 2 y^2)^2: splits over the reals but not the rationals
    hc = leading_gcd_and_h(P("(x^2-2*y^2)^2*x + y"), P("(x^2-2*y^2)^2*y + x"));
    CHECK(hc.h_case == HCase::NonRationalFactor);

    hc = leading_gcd_and_h(P("x^3*y^2 + x"), P("x^3*(x^2+y^2)+y"));
    CHECK(hc.h == P("x^3"));
    CHECK(hc.h_case == HCase::DegH3);

    hc = leading_gcd_and_h(P("x^5+y^5+x"), P("x^5-y^5+y"));
    CHECK(hc.h_case == HCase::DegH0);
}

TEST_CASE("leading gcd invariants") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(2, 5);
    for (int k = 0; k < 60; ++k) {
        Poly2 f = jacpair::testing::random_poly(rng, 5, 6, 3);
        Poly2 g = jacpair::testing::random_poly(rng, 5, 6, 3);
        HClassification hc;
        try {
            hc = leading_gcd_and_h(f, g);
        } catch (const std::exception&) {
            continue;
        }
        Poly2 q;
        REQUIRE(try_divide_exact(f.leading_form(), hc.D, &q));
        Poly2 f1 = q;
        REQUIRE(try_divide_exact(g.leading_form(), hc.D, &q));
        Poly2 g1 = q;
        CHECK(homog_gcd(f1, g1).is_constant());
        if (!hc.h.is_constant()) CHECK(hc.h.total_degree() != 1);
    }
}

TEST_CASE("theorem route for degrees (5,6)") {
    // x^2 || leading form, l = 3: alpha = (2,3), beta = (3,3)
    Poly2 f = P("x^2*y^3 + x + y");
    Poly2 g = P("x^3*y^3 + x");
    St6Result st6 = theorem_st6_check(f, g);
    REQUIRE(st6.certificate.has_value());
    REQUIRE(st6.certificate->kind == Certificate::Kind::VertexParity);
    const auto& c = std::get<VertexParityCert>(st6.certificate->payload);
    CHECK(c.alpha == Monomial{2, 3});
    CHECK(c.beta == Monomial{3, 3});
    // the emitted direction is re-checked through the newton module
    CHECK(face(newton_polygon(f), c.xi).points == std::vector<Monomial>{c.alpha});
    CHECK(face(newton_polygon(g), c.xi).points == std::vector<Monomial>{c.beta});

    // k = 5 defers to the trusted x^5 theorem
    St6Result k5 = theorem_st6_check(P("x^5 + x + y"), P("y^6 + x"));
    REQUIRE(k5.certificate.has_value());
    CHECK(k5.certificate->kind == Certificate::Kind::TrustedFact);

    // leading form with a rational linear factor away from the axes
    St6Result moved = theorem_st6_check(P("(y-2*x)^2*x^2*y + x + y"), P("x^3*y^3 + x"));
    REQUIRE(moved.certificate.has_value());

    // no rational linear factor: t^5 + t + 1 has none
    St6Result none = theorem_st6_check(P("x^5 + x^4*y + y^5 + x + y"), P("x^3*y^3 + x"));
    CHECK_FALSE(none.certificate.has_value());
    CHECK_FALSE(none.note.empty());
}

TEST_CASE("tame pair generation") {
    TamePair affine = generate_tame_pair(5, 0, 3);
    CHECK(jacobian_det(affine.f, affine.g) == Poly2::constant(affine.jacobian));
    CHECK(affine.f.total_degree() <= 1);

    for (std::uint64_t seed : {1, 2, 3, 42, 1000}) {
        TamePair tp = generate_tame_pair(seed, 4, 3);
        CHECK(jacobian_det(tp.f, tp.g) == Poly2::constant(tp.jacobian));
        CHECK(tp.jacobian != 0);
    }
    // determinism
    TamePair a = generate_tame_pair(7, 3, 3), b = generate_tame_pair(7, 3, 3);
    CHECK(a.f == b.f);
    CHECK(a.g == b.g);
    CHECK_THROWS_AS(generate_tame_pair(1, 5, 3), std::invalid_argument);
}

TEST_CASE("analyze_pair end to end") {
    AnalyzeResult pos = analyze_pair(P("x+(y+x^2)^2"), P("y+x^2"));
    REQUIRE(pos.verdict.tag == Verdict::Tag::TypicalCertified);
    bool has_inf_on_g = false;
    for (const auto& c : pos.verdict.certificates)
        if (c.kind == Certificate::Kind::InfTypical &&
            std::get<InfTypicalCert>(c.payload).candidate == "g")
            has_inf_on_g = true;
    CHECK(has_inf_on_g);
    REQUIRE(pos.polygon_g.has_value());
    CHECK(pos.polygon_g->vertices() == std::vector<Monomial>{{0, 1}, {2, 0}});

    AnalyzeResult neg = analyze_pair(P("x^2*y-x"), P("x*y^2-y"));
    REQUIRE(neg.verdict.tag == Verdict::Tag::NotAJacobianPair);
    const auto& w = std::get<DirectWitnessCert>(neg.verdict.certificates[0].payload);
    REQUIRE(w.sign_witnesses.has_value());
    CHECK(w.sign_witnesses->positive_value == 1);
    CHECK(w.sign_witnesses->negative_value == Rational(-1, 4));

    AnalyzeResult low = analyze_pair(P("x"), P("y+x^6"));
    REQUIRE(low.verdict.tag == Verdict::Tag::TypicalCertified);
    CHECK(low.verdict.certificates[0].kind == Certificate::Kind::TrustedFact);

    // the (5,6) exclusion route; the exact sign scan may beat vertex parity to it
    AnalyzeResult st6 = analyze_pair(P("x^2*y^3 + x + y"), P("x^3*y^3 + x"));
    REQUIRE(st6.verdict.tag == Verdict::Tag::NotAJacobianPair);
    auto kind = st6.verdict.certificates[0].kind;
    CHECK((kind == Certificate::Kind::VertexParity || kind == Certificate::Kind::DirectWitness));
}

TEST_CASE("analyze_pair is deterministic") {
    CertifyConfig cfg;
    AnalyzeResult a = analyze_pair(P("x+y^2+x^3"), P("y+x^2"), cfg);
    AnalyzeResult b = analyze_pair(P("x+y^2+x^3"), P("y+x^2"), cfg);
    CHECK(analysis_report(a, cfg).dump() == analysis_report(b, cfg).dump());
}
