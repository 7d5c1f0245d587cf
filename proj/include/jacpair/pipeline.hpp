#pragma once

#include "jacpair/certify.hpp"
#include "jacpair/homogeneous.hpp"

#include <random>
#include <string>
#include <vector>

namespace jacpair {

/// A recorded, replayable transformation of a pair.
struct PairTransform {
    enum class Op { Shift, PencilF, PencilG, Linear };
    Op op;
    Rational p1, p2, p3, p4;  // Shift: constants removed; Pencil: mu; Linear: matrix entries
};

inline std::pair<Poly2, Poly2> apply_transform(const Poly2& f, const Poly2& g,
                                               const PairTransform& t) {
    switch (t.op) {
        case PairTransform::Op::Shift:
            return {f - Poly2::constant(t.p1), g - Poly2::constant(t.p2)};
        case PairTransform::Op::PencilF:
            return {f + t.p1 * g, g};
        case PairTransform::Op::PencilG:
            return {f, g + t.p1 * f};
        case PairTransform::Op::Linear: {
            Mat2 m{t.p1, t.p2, t.p3, t.p4};
            return {linear_change(f, m), linear_change(g, m)};
        }
    }
    throw std::logic_error("unknown transform");
}

struct NormalizedPair {
    Poly2 f, g;
    std::vector<PairTransform> applied;
};

/// Strips constants and, with a small exact pencil substitution, arranges
/// x, y in supp(f) with Delta_g inside Delta_f. Every step is verified.
inline NormalizedPair normalize_pair(const Poly2& f_in, const Poly2& g_in) {
    NormalizedPair np;
    Rational cf = f_in.constant_term(), cg = g_in.constant_term();
    np.f = f_in - Poly2::constant(cf);
    np.g = g_in - Poly2::constant(cg);
    if (cf != 0 || cg != 0) np.applied.push_back({PairTransform::Op::Shift, cf, cg, 0, 0});
    // x or y missing from supp(f) u supp(g) forces Jac(f,g)(0,0) = 0 for every
    // pencil substitute, so condition (a) is unreachable
    bool has_x = np.f.coeff(1, 0) != 0 || np.g.coeff(1, 0) != 0;
    bool has_y = np.f.coeff(0, 1) != 0 || np.g.coeff(0, 1) != 0;
    if (!has_x || !has_y)
        throw std::domain_error("normalize_pair: Jac(f,g)(0,0) = 0 for the whole pencil"
                                " (x or y missing from supp(f) u supp(g))");

    auto satisfied = [&](const Poly2& f, const Poly2& g) {
        if (f.is_zero()) return false;
        if (f.coeff(1, 0) == 0 || f.coeff(0, 1) == 0) return false;
        if (g.is_zero()) return true;
        LatticePolygon df = newton_polygon(f);
        LatticePolygon dg = newton_polygon(g);
        for (const auto& v : dg.vertices())
            if (!df.contains(v)) return false;
        return true;
    };

    const std::vector<Rational> mus = {Rational(0),  Rational(1),     Rational(-1), Rational(2),
                                       Rational(-2), Rational(1, 2),  Rational(-1, 2), Rational(3)};
    for (const auto& mu : mus) {
        Poly2 cand = np.f + mu * np.g;
        if (satisfied(cand, np.g)) {
            if (mu != 0) np.applied.push_back({PairTransform::Op::PencilF, mu, 0, 0, 0});
            np.f = cand;
            return np;
        }
    }
    for (const auto& mu : mus) {
        if (mu == 0) continue;
        Poly2 cand = np.g + mu * np.f;
        if (satisfied(np.f, cand)) {
            np.applied.push_back({PairTransform::Op::PencilG, mu, 0, 0, 0});
            np.g = cand;
            return np;
        }
    }
    throw std::domain_error(
        "normalize_pair: no pencil substitution from the search set achieves the conditions");
}

enum class HCase {
    DegH0, DegH2, DegH3, DegH4_x4, DegH4_x2y2, DegH4_irredsq, DegH5, NonRationalFactor
};

inline std::string to_string(HCase c) {
    switch (c) {
        case HCase::DegH0: return "deg_h_0";
        case HCase::DegH2: return "deg_h_2";
        case HCase::DegH3: return "deg_h_3";
        case HCase::DegH4_x4: return "deg_h_4_fourth_power";
        case HCase::DegH4_x2y2: return "deg_h_4_two_squared_lines";
        case HCase::DegH4_irredsq: return "deg_h_4_irreducible_square";
        case HCase::DegH5: return "deg_h_5";
        case HCase::NonRationalFactor: return "non_rational_factor";
    }
    return "?";
}

struct HClassification {
    Poly2 D;  // gcd of the leading forms
    Poly2 h;  // product of multiple factors of D
    HCase h_case;
};

/// D = gcd(f+, g+) via homogeneous gcd, h = its multiple-factor product, and the
/// paper's case split on deg h (the degree-4 split is over rational linear changes).
inline HClassification leading_gcd_and_h(const Poly2& f, const Poly2& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("leading_gcd_and_h: zero polynomial");
    Poly2 D = homog_gcd(f.leading_form(), g.leading_form());
    Poly2 h = multiple_factor_product(D);
    HClassification out{D, h, HCase::DegH0};
    int dh = h.is_zero() ? 0 : (h.is_constant() ? 0 : h.total_degree());
    switch (dh) {
        case 0: out.h_case = HCase::DegH0; return out;
        case 2: out.h_case = HCase::DegH2; return out;
        case 3: out.h_case = HCase::DegH3; return out;
        case 5: out.h_case = HCase::DegH5; return out;
        case 4: break;
        default: throw std::logic_error("multiple-factor product of impossible degree");
    }
    // deg h = 4: either L^4, or L1^2 L2^2, or q^2 with q an irreducible quadratic
    UniPoly u = dehomogenize(h);
    int a = h.total_degree() - u.degree();   // multiplicity of x
    int v0 = std::max(u.valuation(), 0);     // multiplicity of y
    UniPoly u1 = u.shifted_down(v0);
    auto parts = squarefree_decomposition(u1);
    if (a == 4 || v0 == 4) {
        out.h_case = HCase::DegH4_x4;
        return out;
    }
    if (parts.size() == 1 && parts[0].second == 4 && parts[0].first.degree() == 1) {
        out.h_case = HCase::DegH4_x4;  // (y - r x)^4
        return out;
    }
    // remaining shapes have a squared quadratic content
    UniPoly quad(Rational(1));
    int linear_squares = (a == 2 ? 1 : 0) + (v0 == 2 ? 1 : 0);
    for (const auto& [factor, mult] : parts) {
        if (mult != 2) throw std::logic_error("unexpected multiplicity in deg-4 h");
        if (factor.degree() == 1)
            ++linear_squares;
        else
            quad = factor;
    }
    if (quad.degree() == 2) {
        // rational-root test by discriminant
        Rational A = quad.coeff(2), B = quad.coeff(1), C = quad.coeff(0);
        Rational disc = B * B - 4 * A * C;
        if (is_rational_square(disc)) {
            out.h_case = HCase::DegH4_x2y2;  // splits into two rational lines
        } else if (disc < 0) {
            out.h_case = HCase::DegH4_irredsq;
        } else {
            out.h_case = HCase::NonRationalFactor;  // real split needs irrational change
        }
        return out;
    }
    if (linear_squares == 2) {
        out.h_case = HCase::DegH4_x2y2;
        return out;
    }
    throw std::logic_error("unclassified deg-4 h");
}

/// Theorem-level check for deg f = 5, deg g = 6: after a rational linear change
/// making x | f+, either k = 5 (trusted typical route) or a vertex-parity
/// certificate excludes the pair.
struct St6Result {
    std::optional<Certificate> certificate;  // VertexParity (exclusion) or TrustedFact (typical)
    std::vector<PairTransform> applied;
    std::string note;
};

inline St6Result theorem_st6_check(const Poly2& f, const Poly2& g) {
    St6Result out;
    if (f.is_zero() || g.is_zero() || f.total_degree() != 5 || g.total_degree() != 6) {
        out.note = "requires deg f = 5 and deg g = 6";
        return out;
    }
    Poly2 ff = f, gg = g;
    Poly2 lead = ff.leading_form();
    UniPoly u = dehomogenize(lead);
    int k = lead.total_degree() - u.degree();
    if (k == 0) {
        // look for a rational linear factor y - r x of the leading form
        UniPoly sf = squarefree_part(u);
        std::optional<Rational> root;
        for (const auto& iv : isolate_real_roots(sf))
            if ((root = find_rational_root_in(sf, iv, 64))) break;
        if (!root) {
            out.note = "leading form has no rational linear factor; only rational changes are automated";
            return out;
        }
        // (x, y) -> (y, x + r y) turns the factor y - r x into x
        PairTransform t{PairTransform::Op::Linear, 0, 1, 1, *root};
        std::tie(ff, gg) = apply_transform(ff, gg, t);
        out.applied.push_back(t);
        lead = ff.leading_form();
        u = dehomogenize(lead);
        k = lead.total_degree() - u.degree();
    }
    if (k == 5) {
        out.certificate = Certificate{
            Certificate::Kind::TrustedFact,
            TrustedFactCert{"a jacobian pair whose first component has leading form c*x^5 is typical",
                            "degree-five component theorem"}};
        out.note = "k = 5";
        return out;
    }
    Monomial alpha{k, 5 - k};
    int l = 7;
    for (const auto& [m, c] : gg.terms())
        if (m.total_degree() == 6) l = std::min(l, m.i);
    Monomial beta{l, 6 - l};
    for (int n = 5; n <= 16; ++n) {
        Direction xi{n, n + 1};
        Face fa = face(newton_polygon(ff), xi);
        Face fb = face(newton_polygon(gg), xi);
        if (fa.is_vertex() && fa.points[0] == alpha && fb.is_vertex() && fb.points[0] == beta) {
            auto cert = vertex_parity_sign_change(ff, gg, xi);
            if (!cert) throw std::logic_error("vertex parity must apply: coordinates sum to 11");
            out.certificate = cert;
            out.note = "k = " + std::to_string(k) + ", l = " + std::to_string(l);
            return out;
        }
    }
    out.note = "no direction (n, n+1) isolates both vertices";
    return out;
}

/// Seeded tame pair: start from a random invertible affine pair and compose up to
/// `steps` elementary triangular maps. The Jacobian is a nonzero constant, exactly.
struct TamePair {
    Poly2 f, g;
    Rational jacobian;
};

inline TamePair generate_tame_pair(std::uint64_t seed, int steps, int coeff_bound) {
    if (steps < 0 || steps > 4) throw std::invalid_argument("steps must be in [0, 4]");
    if (coeff_bound < 1) throw std::invalid_argument("coeff bound must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    auto nonzero_coeff = [&]() {
        int c = 0;
        while (c == 0) c = coeff(rng);
        return c;
    };

    Poly2 f = Poly2::variable(Var::X), g = Poly2::variable(Var::Y);
    Rational jac(1);

    // initial invertible linear map plus translation: steps = 0 gives an affine pair
    {
        int a = nonzero_coeff(), d = nonzero_coeff();
        int b = coeff(rng), c = coeff(rng);
        while (Rational(a) * d - Rational(b) * c == 0) {
            b = coeff(rng);
            c = coeff(rng);
        }
        Mat2 m{Rational(a), Rational(b), Rational(c), Rational(d)};
        f = linear_change(f, m);
        g = linear_change(g, m);
        jac *= m.det();
        f += Poly2::constant(coeff(rng));
        g += Poly2::constant(coeff(rng));
    }

    long long degree_estimate = 1;
    std::uniform_int_distribution<int> degree_pick(1, 3);
    std::uniform_int_distribution<int> axis_pick(0, 1);
    for (int s = 0; s < steps; ++s) {
        int d = degree_pick(rng);
        if (degree_estimate * d > 12) d = 1;
        degree_estimate *= d;
        UniPoly p;
        {
            std::vector<Rational> cs(d + 1, Rational(0));
            for (int kk = 1; kk <= d; ++kk) cs[kk] = coeff(rng);
            if (cs[d] == 0) cs[d] = nonzero_coeff();
            p = UniPoly::from_coeffs(std::move(cs));
        }
        Poly2 shift;  // p evaluated on the other variable
        bool on_x = axis_pick(rng) == 0;
        for (int kk = 0; kk <= p.degree(); ++kk) {
            if (p.coeff(kk) == 0) continue;
            shift.add_term(on_x ? Monomial{0, kk} : Monomial{kk, 0}, p.coeff(kk));
        }
        Poly2 xs = Poly2::variable(Var::X), ys = Poly2::variable(Var::Y);
        if (on_x)
            xs += shift;  // x -> x + p(y)
        else
            ys += shift;  // y -> y + p(x)
        f = f.compose(xs, ys);
        g = g.compose(xs, ys);
    }
    Poly2 J = jacobian_det(f, g);
    if (!(J == Poly2::constant(jac)) || jac == 0)
        throw std::logic_error("tame pair generator: Jacobian is not the expected constant");
    return {f, g, jac};
}

// ---------------------------------------------------------------------------
// Full analysis driver
// ---------------------------------------------------------------------------

struct AnalyzeResult {
    Verdict verdict;
    Poly2 f, g;        // inputs
    Poly2 jacobian;
    SignStatus sign_status;
    std::optional<NormalizedPair> normalized;
    std::optional<HClassification> h_classification;
    std::optional<LatticePolygon> polygon_f, polygon_g;  // Newton polygons of the analysed pair
    std::vector<EdgeEvidence> edges_f, edges_g;          // outer-edge degeneracy tables
    std::vector<std::string> trace;
};

namespace detail {

inline std::vector<EdgeEvidence> outer_edge_table(const Poly2& f) {
    std::vector<EdgeEvidence> out;
    LatticePolygon poly = newton_polygon(f);
    if (poly.size() < 2) return out;
    for (const Face& e : outer_edges(poly)) {
        DegeneracyCheck chk = is_degenerate_on_edge(f, e);
        EdgeEvidence ev;
        ev.from = e.points[0];
        ev.to = e.points[1];
        ev.normal = primitive(e.dir);
        ev.interior_points = static_cast<int>(edge_interior_lattice_points(e).size());
        ev.reduction = chk.reduction.uni.str("s");
        ev.degenerate = chk.degenerate;
        out.push_back(std::move(ev));
    }
    return out;
}

}  // namespace detail

/// Sign status, the (5,6) theorem route, normalization, h-classification, the
/// certificate driver, and the trusted low-degree gate as a fallback; failures
/// downgrade to trace entries, never exceptions.
inline AnalyzeResult analyze_pair(const Poly2& f, const Poly2& g, const CertifyConfig& cfg = {}) {
    AnalyzeResult res;
    res.f = f;
    res.g = g;
    res.jacobian = jacobian_det(f, g);
    res.sign_status = jacobian_sign_status(res.jacobian, cfg);

    auto fill_geometry = [&](const Poly2& pf, const Poly2& pg) {
        if (!pf.is_zero()) {
            res.polygon_f = newton_polygon(pf);
            res.edges_f = detail::outer_edge_table(pf);
        }
        if (!pg.is_zero()) {
            res.polygon_g = newton_polygon(pg);
            res.edges_g = detail::outer_edge_table(pg);
        }
    };

    switch (res.sign_status.tag) {
        case SignStatus::Tag::IdenticallyZero: {
            res.trace.push_back("Jac(f,g) = 0: not a Jacobian pair");
            res.verdict.tag = Verdict::Tag::NotAJacobianPair;
            res.verdict.certificates.push_back(
                Certificate{Certificate::Kind::DirectWitness,
                            DirectWitnessCert{true, std::nullopt, std::nullopt}});
            fill_geometry(f, g);
            return res;
        }
        case SignStatus::Tag::SignChanges: {
            res.trace.push_back("Jacobian changes sign: exact witnesses found");
            res.verdict.tag = Verdict::Tag::NotAJacobianPair;
            DirectWitnessCert c;
            c.sign_witnesses =
                WitnessPair{*res.sign_status.positive_witness, *res.sign_status.negative_witness,
                            res.sign_status.positive_value, res.sign_status.negative_value};
            res.verdict.certificates.push_back(
                Certificate{Certificate::Kind::DirectWitness, c});
            fill_geometry(f, g);
            return res;
        }
        default:
            break;
    }
    if (res.sign_status.tag == SignStatus::Tag::UndecidedNonconstant &&
        res.sign_status.summary.zero_point) {
        res.trace.push_back("Jacobian vanishes at an exact sample point");
        res.verdict.tag = Verdict::Tag::NotAJacobianPair;
        DirectWitnessCert c;
        c.zero_point = res.sign_status.summary.zero_point;
        res.verdict.certificates.push_back(Certificate{Certificate::Kind::DirectWitness, c});
        fill_geometry(f, g);
        return res;
    }

    int df = f.is_zero() ? 0 : f.total_degree();
    int dg = g.is_zero() ? 0 : g.total_degree();
    bool low_degree_gate = std::min(df, dg) <= 4;
    std::optional<Certificate> trusted;
    if (low_degree_gate) {
        res.trace.push_back("a component has degree <= 4: the trusted low-degree theorem applies");
        trusted = Certificate{
            Certificate::Kind::TrustedFact,
            TrustedFactCert{"a jacobian pair with a component of degree at most 4 is typical",
                            "low-degree component theorem"}};
    } else if ((df == 5 && dg == 6) || (df == 6 && dg == 5)) {
        const Poly2& f5 = (df == 5) ? f : g;
        const Poly2& g6 = (df == 5) ? g : f;
        if (df == 6) res.trace.push_back("components swapped for the (5,6) route");
        St6Result st6 = theorem_st6_check(f5, g6);
        if (st6.certificate && st6.certificate->kind != Certificate::Kind::TrustedFact) {
            res.trace.push_back("(5,6) route: " + st6.note);
            res.verdict.tag = Verdict::Tag::NotAJacobianPair;
            res.verdict.certificates.push_back(*st6.certificate);
            fill_geometry(f5, g6);
            return res;
        }
        if (st6.certificate) {
            res.trace.push_back("(5,6) route: " + st6.note);
            trusted = st6.certificate;
        } else {
            res.trace.push_back("(5,6) route not applicable: " + st6.note);
        }
    }

    Poly2 nf = f, ng = g;
    try {
        NormalizedPair np = normalize_pair(f, g);
        nf = np.f;
        ng = np.g;
        res.normalized = std::move(np);
        res.trace.push_back("pair normalized");
    } catch (const std::exception& ex) {
        res.trace.push_back(std::string("normalization failed: ") + ex.what());
    }
    try {
        res.h_classification = leading_gcd_and_h(nf, ng);
        res.trace.push_back("h case: " + to_string(res.h_classification->h_case));
    } catch (const std::exception& ex) {
        res.trace.push_back(std::string("leading-form classification failed: ") + ex.what());
    }
    fill_geometry(nf, ng);
    res.verdict = certify_typical(nf, ng, cfg);
    if (res.verdict.tag != Verdict::Tag::NotAJacobianPair && trusted) {
        // the trusted theorem settles typicality even when the machine search is inconclusive
        res.verdict.tag = Verdict::Tag::TypicalCertified;
        res.verdict.certificates.insert(res.verdict.certificates.begin(), *trusted);
    }
    return res;
}

}  // namespace jacpair
