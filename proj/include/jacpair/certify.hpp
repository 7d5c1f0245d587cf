#pragma once

#include "jacpair/edgecheck.hpp"
#include "jacpair/homogeneous.hpp"
#include "jacpair/interval.hpp"
#include "jacpair/newton.hpp"
#include "jacpair/resultant.hpp"

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace jacpair {

struct Point {
    Rational x, y;
};

struct CertifyConfig {
    Rational grid_halfwidth = 10;   // 41x41 grid on [-10,10]^2 at step 1/2
    Rational grid_step = Rational(1, 2);
    int random_points = 200;
    int random_max_denominator = 16;
    std::uint64_t seed = 0x4A4143;  // "JAC"
    std::vector<Rational> pencil_mus = {Rational(0),  Rational(1),        Rational(-1),
                                        Rational(2),  Rational(-2),       Rational(1, 2),
                                        Rational(-1, 2), Rational(3)};
    int xi_bound = 12;              // vertex-parity search: primitive |coords| <= bound
    int refine_depth = 64;          // bisection cap for critical-point search
    int max_degree_for_critical_points = 12;
    int resultant_degree_cap = 60;
};

struct SampleSummary {
    long long positive = 0, negative = 0, zeros = 0;
    std::optional<Point> zero_point;  // first exact zero seen, if any
};

/// Sign classification of a polynomial; witnesses are exact.
struct SignStatus {
    enum class Tag { PositiveConstant, NegativeConstant, IdenticallyZero, SignChanges,
                     UndecidedNonconstant };
    Tag tag;
    std::optional<Point> positive_witness, negative_witness;
    Rational positive_value, negative_value;
    SampleSummary summary;
};

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct WitnessPair {
    Point positive, negative;
    Rational positive_value, negative_value;
};

struct Znak0Cert {
    UniPoly F, G, H;              // f = x F(xy), g = y G(xy), H = t F G
    RationalInterval nonzero_root;
    WitnessPair witnesses;        // points where Jac = H'(xy) takes both signs
    bool swapped = false;         // roles of (f, g) swapped
    bool transposed = false;      // applied to the transposed pair
};

struct ZnakCert {
    Rational a, b;   // f^xi = a*y*(xy - b)^2 for xi = (-1, 1)
    long long l_g;   // support value of g in direction xi (= -1)
    bool swapped = false;
    bool transposed = false;
};

struct VertexParityCert {
    Monomial alpha, beta;
    Direction xi;
};

struct HrcCert {
    Monomial endpoint_one;   // (1, 0)
    Monomial endpoint_ab;    // (a, b), a > 1, b > 0
    std::string component;   // which variant's polygon the edge lives on
    bool swapped = false;
    bool transposed = false;
};

struct EdgeEvidence {
    Monomial from, to;
    Direction normal;
    int interior_points = 0;
    std::string reduction;  // F as text
    bool degenerate = false;
};

struct InfTypicalCert {
    std::string candidate;            // "f", "g" or "f+mu*g"
    std::optional<Rational> mu;
    std::vector<EdgeEvidence> edges;  // all outer edges, each non-degenerate
    std::string critical_point_note;
};

struct InfinityPoint {
    bool at_x_zero = false;        // the projective point (0:1)
    std::optional<Rational> root;  // rational root of F(1,t), if exact
    RationalInterval root_interval;
    int multiplicity = 0;
};

struct OneRealBranchCert {
    std::string candidate;
    std::optional<Rational> mu;
    std::string leading_form;
    std::vector<InfinityPoint> points;  // exactly one, multiplicity 1
};

struct CriticalPointCert {
    Point at;               // exact common zero of both partials of the pencil member
    std::string candidate;  // the member that has the critical point
    std::optional<Rational> mu;
};

struct DirectWitnessCert {
    bool identically_zero = false;
    std::optional<WitnessPair> sign_witnesses;
    std::optional<Point> zero_point;  // exact zero of the Jacobian
};

struct TrustedFactCert {
    std::string statement;
    std::string source;
};

struct Certificate {
    enum class Kind { Znak0, Znak, VertexParity, Hrc, InfTypical, OneRealBranchAtInfinity,
                      CriticalPoint, DirectWitness, TrustedFact };
    Kind kind;
    std::variant<Znak0Cert, ZnakCert, VertexParityCert, HrcCert, InfTypicalCert,
                 OneRealBranchCert, CriticalPointCert, DirectWitnessCert, TrustedFactCert>
        payload;
};

struct Verdict {
    enum class Tag { TypicalCertified, NotAJacobianPair, Inconclusive };
    Tag tag = Tag::Inconclusive;
    std::vector<Certificate> certificates;
    std::vector<std::string> trace;
};

// ---------------------------------------------------------------------------
// Sign status
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Point> sign_scan_points(const CertifyConfig& cfg) {
    std::vector<Point> pts;
    // grid on [-H, H]^2, sorted by distance from the origin (x then y descending on ties)
    Int steps = floor_rat(cfg.grid_halfwidth / cfg.grid_step);
    long long n = steps.convert_to<long long>();
    for (long long a = -n; a <= n; ++a)
        for (long long b = -n; b <= n; ++b)
            pts.push_back({Rational(a) * cfg.grid_step, Rational(b) * cfg.grid_step});
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        Rational dp = p.x * p.x + p.y * p.y, dq = q.x * q.x + q.y * q.y;
        if (dp != dq) return dp < dq;
        if (p.x != q.x) return p.x > q.x;
        return p.y > q.y;
    });
    // seeded random rational points with bounded denominators
    std::mt19937_64 rng(cfg.seed);
    long long hw = floor_rat(cfg.grid_halfwidth).convert_to<long long>();
    std::uniform_int_distribution<long long> den(1, cfg.random_max_denominator);
    for (int k = 0; k < cfg.random_points; ++k) {
        long long d1 = den(rng), d2 = den(rng);
        std::uniform_int_distribution<long long> num1(-hw * d1, hw * d1);
        std::uniform_int_distribution<long long> num2(-hw * d2, hw * d2);
        pts.push_back({Rational(num1(rng), d1), Rational(num2(rng), d2)});
    }
    return pts;
}

}  // namespace detail

/// Exact classification for constants; otherwise an exact-evaluation scan over
/// the configured grid plus seeded random points.
inline SignStatus jacobian_sign_status(const Poly2& J, const CertifyConfig& cfg = {}) {
    SignStatus st{};
    if (J.is_zero()) {
        st.tag = SignStatus::Tag::IdenticallyZero;
        return st;
    }
    if (J.is_constant()) {
        Rational c = J.constant_term();
        st.tag = c > 0 ? SignStatus::Tag::PositiveConstant : SignStatus::Tag::NegativeConstant;
        return st;
    }
    for (const Point& p : detail::sign_scan_points(cfg)) {
        Rational v = J.eval(p.x, p.y);
        int s = sign(v);
        if (s > 0) {
            ++st.summary.positive;
            if (!st.positive_witness) {
                st.positive_witness = p;
                st.positive_value = v;
            }
        } else if (s < 0) {
            ++st.summary.negative;
            if (!st.negative_witness) {
                st.negative_witness = p;
                st.negative_value = v;
            }
        } else {
            ++st.summary.zeros;
            if (!st.summary.zero_point) st.summary.zero_point = p;
        }
        if (st.positive_witness && st.negative_witness) break;
    }
    st.tag = (st.positive_witness && st.negative_witness) ? SignStatus::Tag::SignChanges
                                                          : SignStatus::Tag::UndecidedNonconstant;
    return st;
}

// ---------------------------------------------------------------------------
// Lemma-based exclusions
// ---------------------------------------------------------------------------

namespace detail {

/// f = x*F(xy) iff supp(f) is contained in {(k+1, k)}.
inline std::optional<UniPoly> extract_diagonal(const Poly2& f, bool x_side) {
    if (f.is_zero()) return std::nullopt;
    std::vector<Rational> cs;
    for (const auto& [m, c] : f.terms()) {
        int k = x_side ? m.j : m.i;
        int expect_i = x_side ? k + 1 : k;
        int expect_j = x_side ? k : k + 1;
        if (m.i != expect_i || m.j != expect_j) return std::nullopt;
        if (static_cast<int>(cs.size()) <= k) cs.resize(k + 1, Rational(0));
        cs[k] = c;
    }
    return UniPoly::from_coeffs(std::move(cs));
}

/// Exact points with H'(t) of both signs; exists whenever H has two distinct real roots.
inline std::optional<std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>>
derivative_sign_points(const UniPoly& H) {
    UniPoly dH = H.derivative();
    if (dH.is_zero()) return std::nullopt;
    std::vector<Rational> samples;
    Rational b = root_bound(dH);
    samples.push_back(-b);
    samples.push_back(b);
    auto roots = isolate_real_roots(dH);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k)
        samples.push_back((roots[k].hi + roots[k + 1].lo) / 2);
    std::optional<std::pair<Rational, Rational>> pos, neg;
    for (const auto& t : samples) {
        Rational v = dH.eval(t);
        if (v > 0 && !pos) pos = {t, v};
        if (v < 0 && !neg) neg = {t, v};
    }
    if (pos && neg) return std::make_pair(*pos, *neg);
    return std::nullopt;
}

}  // namespace detail

/// Lemma machinery for f = x F(xy), g = y G(xy): a nonzero real root of F*G
/// forces a Jacobian sign change (Jac = H'(xy) for H = t F G).
inline std::optional<Certificate> znak0_sign_change(const Poly2& f, const Poly2& g) {
    auto F = detail::extract_diagonal(f, true);
    auto G = detail::extract_diagonal(g, false);
    if (!F || !G) return std::nullopt;
    UniPoly FG = *F * *G;
    if (FG.degree() < 1) return std::nullopt;
    UniPoly sf = squarefree_part(FG);
    std::optional<RationalInterval> nonzero_root;
    for (const auto& iv : isolate_real_roots(sf)) {
        if (iv.contains(Rational(0)) && sf.eval(0) == 0) continue;  // the root is t = 0
        RationalInterval r = iv;
        while (r.contains(Rational(0))) r = refine_isolating_interval(sf, r);
        nonzero_root = r;
        break;
    }
    if (!nonzero_root) return std::nullopt;
    UniPoly H = UniPoly::t() * FG;
    auto sp = detail::derivative_sign_points(H);
    if (!sp) return std::nullopt;  // cannot happen: H has roots 0 and the nonzero root
    Znak0Cert cert;
    cert.F = *F;
    cert.G = *G;
    cert.H = H;
    cert.nonzero_root = *nonzero_root;
    cert.witnesses = WitnessPair{{sp->first.first, Rational(1)},
                                 {sp->second.first, Rational(1)},
                                 sp->first.second,
                                 sp->second.second};
    return Certificate{Certificate::Kind::Znak0, cert};
}

/// Lemma machinery for xi = (-1,1): f^xi = a y (xy-b)^2 with b != 0 and
/// l(Delta_g, xi) = -1 force a Jacobian sign change.
inline std::optional<Certificate> znak_sign_change(const Poly2& f, const Poly2& g) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    const Direction xi{-1, 1};
    Poly2 r = face_restriction(f, xi);
    Rational a = r.coeff(2, 3);
    if (a == 0) return std::nullopt;
    for (const auto& [m, c] : r.terms())
        if (!(m == Monomial{2, 3} || m == Monomial{1, 2} || m == Monomial{0, 1}))
            return std::nullopt;
    Rational b = -r.coeff(1, 2) / (2 * a);
    if (b == 0) return std::nullopt;
    if (r.coeff(0, 1) != a * b * b) return std::nullopt;
    if (support_value(newton_polygon(g), xi) != -1) return std::nullopt;
    return Certificate{Certificate::Kind::Znak, ZnakCert{a, b, -1}};
}

/// Lemma machinery: vertex faces alpha, beta, linearly independent, with an even
/// coordinate in alpha + beta force a Jacobian sign change.
inline std::optional<Certificate> vertex_parity_sign_change(const Poly2& f, const Poly2& g,
                                                            const Direction& xi) {
    if (xi.is_zero()) throw std::invalid_argument("vertex_parity_sign_change: zero direction");
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    Face ff = face(newton_polygon(f), xi);
    Face fg = face(newton_polygon(g), xi);
    if (!ff.is_vertex() || !fg.is_vertex()) return std::nullopt;
    Monomial alpha = ff.points[0], beta = fg.points[0];
    long long det = static_cast<long long>(alpha.i) * beta.j - static_cast<long long>(alpha.j) * beta.i;
    if (det == 0) return std::nullopt;
    if ((alpha.i + beta.i) % 2 != 0 && (alpha.j + beta.j) % 2 != 0) return std::nullopt;
    return Certificate{Certificate::Kind::VertexParity, VertexParityCert{alpha, beta, xi}};
}

/// Lemma machinery: an outer edge with endpoints (1,0), (a,b), a > 1, b > 0 and no
/// other lattice points rules out any Jacobian pair with this Newton polygon.
inline std::optional<Certificate> hrc_excludes(const Poly2& f) {
    if (f.is_zero()) throw std::domain_error("hrc_excludes of zero");
    LatticePolygon poly = newton_polygon(f);
    if (poly.size() < 2) return std::nullopt;
    for (const Face& e : outer_edges(poly)) {
        const Monomial lo = e.points[0], hi = e.points[1];
        Monomial one{1, 0}, ab;
        if (lo == one)
            ab = hi;
        else if (hi == one)
            ab = lo;
        else
            continue;
        if (ab.i > 1 && ab.j > 0 && edge_lattice_length(e) == 1)
            return Certificate{Certificate::Kind::Hrc, HrcCert{one, ab, "f"}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Critical points
// ---------------------------------------------------------------------------

struct CriticalPointAnswer {
    enum class Status { DecidedNone, DecidedFound, Undecided };
    Status status = Status::Undecided;
    std::optional<Point> witness;  // exact, when found
    std::vector<std::string> trace;
};

namespace detail {

struct RootRep {
    std::optional<Rational> exact;
    RationalInterval interval;
};

inline std::vector<RootRep> root_candidates(const UniPoly& r, int depth) {
    std::vector<RootRep> out;
    UniPoly sf = squarefree_part(r);
    if (sf.degree() < 1) return out;
    for (const auto& iv : isolate_real_roots(sf)) {
        RootRep rep;
        rep.interval = iv;
        rep.exact = find_rational_root_in(sf, iv, std::min(depth, 24));
        if (rep.exact) rep.interval = RationalInterval(*rep.exact, *rep.exact);
        out.push_back(rep);
    }
    return out;
}

}  // namespace detail

/// Semi-decision for the existence of a real solution of grad f = 0: resultant
/// projections, isolated candidate boxes, exact interval exclusion, and exact
/// rational witnesses when the coordinates are rational. Depth-capped.
inline CriticalPointAnswer no_critical_points(const Poly2& f, int depth,
                                              const CertifyConfig& cfg = {}) {
    if (f.is_zero() || f.is_constant())
        throw std::domain_error("no_critical_points expects a nonconstant polynomial");
    CriticalPointAnswer ans;
    Poly2 P = f.derivative(Var::X), Q = f.derivative(Var::Y);

    // quick exact probe at small rational points
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            if (P.eval(a, b) == 0 && Q.eval(a, b) == 0) {
                ans.status = CriticalPointAnswer::Status::DecidedFound;
                ans.witness = Point{Rational(a), Rational(b)};
                ans.trace.push_back("exact critical point found by probing");
                return ans;
            }

    // root_var: the variable the surviving partial actually depends on
    auto univariate_case = [&](const Poly2& nonzero_partial, Var root_var) {
        auto cs = coefficients_in(nonzero_partial, root_var == Var::X ? Var::Y : Var::X);
        if (cs.size() != 1) {
            ans.status = CriticalPointAnswer::Status::Undecided;
            ans.trace.push_back("degenerate partial structure");
            return;
        }
        UniPoly u = cs[0];
        if (sturm_count_real_roots(u) == 0) {
            ans.status = CriticalPointAnswer::Status::DecidedNone;
            ans.trace.push_back("single nonzero partial has no real roots");
            return;
        }
        UniPoly sf = squarefree_part(u);
        for (const auto& iv : isolate_real_roots(sf)) {
            if (auto r = find_rational_root_in(sf, iv, depth)) {
                ans.status = CriticalPointAnswer::Status::DecidedFound;
                ans.witness = root_var == Var::X ? Point{*r, Rational(0)} : Point{Rational(0), *r};
                return;
            }
        }
        ans.status = CriticalPointAnswer::Status::DecidedFound;
        ans.trace.push_back("critical line with irrational coordinate");
        return;
    };

    if (P.is_zero() && Q.is_zero()) throw std::domain_error("constant polynomial");
    if (P.is_zero()) {
        // f depends only on y; critical points are the real zeros of Q(y)
        univariate_case(Q, Var::Y);
        return ans;
    }
    if (Q.is_zero()) {
        univariate_case(P, Var::X);
        return ans;
    }
    if (P.is_constant() || Q.is_constant()) {
        ans.status = CriticalPointAnswer::Status::DecidedNone;
        ans.trace.push_back("a partial derivative is a nonzero constant");
        return ans;
    }
    if (f.total_degree() > cfg.max_degree_for_critical_points) {
        ans.trace.push_back("degree cap for the critical-point search");
        return ans;
    }
    // resultant degree guard
    long long cost = static_cast<long long>(P.degree_in(Var::X)) * Q.degree_in(Var::Y) +
                     static_cast<long long>(Q.degree_in(Var::X)) * P.degree_in(Var::Y);
    if (cost > cfg.resultant_degree_cap) {
        ans.trace.push_back("resultant degree cap");
        return ans;
    }

    Poly2 r1p = resultant(P, Q, Var::Y);  // polynomial in x
    Poly2 r2p = resultant(P, Q, Var::X);  // polynomial in y
    if (r1p.is_zero() || r2p.is_zero()) {
        ans.trace.push_back("partials share a factor; projection degenerate");
        return ans;
    }
    auto r1c = coefficients_in(r1p, Var::Y);
    auto r2c = coefficients_in(r2p, Var::X);
    UniPoly R1 = r1c.size() == 1 ? r1c[0] : UniPoly();
    UniPoly R2 = r2c.size() == 1 ? r2c[0] : UniPoly();
    if (r1c.size() != 1 || r2c.size() != 1) {
        ans.trace.push_back("unexpected mixed resultant");
        return ans;
    }
    auto xs = detail::root_candidates(R1, depth);
    auto ys = detail::root_candidates(R2, depth);
    if (xs.empty() || ys.empty()) {
        ans.status = CriticalPointAnswer::Status::DecidedNone;
        ans.trace.push_back("a resultant projection has no real roots");
        return ans;
    }
    UniPoly sf1 = squarefree_part(R1), sf2 = squarefree_part(R2);
    struct Box {
        detail::RootRep x, y;
    };
    std::vector<Box> boxes;
    for (const auto& xr : xs)
        for (const auto& yr : ys) boxes.push_back({xr, yr});
    for (int round = 0; round <= depth && !boxes.empty(); ++round) {
        std::vector<Box> next;
        for (auto& box : boxes) {
            if (box.x.exact && box.y.exact) {
                if (P.eval(*box.x.exact, *box.y.exact) == 0 &&
                    Q.eval(*box.x.exact, *box.y.exact) == 0) {
                    ans.status = CriticalPointAnswer::Status::DecidedFound;
                    ans.witness = Point{*box.x.exact, *box.y.exact};
                    return ans;
                }
                // exact pair but not a common zero: spurious pairing
                continue;
            }
            RationalInterval X = box.x.interval, Y = box.y.interval;
            if (!iv_contains_zero(eval_box(P, X, Y)) || !iv_contains_zero(eval_box(Q, X, Y)))
                continue;
            if (round == depth) {
                next.push_back(box);
                continue;
            }
            if (!box.x.exact) box.x.interval = refine_isolating_interval(sf1, box.x.interval);
            if (!box.y.exact) box.y.interval = refine_isolating_interval(sf2, box.y.interval);
            next.push_back(std::move(box));
        }
        boxes = std::move(next);
    }
    if (boxes.empty()) {
        ans.status = CriticalPointAnswer::Status::DecidedNone;
        ans.trace.push_back("all candidate boxes excluded by exact interval evaluation");
    } else {
        ans.trace.push_back("candidate boxes undecided at depth cap");
    }
    return ans;
}

// ---------------------------------------------------------------------------
// Typicality certificates
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<InfTypicalCert> inf_typical_impl(const Poly2& f,
                                                      const CriticalPointAnswer& ncp) {
    if (f.is_zero() || f.is_constant()) return std::nullopt;
    if (!is_convenient(f)) return std::nullopt;
    if (ncp.status != CriticalPointAnswer::Status::DecidedNone) return std::nullopt;
    InfTypicalCert cert;
    for (const Face& e : outer_edges(newton_polygon(f))) {
        DegeneracyCheck chk = is_degenerate_on_edge(f, e);
        EdgeEvidence ev;
        ev.from = e.points[0];
        ev.to = e.points[1];
        ev.normal = primitive(e.dir);
        ev.interior_points = static_cast<int>(edge_interior_lattice_points(e).size());
        ev.reduction = chk.reduction.uni.str("s");
        ev.degenerate = chk.degenerate;
        cert.edges.push_back(std::move(ev));
        if (chk.degenerate) return std::nullopt;
    }
    cert.critical_point_note =
        ncp.trace.empty() ? "no critical points" : ncp.trace.front();
    return cert;
}

}  // namespace detail

/// Convenient + no critical points + non-degenerate on every outer edge implies
/// connected level sets, hence a typical pair.
inline std::optional<Certificate> inf_typical(const Poly2& f, int depth,
                                              const CertifyConfig& cfg = {}) {
    if (f.is_zero() || f.is_constant())
        throw std::domain_error("inf_typical expects a nonconstant polynomial");
    if (!is_convenient(f)) return std::nullopt;
    auto ncp = no_critical_points(f, depth, cfg);
    auto cert = detail::inf_typical_impl(f, ncp);
    if (!cert) return std::nullopt;
    cert->candidate = "f";
    return Certificate{Certificate::Kind::InfTypical, *cert};
}

/// Real points of a homogeneous form on the line at infinity, with multiplicities:
/// roots of F(1,t) plus the point x = 0 with the multiplicity of the factor x.
inline std::vector<InfinityPoint> infinity_real_points(const Poly2& F) {
    if (F.is_zero() || !is_homogeneous(F))
        throw std::invalid_argument("infinity_real_points expects a nonzero homogeneous form");
    std::vector<InfinityPoint> out;
    UniPoly u = dehomogenize(F);
    int xmult = F.total_degree() - u.degree();
    if (u.degree() >= 1) {
        for (const auto& [factor, mult] : squarefree_decomposition(u)) {
            if (factor.degree() < 1) continue;
            for (const auto& iv : isolate_real_roots(factor)) {
                InfinityPoint pt;
                pt.root_interval = iv;
                pt.root = find_rational_root_in(factor, iv, 24);
                pt.multiplicity = mult;
                out.push_back(std::move(pt));
            }
        }
    }
    if (xmult >= 1) {
        InfinityPoint pt;
        pt.at_x_zero = true;
        pt.multiplicity = xmult;
        out.push_back(std::move(pt));
    }
    return out;
}

inline bool one_real_branch_at_infinity(const std::vector<InfinityPoint>& pts) {
    return pts.size() == 1 && pts.front().multiplicity == 1;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

namespace detail {

struct Candidate {
    std::string label;
    std::optional<Rational> mu;
    Poly2 poly;
};

inline std::vector<Candidate> pencil_candidates(const Poly2& f, const Poly2& g,
                                                const CertifyConfig& cfg) {
    std::vector<Candidate> out;
    out.push_back({"f", std::nullopt, f});
    out.push_back({"g", std::nullopt, g});
    for (const auto& mu : cfg.pencil_mus) {
        if (mu == 0) continue;  // mu = 0 is f itself
        out.push_back({"f+mu*g", mu, f + mu * g});
    }
    return out;
}

}  // namespace detail

/// Full certification driver: Jacobian sign status, lemma-based exclusions over
/// the pair and its transposes, then typicality certificates over pencil members.
inline Verdict certify_typical(const Poly2& f, const Poly2& g, const CertifyConfig& cfg = {}) {
    Verdict v;
    auto conclude = [&](Verdict::Tag tag, Certificate cert) {
        v.tag = tag;
        v.certificates.push_back(std::move(cert));
        return v;
    };

    Poly2 J = jacobian_det(f, g);
    SignStatus st = jacobian_sign_status(J, cfg);
    switch (st.tag) {
        case SignStatus::Tag::IdenticallyZero:
            v.trace.push_back("Jac(f,g) = 0");
            return conclude(Verdict::Tag::NotAJacobianPair,
                            Certificate{Certificate::Kind::DirectWitness,
                                        DirectWitnessCert{true, std::nullopt, std::nullopt}});
        case SignStatus::Tag::SignChanges: {
            v.trace.push_back("Jacobian sign change found by exact sampling");
            DirectWitnessCert c;
            c.sign_witnesses = WitnessPair{*st.positive_witness, *st.negative_witness,
                                           st.positive_value, st.negative_value};
            return conclude(Verdict::Tag::NotAJacobianPair,
                            Certificate{Certificate::Kind::DirectWitness, c});
        }
        case SignStatus::Tag::PositiveConstant:
        case SignStatus::Tag::NegativeConstant:
            v.trace.push_back("Jac(f,g) is a nonzero constant: verified Jacobian pair");
            break;
        case SignStatus::Tag::UndecidedNonconstant:
            if (st.summary.zero_point) {
                v.trace.push_back("Jacobian vanishes at an exact sample point");
                DirectWitnessCert c;
                c.zero_point = st.summary.zero_point;
                return conclude(Verdict::Tag::NotAJacobianPair,
                                Certificate{Certificate::Kind::DirectWitness, c});
            }
            v.trace.push_back("Jacobian nonconstant; sign-constant on all samples");
            break;
    }

    // Exclusions (sound for the original pair under swaps and transposition).
    struct Variant {
        std::string tag;
        Poly2 a, b;
        bool swapped, transposed;
    };
    const Poly2 ft = f.transposed(), gt = g.transposed();
    std::vector<Variant> variants = {{"(f,g)", f, g, false, false},
                                     {"(g,f)", g, f, true, false},
                                     {"(f^T,g^T)", ft, gt, false, true},
                                     {"(g^T,f^T)", gt, ft, true, true}};
    for (const auto& var : variants) {
        if (var.a.is_zero()) continue;
        if (auto c = hrc_excludes(var.a)) {
            auto& payload = std::get<HrcCert>(c->payload);
            payload.component = var.tag;
            payload.swapped = var.swapped;
            payload.transposed = var.transposed;
            v.trace.push_back("outer-edge criterion applies to " + var.tag);
            return conclude(Verdict::Tag::NotAJacobianPair, *c);
        }
    }
    for (const auto& var : variants) {
        if (auto c = znak0_sign_change(var.a, var.b)) {
            auto& payload = std::get<Znak0Cert>(c->payload);
            payload.swapped = var.swapped;
            payload.transposed = var.transposed;
            v.trace.push_back("diagonal-pencil sign change on " + var.tag);
            return conclude(Verdict::Tag::NotAJacobianPair, *c);
        }
    }
    for (const auto& var : variants) {
        if (auto c = znak_sign_change(var.a, var.b)) {
            auto& payload = std::get<ZnakCert>(c->payload);
            payload.swapped = var.swapped;
            payload.transposed = var.transposed;
            v.trace.push_back("face-pattern sign change on " + var.tag);
            return conclude(Verdict::Tag::NotAJacobianPair, *c);
        }
    }
    if (!f.is_zero() && !g.is_zero()) {
        std::vector<Direction> xis;
        for (int a = -cfg.xi_bound; a <= cfg.xi_bound; ++a)
            for (int b = -cfg.xi_bound; b <= cfg.xi_bound; ++b) {
                Direction d{a, b};
                if (!d.is_zero() && is_primitive(d)) xis.push_back(d);
            }
        for (int n = 1; n <= cfg.xi_bound; ++n) xis.push_back({n, n + 1});
        for (const auto& xi : xis) {
            if (auto c = vertex_parity_sign_change(f, g, xi)) {
                v.trace.push_back("vertex parity certificate");
                return conclude(Verdict::Tag::NotAJacobianPair, *c);
            }
        }
    }

    // Typicality over pencil members.
    auto candidates = detail::pencil_candidates(f, g, cfg);
    std::vector<std::optional<CriticalPointAnswer>> ncps(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& cand = candidates[k];
        if (cand.poly.is_zero() || cand.poly.is_constant()) {
            v.trace.push_back(cand.label + ": constant, skipped");
            continue;
        }
        ncps[k] = no_critical_points(cand.poly, cfg.refine_depth, cfg);
        const auto& ncp = *ncps[k];
        if (ncp.status == CriticalPointAnswer::Status::DecidedFound && ncp.witness) {
            Rational jval = J.eval(ncp.witness->x, ncp.witness->y);
            if (jval == 0) {
                v.trace.push_back(cand.label + ": critical point, Jacobian vanishes there");
                CriticalPointCert c{*ncp.witness, cand.label, cand.mu};
                return conclude(Verdict::Tag::NotAJacobianPair,
                                Certificate{Certificate::Kind::CriticalPoint, c});
            }
            v.trace.push_back(cand.label + ": critical point but nonzero Jacobian (inconsistent)");
            continue;
        }
        if (ncp.status != CriticalPointAnswer::Status::DecidedNone) {
            v.trace.push_back(cand.label + ": critical-point search undecided");
            continue;
        }
        if (auto cert = detail::inf_typical_impl(cand.poly, ncp)) {
            cert->candidate = cand.label;
            cert->mu = cand.mu;
            v.trace.push_back(cand.label + ": convenient, critical-point free, non-degenerate");
            return conclude(Verdict::Tag::TypicalCertified,
                            Certificate{Certificate::Kind::InfTypical, *cert});
        }
        v.trace.push_back(cand.label + ": connectivity-by-nondegeneracy not applicable");
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& cand = candidates[k];
        if (!ncps[k] || ncps[k]->status != CriticalPointAnswer::Status::DecidedNone) continue;
        Poly2 lf = cand.poly.leading_form();
        auto pts = infinity_real_points(lf);
        if (one_real_branch_at_infinity(pts)) {
            OneRealBranchCert c;
            c.candidate = cand.label;
            c.mu = cand.mu;
            c.leading_form = format_poly(lf);
            c.points = pts;
            v.trace.push_back(cand.label + ": one real branch at infinity");
            return conclude(Verdict::Tag::TypicalCertified,
                            Certificate{Certificate::Kind::OneRealBranchAtInfinity, c});
        }
    }
    v.trace.push_back("no certificate applies; inconclusive");
    v.tag = Verdict::Tag::Inconclusive;
    return v;
}

// ---------------------------------------------------------------------------
// Certificate verification
// ---------------------------------------------------------------------------

namespace detail {

inline std::pair<Poly2, Poly2> variant_pair(const Poly2& f, const Poly2& g, bool swapped,
                                            bool transposed) {
    Poly2 a = f, b = g;
    if (transposed) {
        a = a.transposed();
        b = b.transposed();
    }
    if (swapped) std::swap(a, b);
    return {a, b};
}

inline std::optional<Poly2> candidate_poly(const Poly2& f, const Poly2& g,
                                           const std::string& label,
                                           const std::optional<Rational>& mu) {
    if (label == "f") return f;
    if (label == "g") return g;
    if (mu) return f + *mu * g;
    return std::nullopt;
}

}  // namespace detail

/// Re-checks a certificate against the pair it was issued for, from scratch.
inline bool verify_certificate(const Certificate& cert, const Poly2& f, const Poly2& g,
                               const CertifyConfig& cfg = {}) {
    switch (cert.kind) {
        case Certificate::Kind::Znak0: {
            const auto& c = std::get<Znak0Cert>(cert.payload);
            auto [a, b] = detail::variant_pair(f, g, c.swapped, c.transposed);
            auto F = detail::extract_diagonal(a, true);
            auto G = detail::extract_diagonal(b, false);
            if (!F || !G || !(*F == c.F) || !(*G == c.G)) return false;
            if (!(c.H == UniPoly::t() * *F * *G)) return false;
            // Jac(a, b) must equal H'(xy), symbolically
            UniPoly dH = c.H.derivative();
            Poly2 expected;
            Poly2 xy = Poly2::term(1, 1, 1);
            for (int k = 0; k <= dH.degree(); ++k)
                if (dH.coeff(k) != 0) expected += dH.coeff(k) * xy.pow(static_cast<unsigned>(k));
            if (!(jacobian_det(a, b) == expected)) return false;
            // the nonzero root interval really isolates a nonzero root of F*G
            UniPoly FG = *F * *G;
            if (c.nonzero_root.contains(Rational(0))) return false;
            if (sturm_count_real_roots(FG, c.nonzero_root) < 1) return false;
            // exact sign witnesses for the Jacobian of the variant pair
            Poly2 Jab = jacobian_det(a, b);
            return Jab.eval(c.witnesses.positive.x, c.witnesses.positive.y) ==
                       c.witnesses.positive_value &&
                   Jab.eval(c.witnesses.negative.x, c.witnesses.negative.y) ==
                       c.witnesses.negative_value &&
                   c.witnesses.positive_value > 0 && c.witnesses.negative_value < 0;
        }
        case Certificate::Kind::Znak: {
            const auto& c = std::get<ZnakCert>(cert.payload);
            auto [a, b] = detail::variant_pair(f, g, c.swapped, c.transposed);
            if (a.is_zero() || b.is_zero()) return false;
            const Direction xi{-1, 1};
            Poly2 expected = c.a * (Poly2::variable(Var::Y) *
                                    (Poly2::term(1, 1, 1) - Poly2::constant(c.b)).pow(2));
            if (!(face_restriction(a, xi) == expected)) return false;
            if (c.b == 0 || c.a == 0) return false;
            return support_value(newton_polygon(b), xi) == -1 && c.l_g == -1;
        }
        case Certificate::Kind::VertexParity: {
            const auto& c = std::get<VertexParityCert>(cert.payload);
            if (f.is_zero() || g.is_zero()) return false;
            Face ff = face(newton_polygon(f), c.xi);
            Face fg = face(newton_polygon(g), c.xi);
            if (!ff.is_vertex() || !fg.is_vertex()) return false;
            if (!(ff.points[0] == c.alpha) || !(fg.points[0] == c.beta)) return false;
            long long det = static_cast<long long>(c.alpha.i) * c.beta.j -
                            static_cast<long long>(c.alpha.j) * c.beta.i;
            if (det == 0) return false;
            return (c.alpha.i + c.beta.i) % 2 == 0 || (c.alpha.j + c.beta.j) % 2 == 0;
        }
        case Certificate::Kind::Hrc: {
            const auto& c = std::get<HrcCert>(cert.payload);
            auto [a, b] = detail::variant_pair(f, g, c.swapped, c.transposed);
            if (a.is_zero()) return false;
            LatticePolygon poly = newton_polygon(a);
            if (poly.size() < 2) return false;
            for (const Face& e : outer_edges(poly)) {
                if (!((e.points[0] == c.endpoint_one && e.points[1] == c.endpoint_ab) ||
                      (e.points[1] == c.endpoint_one && e.points[0] == c.endpoint_ab)))
                    continue;
                return c.endpoint_one == Monomial{1, 0} && c.endpoint_ab.i > 1 &&
                       c.endpoint_ab.j > 0 && edge_lattice_length(e) == 1;
            }
            return false;
        }
        case Certificate::Kind::InfTypical: {
            const auto& c = std::get<InfTypicalCert>(cert.payload);
            auto p = detail::candidate_poly(f, g, c.candidate, c.mu);
            if (!p || p->is_zero() || p->is_constant()) return false;
            if (!is_convenient(*p)) return false;
            auto ncp = no_critical_points(*p, cfg.refine_depth, cfg);
            if (ncp.status != CriticalPointAnswer::Status::DecidedNone) return false;
            for (const Face& e : outer_edges(newton_polygon(*p)))
                if (is_degenerate_on_edge(*p, e).degenerate) return false;
            return true;
        }
        case Certificate::Kind::OneRealBranchAtInfinity: {
            const auto& c = std::get<OneRealBranchCert>(cert.payload);
            auto p = detail::candidate_poly(f, g, c.candidate, c.mu);
            if (!p || p->is_zero() || p->is_constant()) return false;
            auto ncp = no_critical_points(*p, cfg.refine_depth, cfg);
            if (ncp.status != CriticalPointAnswer::Status::DecidedNone) return false;
            return one_real_branch_at_infinity(infinity_real_points(p->leading_form()));
        }
        case Certificate::Kind::CriticalPoint: {
            const auto& c = std::get<CriticalPointCert>(cert.payload);
            auto p = detail::candidate_poly(f, g, c.candidate, c.mu);
            if (!p) return false;
            if (p->derivative(Var::X).eval(c.at.x, c.at.y) != 0) return false;
            if (p->derivative(Var::Y).eval(c.at.x, c.at.y) != 0) return false;
            return jacobian_det(f, g).eval(c.at.x, c.at.y) == 0;
        }
        case Certificate::Kind::DirectWitness: {
            const auto& c = std::get<DirectWitnessCert>(cert.payload);
            Poly2 J = jacobian_det(f, g);
            if (c.identically_zero) return J.is_zero();
            if (c.zero_point) return J.eval(c.zero_point->x, c.zero_point->y) == 0;
            if (!c.sign_witnesses) return false;
            const auto& w = *c.sign_witnesses;
            return J.eval(w.positive.x, w.positive.y) == w.positive_value &&
                   J.eval(w.negative.x, w.negative.y) == w.negative_value &&
                   w.positive_value > 0 && w.negative_value < 0;
        }
        case Certificate::Kind::TrustedFact:
            return true;  // literature-supplied, not machine-checked by construction
    }
    return false;
}

}  // namespace jacpair
