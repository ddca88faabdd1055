// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "quadrature.hpp"
#include "support.hpp"

#include "weaktile/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace wt_test;
using weaktile::LengthSemigroup;
using weaktile::PeriodicMeasure;
using weaktile::Piece;
using weaktile::Polytope;
using weaktile::TilingSystem;
using weaktile::Vec;
using weaktile::WeightedPieces;
using weaktile::io::Json;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct CliRun {
    int code;
    Json json;
};

CliRun cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "weaktile");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = weaktile::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, Json::parse(out.str())};
}

std::string inline_omega(const IntervalUnion& om)
{
    std::string s;
    for (const auto& c : om.components()) {
        s += (s.empty() ? "" : ";") + c.left().str() + "," + c.right().str();
    }
    return s;
}

// x in Theta(gens), by integer DP after clearing denominators
bool theta_member(const std::vector<Rational>& gens, const Rational& x)
{
    if (x.sign() < 0) {
        return false;
    }
    mpz_class l = x.denominator();
    for (const auto& g : gens) {
        l = weaktile::lcm(l, g.denominator());
    }
    std::vector<long> ig;
    for (const auto& g : gens) {
        ig.push_back((g * Rational(l)).numerator().get_si());
    }
    return brute_member(ig, (x * Rational(l)).numerator().get_si());
}

Rational pick(std::mt19937& rng, std::initializer_list<const char*> choices)
{
    std::vector<const char*> v(choices);
    return Q(v[rng() % v.size()]);
}

Polytope load(const std::string& name)
{
    return weaktile::io::polytope_from_json(
        weaktile::io::read_json_file(std::string(WEAKTILE_INSTANCES) + "/" + name + ".json"), "$");
}

// ---- criteria

Verdict single_interval_rigidity()
{
    const auto r = cli({"solve", "--omega", "0,1", "--period", "1"});
    if (r.code != 0 || r.json["solutions"].size() != 1) {
        return {false, "solve did not return exactly one solution"};
    }
    const PeriodicMeasure mu = weaktile::io::solution_from_json(r.json, "$");
    const bool exact = mu == PeriodicMeasure(Q("1"), {Atom{Q("0"), Q("1")}}) &&
                       r.json["solutions"][0]["kind"] == "Proper";
    // the expanded nu is exactly the unit atoms at Z \ {0}
    const auto nu = mu.expand(Q("-6"), Q("6"), false);
    bool z_minus_0 = nu.size() == 10;  // open range (-6, 6)
    for (const auto& a : nu.atoms()) {
        z_minus_0 = z_minus_0 && a.point.is_integer() && !a.point.is_zero() && a.weight == Rational(1);
    }
    // and it is the only periodic solution, even on a dense grid
    const TilingSystem dense(omega("0,1"), Q("1"), weaktile::dense_grid(Q("1"), 12));
    const auto w = dense.feasible_point();
    const bool unique = w && dense.is_unique(*w);
    const bool oracle = weak_tiling_oracle(omega("0,1"), nu.atoms(), Q("-4"), Q("4"));
    return {exact && z_minus_0 && unique && oracle,
            "mu = delta_0 periodized (nu = Z\\{0}), unique on the 1/12 grid, oracle " + std::string(oracle ? "ok" : "FAILED")};
}

Verdict gap_obstruction()
{
    std::mt19937 rng(2024);
    int certified = 0;
    int false_positive = 0;
    int instances = 0;
    while (instances < 200) {
        const std::size_t k = 2 + rng() % 2;
        std::vector<Rational> lengths;
        for (std::size_t i = 0; i < k; ++i) {
            lengths.push_back(pick(rng, {"1", "2", "3", "1/2", "3/2", "2/3", "4/3"}));
        }
        const std::size_t bad = rng() % (k - 1);
        std::vector<Rational> gaps;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            Rational g = pick(rng, {"1/4", "1/3", "1/2", "2/3", "3/4", "1", "5/4", "3/2", "5/3", "2", "5/2", "7/3", "3"});
            if (i == bad) {
                while (theta_member(lengths, g)) {
                    g = pick(rng, {"1/4", "1/3", "1/2", "2/3", "3/4", "5/4", "5/3", "7/4", "5/2", "7/3", "11/4"});
                }
            }
            gaps.push_back(g);
        }
        std::vector<Interval> parts;
        Rational x;
        for (std::size_t i = 0; i < k; ++i) {
            parts.emplace_back(x, x + lengths[i]);
            x += lengths[i] + (i + 1 < k ? gaps[i] : Rational(0));
        }
        const auto om = weaktile::normalize_union(parts);
        if (om.size() != k || theta_member(lengths, gaps[bad])) {
            continue;
        }
        ++instances;
        const std::string s = inline_omega(om);
        const auto c = cli({"check", "--omega", s});
        const auto v = cli({"solve", "--omega", s, "--sweep-periods", "1..6"});
        if (c.code == 2 && c.json["verdict"] == "NonWeakTiler") {
            ++certified;
        }
        if (v.code != 2 || !v.json["solutions"].empty()) {
            ++false_positive;
        }
    }
    return {certified == 200 && false_positive == 0,
            std::to_string(certified) + "/200 certified NonWeakTiler, " + std::to_string(false_positive) +
                " solve false positives over T = m|omega|, m = 1..6"};
}

struct TwoIntervalSuite {
    std::vector<IntervalUnion> instances;
};

TwoIntervalSuite unequal_suite()
{
    std::mt19937 rng(77);
    TwoIntervalSuite s;
    while (s.instances.size() < 100) {
        const Rational a = pick(rng, {"1", "2", "3", "1/2", "3/2", "5/2"});
        const Rational b = pick(rng, {"1", "2", "3", "1/2", "3/2", "5/2"});
        if (a == b) {
            continue;
        }
        const long p = static_cast<long>(rng() % 3);
        const long q = static_cast<long>(rng() % 3);
        if (p + q == 0) {
            continue;
        }
        const Rational g = Rational(p) * a + Rational(q) * b;
        const auto om = weaktile::normalize_union({Interval(Q("0"), a), Interval(a + g, a + g + b)});
        if (weaktile::gap_condition(om).non_weak_tiler) {
            continue;
        }
        s.instances.push_back(om);
    }
    return s;
}

Verdict unequal_properness(const TwoIntervalSuite& suite)
{
    int feasible_runs = 0;
    int instances_with_solution = 0;
    int bad = 0;
    for (const auto& om : suite.instances) {
        bool any = false;
        for (long m = 1; m <= 3; ++m) {
            const Rational t = Rational(m) * om.measure();
            const TilingSystem sys(om, t, weaktile::default_grid(om, t));
            const auto w = sys.feasible_point();
            if (!w) {
                continue;
            }
            any = true;
            ++feasible_runs;
            const bool zero_one = std::all_of(w->begin(), w->end(),
                                              [](const Rational& x) { return x.is_zero() || x == Rational(1); });
            // {0,1} for every feasible point: the point found is 0/1 and the feasible set is that single point
            if (!zero_one || !sys.is_unique(*w)) {
                ++bad;
            }
        }
        instances_with_solution += any ? 1 : 0;
    }
    return {bad == 0 && feasible_runs > 0,
            std::to_string(feasible_runs) + " feasible (instance, period) systems over " +
                std::to_string(instances_with_solution) + "/100 instances, all with a unique 0/1 solution; " +
                std::to_string(bad) + " violations"};
}

Verdict support_confinement(const TwoIntervalSuite& suite)
{
    int systems = 0;
    int feasible = 0;
    int leaks = 0;
    std::size_t off_points = 0;
    for (const auto& om : suite.instances) {
        for (long m = 1; m <= 3; ++m) {
            const Rational t = Rational(m) * om.measure();
            const auto base = weaktile::default_grid(om, t);
            const auto grid = weaktile::merge_grids(base, weaktile::dense_grid(t, 12));
            const TilingSystem sys(om, t, grid);
            std::vector<Rational> off(sys.grid().size(), Rational(0));
            // off-semigroup: not congruent to an element of Theta or -Theta
            const LengthSemigroup theta(om.lengths());
            for (std::size_t i = 0; i < sys.grid().size(); ++i) {
                const Rational& x = sys.grid()[i];
                bool on = false;
                for (long k = -3 * m; k <= 3 * m && !on; ++k) {
                    const Rational y = x + Rational(k) * t;
                    on = theta.contains(y) || theta.contains(-y);
                }
                if (!on) {
                    off[i] = Rational(1);
                    ++off_points;
                }
            }
            ++systems;
            const auto best = sys.maximize(off);
            if (!best) {
                continue;
            }
            ++feasible;
            if (!best->is_zero()) {
                ++leaks;
            }
        }
    }
    return {leaks == 0 && feasible > 0,
            std::to_string(systems) + " systems on the 1/12-refined grid, " + std::to_string(feasible) +
                " feasible; max total weight on " + std::to_string(off_points) +
                " off-semigroup grid points is exactly 0 in all but " + std::to_string(leaks)};
}

// A valid cover of (0, L): layers of chains with weights summing to 1.
std::vector<Piece> random_cover(std::mt19937& rng, Rational& len)
{
    const std::vector<Rational> ls{Q("1"), Q("3/2"), Q("2"), Q("5/2")};
    len = Rational(2 + static_cast<long>(rng() % 4));
    const std::size_t layers = 1 + rng() % 3;
    std::vector<Rational> weights;
    Rational left(1);
    for (std::size_t i = 0; i + 1 < layers; ++i) {
        const Rational w = left * Rational(1 + static_cast<long>(rng() % 3), 4);
        weights.push_back(w);
        left -= w;
    }
    weights.push_back(left);
    std::vector<Piece> ps;
    for (const auto& w : weights) {
        Rational x;
        while (x < len) {
            std::vector<Rational> ok;
            for (const auto& l : ls) {
                const Rational rest = len - x - l;
                if (rest.is_zero() || rest >= Rational(1)) {
                    ok.push_back(l);
                }
            }
            const Rational l = ok[rng() % ok.size()];
            ps.push_back(Piece{Interval(x, x + l), w});
            x += l;
        }
    }
    return ps;
}

std::vector<Rational> lengths_of(const std::vector<Piece>& ps)
{
    std::vector<Rational> out;
    for (const auto& p : ps) {
        out.push_back(p.interval.length());
    }
    return out;
}

// sum w_j 1_{I_j} == 1_{(0, L)} on every cell of (-1, L + 1)
bool cell_sum_is_cover(const std::vector<Piece>& ps, const Rational& len)
{
    std::set<Rational> cuts{Q("-1"), len + Rational(1), Q("0"), len};
    for (const auto& p : ps) {
        cuts.insert(p.interval.left());
        cuts.insert(p.interval.right());
    }
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
        const Rational mid = (*it + *std::next(it)) / Rational(2);
        Rational s;
        for (const auto& p : ps) {
            if (p.interval.contains_open(mid)) {
                s += p.weight;
            }
        }
        const Rational want = (Rational(0) < mid && mid < len) ? Rational(1) : Rational(0);
        if (s != want) {
            return false;
        }
    }
    return true;
}

Verdict scan_equivalence()
{
    std::mt19937 rng(99);
    int valid_ok = 0;
    int valid_n = 0;
    int mutated_agree = 0;
    int mutated_n = 0;
    int mutated_still_valid = 0;
    while (valid_n < 500) {
        Rational len;
        auto ps = random_cover(rng, len);
        if (ps.size() > 12) {
            continue;
        }
        ++valid_n;
        const Interval iv(Q("0"), len);
        try {
            const WeightedPieces w(ps, lengths_of(ps));
            const auto cert = weaktile::scan_cover(iv, w);
            const LengthSemigroup theta(w.lengths());
            const bool members = std::all_of(cert.breakpoints.begin(), cert.breakpoints.end(),
                                             [&](const Rational& x) { return theta.contains(x); });
            if (members && cell_sum_is_cover(ps, len)) {
                ++valid_ok;
            }
        } catch (const weaktile::ScanError&) {
        }
    }
    while (mutated_n < 500) {
        Rational len;
        auto ps = random_cover(rng, len);
        if (ps.size() > 12) {
            continue;
        }
        const std::size_t j = rng() % ps.size();
        switch (rng() % 4) {
        case 0:
            ps[j].weight += Rational(rng() % 2 ? 1 : -1, 8);
            if (ps[j].weight.sign() <= 0) {
                ps[j].weight = Rational(1, 16);
            }
            break;
        case 1:
            ps.erase(ps.begin() + static_cast<long>(j));
            break;
        case 2:
            ps[j].interval = ps[j].interval.translated(Rational(rng() % 2 ? 1 : -1, 2));
            break;
        default:
            ps.push_back(Piece{ps[j].interval, Rational(1, 4)});
            break;
        }
        if (ps.empty()) {
            continue;
        }
        const bool oracle_cover = cell_sum_is_cover(ps, len);
        if (oracle_cover) {
            ++mutated_still_valid;
            continue;
        }
        ++mutated_n;
        bool scan_cover_ok = true;
        try {
            const WeightedPieces w(ps, lengths_of(ps));
            weaktile::scan_cover(Interval(Q("0"), len), w);
        } catch (const weaktile::ScanError&) {
            scan_cover_ok = false;
        }
        mutated_agree += (scan_cover_ok == oracle_cover) ? 1 : 0;
    }
    return {valid_ok == 500 && mutated_agree == 500,
            "valid " + std::to_string(valid_ok) + "/500 certified with endpoints in Theta; mutated " +
                std::to_string(mutated_agree) + "/500 rejected, each confirmed non-cover by the cell-sum oracle (" +
                std::to_string(mutated_still_valid) + " mutations that stayed valid were redrawn)"};
}

Verdict venkov_mcmullen_corpus()
{
    const auto cube = weaktile::venkov_mcmullen(load("cube"));
    const auto hex = weaktile::venkov_mcmullen(load("hexagon"));
    const auto tri = weaktile::venkov_mcmullen(load("triangle"));
    const auto prism = weaktile::venkov_mcmullen(load("triangular_prism"));
    const auto rd = weaktile::venkov_mcmullen(load("rhombic_dodecahedron"));
    auto has = [](const std::vector<std::string>& v, const char* s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    std::set<std::size_t> rd_sizes;
    for (const auto& b : rd.belt_report.belts) {
        rd_sizes.insert(b.facets.size());
    }
    const bool rd_ok = rd.tiles() && std::all_of(rd_sizes.begin(), rd_sizes.end(),
                                                 [](std::size_t s) { return s == 4 || s == 6; });
    const bool ok = cube.tiles() && hex.tiles() && !tri.tiles() && has(tri.failed, "ii") && !prism.tiles() &&
                    has(prism.failed, "iii") && prism.facets.failing.size() == 2 && rd_ok;
    std::string sizes;
    for (auto s : rd_sizes) {
        sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    }
    return {ok, "cube, hexagon pass; triangle fails (ii); prism fails (iii) on 2 triangular facets; "
                "rhombic dodecahedron passes with belt sizes {" + sizes + "}"};
}

Polytope random_polygon(std::mt19937& rng)
{
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    std::uniform_real_distribution<double> rad(0.6, 1.4);
    std::vector<Vec> pts;
    const std::size_t n = 5 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = ang(rng);
        const double r = rad(rng);
        pts.push_back(Vec{Rational(std::lround(64 * r * std::cos(t)), 64),
                          Rational(std::lround(64 * r * std::sin(t)), 64)});
    }
    // exact monotone chain hull, collinear points dropped
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Vec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) {
            --k;
        }
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) {
            --k;
        }
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return Polytope::polygon(h);
}

Verdict fourier_correctness()
{
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(-30, 30);
    double worst = 0;
    double worst_origin = 0;
    double worst_conj = 0;
    int polygons = 0;
    while (polygons < 10) {
        Polytope p = [&] {
            for (;;) {
                try {
                    auto q = random_polygon(rng);
                    if (q.vertices().size() >= 4) {
                        return q;
                    }
                } catch (const std::exception&) {
                }
            }
        }();
        ++polygons;
        const auto z0 = weaktile::ft_indicator(p, Vec{Q("0"), Q("0")});
        worst_origin = std::max(worst_origin, std::abs(z0.re.to_double() - p.volume().to_double()) +
                                                  std::abs(z0.im.to_double()));
        for (int k = 0; k < 50; ++k) {
            const Vec xi{Rational(num(rng), 10), Rational(num(rng), 10)};
            const auto z = weaktile::ft_indicator(p, xi);
            const auto q = polygon_ft_quadrature(p, xi[0].to_double(), xi[1].to_double());
            worst = std::max(worst, std::abs(std::complex<double>(z.re.to_double(), z.im.to_double()) - q));
            const auto zm = weaktile::ft_indicator(p, weaktile::vec::neg(xi));
            worst_conj = std::max(worst_conj, std::abs(z.re.to_double() - zm.re.to_double()) +
                                                  std::abs(z.im.to_double() + zm.im.to_double()));
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "max |ft - quadrature| = %.2e (tol 1e-8), |ft(0) - area| = %.1e, conjugate %.1e (tol 1e-12)",
                  worst, worst_origin, worst_conj);
    return {worst <= 1e-8 && worst_origin <= 1e-12 && worst_conj <= 1e-12, buf};
}

Verdict fejer_identities()
{
    const auto tri = load("triangle");
    const weaktile::CylinderSet s{Vec{Q("1"), Q("1")}, 2, Q("1/2")};
    const auto probe = weaktile::zero_probe(tri, s, 30, 24);
    bool ok = probe.global_min > 0;
    double g0 = -1;
    double g0_spread = 0;
    double ghat_min = 1;
    std::string flags;
    const double rhs = weaktile::RadialBump(2, 0.5).phi_at_origin() / tri.volume().to_double();
    for (long n : {1L, 2L, 5L, 10L, 100L}) {
        const auto w = weaktile::fejer_witness(s, n, tri.volume());
        ok = ok && w.integral == Rational(n);
        if (g0 < 0) {
            g0 = w.g_at_origin;
        }
        g0_spread = std::max(g0_spread, std::abs(w.g_at_origin - g0));
        ghat_min = std::min(ghat_min, w.ghat_min);
        ok = ok && w.violated == (static_cast<double>(n) > rhs);
        flags += std::to_string(n) + (w.violated ? ":violated " : ":holds ");
    }
    ok = ok && g0_spread <= 1e-12 && ghat_min >= -1e-12;
    char buf[400];
    std::snprintf(buf, sizeof buf,
                  "triangle, S(v=(1,1), R=2, eps=1/2), sampled min |ft| on S = %.2e; int g_N = N exact; "
                  "g_N(0) = %.6f (spread %.1e); min sampled g^_N = %.1e; phi(0)/m(A) = %.4f; %s",
                  probe.global_min, g0, g0_spread, ghat_min, rhs, flags.c_str());
    return {ok, buf};
}

Verdict decomposition_round_trip()
{
    const auto om = omega("0,1;2,3");
    const auto search = weaktile::proper_tiling_search(om, Q("8"));
    const auto tilings = weaktile::proper_tilings_through_origin(search);
    const auto n1 = std::find_if(tilings.begin(), tilings.end(),
                                 [](const PeriodicMeasure& m) { return m.weight_at(Q("1")) == Rational(1); });
    const auto n2 = std::find_if(tilings.begin(), tilings.end(), [](const PeriodicMeasure& m) {
        return m.weight_at(Q("3")) == Rational(1) && m.weight_at(Q("1")).is_zero();
    });
    if (n1 == tilings.end() || n2 == tilings.end()) {
        return {false, "proper tilings through 1 and 3 not found"};
    }
    std::vector<Atom> mix;
    for (const auto* m : {&*n1, &*n2}) {
        for (const auto& a : m->atoms()) {
            mix.push_back(Atom{a.point, a.weight / Rational(2)});
        }
    }
    const auto sol = weaktile::verify_periodic(om, PeriodicMeasure(Q("8"), mix));
    const auto r = weaktile::vertex_decompose(sol, om);
    bool ok = r.kind == weaktile::DecompositionKind::Decomposed && r.terms.size() == 2;
    for (const auto& t : r.terms) {
        ok = ok && t.coefficient == Q("1/2");
    }
    ok = ok && ((r.terms[0].tiling.atoms() == n1->atoms() && r.terms[1].tiling.atoms() == n2->atoms()) ||
                (r.terms[0].tiling.atoms() == n2->atoms() && r.terms[1].tiling.atoms() == n1->atoms()));
    return {ok, "1/2 nu_1 + 1/2 nu_2 with nu_1 = {0,1,4,5} + 8Z, nu_2 = {0,3,4,7} + 8Z recovered with coefficients (" +
                    (r.terms.size() == 2 ? r.terms[0].coefficient.str() + ", " + r.terms[1].coefficient.str()
                                         : std::string("-")) +
                    ") over " + std::to_string(r.candidates) + " candidate tilings"};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Verdict()> run;
    };
    std::optional<TwoIntervalSuite> suite;
    auto two = [&]() -> const TwoIntervalSuite& {
        if (!suite) {
            suite = unequal_suite();
        }
        return *suite;
    };
    const std::vector<Criterion> criteria{
        {1, "single-interval rigidity", 1, single_interval_rigidity},
        {2, "gap obstruction", 120, gap_obstruction},
        {3, "unequal two-interval properness", 120, [&] { return unequal_properness(two()); }},
        {4, "support confinement, dense grid 1/12", 120, [&] { return support_confinement(two()); }},
        {5, "scan oracle equivalence", 60, scan_equivalence},
        {6, "Venkov-McMullen corpus", 1, venkov_mcmullen_corpus},
        {7, "Fourier transform correctness", 60, fourier_correctness},
        {8, "Fejer witness identities", 10, fejer_identities},
        {9, "decomposition round trip", 5, decomposition_round_trip},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = v.pass && secs <= c.limit_s;
        failed += pass ? 0 : 1;
        std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    secs, c.limit_s);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
