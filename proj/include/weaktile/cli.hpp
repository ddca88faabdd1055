#pragma once

// Command-line front end. JSON report on `out`, short human summary on `err`.
// Exit codes: 0 success, 2 certified negative, 3 inconclusive, 64 usage or
// input error.

#include "weaktile/conditions.hpp"
#include "weaktile/fejer.hpp"
#include "weaktile/fourier.hpp"
#include "weaktile/io.hpp"
#include "weaktile/polytope.hpp"
#include "weaktile/scan.hpp"
#include "weaktile/semigroup.hpp"
#include "weaktile/solver.hpp"
#include "weaktile/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace weaktile::cli {

enum ExitCode : int { kOk = 0, kNegative = 2, kInconclusive = 3, kUsage = 64 };

using io::Json;

namespace detail {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw io::InstanceError(path, "cannot write file");
    }
    f << text;
}

inline Json load_json_arg(const std::string& arg)
{
    const std::string s = io::trim(arg);
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
        try {
            return Json::parse(s);
        } catch (const Json::parse_error& e) {
            throw io::InstanceError("argument", std::string("invalid JSON: ") + e.what());
        }
    }
    return io::read_json_file(s);
}

// Inline "0,1;2,3", a JSON array of intervals, or an instance file.
inline IntervalUnion resolve_omega(const std::string& arg)
{
    const std::string s = io::trim(arg);
    const bool looks_json = !s.empty() && (s.front() == '[' || s.front() == '{');
    if (!looks_json && !std::filesystem::exists(s)) {
        return io::parse_omega_inline(s);
    }
    const Json j = load_json_arg(s);
    if (j.is_array()) {
        return io::omega_from_json(j, "omega");
    }
    const io::InstanceFile inst = io::instance_from_json(j);
    if (!inst.omega) {
        throw io::InstanceError("$.omega", "missing");
    }
    return *inst.omega;
}

inline Polytope resolve_polytope(const std::string& arg)
{
    const Json j = load_json_arg(arg);
    if (j.is_object() && j.contains("dim")) {
        return io::polytope_from_json(j, "$");
    }
    const io::InstanceFile inst = io::instance_from_json(j);
    if (!inst.polytope) {
        throw io::InstanceError("$.polytope", "missing");
    }
    return *inst.polytope;
}

inline Rational parse_rational_arg(const std::string& s, const std::string& what)
{
    try {
        return Rational::parse(io::trim(s));
    } catch (const std::exception& e) {
        throw io::InstanceError(what, e.what());
    }
}

inline Json representation_json(const std::optional<std::vector<std::int64_t>>& p)
{
    if (!p) {
        return nullptr;
    }
    return Json(*p);
}

inline Json vec_json(const Vec& v)
{
    Json a = Json::array();
    for (const auto& x : v) {
        a.push_back(io::to_json(x));
    }
    return a;
}

inline Json complex_json(const BigComplex& z, int digits)
{
    return Json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}, {"abs", z.abs().str(digits)}};
}

inline std::pair<long, long> parse_range(const std::string& s)
{
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        throw UsageError("expected a range m1..m2, got '" + s + "'");
    }
    try {
        const long a = std::stol(s.substr(0, pos));
        const long b = std::stol(s.substr(pos + 2));
        if (a < 1 || b < a) {
            throw UsageError("range must satisfy 1 <= m1 <= m2");
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("expected a range m1..m2, got '" + s + "'");
    }
}

// ---- subcommands

inline int cmd_check(const std::string& omega_arg, const std::string& svg_path, std::ostream& out, std::ostream& err)
{
    const IntervalUnion omega = resolve_omega(omega_arg);
    const LengthSemigroup sg(omega.lengths());
    Json rep{{"command", "check"}, {"omega", io::to_json(omega)}, {"measure", io::to_json(omega.measure())},
             {"lengths", io::to_json(omega.lengths())}};
    bool negative = false;
    std::vector<std::string> notes;

    if (omega.size() == 1) {
        const ForcedTiling ft = single_interval(omega);
        rep["single_interval"] = Json{{"step", io::to_json(ft.step)},
                                      {"measure", "unit atoms at step * (Z \\ {0})"},
                                      {"proper", true}};
        notes.push_back("single interval: the only weak tiling is the proper tiling by step " + ft.step.str());
    } else {
        const GapReport gr = gap_condition(omega);
        Json entries = Json::array();
        for (const auto& e : gr.entries) {
            entries.push_back(Json{{"gap_index", e.gap_index},
                                   {"gap_length", io::to_json(e.gap_length)},
                                   {"representation", representation_json(e.representation)}});
            if (!e.representation) {
                notes.push_back("gap " + e.gap_length.str() + " is not a sum of component lengths");
            }
        }
        rep["gap_condition"] = Json{{"entries", entries}, {"non_weak_tiler", gr.non_weak_tiler}};
        negative = gr.non_weak_tiler;
    }
    const auto lengths = omega.lengths();
    if (std::all_of(lengths.begin(), lengths.end(), [](const Rational& l) { return l.is_integer(); })) {
        const IntegerCaseReport ic = integer_case(omega);
        rep["integer_case"] = Json{{"gaps_integral", ic.gaps_integral},
                                   {"non_integral_gaps", ic.non_integral_gaps},
                                   {"support", ic.support},
                                   {"non_weak_tiler", ic.non_weak_tiler}};
        negative = negative || ic.non_weak_tiler;
    }
    if (omega.size() == 2) {
        const TwoIntervalVerdict tv = classify_two_intervals(omega);
        Json t{{"case", to_string(tv.kind)},
               {"detail", tv.detail},
               {"normal_form", Json{{"h", io::to_json(tv.h)}, {"a", io::to_json(tv.a)}, {"b", io::to_json(tv.b)}}}};
        if (tv.multiple) {
            t["multiple"] = io::to_json(*tv.multiple);
        }
        rep["two_intervals"] = t;
        if (!negative) {
            notes.push_back(tv.detail);
        }
    }
    const FrobeniusResult fr = sg.frobenius();
    Json fj{{"kind", fr.kind == FrobeniusResult::Kind::AllRepresentable ? "AllRepresentable"
                     : fr.kind == FrobeniusResult::Kind::Finite        ? "Finite"
                                                                       : "Lattice"}};
    if (fr.value) {
        fj["value"] = io::to_json(*fr.value);
    }
    if (fr.step) {
        fj["step"] = io::to_json(*fr.step);
    }
    rep["semigroup"] = Json{{"scale", io::to_json(sg.scale())}, {"frobenius", fj}};
    rep["verdict"] = negative ? "NonWeakTiler" : "NecessaryConditionsPass";
    if (negative) {
        rep["implication"] = "omega neither weakly tiles its complement, nor tiles, nor is spectral";
    }
    out << rep.dump(2) << "\n";
    err << "check: " << (negative ? "NonWeakTiler" : "necessary conditions pass (not a proof of weak tiling)") << "\n";
    for (const auto& n : notes) {
        err << "  " << n << "\n";
    }
    if (!svg_path.empty()) {
        const Rational pad = omega.diameter() / Rational(10);
        write_file(svg_path, svg::measure(omega, AtomicMeasure(std::vector<Atom>{}), Window(omega.left() - pad, omega.right() + pad)));
    }
    return negative ? kNegative : kOk;
}

struct SemigroupArgs {
    std::string gens;
    std::string member;
    std::string enumerate;
    bool frobenius = false;
};

inline int cmd_semigroup(const SemigroupArgs& a, std::ostream& out, std::ostream& err)
{
    const LengthSemigroup sg(io::parse_rational_list(a.gens, "gens"));
    Json ig = Json::array();
    for (auto g : sg.integer_generators()) {
        ig.push_back(g);
    }
    Json rep{{"command", "semigroup"},
             {"generators", io::to_json(sg.generators())},
             {"scale", io::to_json(sg.scale())},
             {"integer_generators", ig},
             {"gcd", sg.gcd_value()}};
    if (!a.member.empty()) {
        const Rational x = parse_rational_arg(a.member, "member");
        const auto p = sg.member(x);
        rep["member"] = Json{{"x", io::to_json(x)}, {"representation", representation_json(p)}};
        err << "member " << x << ": " << (p ? "yes" : "no") << "\n";
    }
    if (!a.enumerate.empty()) {
        const Rational b = parse_rational_arg(a.enumerate, "enumerate");
        const auto els = sg.enumerate(b);
        rep["enumerate"] = Json{{"bound", io::to_json(b)}, {"elements", io::to_json(els)}};
        err << "enumerate: " << els.size() << " element(s) up to " << b << "\n";
    }
    if (a.frobenius) {
        const FrobeniusResult fr = sg.frobenius();
        Json fj;
        switch (fr.kind) {
        case FrobeniusResult::Kind::AllRepresentable:
            fj = Json{{"kind", "AllRepresentable"}, {"value", nullptr}};
            err << "frobenius: every nonnegative multiple of the scale unit is representable\n";
            break;
        case FrobeniusResult::Kind::Finite:
            fj = Json{{"kind", "Finite"}, {"value", io::to_json(*fr.value)}};
            err << "frobenius: " << *fr.value << "\n";
            break;
        case FrobeniusResult::Kind::Lattice:
            fj = Json{{"kind", "Lattice"}, {"step", io::to_json(*fr.step)}};
            err << "frobenius: gcd > 1, elements lie on multiples of " << *fr.step << "\n";
            break;
        }
        rep["frobenius"] = fj;
    }
    out << rep.dump(2) << "\n";
    return kOk;
}

inline int cmd_scan(const std::string& file, const std::string& svg_path, std::ostream& out, std::ostream& err)
{
    const io::InstanceFile inst = io::instance_from_json(load_json_arg(file));
    if (!inst.pieces) {
        throw io::InstanceError("$.pieces", "missing");
    }
    if (inst.interval.has_value() == inst.halfline.has_value()) {
        throw io::InstanceError("$", "give exactly one of \"interval\" or \"halfline\"");
    }
    if (inst.halfline && !inst.window) {
        throw io::InstanceError("$.window", "required with \"halfline\"");
    }
    std::vector<Rational> lengths;
    if (inst.lengths) {
        lengths = *inst.lengths;
    } else {
        for (const auto& p : *inst.pieces) {
            lengths.push_back(p.interval.length());
        }
    }
    const WeightedPieces pieces = [&] {
        try {
            return WeightedPieces(*inst.pieces, lengths);
        } catch (const std::invalid_argument& e) {
            throw io::InstanceError("$.pieces", e.what());
        }
    }();
    Json rep{{"command", "scan"}};
    try {
        ScanCertificate cert;
        Rational lo;
        Rational hi;
        if (inst.interval) {
            cert = scan_cover(*inst.interval, pieces);
            lo = inst.interval->left();
            hi = inst.interval->right();
            rep["interval"] = io::to_json(*inst.interval);
            const auto chain = gap_chain(*inst.interval, pieces);
            Json cl = Json::array();
            for (auto j : chain) {
                cl.push_back(io::to_json(pieces[j].interval.length()));
            }
            rep["chain"] = Json{{"pieces", chain}, {"lengths", cl}};
            rep["derivative_identity"] = derivative_identity(*inst.interval, pieces);
        } else {
            cert = halfline_scan(*inst.halfline, pieces, *inst.window);
            lo = *inst.halfline;
            hi = inst.window->right();
            rep["halfline"] = io::to_json(*inst.halfline);
            rep["window"] = Json::array({io::to_json(inst.window->left()), io::to_json(inst.window->right())});
        }
        const LengthSemigroup sg(pieces.lengths());
        bool endpoints_ok = true;
        for (const auto& x : cert.breakpoints) {
            endpoints_ok = endpoints_ok && sg.contains(x - lo);
        }
        rep["result"] = "cover";
        rep["certificate"] = io::to_json(cert);
        rep["endpoints_in_semigroup"] = endpoints_ok;
        out << rep.dump(2) << "\n";
        err << "scan: cover certified with " << cert.groups.size() << " step(s)\n";
        if (!svg_path.empty()) {
            write_file(svg_path, svg::scan_cover(lo, hi, pieces, cert));
        }
        return kOk;
    } catch (const CoverDeficit& e) {
        rep["result"] = "not_a_cover";
        rep["error"] = Json{{"kind", "CoverDeficit"}, {"point", io::to_json(e.point)}, {"level", io::to_json(e.level)}};
        err << "scan: " << e.what() << "\n";
    } catch (const CoverExcess& e) {
        rep["result"] = "not_a_cover";
        rep["error"] = Json{{"kind", "CoverExcess"},
                            {"cell", Json::array({io::to_json(e.left), io::to_json(e.right)})},
                            {"value", io::to_json(e.value)}};
        err << "scan: " << e.what() << "\n";
    } catch (const PieceEscapesInterval& e) {
        rep["result"] = "not_a_cover";
        rep["error"] = Json{{"kind", "PieceEscapesInterval"}, {"piece", e.index}};
        err << "scan: " << e.what() << "\n";
    }
    out << rep.dump(2) << "\n";
    return kNegative;
}

struct SolveArgs {
    std::string omega;
    std::string period;
    std::string sweep;
    long dense = 0;
    bool proper = false;
    std::string svg;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err)
{
    const IntervalUnion omega = resolve_omega(a.omega);
    std::vector<Rational> periods;
    if (!a.period.empty() && !a.sweep.empty()) {
        throw UsageError("give either --period or --sweep-periods, not both");
    }
    if (!a.period.empty()) {
        periods.push_back(parse_rational_arg(a.period, "period"));
        if (periods.back().sign() <= 0) {
            throw io::InstanceError("period", "must be positive");
        }
    } else if (!a.sweep.empty()) {
        const auto [m1, m2] = parse_range(a.sweep);
        for (long m = m1; m <= m2; ++m) {
            periods.push_back(Rational(m) * omega.measure());
        }
    } else {
        throw UsageError("solve needs --period or --sweep-periods");
    }
    if (a.dense < 0) {
        throw UsageError("--dense-grid must be positive");
    }
    Json runs = Json::array();
    Json sols = Json::array();
    std::optional<TilingSolution> first;
    for (const auto& t : periods) {
        std::vector<Rational> grid = default_grid(omega, t);
        if (a.dense > 0) {
            grid = merge_grids(grid, dense_grid(t, a.dense));
        }
        const auto sol = weak_tiling_lp(omega, t, grid);
        Json run{{"period", io::to_json(t)}, {"grid_size", grid.size()}, {"found", sol.has_value()}};
        if (sol) {
            sols.push_back(io::to_json(*sol));
            if (!first) {
                first = sol;
            }
            err << "solve: T = " << t << ": " << to_string(sol->kind) << " solution with "
                << sol->measure.atoms().size() << " atom(s) per period\n";
        } else {
            err << "solve: T = " << t << ": no periodic solution on this grid\n";
        }
        if (a.proper) {
            const ProperSearchResult pr = proper_tiling_search(omega, t);
            Json pl = Json::array();
            for (const auto& s : pr.solutions) {
                pl.push_back(io::to_json(s));
            }
            run["proper"] = Json{{"solutions", pl}, {"explanation", pr.explanation}};
        }
        runs.push_back(run);
    }
    Json rep{{"command", "solve"},
             {"omega", io::to_json(omega)},
             {"runs", runs},
             {"solutions", sols},
             {"note", "search restricted to periodic measures with atoms on a finite grid"}};
    int code = kOk;
    if (!first) {
        if (omega.size() >= 2 && gap_condition(omega).non_weak_tiler) {
            rep["verdict"] = "NonWeakTiler";
            code = kNegative;
        } else {
            rep["verdict"] = "NotFound";
            code = kInconclusive;
        }
    } else {
        rep["verdict"] = "Found";
    }
    out << rep.dump(2) << "\n";
    if (first && !a.svg.empty()) {
        write_file(a.svg, svg::tiling_strip(omega, *first));
    }
    return code;
}

inline TilingSolution load_solution(const IntervalUnion& omega, const std::string& file)
{
    const Json j = load_json_arg(file);
    const PeriodicMeasure m = [&] {
        if (j.is_object() && !j.contains("solutions") && !j.contains("period")) {
            const io::InstanceFile inst = io::instance_from_json(j);
            if (!inst.solution) {
                throw io::InstanceError("$.solution", "missing");
            }
            return *inst.solution;
        }
        return io::solution_from_json(j, "$");
    }();
    try {
        return verify_periodic(omega, m);
    } catch (const VerificationFailure& e) {
        throw io::InstanceError("solution", std::string("not a weak tiling of omega: ") + e.what());
    }
}

inline int cmd_decompose(const std::string& omega_arg, const std::string& sol_file, const std::string& grid,
                         std::ostream& out, std::ostream& err)
{
    const IntervalUnion omega = resolve_omega(omega_arg);
    const TilingSolution sol = load_solution(omega, sol_file);
    std::optional<std::vector<Rational>> allowed;
    if (!grid.empty()) {
        allowed = io::parse_rational_list(grid, "grid");
    }
    const DecompositionReport r = vertex_decompose(sol, omega, allowed);
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        terms.push_back(Json{{"coefficient", io::to_json(t.coefficient)},
                             {"period", io::to_json(t.tiling.period())},
                             {"atoms", io::to_json(t.tiling.atoms())}});
    }
    out << Json{{"command", "decompose"},
                {"result", to_string(r.kind)},
                {"terms", terms},
                {"candidates", r.candidates},
                {"note", r.note}}
               .dump(2)
        << "\n";
    err << "decompose: " << to_string(r.kind) << " (" << r.note << ")\n";
    return r.kind == DecompositionKind::NotDecomposable ? kInconclusive : kOk;
}

inline int cmd_density(const std::string& omega_arg, const std::string& sol_file, std::ostream& out,
                       std::ostream& err)
{
    const IntervalUnion omega = resolve_omega(omega_arg);
    const TilingSolution sol = load_solution(omega, sol_file);
    const DensityReport d = density_report(sol);
    out << Json{{"command", "density"},
                {"max_atoms_per_unit_window", d.max_atoms},
                {"max_mass_per_unit_window", io::to_json(d.max_mass)},
                {"atoms_window_start", io::to_json(d.anchor_atoms)},
                {"mass_window_start", io::to_json(d.anchor_mass)},
                {"window", "open (x, x+1), supremum attained as x decreases to the start"}}
               .dump(2)
        << "\n";
    err << "density: at most " << d.max_atoms << " atom(s) and mass " << d.max_mass << " per open unit window\n";
    return kOk;
}

inline int cmd_polytope_check(const std::string& file, std::ostream& out, std::ostream& err)
{
    const Polytope p = resolve_polytope(file);
    const VenkovMcMullenReport r = venkov_mcmullen(p);
    Json belts = Json::array();
    for (const auto& b : r.belt_report.belts) {
        belts.push_back(Json{{"direction", vec_json(b.direction)}, {"facets", b.facets}, {"count", b.facets.size()}});
    }
    Json pairs = Json::array();
    for (const auto& [i, j] : r.minkowski.pairs) {
        pairs.push_back(Json::array({i, j}));
    }
    Json unequal = Json::array();
    for (const auto& [i, j] : r.minkowski.unequal_measure) {
        unequal.push_back(Json::array({i, j}));
    }
    Json rep{{"command", "polytope check"},
             {"dim", p.dimension()},
             {"volume", io::to_json(p.volume())},
             {"conditions",
              Json{{"i_convex", true},
                   {"ii_centrally_symmetric", r.center.has_value()},
                   {"iii_facets_symmetric", r.facets.all()},
                   {"iv_belts_4_or_6", r.belt_report.pass()}}},
             {"center", r.center ? vec_json(*r.center) : Json(nullptr)},
             {"asymmetric_facets", r.facets.failing},
             {"minkowski", Json{{"pairs", pairs}, {"unmatched", r.minkowski.unmatched}, {"antiparallel_unequal", unequal}}},
             {"belts", belts},
             {"failed", r.failed},
             {"tiles_by_translation", r.tiles()}};
    out << rep.dump(2) << "\n";
    if (r.tiles()) {
        err << "polytope: all four conditions hold; the polytope tiles by translations\n";
    } else {
        err << "polytope: fails condition(s)";
        for (const auto& f : r.failed) {
            err << " (" << f << ")";
        }
        err << "; it does not tile, and does not weakly tile its complement\n";
    }
    return r.tiles() ? kOk : kNegative;
}

inline Vec parse_vec(const std::string& s, std::size_t dim, const std::string& what)
{
    Vec v = io::parse_rational_list(s, what);
    if (v.size() != dim) {
        throw io::InstanceError(what, "expected " + std::to_string(dim) + " coordinates");
    }
    return v;
}

inline int cmd_polytope_ft(const std::string& file, const std::string& xi_arg, long digits, std::ostream& out,
                           std::ostream& err)
{
    const Polytope p = resolve_polytope(file);
    const Vec xi = parse_vec(xi_arg, static_cast<std::size_t>(p.dimension()), "xi");
    const BigComplex z = ft_indicator(p, xi, digits);
    out << Json{{"command", "polytope ft"}, {"xi", vec_json(xi)}, {"digits", digits},
                {"value", complex_json(z, static_cast<int>(digits))}}
               .dump(2)
        << "\n";
    err << "ft: " << z.re.str(12) << " + " << z.im.str(12) << " i\n";
    return kOk;
}

struct CylinderArgs {
    std::string v;
    long R = 1;
    std::string eps;
};

inline CylinderSet make_cylinder(const CylinderArgs& a, std::size_t dim)
{
    CylinderSet s{parse_vec(a.v, dim, "v"), a.R, parse_rational_arg(a.eps, "eps")};
    try {
        s.validate(dim);
    } catch (const std::invalid_argument& e) {
        throw io::InstanceError("cylinder", e.what());
    }
    return s;
}

inline int cmd_polytope_probe(const std::string& file, const CylinderArgs& ca, long nmax, long samples, long digits,
                              std::ostream& out, std::ostream& err)
{
    const Polytope p = resolve_polytope(file);
    const CylinderSet s = make_cylinder(ca, static_cast<std::size_t>(p.dimension()));
    if (nmax < s.R || samples < 1) {
        throw UsageError("need --nmax >= R and --samples >= 1");
    }
    const ProbeReport r = zero_probe(p, s, nmax, static_cast<std::size_t>(samples), digits);
    Json balls = Json::array();
    for (const auto& b : r.balls) {
        balls.push_back(Json{{"n", b.n}, {"min_modulus", b.min_modulus}, {"argmin", vec_json(b.argmin)}});
    }
    const bool near_zero = r.global_min < 1e-12;
    out << Json{{"command", "polytope probe"},
                {"v", vec_json(s.v)},
                {"R", s.R},
                {"eps", io::to_json(s.eps)},
                {"balls", balls},
                {"global_min", r.global_min},
                {"global_min_ball", r.global_n},
                {"evaluations", r.evaluations},
                {"origin_ball_lower_bound", r.origin_lower_bound},
                {"near_zero_found", near_zero},
                {"note", r.note}}
               .dump(2)
        << "\n";
    err << "probe: min |FT| = " << r.global_min << " at ball n = " << r.global_n
        << (near_zero ? " (near-zero found)" : "") << "\n";
    return kOk;
}

inline int cmd_polytope_witness(const std::string& file, const CylinderArgs& ca, const std::string& ns,
                                long samples, std::ostream& out, std::ostream& err)
{
    const Polytope p = resolve_polytope(file);
    const CylinderSet s = make_cylinder(ca, static_cast<std::size_t>(p.dimension()));
    Json reps = Json::array();
    for (const auto& nq : io::parse_rational_list(ns, "N")) {
        if (!nq.is_integer() || nq.sign() <= 0) {
            throw io::InstanceError("N", "expected positive integers");
        }
        const long n = nq.numerator().get_si();
        WitnessReport w;
        try {
            w = fejer_witness(s, n, p.volume(), static_cast<std::size_t>(samples));
        } catch (const std::invalid_argument& e) {
            throw io::InstanceError("cylinder", e.what());
        }
        reps.push_back(Json{{"N", n},
                            {"terms", w.terms.size()},
                            {"integral", io::to_json(w.integral)},
                            {"g_at_origin", w.g_at_origin},
                            {"phi_at_origin", w.phi_at_origin},
                            {"rhs", w.rhs},
                            {"inequality_violated", w.violated},
                            {"ghat_min", w.ghat_min},
                            {"ghat_samples", w.ghat_samples},
                            {"supports_disjoint", w.supports_disjoint}});
        err << "witness N = " << n << ": integral " << w.integral << " vs g(0)/m(A) = " << w.rhs
            << (w.violated ? "  violated" : "") << "\n";
        if (reps.size() == 1) {
            err << "witness: violation for every N >= " << w.threshold << "\n";
        }
    }
    const RadialBump bump(s.v.size(), s.eps.to_double());
    const double rhs = bump.phi_at_origin() / p.volume().to_double();
    out << Json{{"command", "polytope witness"},
                {"mass", io::to_json(p.volume())},
                {"phi_at_origin", bump.phi_at_origin()},
                {"threshold", static_cast<long>(std::floor(rhs)) + 1},
                {"reports", reps}}
               .dump(2)
        << "\n";
    return kOk;
}

inline int report_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& msg,
                        const std::string& path = {})
{
    Json e{{"kind", kind}, {"message", msg}};
    if (!path.empty()) {
        e["path"] = path;
    }
    out << Json{{"error", e}}.dump(2) << "\n";
    err << "error: " << msg << "\n";
    return kUsage;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    using namespace detail;
    CLI::App app{"exact weak tiling certificates for interval unions and polytopes", "weaktile"};
    app.require_subcommand(1);

    std::string omega;
    std::string svg_path;
    auto* check = app.add_subcommand("check", "necessary conditions for an interval union");
    check->add_option("--omega", omega, "\"0,1;2,3\", JSON intervals, or an instance file")->required();
    check->add_option("--svg", svg_path, "write a plot of omega");

    SemigroupArgs sga;
    auto* semi = app.add_subcommand("semigroup", "length semigroup queries");
    semi->add_option("--gens", sga.gens, "generators, e.g. \"3,5\"")->required();
    semi->add_option("--member", sga.member, "membership with representation");
    semi->add_option("--enumerate", sga.enumerate, "all elements up to a bound");
    semi->add_flag("--frobenius", sga.frobenius, "largest non-element");

    std::string scan_file;
    auto* scan = app.add_subcommand("scan", "certify a weighted interval cover");
    scan->add_option("instance", scan_file, "JSON instance {interval|halfline, window, pieces, lengths}")->required();
    scan->add_option("--svg", svg_path, "write the stacked cover");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "periodic weak tiling search by exact LP");
    solve->add_option("--omega", sa.omega, "interval union")->required();
    solve->add_option("--period", sa.period, "period T");
    solve->add_option("--sweep-periods", sa.sweep, "m1..m2: periods T = m |omega|");
    solve->add_option("--dense-grid", sa.dense, "also allow atoms at multiples of 1/q");
    solve->add_flag("--proper", sa.proper, "also enumerate proper tilings of each period");
    solve->add_option("--svg", sa.svg, "strip plot of the first solution");

    std::string sol_file;
    std::string grid;
    auto* decomp = app.add_subcommand("decompose", "write a weak tiling as a mix of proper tilings");
    decomp->add_option("--omega", omega, "interval union")->required();
    decomp->add_option("--solution", sol_file, "solution JSON (as written by solve)")->required();
    decomp->add_option("--grid", grid, "only use proper tilings with atoms in this list");

    auto* dens = app.add_subcommand("density", "atoms and mass per unit window");
    dens->add_option("--omega", omega, "interval union")->required();
    dens->add_option("--solution", sol_file, "solution JSON (as written by solve)")->required();

    std::string poly_file;
    std::string xi;
    long digits = 30;
    CylinderArgs ca;
    long nmax = 10;
    long samples = 16;
    std::string ns = "1,2,5,10,100";
    auto* poly = app.add_subcommand("polytope", "tiling conditions and Fourier tools for polytopes");
    poly->require_subcommand(1);
    auto* pcheck = poly->add_subcommand("check", "the four translational tiling conditions");
    pcheck->add_option("file", poly_file, "polytope JSON")->required();
    auto* pft = poly->add_subcommand("ft", "Fourier transform of the indicator");
    pft->add_option("file", poly_file, "polytope JSON")->required();
    pft->add_option("--xi", xi, "frequency, e.g. \"1/3,1/7\"")->required();
    pft->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(5, 2000));
    auto* pprobe = poly->add_subcommand("probe", "sample |FT| over S(v, R, eps)");
    pprobe->add_option("file", poly_file, "polytope JSON")->required();
    pprobe->add_option("--v", ca.v, "direction v")->required();
    pprobe->add_option("--R", ca.R, "R")->required();
    pprobe->add_option("--eps", ca.eps, "ball radius")->required();
    pprobe->add_option("--nmax", nmax, "largest |n|");
    pprobe->add_option("--samples", samples, "points per ball");
    pprobe->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(5, 2000));
    auto* pwit = poly->add_subcommand("witness", "Fejer witness functions g_N");
    pwit->add_option("file", poly_file, "polytope JSON")->required();
    pwit->add_option("--v", ca.v, "direction v")->required();
    pwit->add_option("--R", ca.R, "R")->required();
    pwit->add_option("--eps", ca.eps, "bump radius")->required();
    pwit->add_option("--N", ns, "comma separated list of N");
    pwit->add_option("--samples", samples, "transform samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return report_error(out, err, "usage", e.what());
    }

    try {
        if (*check) {
            return cmd_check(omega, svg_path, out, err);
        }
        if (*semi) {
            return cmd_semigroup(sga, out, err);
        }
        if (*scan) {
            return cmd_scan(scan_file, svg_path, out, err);
        }
        if (*solve) {
            return cmd_solve(sa, out, err);
        }
        if (*decomp) {
            return cmd_decompose(omega, sol_file, grid, out, err);
        }
        if (*dens) {
            return cmd_density(omega, sol_file, out, err);
        }
        if (*pcheck) {
            return cmd_polytope_check(poly_file, out, err);
        }
        if (*pft) {
            return cmd_polytope_ft(poly_file, xi, digits, out, err);
        }
        if (*pprobe) {
            return cmd_polytope_probe(poly_file, ca, nmax, samples, digits, out, err);
        }
        if (*pwit) {
            return cmd_polytope_witness(poly_file, ca, ns, samples, out, err);
        }
    } catch (const io::InstanceError& e) {
        return report_error(out, err, "instance", e.what(), e.path);
    } catch (const UsageError& e) {
        return report_error(out, err, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(out, err, "invalid", e.what());
    } catch (const std::domain_error& e) {
        return report_error(out, err, "invalid", e.what());
    }
    return report_error(out, err, "usage", "no subcommand");
}

}  // namespace weaktile::cli
