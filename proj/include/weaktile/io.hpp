#pragma once

// JSON reading and writing. Rationals are written as {"n": "..", "d": ".."}
// and read from that form, from JSON integers, or from "p/q" / exact decimal
// strings. Binary floating-point JSON numbers are refused.

#include "weaktile/interval.hpp"
#include "weaktile/measure.hpp"
#include "weaktile/periodic.hpp"
#include "weaktile/polytope.hpp"
#include "weaktile/rational.hpp"
#include "weaktile/scan.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weaktile::io {

using Json = nlohmann::ordered_json;

class InstanceError : public std::runtime_error {
  public:
    InstanceError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path(path)
    {
    }
    std::string path;
};

inline Json to_json(const Rational& q)
{
    return Json{{"n", q.numerator().get_str()}, {"d", q.denominator().get_str()}};
}

inline Json to_json(const Interval& iv) { return Json::array({to_json(iv.left()), to_json(iv.right())}); }

inline Json to_json(const IntervalUnion& u)
{
    Json a = Json::array();
    for (const auto& c : u.components()) {
        a.push_back(to_json(c));
    }
    return a;
}

inline Json to_json(const std::vector<Atom>& atoms)
{
    Json a = Json::array();
    for (const auto& at : atoms) {
        a.push_back(Json::array({to_json(at.point), to_json(at.weight)}));
    }
    return a;
}

inline Json to_json(const AtomicMeasure& m) { return to_json(m.atoms()); }

inline Json to_json(const std::vector<Rational>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs) {
        a.push_back(to_json(x));
    }
    return a;
}

inline Json to_json(const TilingSolution& s)
{
    return Json{{"period", to_json(s.measure.period())},
                {"atoms", to_json(s.measure.atoms())},
                {"kind", to_string(s.kind)},
                {"certificate_window", Json::array({to_json(s.certificate_window.left()),
                                                    to_json(s.certificate_window.right())})},
                {"cells_checked", s.cells_checked}};
}

inline Json to_json(const ScanCertificate& c)
{
    Json groups = Json::array();
    for (const auto& g : c.groups) {
        groups.push_back(g);
    }
    return Json{{"breakpoints", to_json(c.breakpoints)}, {"groups", groups}, {"levels", to_json(c.levels)}};
}

// ---- reading

inline Rational rational_from_json(const Json& j, const std::string& path)
{
    try {
        if (j.is_number_integer()) {
            if (j.is_number_unsigned()) {
                return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
            }
            return Rational(static_cast<long long>(j.get<long long>()));
        }
        if (j.is_number_float()) {
            throw InstanceError(path, "binary floating-point numbers are not accepted; write \"p/q\" or a decimal string");
        }
        if (j.is_string()) {
            return Rational::parse(j.get<std::string>());
        }
        if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (k != "n" && k != "d") {
                    throw InstanceError(path + "." + k, "unknown key");
                }
            }
            if (!j.contains("n") || !j.contains("d")) {
                throw InstanceError(path, "rational object needs \"n\" and \"d\"");
            }
            const Rational n = rational_from_json(j["n"], path + ".n");
            const Rational d = rational_from_json(j["d"], path + ".d");
            if (!n.is_integer() || !d.is_integer()) {
                throw InstanceError(path, "\"n\" and \"d\" must be integers");
            }
            return n / d;
        }
    } catch (const InstanceError&) {
        throw;
    } catch (const std::exception& e) {
        throw InstanceError(path, e.what());
    }
    throw InstanceError(path, "expected a rational");
}

inline const Json& expect_array(const Json& j, const std::string& path, std::optional<std::size_t> size = {})
{
    if (!j.is_array()) {
        throw InstanceError(path, "expected an array");
    }
    if (size && j.size() != *size) {
        throw InstanceError(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    }
    return j;
}

inline void reject_unknown_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed)
{
    if (!j.is_object()) {
        throw InstanceError(path, "expected an object");
    }
    for (const auto& [k, v] : j.items()) {
        if (!allowed.contains(k)) {
            throw InstanceError(path + "." + k, "unknown key");
        }
    }
}

inline Interval interval_from_json(const Json& j, const std::string& path)
{
    expect_array(j, path, 2);
    const Rational l = rational_from_json(j[0], path + "[0]");
    const Rational r = rational_from_json(j[1], path + "[1]");
    if (!(l < r)) {
        throw InstanceError(path, "interval needs left < right");
    }
    return Interval(l, r);
}

inline std::vector<Rational> rationals_from_json(const Json& j, const std::string& path)
{
    expect_array(j, path);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

inline IntervalUnion omega_from_json(const Json& j, const std::string& path)
{
    expect_array(j, path);
    if (j.empty()) {
        throw InstanceError(path, "omega needs at least one interval");
    }
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        ivs.push_back(interval_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return normalize_union(ivs);
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) {
        return "";
    }
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// Comma separated rationals: "1/3, 2, 0.5"
inline std::vector<Rational> parse_rational_list(const std::string& s, const std::string& what)
{
    std::vector<Rational> out;
    for (const auto& part : split(s, ',')) {
        try {
            out.push_back(Rational::parse(trim(part)));
        } catch (const std::exception& e) {
            throw InstanceError(what, e.what());
        }
    }
    if (out.empty()) {
        throw InstanceError(what, "empty list");
    }
    return out;
}

// "0,1;2,3" -> (0,1) u (2,3)
inline IntervalUnion parse_omega_inline(const std::string& s)
{
    std::vector<Interval> ivs;
    const auto parts = split(s, ';');
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string path = "omega[" + std::to_string(i) + "]";
        const auto ends = parse_rational_list(parts[i], path);
        if (ends.size() != 2) {
            throw InstanceError(path, "expected \"left,right\"");
        }
        if (!(ends[0] < ends[1])) {
            throw InstanceError(path, "interval needs left < right");
        }
        ivs.emplace_back(ends[0], ends[1]);
    }
    if (ivs.empty()) {
        throw InstanceError("omega", "no intervals");
    }
    return normalize_union(ivs);
}

inline Json read_json_file(const std::string& file)
{
    std::ifstream in(file);
    if (!in) {
        throw InstanceError(file, "cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InstanceError(file, std::string("invalid JSON: ") + e.what());
    }
}

inline std::vector<Atom> atoms_from_json(const Json& j, const std::string& path)
{
    expect_array(j, path);
    std::vector<Atom> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        expect_array(j[i], p, 2);
        const Rational w = rational_from_json(j[i][1], p + "[1]");
        if (w.sign() <= 0) {
            throw InstanceError(p + "[1]", "weights must be positive");
        }
        out.push_back(Atom{rational_from_json(j[i][0], p + "[0]"), w});
    }
    return out;
}

inline std::vector<Piece> pieces_from_json(const Json& j, const std::string& path)
{
    expect_array(j, path);
    std::vector<Piece> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        expect_array(j[i], p, 2);
        const Rational w = rational_from_json(j[i][1], p + "[1]");
        if (w.sign() <= 0) {
            throw InstanceError(p + "[1]", "weights must be positive");
        }
        out.push_back(Piece{interval_from_json(j[i][0], p + "[0]"), w});
    }
    return out;
}

inline Polytope polytope_from_json(const Json& j, const std::string& path)
{
    reject_unknown_keys(j, path, {"dim", "vertices", "facets"});
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw InstanceError(path + ".dim", "expected 2 or 3");
    }
    const int dim = j["dim"].get<int>();
    if (dim != 2 && dim != 3) {
        throw InstanceError(path + ".dim", "expected 2 or 3");
    }
    if (!j.contains("vertices")) {
        throw InstanceError(path + ".vertices", "missing");
    }
    const Json& jv = expect_array(j["vertices"], path + ".vertices");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string p = path + ".vertices[" + std::to_string(i) + "]";
        expect_array(jv[i], p, static_cast<std::size_t>(dim));
        vs.push_back(rationals_from_json(jv[i], p));
    }
    try {
        if (dim == 2) {
            if (j.contains("facets")) {
                throw InstanceError(path + ".facets", "polygons take their edges from the vertex cycle");
            }
            return Polytope::polygon(vs);
        }
        if (!j.contains("facets")) {
            throw InstanceError(path + ".facets", "missing (required for dim 3)");
        }
        const Json& jf = expect_array(j["facets"], path + ".facets");
        std::vector<std::vector<std::size_t>> fs;
        for (std::size_t i = 0; i < jf.size(); ++i) {
            const std::string p = path + ".facets[" + std::to_string(i) + "]";
            expect_array(jf[i], p);
            std::vector<std::size_t> cyc;
            for (const auto& x : jf[i]) {
                if (!x.is_number_unsigned()) {
                    throw InstanceError(p, "vertex indices must be nonnegative integers");
                }
                cyc.push_back(x.get<std::size_t>());
            }
            fs.push_back(std::move(cyc));
        }
        return Polytope::polyhedron(vs, fs);
    } catch (const PolytopeError& e) {
        throw InstanceError(path, e.what());
    }
}

// A periodic solution as written by `solve` (or the full solve report, in
// which case the first solution is taken).
inline PeriodicMeasure solution_from_json(const Json& j, const std::string& path)
{
    if (j.is_object() && j.contains("solutions")) {
        const Json& s = expect_array(j["solutions"], path + ".solutions");
        if (s.empty()) {
            throw InstanceError(path + ".solutions", "no solution in report");
        }
        return solution_from_json(s[0], path + ".solutions[0]");
    }
    reject_unknown_keys(j, path, {"period", "atoms", "kind", "certificate_window", "cells_checked"});
    if (!j.contains("period") || !j.contains("atoms")) {
        throw InstanceError(path, "a solution needs \"period\" and \"atoms\"");
    }
    const Rational t = rational_from_json(j["period"], path + ".period");
    if (t.sign() <= 0) {
        throw InstanceError(path + ".period", "period must be positive");
    }
    try {
        return PeriodicMeasure(t, atoms_from_json(j["atoms"], path + ".atoms"), true);
    } catch (const InstanceError&) {
        throw;
    } catch (const std::exception& e) {
        throw InstanceError(path + ".atoms", e.what());
    }
}

// Instance files: every key optional, unknown keys rejected.
struct InstanceFile {
    int version = 1;
    std::optional<IntervalUnion> omega;
    std::optional<std::vector<Atom>> measure;
    std::optional<Window> window;
    std::optional<Polytope> polytope;
    std::optional<PeriodicMeasure> solution;
    std::optional<Rational> period;
    std::optional<std::pair<long, long>> sweep_periods;
    std::optional<long> dense_grid;
    std::optional<Interval> interval;
    std::optional<Rational> halfline;
    std::optional<std::vector<Piece>> pieces;
    std::optional<std::vector<Rational>> lengths;
};

inline InstanceFile instance_from_json(const Json& j)
{
    reject_unknown_keys(j, "$",
                        {"version", "omega", "measure", "window", "polytope", "solution", "solver", "interval",
                         "halfline", "pieces", "lengths"});
    InstanceFile f;
    if (j.contains("version")) {
        if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
            throw InstanceError("$.version", "only version 1 is supported");
        }
    }
    if (j.contains("omega")) {
        f.omega = omega_from_json(j["omega"], "$.omega");
    }
    if (j.contains("measure")) {
        f.measure = atoms_from_json(j["measure"], "$.measure");
    }
    if (j.contains("window")) {
        const Interval w = interval_from_json(j["window"], "$.window");
        f.window = Window(w.left(), w.right());
    }
    if (j.contains("polytope")) {
        f.polytope = polytope_from_json(j["polytope"], "$.polytope");
    }
    if (j.contains("solution")) {
        f.solution = solution_from_json(j["solution"], "$.solution");
    }
    if (j.contains("solver")) {
        const Json& s = j["solver"];
        reject_unknown_keys(s, "$.solver", {"period", "sweep_periods", "dense_grid"});
        if (s.contains("period")) {
            f.period = rational_from_json(s["period"], "$.solver.period");
        }
        if (s.contains("sweep_periods")) {
            const Json& sp = expect_array(s["sweep_periods"], "$.solver.sweep_periods", 2);
            if (!sp[0].is_number_integer() || !sp[1].is_number_integer()) {
                throw InstanceError("$.solver.sweep_periods", "expected two integers");
            }
            f.sweep_periods = std::make_pair(sp[0].get<long>(), sp[1].get<long>());
        }
        if (s.contains("dense_grid")) {
            if (!s["dense_grid"].is_number_integer()) {
                throw InstanceError("$.solver.dense_grid", "expected an integer");
            }
            f.dense_grid = s["dense_grid"].get<long>();
        }
    }
    if (j.contains("interval")) {
        f.interval = interval_from_json(j["interval"], "$.interval");
    }
    if (j.contains("halfline")) {
        f.halfline = rational_from_json(j["halfline"], "$.halfline");
    }
    if (j.contains("pieces")) {
        f.pieces = pieces_from_json(j["pieces"], "$.pieces");
    }
    if (j.contains("lengths")) {
        f.lengths = rationals_from_json(j["lengths"], "$.lengths");
    }
    return f;
}

}  // namespace weaktile::io
