#pragma once

// Deterministic SVG 1.1 plots: fixed canvas, coordinates printed with three
// decimals, no timestamps or ids, so equal inputs give equal bytes.

#include "weaktile/interval.hpp"
#include "weaktile/measure.hpp"
#include "weaktile/periodic.hpp"
#include "weaktile/scan.hpp"
#include "weaktile/step_function.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace weaktile::svg {

namespace detail {

constexpr double kWidth = 800;
constexpr double kMargin = 40;
constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

inline std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s(buf);
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

class Canvas {
  public:
    Canvas(const Rational& lo, const Rational& hi, double height)
        : lo_(lo.to_double()), hi_(hi.to_double()), height_(height)
    {
        out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               num(kWidth) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) +
               "\">\n<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
               "\" fill=\"white\"/>\n";
    }

    double x(const Rational& v) const { return x(v.to_double()); }
    double x(double v) const { return kMargin + (v - lo_) / (hi_ - lo_) * (kWidth - 2 * kMargin); }
    double height() const { return height_; }

    void axis(double y, const Rational& lo, const Rational& hi)
    {
        line(x(lo), y, x(hi), y, "black", 1);
        tick(lo, y);
        tick(hi, y);
    }

    void tick(const Rational& v, double y)
    {
        line(x(v), y - 4, x(v), y + 4, "black", 1);
        text(x(v), y + 16, v.str(), "middle");
    }

    void line(double x1, double y1, double x2, double y2, const std::string& color, double w, bool dashed = false)
    {
        out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
                "\" stroke=\"" + color + "\" stroke-width=\"" + num(w) + "\"" +
                (dashed ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
    }

    void rect(double x0, double y0, double w, double h, const std::string& fill, double opacity = 1)
    {
        out_ += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
                "\" fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color)
    {
        out_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out_ += (i ? " " : "") + num(pts[i].first) + "," + num(pts[i].second);
        }
        out_ += "\"/>\n";
    }

    void text(double x0, double y0, const std::string& s, const char* anchor = "start")
    {
        out_ += "<text x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" font-family=\"monospace\" font-size=\"11\" "
                "text-anchor=\"" + std::string(anchor) + "\">" + s + "</text>\n";
    }

    std::string finish() { return out_ + "</svg>\n"; }

  private:
    double lo_;
    double hi_;
    double height_;
    std::string out_;
};

}  // namespace detail

// Graph of f on w.
inline std::string step_function(const StepFunction& f, const Window& w)
{
    const double h = 240;
    detail::Canvas c(w.left(), w.right(), h);
    const auto cells = f.cells(w);
    Rational top(1);
    Rational bottom(0);
    for (const auto& cell : cells) {
        top = std::max(top, cell.value);
        bottom = std::min(bottom, cell.value);
    }
    const double base = h - 40;
    const double unit = (base - 20) / (top - bottom).to_double();
    auto y = [&](const Rational& v) { return base - (v - bottom).to_double() * unit; };
    c.axis(y(Rational(0)), w.left(), w.right());
    std::vector<std::pair<double, double>> pts;
    for (const auto& cell : cells) {
        pts.emplace_back(c.x(cell.left), y(cell.value));
        pts.emplace_back(c.x(cell.right), y(cell.value));
    }
    c.polyline(pts, "#4e79a7");
    c.text(8, 14, "max " + top.str());
    return c.finish();
}

namespace detail {

inline std::string measure_plot(const IntervalUnion* omega, const AtomicMeasure& nu, const Window& w)
{
    const double h = 200;
    Canvas c(w.left(), w.right(), h);
    const double base = h - 40;
    if (omega) {
        for (const auto& comp : omega->components()) {
            c.rect(c.x(comp.left()), base - 6, c.x(comp.right()) - c.x(comp.left()), 6, "#bab0ac");
        }
    }
    c.axis(base, w.left(), w.right());
    Rational top(1);
    for (const auto& a : nu.atoms()) {
        top = std::max(top, a.weight);
    }
    for (const auto& a : nu.atoms()) {
        if (a.point < w.left() || w.right() < a.point) {
            continue;
        }
        const double y = base - (a.weight / top).to_double() * (base - 20);
        c.line(c.x(a.point), base, c.x(a.point), y, "#e15759", 2);
        c.text(c.x(a.point), y - 4, a.weight.str(), "middle");
    }
    return c.finish();
}

}  // namespace detail

// Stems of height proportional to weight; an empty measure gives the bare axis.
inline std::string measure(const AtomicMeasure& nu, const Window& w) { return detail::measure_plot(nullptr, nu, w); }

// Same, with omega shaded on the axis.
inline std::string measure(const IntervalUnion& omega, const AtomicMeasure& nu, const Window& w)
{
    return detail::measure_plot(&omega, nu, w);
}

// One period [0, T): a row per atom showing its translate of omega (wrapped),
// row height proportional to the weight.
inline std::string tiling_strip(const IntervalUnion& omega, const TilingSolution& sol)
{
    const auto& m = sol.measure;
    const Rational& t = m.period();
    const IntervalUnion base_omega = omega.translated(-omega.left());
    const double row = 24;
    const double h = 60 + row * static_cast<double>(m.atoms().size());
    detail::Canvas c(Rational(0), t, h);
    double y = 14;
    c.text(8, 12, std::string("period ") + t.str() + ", " + to_string(sol.kind));
    for (std::size_t i = 0; i < m.atoms().size(); ++i) {
        const auto& a = m.atoms()[i];
        const double hh = std::max(2.0, a.weight.to_double() * (row - 4));
        const char* color = detail::kPalette[i % 10];
        for (const auto& comp : base_omega.components()) {
            const mpz_class k_end = ceil_int((t - comp.left() - a.point) / t);
            for (mpz_class k = floor_int(-(comp.right() + a.point) / t); k <= k_end; ++k) {
                const Rational l = comp.left() + a.point + Rational(k) * t;
                const Rational r = comp.right() + a.point + Rational(k) * t;
                const Rational cl = std::max(l, Rational(0));
                const Rational cr = std::min(r, t);
                if (cl < cr) {
                    c.rect(c.x(cl), y + (row - hh), c.x(cr) - c.x(cl), hh, color, 0.8);
                }
            }
        }
        c.text(detail::kMargin - 4, y + row - 6, a.point.str() + ":" + a.weight.str(), "end");
        y += row;
    }
    c.axis(y + 10, Rational(0), t);
    return c.finish();
}

// Pieces stacked by scan order; breakpoints dashed.
inline std::string scan_cover(const Rational& lo, const Rational& hi, const WeightedPieces& pieces,
                              const ScanCertificate& cert)
{
    const double h = 260;
    detail::Canvas c(lo, hi, h);
    const double base = h - 40;
    const double unit = base - 30;
    // running height per piece: stacked on what is still active at its start
    std::vector<std::pair<Rational, Rational>> active;  // right endpoint, top
    std::size_t colour = 0;
    for (const auto& group : cert.groups) {
        for (auto j : group) {
            const auto& p = pieces[j];
            Rational bottom(0);
            for (const auto& [r, top] : active) {
                if (p.interval.left() < r) {
                    bottom = std::max(bottom, top);
                }
            }
            const Rational top = bottom + p.weight;
            c.rect(c.x(p.interval.left()), base - top.to_double() * unit,
                   c.x(p.interval.right()) - c.x(p.interval.left()), p.weight.to_double() * unit,
                   detail::kPalette[colour++ % 10], 0.8);
            active.emplace_back(p.interval.right(), top);
        }
    }
    for (const auto& b : cert.breakpoints) {
        c.line(c.x(b), 20, c.x(b), base, "#555555", 1, true);
    }
    c.axis(base, lo, hi);
    return c.finish();
}

}  // namespace weaktile::svg
