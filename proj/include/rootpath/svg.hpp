/*
   Copyright 2026 The rootpath Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdio>
#include <string>

#include "rootpath/solver.hpp"

namespace rootpath {
namespace detail {

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Maps data coordinates into one square panel, uniform scale, y up, data
// fitted with a 10% margin.
struct PanelMap {
    double x0, y0, size;           // panel rectangle in canvas coordinates
    double cx = 0.0, cy = 0.0;     // data center
    double unit = 1.0;             // canvas units per data unit

    void fit(double min_x, double max_x, double min_y, double max_y) {
        cx = 0.5 * (min_x + max_x);
        cy = 0.5 * (min_y + max_y);
        double span = std::max(max_x - min_x, max_y - min_y);
        if (!(span > 0.0)) span = 1.0;
        span *= 1.2;  // 10% margin on each side
        unit = size / span;
    }

    double x(double data_x) const { return x0 + size / 2.0 + (data_x - cx) * unit; }
    double y(double data_y) const { return y0 + size / 2.0 - (data_y - cy) * unit; }
};

struct Bounds {
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    bool any = false;
    void add(Complex z, double pad = 0.0) {
        if (!any) {
            min_x = z.real() - pad;
            max_x = z.real() + pad;
            min_y = z.imag() - pad;
            max_y = z.imag() + pad;
            any = true;
            return;
        }
        min_x = std::min(min_x, z.real() - pad);
        max_x = std::max(max_x, z.real() + pad);
        min_y = std::min(min_y, z.imag() - pad);
        max_y = std::max(max_y, z.imag() + pad);
    }
};

}  // namespace detail

/// Two side-by-side panels: the value plane (planned polyline, critical
/// values as crosses with their clearance circles) and the z plane (tracked
/// root trajectory with the final root marked). Exactly two top-level groups.
inline std::string trace_svg(const TraceRun& run) {
    using detail::fmt_num;
    constexpr double kPanel = 400.0;
    constexpr double kGap = 40.0;
    constexpr double kPad = 20.0;
    const double width = 2 * kPanel + kGap + 2 * kPad;
    const double height = kPanel + 2 * kPad;

    detail::PanelMap cmap{kPad, kPad, kPanel};
    detail::PanelMap zmap{kPad + kPanel + kGap, kPad, kPanel};

    detail::Bounds cb;
    for (const Complex& w : run.plan.waypoints) cb.add(w);
    for (const Complex& d : run.critical_values) cb.add(d, run.plan.clearance);
    cmap.fit(cb.min_x, cb.max_x, cb.min_y, cb.max_y);

    detail::Bounds zb;
    for (const TraceRecord& rec : run.trace.records) zb.add(rec.z);
    zb.add(run.root);
    zmap.fit(zb.min_x, zb.max_x, zb.min_y, zb.max_y);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt_num(width) +
           "\" height=\"" + fmt_num(height) + "\" viewBox=\"0 0 " + fmt_num(width) + " " +
           fmt_num(height) + "\">\n";

    // value-plane panel
    svg += "<g id=\"c-plane\">\n";
    svg += "<rect x=\"" + fmt_num(cmap.x0) + "\" y=\"" + fmt_num(cmap.y0) + "\" width=\"" +
           fmt_num(kPanel) + "\" height=\"" + fmt_num(kPanel) +
           "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    svg += "<text x=\"" + fmt_num(cmap.x0 + 8) + "\" y=\"" + fmt_num(cmap.y0 + 18) +
           "\" font-size=\"14\" fill=\"#555555\">c-plane</text>\n";
    for (const Complex& d : run.critical_values) {
        const double px = cmap.x(d.real());
        const double py = cmap.y(d.imag());
        const double r = run.plan.clearance * cmap.unit;
        svg += "<circle cx=\"" + fmt_num(px) + "\" cy=\"" + fmt_num(py) + "\" r=\"" + fmt_num(r) +
               "\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
        svg += "<line x1=\"" + fmt_num(px - 5) + "\" y1=\"" + fmt_num(py - 5) + "\" x2=\"" +
               fmt_num(px + 5) + "\" y2=\"" + fmt_num(py + 5) + "\" stroke=\"#d62728\"/>\n";
        svg += "<line x1=\"" + fmt_num(px - 5) + "\" y1=\"" + fmt_num(py + 5) + "\" x2=\"" +
               fmt_num(px + 5) + "\" y2=\"" + fmt_num(py - 5) + "\" stroke=\"#d62728\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < run.plan.waypoints.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt_num(cmap.x(run.plan.waypoints[i].real())) + "," +
               fmt_num(cmap.y(run.plan.waypoints[i].imag()));
    }
    svg += "\"/>\n</g>\n";

    // z-plane panel
    svg += "<g id=\"z-plane\">\n";
    svg += "<rect x=\"" + fmt_num(zmap.x0) + "\" y=\"" + fmt_num(zmap.y0) + "\" width=\"" +
           fmt_num(kPanel) + "\" height=\"" + fmt_num(kPanel) +
           "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    svg += "<text x=\"" + fmt_num(zmap.x0 + 8) + "\" y=\"" + fmt_num(zmap.y0 + 18) +
           "\" font-size=\"14\" fill=\"#555555\">z-plane</text>\n";
    svg += "<polyline fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < run.trace.records.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt_num(zmap.x(run.trace.records[i].z.real())) + "," +
               fmt_num(zmap.y(run.trace.records[i].z.imag()));
    }
    svg += "\"/>\n";
    svg += "<circle cx=\"" + fmt_num(zmap.x(run.root.real())) + "\" cy=\"" +
           fmt_num(zmap.y(run.root.imag())) + "\" r=\"4\" fill=\"#2ca02c\"/>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace rootpath
