/*
   Copyright 2026 the abelzeta authors

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

/*
   Self-contained static SVG chart of the convergence ratio ln h/(g ln q)
   against the genus, with the effective floor 1 - (1 + ln 4g)/(g ln 2) and
   the horizontal ceiling 2 ln(1 + sqrt(q))/ln q overlaid. Plot coordinates
   use plain doubles; certification happens elsewhere. The generation
   timestamp comment is optional so the rest of the file stays byte-stable.
*/

#pragma once

#include <cmath>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

namespace abelzeta {

struct SvgPoint {
    unsigned g;
    double ratio;
};

namespace detail {

inline std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline double effective_floor(double g) { return 1.0 - (1.0 + std::log(4.0 * g)) / (g * std::log(2.0)); }

}  // namespace detail

inline std::string render_ratio_svg(const std::vector<SvgPoint>& pts, double q,
                                    bool with_timestamp) {
    const double W = 640, H = 420, ML = 64, MR = 24, MT = 40, MB = 48;
    const double upper = 2.0 * std::log(1.0 + std::sqrt(q)) / std::log(q);
    double gmin = 1, gmax = 2, ymin = 0, ymax = upper;
    if (!pts.empty()) {
        gmin = pts.front().g;
        gmax = pts.front().g;
        for (const auto& p : pts) {
            gmin = std::min(gmin, double(p.g));
            gmax = std::max(gmax, double(p.g));
            ymin = std::min(ymin, p.ratio);
            ymax = std::max(ymax, p.ratio);
        }
        ymin = std::min(ymin, detail::effective_floor(gmin));
    }
    if (gmax <= gmin) gmax = gmin + 1;
    ymin -= 0.15;
    ymax += 0.15;
    const auto X = [&](double g) { return ML + (g - gmin) / (gmax - gmin) * (W - ML - MR); };
    const auto Y = [&](double r) { return H - MB - (r - ymin) / (ymax - ymin) * (H - MT - MB); };
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 420\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
    if (with_timestamp) {
        char stamp[64];
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
        s += std::string("<!-- generated ") + stamp + " -->\n";
    }
    s += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">class number growth: "
         "ln h / (g ln q) vs genus</text>\n";
    // axes
    s += "<line x1=\"" + detail::fixed2(ML) + "\" y1=\"" + detail::fixed2(MT) + "\" x2=\"" +
         detail::fixed2(ML) + "\" y2=\"" + detail::fixed2(H - MB) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + detail::fixed2(ML) + "\" y1=\"" + detail::fixed2(H - MB) + "\" x2=\"" +
         detail::fixed2(W - MR) + "\" y2=\"" + detail::fixed2(H - MB) + "\" stroke=\"black\"/>\n";
    // ticks
    const unsigned gstep = gmax - gmin > 24 ? 4 : (gmax - gmin > 10 ? 2 : 1);
    for (unsigned g = unsigned(gmin); g <= unsigned(gmax); g += gstep) {
        s += "<line x1=\"" + detail::fixed2(X(g)) + "\" y1=\"" + detail::fixed2(H - MB) +
             "\" x2=\"" + detail::fixed2(X(g)) + "\" y2=\"" + detail::fixed2(H - MB + 5) +
             "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + detail::fixed2(X(g)) + "\" y=\"" + detail::fixed2(H - MB + 18) +
             "\" text-anchor=\"middle\">" + std::to_string(g) + "</text>\n";
    }
    for (double r = std::ceil(ymin * 2) / 2; r <= ymax; r += 0.5) {
        s += "<line x1=\"" + detail::fixed2(ML - 5) + "\" y1=\"" + detail::fixed2(Y(r)) +
             "\" x2=\"" + detail::fixed2(ML) + "\" y2=\"" + detail::fixed2(Y(r)) +
             "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + detail::fixed2(ML - 8) + "\" y=\"" + detail::fixed2(Y(r) + 4) +
             "\" text-anchor=\"end\">" + detail::fixed2(r) + "</text>\n";
    }
    s += "<text x=\"" + detail::fixed2((ML + W - MR) / 2) + "\" y=\"" + detail::fixed2(H - 10) +
         "\" text-anchor=\"middle\">genus g</text>\n";
    // ceiling 2 ln(1+sqrt(q))/ln q
    s += "<line x1=\"" + detail::fixed2(ML) + "\" y1=\"" + detail::fixed2(Y(upper)) + "\" x2=\"" +
         detail::fixed2(W - MR) + "\" y2=\"" + detail::fixed2(Y(upper)) +
         "\" stroke=\"#c03030\" stroke-dasharray=\"6 3\"/>\n";
    // effective floor, sampled per genus unit
    std::string floor_path;
    for (double g = gmin; g <= gmax + 1e-9; g += gstep > 1 ? 0.5 : 0.25) {
        const double r = detail::effective_floor(g);
        if (r < ymin) continue;
        floor_path += floor_path.empty() ? "M" : " L";
        floor_path += detail::fixed2(X(g)) + " " + detail::fixed2(Y(r));
    }
    if (!floor_path.empty())
        s += "<path d=\"" + floor_path +
             "\" fill=\"none\" stroke=\"#3060c0\" stroke-dasharray=\"6 3\"/>\n";
    // data polyline and markers
    if (!pts.empty()) {
        std::string path;
        for (const auto& p : pts) {
            path += path.empty() ? "M" : " L";
            path += detail::fixed2(X(p.g)) + " " + detail::fixed2(Y(p.ratio));
        }
        s += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#208040\" stroke-width=\"1.5\"/>\n";
        for (const auto& p : pts)
            s += "<circle cx=\"" + detail::fixed2(X(p.g)) + "\" cy=\"" +
                 detail::fixed2(Y(p.ratio)) + "\" r=\"3\" fill=\"#208040\"/>\n";
    }
    // legend
    const double lx = W - MR - 240, ly = MT + 8;
    s += "<rect x=\"" + detail::fixed2(lx - 8) + "\" y=\"" + detail::fixed2(ly - 14) +
         "\" width=\"248\" height=\"58\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    s += "<text x=\"" + detail::fixed2(lx) + "\" y=\"" + detail::fixed2(ly) +
         "\" fill=\"#208040\">ratio ln h / (g ln q)</text>\n";
    s += "<text x=\"" + detail::fixed2(lx) + "\" y=\"" + detail::fixed2(ly + 18) +
         "\" fill=\"#c03030\">ceiling 2 ln(1+sqrt q)/ln q</text>\n";
    s += "<text x=\"" + detail::fixed2(lx) + "\" y=\"" + detail::fixed2(ly + 36) +
         "\" fill=\"#3060c0\">floor 1 - (1+ln 4g)/(g ln 2)</text>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace abelzeta
