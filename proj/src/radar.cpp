#include "casekit/radar.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "casekit/errors.hpp"

namespace casekit {

namespace {

constexpr const char* kColor[2] = {"#1f77b4", "#d62728"};  // procedural, implementation

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Greedy word wrap; a single overlong word stays on its own line.
std::vector<std::string> wrap(std::string_view text, std::size_t width) {
    std::vector<std::string> lines;
    std::string cur;
    std::size_t i = 0;
    while (i < text.size()) {
        auto j = text.find(' ', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view word = text.substr(i, j - i);
        if (!word.empty()) {
            if (!cur.empty() && cur.size() + 1 + word.size() > width) {
                lines.push_back(std::move(cur));
                cur.clear();
            }
            if (!cur.empty()) cur.push_back(' ');
            cur += word;
        }
        i = j + 1;
    }
    if (!cur.empty() || lines.empty()) lines.push_back(std::move(cur));
    return lines;
}

// Labels above the chart grow upward so they never cross the rings.
void label_lines(std::ostringstream& o, std::string_view family, double x, bool above) {
    const auto lines = wrap(family, 24);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        std::string dy = "1.2em";
        if (k == 0) dy = above && lines.size() > 1 ? svg_number(-1.2 * static_cast<double>(lines.size() - 1)) + "em" : "0";
        o << "<tspan x=\"" << svg_number(x) << "\" dy=\"" << dy << "\">" << xml_escape(lines[k]) << "</tspan>";
    }
}

double fraction(const std::optional<Rational>& v) { return v ? to_double(*v) / 3.0 : 0.0; }

std::string label_value(const std::optional<Rational>& v) { return v ? to_string(*v) : "n/a"; }

void header(std::ostringstream& o, const char* title) {
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_number(kRadarWidth) << "\" height=\""
      << svg_number(kRadarHeight) << "\" viewBox=\"0 0 " << svg_number(kRadarWidth) << " " << svg_number(kRadarHeight)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<title>" << title << "</title>\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

void legend(std::ostringstream& o) {
    o << "<g class=\"legend\">\n";
    for (int d = 0; d < 2; ++d) {
        double y = 16.0 + 16.0 * d;
        o << "<rect x=\"12\" y=\"" << svg_number(y - 9) << "\" width=\"10\" height=\"10\" fill=\"" << kColor[d]
          << "\"/>\n";
        o << "<text x=\"28\" y=\"" << svg_number(y) << "\">" << to_string(static_cast<Dimension>(d)) << "</text>\n";
    }
    o << "</g>\n";
}

std::string render_polar(const RadarData& radar) {
    const std::size_t n = radar.spokes.size();
    std::ostringstream o;
    header(o, "Claim support by family");

    auto angle = [n](std::size_t i) {
        return -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    };

    o << "<g class=\"rings\" fill=\"none\" stroke=\"#bbbbbb\">\n";
    for (int k = 0; k <= 3; ++k) {
        o << "<circle cx=\"" << svg_number(kRadarCx) << "\" cy=\"" << svg_number(kRadarCy) << "\" r=\""
          << svg_number(kRadarRadius * k / 3.0) << "\" data-level=\"" << k << "\"/>\n";
    }
    o << "</g>\n";
    o << "<g class=\"ring-labels\" fill=\"#666666\">\n";
    for (int k = 0; k <= 3; ++k) {
        o << "<text x=\"" << svg_number(kRadarCx + 3) << "\" y=\""
          << svg_number(kRadarCy - kRadarRadius * k / 3.0 - 3) << "\">" << k << "</text>\n";
    }
    o << "</g>\n";

    o << "<g class=\"spokes\" stroke=\"#888888\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        double a = angle(i);
        o << "<line x1=\"" << svg_number(kRadarCx) << "\" y1=\"" << svg_number(kRadarCy) << "\" x2=\""
          << svg_number(kRadarCx + kRadarRadius * std::cos(a)) << "\" y2=\""
          << svg_number(kRadarCy + kRadarRadius * std::sin(a)) << "\"/>\n";
    }
    o << "</g>\n";

    for (int d = 0; d < 2; ++d) {
        auto dim = static_cast<Dimension>(d);
        o << "<polygon class=\"" << to_string(dim) << "\" fill=\"" << kColor[d] << "\" fill-opacity=\"0.2\" stroke=\""
          << kColor[d] << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            double a = angle(i);
            double r = kRadarRadius * fraction(radar.spokes[i].value(dim));
            if (i) o << ' ';
            o << svg_number(kRadarCx + r * std::cos(a)) << ',' << svg_number(kRadarCy + r * std::sin(a));
        }
        o << "\"/>\n";
    }

    o << "<g class=\"labels\" fill=\"#222222\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = radar.spokes[i];
        double a = angle(i);
        double x = kRadarCx + (kRadarRadius + 18) * std::cos(a);
        double y = kRadarCy + (kRadarRadius + 18) * std::sin(a);
        double c = std::cos(a);
        const char* anchor = std::abs(c) < 1e-9 ? "middle" : (c > 0 ? "start" : "end");
        o << "<text x=\"" << svg_number(x) << "\" y=\"" << svg_number(y) << "\" text-anchor=\"" << anchor
          << "\" data-procedural=\"" << label_value(s.procedural) << "\" data-implementation=\""
          << label_value(s.implementation) << "\">";
        label_lines(o, s.family, x, std::sin(a) < -1e-9);
        o << "</text>\n";
    }
    o << "</g>\n";
    legend(o);
    o << "</svg>\n";
    return o.str();
}

std::string render_bars(const RadarData& radar) {
    std::ostringstream o;
    header(o, "Claim support by family");
    const double left = 80, bottom = 460, height = 360;
    const double group = (kRadarWidth - left - 40) / static_cast<double>(radar.spokes.size());
    const double bar = group / 3.0;

    o << "<g class=\"rings\" stroke=\"#bbbbbb\">\n";
    for (int k = 0; k <= 3; ++k) {
        double y = bottom - height * k / 3.0;
        o << "<line x1=\"" << svg_number(left) << "\" y1=\"" << svg_number(y) << "\" x2=\""
          << svg_number(kRadarWidth - 40) << "\" y2=\"" << svg_number(y) << "\" data-level=\"" << k << "\"/>\n";
        o << "<text x=\"" << svg_number(left - 8) << "\" y=\"" << svg_number(y + 4)
          << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#666666\">" << k << "</text>\n";
    }
    o << "</g>\n";

    for (std::size_t i = 0; i < radar.spokes.size(); ++i) {
        const auto& s = radar.spokes[i];
        double x0 = left + group * static_cast<double>(i) + bar / 2;
        for (int d = 0; d < 2; ++d) {
            auto dim = static_cast<Dimension>(d);
            double h = height * fraction(s.value(dim));
            o << "<rect class=\"" << to_string(dim) << "\" x=\"" << svg_number(x0 + bar * d) << "\" y=\""
              << svg_number(bottom - h) << "\" width=\"" << svg_number(bar) << "\" height=\"" << svg_number(h)
              << "\" fill=\"" << kColor[d] << "\"/>\n";
        }
        o << "<text x=\"" << svg_number(x0 + bar) << "\" y=\"" << svg_number(bottom + 18)
          << "\" text-anchor=\"middle\" data-procedural=\"" << label_value(s.procedural)
          << "\" data-implementation=\"" << label_value(s.implementation) << "\">";
        label_lines(o, s.family, x0 + bar, false);
        o << "</text>\n";
    }
    legend(o);
    o << "</svg>\n";
    return o.str();
}

}  // namespace

std::string svg_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    std::string s = buf;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

std::string render_radar_svg(const RadarData& radar) {
    if (radar.spokes.empty()) throw Error("EMPTY_RADAR", "", "radar data has no spokes");
    return radar.spokes.size() >= 3 ? render_polar(radar) : render_bars(radar);
}

}  // namespace casekit
