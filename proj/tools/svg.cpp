#include "svg.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "csv_io.hpp"

namespace rankgini::cli {

namespace {

constexpr double kSize = 800.0;
constexpr double kLeft = 80.0;
constexpr double kTop = 40.0;
constexpr double kSide = 640.0;

struct Style {
    const char* best;
    const char* worst;
};

// Single model: red best, orange worst. Several models: one hue each.
constexpr std::array<Style, 5> kPalette = {{
    {"#d62728", "#ff7f0e"},
    {"#1f77b4", "#1f77b4"},
    {"#9467bd", "#9467bd"},
    {"#8c564b", "#8c564b"},
    {"#e377c2", "#e377c2"},
}};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Consecutive corners that land on the same hundredth of a pixel are drawn once.
std::string points(const Curve& curve) {
    std::string out;
    std::string last;
    for (const auto& p : curve.corners()) {
        const double x = kLeft + kSide * p.alpha;
        const double y = kTop + kSide * (1.0 - p.value);
        std::string pt = format_fixed(x, 2) + "," + format_fixed(y, 2);
        if (pt == last) continue;
        if (!out.empty()) out += ' ';
        out += pt;
        last = std::move(pt);
    }
    return out;
}

void polyline(std::ostringstream& os, const Curve& c, const char* color, double width, const char* dash) {
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << " points=\"" << points(c) << "\"/>\n";
}

} // namespace

std::string render_svg(const Curve& lorenz, double lorenz_area, const std::vector<ModelCurves>& models) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    os << "  <rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kSide << "\" height=\"" << kSide
       << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        const std::string label = format_fixed(t, 2);
        os << "  <text x=\"" << format_fixed(kLeft + kSide * t, 2) << "\" y=\"" << kTop + kSide + 22
           << "\" font-size=\"13\" text-anchor=\"middle\">" << label << "</text>\n";
        os << "  <text x=\"" << kLeft - 10 << "\" y=\"" << format_fixed(kTop + kSide * (1 - t) + 4, 2)
           << "\" font-size=\"13\" text-anchor=\"end\">" << label << "</text>\n";
    }
    os << "  <text x=\"" << kLeft + kSide / 2 << "\" y=\"" << kTop + kSide + 48
       << "\" font-size=\"15\" text-anchor=\"middle\">alpha (cumulative weight share)</text>\n";

    os << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop + kSide << "\" x2=\"" << kLeft + kSide << "\" y2=\""
       << kTop << "\" stroke=\"#888\" stroke-width=\"1.5\" stroke-dasharray=\"2,4\"/>\n";

    std::vector<std::pair<std::string, std::string>> legend;  // colour, text
    legend.emplace_back("#000000", "Lorenz curve, B = " + format_fixed(lorenz_area, 4));
    for (std::size_t m = 0; m < models.size(); ++m) {
        const auto& mc = models[m];
        const Style style = kPalette[m % kPalette.size()];
        polyline(os, mc.best, style.best, 2.0, nullptr);
        polyline(os, mc.worst, style.worst, 2.0, "8,5");
        const std::string prefix = models.size() > 1 ? mc.name + ": " : std::string();
        legend.emplace_back(style.best, prefix + "best CAP, A = " + format_fixed(mc.areas.best, 4));
        legend.emplace_back(style.worst, prefix + "worst CAP, A = " + format_fixed(mc.areas.worst, 4));
        if (mc.mid) {
            const char* mid_color = models.size() > 1 ? style.best : "#2ca02c";
            polyline(os, *mc.mid, mid_color, 1.5, "2,3");
            legend.emplace_back(mid_color, prefix + "mid CAP, A = " + format_fixed(mc.areas.mid, 4));
        } else {
            legend.emplace_back("#2ca02c", prefix + "mid area = " + format_fixed(mc.areas.mid, 4));
        }
    }
    polyline(os, lorenz, "#000000", 2.5, nullptr);

    double y = kTop + kSide - 18.0 * static_cast<double>(legend.size()) - 8.0;
    for (const auto& [color, text] : legend) {
        os << "  <line x1=\"" << kLeft + kSide * 0.45 << "\" y1=\"" << y - 4 << "\" x2=\"" << kLeft + kSide * 0.45 + 24
           << "\" y2=\"" << y - 4 << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
        os << "  <text x=\"" << kLeft + kSide * 0.45 + 32 << "\" y=\"" << y << "\" font-size=\"13\">"
           << xml_escape(text) << "</text>\n";
        y += 18.0;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace rankgini::cli
