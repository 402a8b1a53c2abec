#include "hemc/svg.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace hemc {

namespace {

std::string color_for(const std::string& id) {
    // Stable id-derived hue.
    std::size_t h = std::hash<std::string>{}(id);
    int hue = static_cast<int>(h % 360);
    return "hsl(" + std::to_string(hue) + ",65%,60%)";
}

std::string escape(const std::string& s) {
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

} // namespace

std::string schedule_to_svg(const Schedule& s, double width_px) {
    const double lane_h = 28, lane_gap = 6, margin = 40, top = 24, bottom = 28;
    const int lanes = static_cast<int>(s.big_cores.size() + s.small_cores.size());
    const double height = top + lanes * (lane_h + lane_gap) + bottom;
    const double span = s.makespan > 0 ? s.makespan : 1.0;
    const double px = width_px / span;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px + 2 * margin
        << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";

    int lane = 0;
    auto draw_pool = [&](const std::vector<std::vector<Segment>>& pool, const char* kind) {
        for (std::size_t i = 0; i < pool.size(); ++i, ++lane) {
            double y = top + lane * (lane_h + lane_gap);
            svg << "<text x=\"4\" y=\"" << y + lane_h * 0.7 << "\">" << kind << i << "</text>\n";
            svg << "<rect x=\"" << margin << "\" y=\"" << y << "\" width=\"" << width_px
                << "\" height=\"" << lane_h << "\" fill=\"#f2f2f2\"/>\n";
            for (const auto& seg : pool[i]) {
                double x0 = margin + seg.start * px;
                double wdt = (seg.end - seg.start) * px;
                svg << "<rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << wdt
                    << "\" height=\"" << lane_h << "\" fill=\"" << color_for(seg.process)
                    << "\" stroke=\"#333\" stroke-width=\"0.5\"><title>" << escape(seg.process)
                    << " [" << seg.start << ", " << seg.end << ")</title></rect>\n";
                if (wdt > 30)
                    svg << "<text x=\"" << x0 + 3 << "\" y=\"" << y + lane_h * 0.7 << "\">"
                        << escape(seg.process) << "</text>\n";
            }
        }
    };
    draw_pool(s.big_cores, "big");
    draw_pool(s.small_cores, "small");

    double mx = margin + s.makespan * px;
    double bot = top + lanes * (lane_h + lane_gap);
    svg << "<line x1=\"" << mx << "\" y1=\"" << top - 8 << "\" x2=\"" << mx << "\" y2=\"" << bot
        << "\" stroke=\"#c00\" stroke-width=\"1.5\" stroke-dasharray=\"4 2\"/>\n";
    svg << "<text x=\"" << mx + 4 << "\" y=\"" << bot + 16 << "\" fill=\"#c00\">makespan "
        << s.makespan << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

void write_svg(const std::string& path, const Schedule& s, double width_px) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot open output file '" + path + "'");
    out << schedule_to_svg(s, width_px);
}

} // namespace hemc
