#include "mskit/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mskit {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 70, kRight = 560, kTop = 48, kBottom = 520;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* fill_for(Verdict::Status st) {
  switch (st) {
    case Verdict::Status::Holds: return "#7fb3d5";
    case Verdict::Status::HoldsUnder: return "#c2dcee";
    case Verdict::Status::Fails: return "#ffffff";
    case Verdict::Status::Open: return "url(#hatch)";
  }
  return "#ffffff";
}

const char* kLineColors[] = {"#c0392b", "#7d3c98", "#1e8449", "#b7950b"};

}  // namespace

std::string render_svg(const RegionGrid& grid, const std::string& title) {
  std::ostringstream svg;
  auto x_of = [&](double invp) {
    return kLeft + (invp - grid.invp_min) / (grid.invp_max - grid.invp_min) * (kRight - kLeft);
  };
  auto y_of = [&](double s) {
    return kBottom - (s - grid.s_min) / (grid.s_max - grid.s_min) * (kBottom - kTop);
  };

  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
         "font-family=\"monospace\" font-size=\"13\">\n";
  svg << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" "
         "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"6\" height=\"6\" fill=\"#ffffff\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#8a8a8a\" stroke-width=\"1.5\"/>"
         "</pattern></defs>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << fmt(kLeft) << "\" y=\"24\" font-size=\"16\">" << title << "</text>\n";

  // Cells.
  double cw = (kRight - kLeft) / grid.resolution;
  double ch = (kBottom - kTop) / grid.resolution;
  for (int ip = 0; ip < grid.resolution; ++ip) {
    for (int is = 0; is < grid.resolution; ++is) {
      Verdict::Status st = grid.at(ip, is);
      if (st == Verdict::Status::Fails) continue;  // white background
      double x = kLeft + ip * cw;
      double y = kBottom - (is + 1) * ch;
      svg << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(cw + 0.05)
          << "\" height=\"" << fmt(ch + 0.05) << "\" fill=\"" << fill_for(st) << "\"/>\n";
    }
  }

  // Axes with unit ticks.
  svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
      << fmt(kRight - kLeft) << "\" height=\"" << fmt(kBottom - kTop)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (int v = int(std::ceil(grid.invp_min)); v <= int(std::floor(grid.invp_max)); ++v) {
    double x = x_of(v);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kBottom) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(kBottom + 6) << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << fmt(x - 4) << "\" y=\"" << fmt(kBottom + 20) << "\">" << v
        << "</text>\n";
  }
  for (int v = int(std::ceil(grid.s_min)); v <= int(std::floor(grid.s_max)); ++v) {
    double y = y_of(v);
    svg << "<line x1=\"" << fmt(kLeft - 6) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << fmt(kLeft - 34) << "\" y=\"" << fmt(y + 4) << "\">" << v
        << "</text>\n";
  }
  if (grid.s_min < 0 && grid.s_max > 0) {
    double y = y_of(0);
    svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kRight)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#666666\" stroke-width=\"0.6\"/>\n";
  }
  svg << "<text x=\"" << fmt(kRight - 24) << "\" y=\"" << fmt(kBottom + 36)
      << "\">1/p</text>\n";
  svg << "<text x=\"" << fmt(kLeft - 54) << "\" y=\"" << fmt(kTop - 10) << "\">s</text>\n";

  // Breaking-line overlays: dense polylines clipped to the plot box.
  for (std::size_t li = 0; li < grid.overlays.size(); ++li) {
    const auto& line = grid.overlays[li];
    const char* color = kLineColors[li % 4];
    std::ostringstream pts;
    bool in_segment = false;
    const int samples = 256;
    for (int i = 0; i <= samples; ++i) {
      double invp = grid.invp_min + (grid.invp_max - grid.invp_min) * i / samples;
      double s = line.at(Scalar(invp)).to_double();
      if (s < grid.s_min || s > grid.s_max) {
        if (in_segment) {
          svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"2\"/>\n";
          pts.str("");
          in_segment = false;
        }
        continue;
      }
      pts << fmt(x_of(invp)) << "," << fmt(y_of(s)) << " ";
      in_segment = true;
    }
    if (in_segment)
      svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
  }

  // Legend.
  double ly = kTop + 8;
  const double lx = kRight + 14;
  auto swatch = [&](const char* fill, const std::string& label) {
    svg << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" width=\"16\" height=\"12\" fill=\""
        << fill << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    svg << "<text x=\"" << fmt(lx + 22) << "\" y=\"" << fmt(ly + 11) << "\">" << label
        << "</text>\n";
    ly += 20;
  };
  swatch("#7fb3d5", "holds");
  swatch("#c2dcee", "holds under condition");
  swatch("#ffffff", "fails");
  swatch("url(#hatch)", "open");
  ly += 8;
  for (std::size_t li = 0; li < grid.overlays.size(); ++li) {
    const char* color = kLineColors[li % 4];
    svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly + 6) << "\" x2=\"" << fmt(lx + 16)
        << "\" y2=\"" << fmt(ly + 6) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(lx + 22) << "\" y=\"" << fmt(ly + 10) << "\" font-size=\"11\">"
        << grid.overlays[li].label << "</text>\n";
    ly += 18;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mskit
