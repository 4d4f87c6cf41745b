#include "hnslope/svg.hpp"

#include <fstream>
#include <sstream>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

constexpr long kWidth = 800;
constexpr long kHeight = 600;
constexpr long kMargin = 60;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

// Round half up to three decimals, trailing zeros kept.
std::string fixed3(const Rational& x) {
  const mpz_class k = (x * Rational(1000) + Rational(1, 2)).floor();
  mpz_class a = abs(k);
  const mpz_class whole = a / 1000, frac = a % 1000;
  std::string f = frac.get_str();
  f.insert(0, 3 - f.size(), '0');
  return std::string(k < 0 ? "-" : "") + whole.get_str() + "." + f;
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

std::vector<std::pair<Rational, Rational>> vertices(const ConcavePolygon& p) {
  std::vector<std::pair<Rational, Rational>> v{{Rational(0), Rational(0)}};
  for (const auto& s : p.segments()) v.emplace_back(v.back().first + s.width, v.back().second + s.slope * s.width);
  return v;
}

}  // namespace

std::string plot_polygons(const std::vector<LabeledPolygon>& polygons) {
  if (polygons.empty()) fail(ErrorKind::InvalidArgument, "nothing to plot");
  Rational xmax(0), ymin(0), ymax(0);
  for (const auto& [label, poly] : polygons) {
    for (const auto& [x, y] : vertices(poly)) {
      xmax = max(xmax, x);
      ymin = min(ymin, y);
      ymax = max(ymax, y);
    }
  }
  if (xmax.is_zero()) xmax = Rational(1);
  if (ymin == ymax) ymax = ymin + Rational(1);

  const Rational plot_w(kWidth - 2 * kMargin), plot_h(kHeight - 2 * kMargin);
  auto px = [&](const Rational& x) { return Rational(kMargin) + x / xmax * plot_w; };
  auto py = [&](const Rational& y) { return Rational(kHeight - kMargin) - (y - ymin) / (ymax - ymin) * plot_h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  const std::string x0 = fixed3(px(Rational(0))), x1 = fixed3(px(xmax));
  const std::string y0 = fixed3(py(Rational(0))), ylo = fixed3(py(ymin)), yhi = fixed3(py(ymax));
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << ylo << "\" x2=\"" << x0 << "\" y2=\"" << yhi << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"monospace\" font-size=\"12\">\n";
  out << "<text x=\"" << x1 << "\" y=\"" << fixed3(py(Rational(0)) + Rational(16)) << "\" text-anchor=\"end\">"
      << xmax.str() << "</text>\n";
  out << "<text x=\"" << fixed3(px(Rational(0)) - Rational(6)) << "\" y=\"" << yhi << "\" text-anchor=\"end\">"
      << ymax.str() << "</text>\n";
  out << "<text x=\"" << fixed3(px(Rational(0)) - Rational(6)) << "\" y=\"" << ylo << "\" text-anchor=\"end\">"
      << ymin.str() << "</text>\n";
  out << "</g>\n";

  const std::size_t ncolors = sizeof(kColors) / sizeof(kColors[0]);
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[i % ncolors] << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : vertices(polygons[i].second)) {
      out << (first ? "" : " ") << fixed3(px(x)) << ',' << fixed3(py(y));
      first = false;
    }
    out << "\"/>\n";
  }

  out << "<g font-family=\"monospace\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    const long y = kMargin + 16 * static_cast<long>(i);
    out << "<rect x=\"" << kWidth - 200 << "\" y=\"" << y - 9 << "\" width=\"10\" height=\"10\" fill=\""
        << kColors[i % ncolors] << "\"/>\n";
    out << "<text x=\"" << kWidth - 184 << "\" y=\"" << y << "\">" << escape(polygons[i].first) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_svg(const std::vector<LabeledPolygon>& polygons, const std::string& path) {
  const std::string svg = plot_polygons(polygons);
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  f << svg;
  if (!f) fail(ErrorKind::IoError, "write to " + path + " failed");
}

}  // namespace hnslope
