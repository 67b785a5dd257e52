#include "radlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "radlab/common.hpp"

namespace radlab {

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return nlohmann::json(x).dump();
}

std::string canonical_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

static nlohmann::json config_json(const RunConfig& c) {
  return nlohmann::json{{"command", c.command},
                        {"dims", c.dims},
                        {"seed", c.seed},
                        {"tolerance_overrides", c.tolerance_overrides},
                        {"out", c.out_path},
                        {"csv", c.csv_path},
                        {"svg", c.svg_path}};
}

nlohmann::json report_json(const RunReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const RunCheck& c : report.checks)
    checks.push_back(nlohmann::json{{"name", c.name},
                                    {"pass", c.pass},
                                    {"value", c.value},
                                    {"tolerance", c.tolerance}});
  return nlohmann::json{{"checks", checks},
                        {"config", config_json(report.config)},
                        {"metrics", report.metrics},
                        {"version", report.version}};
}

bool all_checks_pass(const RunReport& report) {
  for (const RunCheck& c : report.checks)
    if (!c.pass) return false;
  return true;
}

double resolve_tolerance(const RunConfig& config, const std::string& name,
                         double default_tol) {
  const auto it = config.tolerance_overrides.find(name);
  if (it == config.tolerance_overrides.end()) return default_tol;
  const double v = it->second;
  if (!(v >= default_tol && v <= 10.0 * default_tol))
    throw UsageError("tolerance override '" + name + "' = " + fmt_double(v) +
                     " must loosen the default " + fmt_double(default_tol) +
                     " by at most a factor of 10");
  return v;
}

std::string csv_encode(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const std::string& f = row[i];
      if (f.find_first_of(",\"\n") != std::string::npos) {
        out += '"';
        for (char ch : f) {
          if (ch == '"') out += '"';
          out += ch;
        }
        out += '"';
      } else {
        out += f;
      }
    }
    out += '\n';
  }
  return out;
}

// ---- SVG -------------------------------------------------------------------

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f6fb2", "#c4452c", "#3a8f4d", "#7a4fa3",
                                    "#b58a1f", "#2b90a8"};

}  // namespace

std::string svg_line_plot(const SvgSpec& spec) {
  const double W = 640, H = 440;
  const double L = 70, R = 20, T = 40, B = 50;
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  bool first = true;
  for (const auto& s : spec.series)
    for (const auto& [x, y] : s.points) {
      if (first) {
        xlo = xhi = x;
        ylo = yhi = y;
        first = false;
      } else {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
      }
    }
  if (xhi - xlo <= 0) {
    xlo -= 1;
    xhi += 1;
  }
  if (yhi - ylo <= 0) {
    ylo -= 1;
    yhi += 1;
  }
  const double xpad = 0.05 * (xhi - xlo), ypad = 0.05 * (yhi - ylo);
  xlo -= xpad;
  xhi += xpad;
  ylo -= ypad;
  yhi += ypad;
  auto sx = [&](double x) { return L + (x - xlo) / (xhi - xlo) * (W - L - R); };
  auto sy = [&](double y) {
    return H - B - (y - ylo) / (yhi - ylo) * (H - T - B);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " "
      << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << px(W / 2) << "\" y=\"22\" text-anchor=\"middle\" "
         "font-size=\"15\">"
      << xml_escape(spec.title) << "</text>\n";

  // Axes with five ticks each.
  svg << "<g stroke=\"#444444\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << px(L) << "\" y1=\"" << px(H - B) << "\" x2=\""
      << px(W - R) << "\" y2=\"" << px(H - B) << "\"/>\n";
  svg << "<line x1=\"" << px(L) << "\" y1=\"" << px(T) << "\" x2=\"" << px(L)
      << "\" y2=\"" << px(H - B) << "\"/>\n";
  svg << "</g>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xlo + (xhi - xlo) * t / 4;
    const double fy = ylo + (yhi - ylo) * t / 4;
    char lab[32];
    svg << "<line x1=\"" << px(sx(fx)) << "\" y1=\"" << px(H - B) << "\" x2=\""
        << px(sx(fx)) << "\" y2=\"" << px(H - B + 5)
        << "\" stroke=\"#444444\"/>\n";
    std::snprintf(lab, sizeof lab, "%.4g", fx);
    svg << "<text x=\"" << px(sx(fx)) << "\" y=\"" << px(H - B + 18)
        << "\" text-anchor=\"middle\">" << lab << "</text>\n";
    svg << "<line x1=\"" << px(L - 5) << "\" y1=\"" << px(sy(fy)) << "\" x2=\""
        << px(L) << "\" y2=\"" << px(sy(fy)) << "\" stroke=\"#444444\"/>\n";
    std::snprintf(lab, sizeof lab, "%.4g", fy);
    svg << "<text x=\"" << px(L - 8) << "\" y=\"" << px(sy(fy) + 4)
        << "\" text-anchor=\"end\">" << lab << "</text>\n";
  }
  svg << "<text x=\"" << px((L + W - R) / 2) << "\" y=\"" << px(H - 12)
      << "\" text-anchor=\"middle\">" << xml_escape(spec.xlabel)
      << "</text>\n";
  svg << "<text x=\"16\" y=\"" << px((T + H - B) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << px((T + H - B) / 2) << ")\">" << xml_escape(spec.ylabel)
      << "</text>\n";

  for (size_t si = 0; si < spec.series.size(); ++si) {
    const SvgSeries& s = spec.series[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    if (s.draw_line && s.points.size() > 1) {
      svg << "<path fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" d=\"";
      for (size_t i = 0; i < s.points.size(); ++i)
        svg << (i ? " L " : "M ") << px(sx(s.points[i].first)) << " "
            << px(sy(s.points[i].second));
      svg << "\"/>\n";
    }
    if (s.draw_markers)
      for (const auto& [x, y] : s.points)
        svg << "<circle cx=\"" << px(sx(x)) << "\" cy=\"" << px(sy(y))
            << "\" r=\"3\" fill=\"" << color << "\" data-x=\"" << fmt_double(x)
            << "\" data-y=\"" << fmt_double(y) << "\"/>\n";
    svg << "<text x=\"" << px(W - R - 6) << "\" y=\"" << px(T + 14 * (si + 1))
        << "\" text-anchor=\"end\" fill=\"" << color << "\">"
        << xml_escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ---- file helpers ----------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace radlab
