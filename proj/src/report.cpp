#include "bsc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bsc {

namespace {

std::string point_str(const Polygon::Point& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

std::string vertices_str(const Polygon& poly) {
  std::string out;
  for (const auto& p : poly.vertices()) out += (out.empty() ? "" : " ") + point_str(p);
  return out;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

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

}  // namespace

std::string render_filtration(const Filtration& fil) {
  std::ostringstream os;
  for (std::size_t s = 0; s < fil.steps.size(); ++s) {
    os << "  embedding " << s + 1 << ":";
    for (const auto& g : fil.steps[s]) os << ' ' << g.jump << (g.dim > 1 ? "^" + std::to_string(g.dim) : "");
    os << '\n';
    if (fil.flags) {
      const auto& flag = (*fil.flags)[s];
      for (std::size_t j = 0; j < flag.size(); ++j) {
        os << "    v" << j + 1 << " = (";
        for (std::size_t k = 0; k < flag[j].size(); ++k) os << (k ? "," : "") << flag[j][k];
        os << ")\n";
      }
    }
  }
  return os.str();
}

std::string render_verdict(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << v.id << '\n';
  os << "outcome: " << to_string(v.outcome) << '\n';
  for (const auto& c : v.checks) {
    os << "check: " << c.name << " = " << (c.passed ? "pass" : "fail") << '\n';
    for (const auto& q : c.trace) os << "  " << q.str() << '\n';
  }
  if (v.polygons) {
    os << "newton: " << vertices_str(v.polygons->first) << '\n';
    os << "hodge: " << vertices_str(v.polygons->second) << '\n';
  }
  if (!v.block_order.empty()) {
    os << "block-order:";
    for (const auto& b : v.block_order) os << " (t_N=" << b.t_N << ",dim=" << b.dim << ")";
    os << '\n';
  }
  if (v.witness) os << "witness:\n" << render_filtration(*v.witness);
  for (const auto& n : v.notes) os << "note: " << n << '\n';
  os << "end\n";
  return os.str();
}

std::string render_report(const std::vector<Verdict>& verdicts) {
  std::string out;
  for (std::size_t k = 0; k < verdicts.size(); ++k) out += (k ? "\n" : "") + render_verdict(verdicts[k]);
  return out;
}

std::string polygon_table(const std::string& id, const Polygon& newton, const Polygon& hodge) {
  std::ostringstream os;
  os << "# polygons for " << id << '\n';
  os << "# x newton hodge\n";
  std::vector<Rat> xs;
  for (const auto* poly : {&newton, &hodge})
    for (const auto& p : poly->vertices()) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& x : xs) os << x << ' ' << newton.value_at(x) << ' ' << hodge.value_at(x) << '\n';
  return os.str();
}

std::string polygon_svg(const std::string& id, const Polygon& newton, const Polygon& hodge) {
  constexpr double kWidth = 480, kHeight = 360, kMargin = 48;
  double xmax = std::max(newton.width().to_double(), 1.0);
  double ymin = 0, ymax = 0;
  for (const auto* poly : {&newton, &hodge})
    for (const auto& p : poly->vertices()) {
      ymin = std::min(ymin, p.second.to_double());
      ymax = std::max(ymax, p.second.to_double());
    }
  if (ymax - ymin < 1) ymax = ymin + 1;
  const auto sx = [&](const Rat& x) { return kMargin + x.to_double() / xmax * (kWidth - 2 * kMargin); };
  const auto sy = [&](const Rat& y) {
    return kHeight - kMargin - (y.to_double() - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<title>" << xml_escape(id) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << fixed(kMargin) << "\" y1=\"" << fixed(sy(Rat(0))) << "\" x2=\"" << fixed(kWidth - kMargin)
     << "\" y2=\"" << fixed(sy(Rat(0))) << "\" stroke=\"#bbbbbb\"/>\n";
  const auto draw = [&](const Polygon& poly, const char* colour, const char* name, int label_dy) {
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& p : poly.vertices()) {
      os << (first ? "" : " ") << fixed(sx(p.first)) << ',' << fixed(sy(p.second));
      first = false;
    }
    os << "\"/>\n";
    for (const auto& p : poly.vertices()) {
      os << "<circle cx=\"" << fixed(sx(p.first)) << "\" cy=\"" << fixed(sy(p.second)) << "\" r=\"3\" fill=\""
         << colour << "\"/>\n";
      os << "<text x=\"" << fixed(sx(p.first) + 4) << "\" y=\"" << fixed(sy(p.second) + label_dy)
         << "\" font-size=\"11\" fill=\"" << colour << "\">" << xml_escape(point_str(p)) << "</text>\n";
    }
    os << "<text x=\"" << fixed(kMargin) << "\" y=\"" << fixed(label_dy < 0 ? 20 : 34) << "\" font-size=\"12\" fill=\""
       << colour << "\">" << name << "</text>\n";
  };
  draw(newton, "#1f5fbf", "Newton", -6);
  draw(hodge, "#bf3f1f", "Hodge", 14);
  os << "</svg>\n";
  return os.str();
}

}  // namespace bsc
