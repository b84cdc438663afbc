#include "socs/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "socs/agreement.hpp"

namespace socs {

namespace {

constexpr double kMargin = 40.0;
constexpr double kPi = 3.14159265358979323846;

const char* kPalette[] = {"#4363d8", "#3cb44b", "#e6194b", "#f58231", "#911eb4",
                          "#008080", "#b8a000", "#f032e6", "#9a6324", "#42d4f4"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

struct Range {
  double lo;
  double hi;
};

// The 1 or 2 in-domain spans an axis set covers; arcs may wrap once.
std::vector<Range> spans(const AxisSet& set, const Axis& axis) {
  if (set.is_interval()) {
    return {{set.start().approx(), set.end().approx()}};
  }
  const double circ = axis.circumference().approx();
  const double start = set.start().approx();
  const double end = start + set.length().approx();
  if (end <= circ) {
    return {{start, end}};
  }
  return {{start, circ}, {0.0, end - circ}};
}

class SvgBuilder {
 public:
  SvgBuilder(int width, int height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
         << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  }

  void line(const char* cls, double x1, double y1, double x2, double y2,
            const std::string& stroke, double stroke_width) {
    out_ << "  <line class=\"" << cls << "\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1)
         << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << fmt(stroke_width) << "\"/>\n";
  }

  void raw(const std::string& element) { out_ << element; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

void render_linear_axis(SvgBuilder& svg, const Society& s, const RenderOptions& options) {
  double lo = s.voter(0).box.factor(0).start().approx();
  double hi = lo;
  for (const Voter& v : s.voters()) {
    lo = std::min(lo, v.box.factor(0).start().approx());
    hi = std::max(hi, v.box.factor(0).end().approx());
  }
  double pad = (hi - lo) > 0 ? (hi - lo) / 20.0 : 1.0;
  lo -= pad;
  hi += pad;
  const double scale = (options.width - 2 * kMargin) / (hi - lo);
  auto sx = [&](double x) { return kMargin + (x - lo) * scale; };

  const double axis_y = options.height - kMargin;
  svg.line("axis", kMargin / 2, axis_y, options.width - kMargin / 2, axis_y, "black", 2);

  const double row = (axis_y - kMargin) / (s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Voter& v = s.voter(i);
    const AxisSet& set = v.box.factor(0);
    const double y = axis_y - row * (i + 1);
    svg.raw("  <g class=\"voter\" data-name=\"" + escape(v.name) + "\">\n");
    svg.raw("    <line x1=\"" + fmt(sx(set.start().approx())) + "\" y1=\"" + fmt(y) +
            "\" x2=\"" + fmt(sx(set.end().approx())) + "\" y2=\"" + fmt(y) + "\" stroke=\"" +
            kPalette[i % kPaletteSize] + "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n");
    svg.raw("  </g>\n");
  }

  if (options.show_witness) {
    AgreementResult result = agreement_number(s);
    svg.raw("  <circle class=\"witness\" cx=\"" + fmt(sx(result.witness[0].approx())) +
            "\" cy=\"" + fmt(axis_y) + "\" r=\"5\" fill=\"black\"/>\n");
  }
}

void render_circular_axis(SvgBuilder& svg, const Society& s, const RenderOptions& options) {
  const double cx = options.width / 2.0;
  const double cy = options.height / 2.0;
  const double circ = s.axis(0).circumference().approx();
  const double r_max = std::min(options.width, options.height) / 2.0 - kMargin;
  const double r_base = r_max / 3.0;
  const double gap = (r_max - r_base) / (s.size() + 1);

  auto angle = [&](double coord) { return 2.0 * kPi * coord / circ; };
  auto px = [&](double theta, double r) { return cx + r * std::cos(theta); };
  auto py = [&](double theta, double r) { return cy - r * std::sin(theta); };

  svg.raw("  <circle class=\"axis\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" +
          fmt(r_base) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n");

  for (std::size_t i = 0; i < s.size(); ++i) {
    const Voter& v = s.voter(i);
    const AxisSet& arc = v.box.factor(0);
    const double r = r_base + gap * (i + 1);
    const std::string color = kPalette[i % kPaletteSize];
    svg.raw("  <g class=\"voter\" data-name=\"" + escape(v.name) + "\">\n");
    if (arc.length() == s.axis(0).circumference()) {
      svg.raw("    <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
              "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"4\"/>\n");
    } else if (arc.length() == Rat(0)) {
      const double theta = angle(arc.start().approx());
      svg.raw("    <circle cx=\"" + fmt(px(theta, r)) + "\" cy=\"" + fmt(py(theta, r)) +
              "\" r=\"3\" fill=\"" + color + "\"/>\n");
    } else {
      const double a0 = angle(arc.start().approx());
      const double sweep = 2.0 * kPi * arc.length().approx() / circ;
      const int large = sweep > kPi ? 1 : 0;
      svg.raw("    <path d=\"M " + fmt(px(a0, r)) + " " + fmt(py(a0, r)) + " A " + fmt(r) + " " +
              fmt(r) + " 0 " + std::to_string(large) + " 0 " + fmt(px(a0 + sweep, r)) + " " +
              fmt(py(a0 + sweep, r)) + "\" fill=\"none\" stroke=\"" + color +
              "\" stroke-width=\"4\"/>\n");
    }
    svg.raw("  </g>\n");
  }

  if (options.show_witness) {
    AgreementResult result = agreement_number(s);
    const double theta = angle(result.witness[0].approx());
    svg.raw("  <circle class=\"witness\" cx=\"" + fmt(px(theta, r_base)) + "\" cy=\"" +
            fmt(py(theta, r_base)) + "\" r=\"5\" fill=\"black\"/>\n");
  }
}

void render_two_axes(SvgBuilder& svg, const Society& s, const RenderOptions& options) {
  double lo[2];
  double hi[2];
  for (std::size_t a = 0; a < 2; ++a) {
    if (s.axis(a).is_circular()) {
      lo[a] = 0.0;
      hi[a] = s.axis(a).circumference().approx();
    } else {
      lo[a] = s.voter(0).box.factor(a).start().approx();
      hi[a] = lo[a];
      for (const Voter& v : s.voters()) {
        lo[a] = std::min(lo[a], v.box.factor(a).start().approx());
        hi[a] = std::max(hi[a], v.box.factor(a).end().approx());
      }
      double pad = (hi[a] - lo[a]) > 0 ? (hi[a] - lo[a]) / 20.0 : 1.0;
      lo[a] -= pad;
      hi[a] += pad;
    }
  }
  const double sx_scale = (options.width - 2 * kMargin) / (hi[0] - lo[0]);
  const double sy_scale = (options.height - 2 * kMargin) / (hi[1] - lo[1]);
  auto sx = [&](double x) { return kMargin + (x - lo[0]) * sx_scale; };
  auto sy = [&](double y) { return options.height - kMargin - (y - lo[1]) * sy_scale; };

  svg.raw("  <rect class=\"frame\" x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) +
          "\" width=\"" + fmt(options.width - 2 * kMargin) + "\" height=\"" +
          fmt(options.height - 2 * kMargin) + "\" fill=\"none\" stroke=\"black\""
          " stroke-width=\"2\"/>\n");

  // Identification marks on the edges of circular axes.
  if (s.axis(0).is_circular()) {
    const double mx = options.width / 2.0;
    for (double y : {kMargin, options.height - kMargin}) {
      svg.line("ident", mx - 6, y - 5, mx, y, "black", 1.5);
      svg.line("ident", mx, y, mx - 6, y + 5, "black", 1.5);
    }
  }
  if (s.axis(1).is_circular()) {
    const double my = options.height / 2.0;
    for (double x : {kMargin, options.width - kMargin}) {
      svg.line("ident", x - 5, my + 6, x, my, "black", 1.5);
      svg.line("ident", x, my, x + 5, my + 6, "black", 1.5);
    }
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    const Voter& v = s.voter(i);
    const std::string color = kPalette[i % kPaletteSize];
    svg.raw("  <g class=\"voter\" data-name=\"" + escape(v.name) + "\">\n");
    for (const Range& rx : spans(v.box.factor(0), s.axis(0))) {
      for (const Range& ry : spans(v.box.factor(1), s.axis(1))) {
        const double x = sx(rx.lo);
        const double y = sy(ry.hi);
        const double w = std::max((rx.hi - rx.lo) * sx_scale, 1.0);
        const double h = std::max((ry.hi - ry.lo) * sy_scale, 1.0);
        svg.raw("    <rect class=\"piece\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" +
                fmt(w) + "\" height=\"" + fmt(h) + "\" fill=\"" + color +
                "\" fill-opacity=\"0.45\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n");
      }
    }
    svg.raw("  </g>\n");
  }

  if (options.show_witness) {
    AgreementResult result = agreement_number(s);
    svg.raw("  <circle class=\"witness\" cx=\"" + fmt(sx(result.witness[0].approx())) +
            "\" cy=\"" + fmt(sy(result.witness[1].approx())) +
            "\" r=\"5\" fill=\"black\" stroke=\"white\" stroke-width=\"1.5\"/>\n");
  }
}

}  // namespace

std::string render_svg(const Society& s, const RenderOptions& options) {
  SvgBuilder svg(options.width, options.height);
  if (s.dimension() == 2) {
    render_two_axes(svg, s, options);
  } else if (s.axis(0).is_circular()) {
    render_circular_axis(svg, s, options);
  } else {
    render_linear_axis(svg, s, options);
  }
  return svg.finish();
}

}  // namespace socs
