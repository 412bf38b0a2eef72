#include "toriclab/render.hpp"

#include <sstream>

#include "toriclab/canonical.hpp"

namespace toric {

namespace {

constexpr coord_t kScale = 30;
constexpr coord_t kPad = 24;

struct Canvas {
  Window w;
  std::ostringstream body;

  coord_t sx(coord_t x) const { return kPad + kScale * (x - w.xmin); }
  coord_t sy(coord_t y) const { return kPad + kScale * (w.ymax - y); }
  coord_t width() const { return 2 * kPad + kScale * (w.xmax - w.xmin); }
  coord_t height() const { return 2 * kPad + kScale * (w.ymax - w.ymin); }

  void line(coord_t x1, coord_t y1, coord_t x2, coord_t y2, const std::string& style,
            bool clipped = false) {
    body << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" " << style;
    if (clipped) body << " clip-path=\"url(#win)\"";
    body << "/>\n";
  }

  void bond(const Bond& b, const std::string& style) {
    const Vertex u = b.from(), v = b.to();
    line(sx(u.x), sy(u.y), sx(v.x), sy(v.y), style);
  }

  void dot(coord_t x, coord_t y, coord_t r, const std::string& fill) {
    body << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
         << "\" fill=\"" << fill << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width()
        << "\" height=\"" << height() << "\" viewBox=\"0 0 " << width() << " "
        << height() << "\">\n";
    out << "  <defs><clipPath id=\"win\"><rect x=\"" << kPad << "\" y=\"" << kPad
        << "\" width=\"" << kScale * (w.xmax - w.xmin) << "\" height=\""
        << kScale * (w.ymax - w.ymin) << "\"/></clipPath></defs>\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
  }
};

const char* kLight = "stroke=\"#c8c8c8\" stroke-width=\"1\"";
const char* kMid = "stroke=\"#8a8a8a\" stroke-width=\"2\"";
const char* kBold = "stroke=\"#1a1a1a\" stroke-width=\"4\"";
const char* kDashed = "stroke=\"#d02020\" stroke-width=\"3\" stroke-dasharray=\"6,4\"";
const char* kThick = "stroke=\"#2040c0\" stroke-width=\"5\"";

void draw_grid(Canvas& c, const std::string& style) {
  for (const Bond& b : c.w.bonds()) c.bond(b, style);
}

// A ray drawn far past the window and clipped to it.
void draw_ray(Canvas& c, const Vertex& apex, Vec2 d, const std::string& style) {
  const coord_t span = (c.w.xmax - c.w.xmin) + (c.w.ymax - c.w.ymin);
  const coord_t k = 2 * span;
  c.line(c.sx(apex.x), c.sy(apex.y), c.sx(apex.x + k * d.x), c.sy(apex.y + k * d.y),
         style, true);
}

std::string render_lattice(const Config& cfg) {
  Canvas c{cfg.classify_window, {}};
  draw_grid(c, kLight);

  // One star (dashed) and one plaquette (thick), centered like the
  // customary sketch of the model.
  const Vertex center{(c.w.xmin + c.w.xmax) / 2, (c.w.ymin + c.w.ymax) / 2};
  for (const Bond& b : star_bonds(center)) c.bond(b, kDashed);
  const Plaquette p{{center.x + 1, center.y - 2}};
  for (const Bond& b : plaquette_bonds(p)) c.bond(b, kThick);
  c.dot(c.sx(center.x), c.sy(center.y), 4, "#d02020");
  return c.finish();
}

std::string render_cones(const Config& cfg) {
  Canvas c{cfg.window, {}};
  for (const Bond& b : c.w.bonds()) {
    if (cone_contains_bond(cfg.lambda1, b)) {
      c.bond(b, kBold);
    } else if (cone_contains_bond(cfg.lambda2, b)) {
      c.bond(b, kMid);
    } else {
      c.bond(b, kLight);
    }
  }
  const char* ray1 = "stroke=\"#d07020\" stroke-width=\"2\"";
  const char* ray2 = "stroke=\"#2040c0\" stroke-width=\"2\"";
  draw_ray(c, cfg.lambda1.apex, cfg.lambda1.d1, ray1);
  draw_ray(c, cfg.lambda1.apex, cfg.lambda1.d2, ray1);
  draw_ray(c, cfg.lambda2.apex, cfg.lambda2.d1, ray2);
  draw_ray(c, cfg.lambda2.apex, cfg.lambda2.d2, ray2);
  c.dot(c.sx(cfg.lambda1.apex.x), c.sy(cfg.lambda1.apex.y), 5, "#d07020");
  c.dot(c.sx(cfg.lambda2.apex.x), c.sy(cfg.lambda2.apex.y), 5, "#2040c0");
  return c.finish();
}

void draw_path(Canvas& c, const Path& p, const std::string& style) {
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Vertex a = p.vertices[i], b = p.vertices[i + 1];
    c.line(c.sx(a.x), c.sy(a.y), c.sx(b.x), c.sy(b.y), style);
  }
}

void draw_dual_path(Canvas& c, const DualPath& p, const std::string& style) {
  const coord_t h = kScale / 2;
  for (std::size_t i = 0; i + 1 < p.plaquettes.size(); ++i) {
    const Vertex a = p.plaquettes[i].anchor, b = p.plaquettes[i + 1].anchor;
    c.line(c.sx(a.x) + h, c.sy(a.y) - h, c.sx(b.x) + h, c.sy(b.y) - h, style);
  }
}

std::string render_scaffold(const Config& cfg) {
  Canvas c{cfg.window, {}};
  for (const Bond& b : c.w.bonds()) {
    const bool in1 = cone_contains_bond(cfg.lambda1, b);
    const bool in2 = cone_contains_bond(cfg.lambda2, b);
    c.bond(b, in2 && !in1 ? kMid : kLight);
  }
  const Scaffold s = build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);
  const char* conn = "stroke=\"#d02020\" stroke-width=\"4\"";
  const char* dual_conn =
      "stroke=\"#2040c0\" stroke-width=\"4\" stroke-dasharray=\"7,5\"";
  const char* interior = "stroke=\"#108040\" stroke-width=\"3\"";
  const char* interior_dual =
      "stroke=\"#a040a0\" stroke-width=\"3\" stroke-dasharray=\"4,4\"";
  for (const ScaffoldString& str : s.strings) {
    if (str.dual) {
      draw_dual_path(c, str.dual_path,
                     str.role == ScaffoldString::Role::Connector ? dual_conn
                                                                 : interior_dual);
    } else {
      draw_path(c, str.path,
                str.role == ScaffoldString::Role::Connector ? conn : interior);
    }
  }
  return c.finish();
}

std::string render_canonical_form(const Config& cfg) {
  Canvas c{cfg.window, {}};
  draw_grid(c, kLight);

  const Scaffold s = build_scaffold(cfg.lambda1, cfg.lambda2, cfg.window);
  // A fixed cross-region string: from deep in the outer complement to
  // deep inside the inner cone, routed deterministically.
  const Vertex from{cfg.window.xmin + 2, cfg.window.ymax - 3};
  const Vertex to{cfg.window.xmax - 3, 0};
  const auto xi = path_between(from, to, Region::all(), cfg.window);
  if (!xi) throw std::invalid_argument("render: window too small for the worked example");
  const CanonicalForm form = canonicalize(string_from_path(*xi), s);

  const auto draw_supports = [&c](const PauliOp& op, const char* z_style,
                                  const char* x_style) {
    for (const Bond& b : op.z_support) c.bond(b, z_style);
    for (const Bond& b : op.x_support) c.bond(b, x_style);
  };
  draw_supports(form.f1, "stroke=\"#108040\" stroke-width=\"4\"",
                "stroke=\"#108040\" stroke-width=\"4\" stroke-dasharray=\"4,4\"");
  draw_supports(form.fhat, "stroke=\"#a040a0\" stroke-width=\"4\"",
                "stroke=\"#a040a0\" stroke-width=\"4\" stroke-dasharray=\"4,4\"");
  draw_supports(form.f2, "stroke=\"#d07020\" stroke-width=\"4\"",
                "stroke=\"#d07020\" stroke-width=\"4\" stroke-dasharray=\"4,4\"");
  return c.finish();
}

}  // namespace

std::string render_svg(const Config& cfg, const std::string& what) {
  if (what == "lattice") return render_lattice(cfg);
  if (what == "cones") return render_cones(cfg);
  if (what == "scaffold") return render_scaffold(cfg);
  if (what == "canonical-form") return render_canonical_form(cfg);
  throw std::invalid_argument("render: unknown figure '" + what +
                              "' (lattice, cones, scaffold, canonical-form)");
}

}  // namespace toric
