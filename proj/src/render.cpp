#include "digitop/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace digitop::render {

namespace {

constexpr int kPitch = 48;
constexpr int kRadius = 7;
constexpr int kMargin = 32;

const char* const kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Bounds {
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

Bounds bounds_of(const DigitalImage& image) {
  Bounds b;
  b.min_x = b.max_x = image.points().front()[0];
  if (image.dim() == 2) b.min_y = b.max_y = image.points().front()[1];
  for (const auto& p : image.points()) {
    b.min_x = std::min(b.min_x, p[0]);
    b.max_x = std::max(b.max_x, p[0]);
    if (image.dim() == 2) {
      b.min_y = std::min(b.min_y, p[1]);
      b.max_y = std::max(b.max_y, p[1]);
    }
  }
  return b;
}

void require_drawable(const DigitalImage& image) {
  if (image.dim() > 2)
    throw std::invalid_argument(
        "rendering supports 1- and 2-dimensional images only");
}

// Colour index for a node, or SIZE_MAX for the default colour.
using TintFn = std::function<std::size_t(const LatticePoint&)>;

std::string svg_render(const DigitalImage& image, const TintFn& tint) {
  require_drawable(image);
  const Bounds b = bounds_of(image);
  auto sx = [&](const LatticePoint& p) {
    return kMargin + (p[0] - b.min_x) * kPitch;
  };
  auto sy = [&](const LatticePoint& p) {
    const int y = image.dim() == 2 ? p[1] : 0;
    return kMargin + (b.max_y - y) * kPitch;
  };
  const int width = 2 * kMargin + (b.max_x - b.min_x) * kPitch;
  const int height = 2 * kMargin + (b.max_y - b.min_y) * kPitch;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  for (const auto& p : image.points()) {
    for (const auto& q : image.neighbours(p)) {
      if (!(p < q)) continue;  // each edge once
      out << "  <line x1=\"" << sx(p) << "\" y1=\"" << sy(p) << "\" x2=\""
          << sx(q) << "\" y2=\"" << sy(q)
          << "\" stroke=\"#999999\" stroke-width=\"2\"/>\n";
    }
  }
  for (const auto& p : image.points()) {
    const std::size_t t = tint(p);
    const char* fill = t == static_cast<std::size_t>(-1)
                           ? "#4e79a7"
                           : kPalette[t % kPaletteSize];
    out << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\""
        << kRadius << "\" fill=\"" << fill
        << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string ascii_render(const DigitalImage& image, const TintFn& tint) {
  require_drawable(image);
  const Bounds b = bounds_of(image);
  auto glyph = [&](const LatticePoint& p) {
    const std::size_t t = tint(p);
    if (t == static_cast<std::size_t>(-1)) return 'o';
    return static_cast<char>('a' + t % 26);
  };
  std::string out;
  for (int y = b.max_y; y >= b.min_y; --y) {
    std::string row;
    for (int x = b.min_x; x <= b.max_x; ++x) {
      LatticePoint p = image.dim() == 2 ? LatticePoint{x, y} : LatticePoint{x};
      row += image.contains(p) ? glyph(p) : '.';
    }
    out += row;
    out += '\n';
  }
  return out;
}

TintFn no_tint() {
  return [](const LatticePoint&) { return static_cast<std::size_t>(-1); };
}

TintFn fiber_tint(const DigitalMap& projection) {
  return [&projection](const LatticePoint& p) {
    return projection.codomain().index_of(projection(p));
  };
}

}  // namespace

std::string svg(const DigitalImage& image) { return svg_render(image, no_tint()); }

std::string svg_with_fibers(const DigitalMap& projection) {
  return svg_render(projection.domain(), fiber_tint(projection));
}

std::string ascii(const DigitalImage& image) {
  return ascii_render(image, no_tint());
}

std::string ascii_with_fibers(const DigitalMap& projection) {
  return ascii_render(projection.domain(), fiber_tint(projection));
}

}  // namespace digitop::render
