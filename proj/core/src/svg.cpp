#include "sqtile/svg.hpp"

#include <algorithm>
#include <sstream>

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                    "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
constexpr int kCanvas = 512;

}  // namespace

std::string render_svg(const Tiling& t, int precision) {
  const auto report = validate(t);
  if (!report.valid()) {
    throw InvalidTiling(std::string("cannot render an invalid tiling: ") +
                        to_string(report.failures.front().kind));
  }
  const auto mid = [&](const LinExpr& e) { return lin_eval_midpoint(e, t.table); };
  const auto dec = [&](const Rational& r) { return r.to_decimal(precision); };

  const Rational W = mid(t.outer_w);
  const Rational H = mid(t.outer_h);
  const Rational scale = Rational(kCanvas) / std::max(W, H);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << dec(W) << ' ' << dec(H)
     << "\" width=\"" << (W * scale).to_decimal(2) << "\" height=\"" << (H * scale).to_decimal(2)
     << "\">\n";
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& p = t.tiles[i];
    const Rational x = mid(p.x);
    const Rational w = mid(p.w);
    const Rational h = mid(p.h);
    const Rational y = H - mid(p.y) - h;  // flip: SVG y grows downwards
    os << "  <rect id=\"tile-" << i << "\" x=\"" << dec(x) << "\" y=\"" << dec(y)
       << "\" width=\"" << dec(w) << "\" height=\"" << dec(h) << "\" fill=\""
       << kPalette[i % std::size(kPalette)]
       << "\" stroke=\"#333333\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">"
       << "<title>" << format(p.w, t.table) << " x " << format(p.h, t.table)
       << "</title></rect>\n";
  }
  os << "  <rect id=\"frame\" x=\"0\" y=\"0\" width=\"" << dec(W) << "\" height=\"" << dec(H)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" "
        "vector-effect=\"non-scaling-stroke\"/>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace sqtile
