#include "drawbench/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace drawbench {

void Rect::expand(Point p) {
  min.x = std::min(min.x, p.x);
  min.y = std::min(min.y, p.y);
  max.x = std::max(max.x, p.x);
  max.y = std::max(max.y, p.y);
}

void Rect::expand(const Rect& r) {
  expand(r.min);
  expand(r.max);
}

std::optional<Rect> Rect::clipped_to(const Rect& frame) const {
  Rect out{{std::max(min.x, frame.min.x), std::max(min.y, frame.min.y)},
           {std::min(max.x, frame.max.x), std::min(max.y, frame.max.y)}};
  if (out.min.x > out.max.x || out.min.y > out.max.y) return std::nullopt;
  return out;
}

Rect Rect::spanning(Point a, Point b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

const char* to_string(ToolKind t) {
  switch (t) {
    case ToolKind::pen: return "pen";
    case ToolKind::eraser: return "eraser";
    case ToolKind::fill: return "fill";
    case ToolKind::line: return "line";
    case ToolKind::rectangle: return "rectangle";
    case ToolKind::circle: return "circle";
  }
  return "?";
}

std::optional<ToolKind> tool_from_string(std::string_view name) {
  for (ToolKind t : kAllTools)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

std::string normalize_color(std::string_view hex) {
  std::string out;
  if (hex.empty() || hex.front() != '#') out.push_back('#');
  for (char c : hex) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::center: return "center";
    case RegionKind::top_left: return "top-left";
    case RegionKind::top_right: return "top-right";
    case RegionKind::bottom_left: return "bottom-left";
    case RegionKind::bottom_right: return "bottom-right";
    case RegionKind::corners: return "corners";
  }
  return "?";
}

std::optional<RegionKind> region_from_string(std::string_view name) {
  for (RegionKind k : {RegionKind::center, RegionKind::top_left, RegionKind::top_right,
                       RegionKind::bottom_left, RegionKind::bottom_right, RegionKind::corners})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

namespace {

Rect rect_from_center(int cx, int cy, int w, int h) {
  Point min{cx - w / 2, cy - h / 2};
  return {min, {min.x + w, min.y + h}};
}

}  // namespace

UILayout UILayout::standard() {
  UILayout l;
  l.canvas = CanvasSpec{};
  l.window = Rect{{0, 0}, {1100, 800}};
  int y = 45;
  for (ToolKind t : kAllTools) {
    l.tools.emplace_back(t, rect_from_center(35, y, 30, 30));
    y += 80;
  }
  const std::pair<const char*, const char*> palette[] = {
      {"black", "#000000"},   {"red", "#FF0000"},  {"green", "#00FF00"}, {"blue", "#0000FF"},
      {"yellow", "#FFFF00"}, {"magenta", "#FF00FF"}, {"cyan", "#00FFFF"}, {"white", "#FFFFFF"}};
  int x = 405;
  for (auto [name, hex] : palette) {
    l.colors.push_back(ColorSwatch{hex, name, rect_from_center(x, 25, 24, 24)});
    x += 24;
  }
  return l;
}

std::optional<Rect> UILayout::tool_rect(ToolKind t) const {
  for (const auto& [kind, rect] : tools)
    if (kind == t) return rect;
  return std::nullopt;
}

std::optional<Point> UILayout::tool_click_point(ToolKind t) const {
  auto r = tool_rect(t);
  if (!r) return std::nullopt;
  return r->centroid();
}

const ColorSwatch* UILayout::swatch(std::string_view hex) const {
  std::string norm = normalize_color(hex);
  for (const auto& c : colors)
    if (c.hex == norm) return &c;
  return nullptr;
}

std::string UILayout::color_name(std::string_view hex) const {
  const ColorSwatch* s = swatch(hex);
  return s ? s->name : normalize_color(hex);
}

std::vector<std::string> UILayout::validate() const {
  std::vector<std::string> issues;
  if (canvas.width <= 0 || canvas.height <= 0) issues.push_back("canvas size must be positive");

  std::vector<std::pair<std::string, Rect>> hits;
  for (const auto& [t, r] : tools) hits.emplace_back(std::string("tool ") + to_string(t), r);
  for (const auto& c : colors) hits.emplace_back("color " + c.hex, c.hit);

  const Rect cv = canvas.rect();
  for (size_t i = 0; i < hits.size(); ++i) {
    const auto& [name, r] = hits[i];
    if (r.overlaps(cv)) issues.push_back(name + " hit region intersects the canvas");
    if (!window.contains_closed(r.min) || !window.contains_closed(r.max))
      issues.push_back(name + " hit region lies outside the window");
    for (size_t j = i + 1; j < hits.size(); ++j)
      if (r.overlaps(hits[j].second))
        issues.push_back(name + " hit region overlaps " + hits[j].first);
  }
  if (!window.contains_closed(cv.min) || !window.contains_closed(cv.max))
    issues.push_back("canvas lies outside the window");
  return issues;
}

std::optional<Rect> bbox_union(std::span<const Rect> rects) {
  if (rects.empty()) return std::nullopt;
  Rect out = rects.front();
  for (const Rect& r : rects.subspan(1)) out.expand(r);
  return out;
}

double coverage(const std::optional<Rect>& content_bbox, const CanvasSpec& canvas) {
  if (!content_bbox) return 0.0;
  auto clipped = content_bbox->clipped_to(canvas.rect());
  if (!clipped) return 0.0;
  double canvas_area = static_cast<double>(canvas.width) * static_cast<double>(canvas.height);
  if (canvas_area <= 0.0) return 0.0;
  return clipped->area() / canvas_area;
}

Rect region_rect(RegionKind kind, const CanvasSpec& canvas) {
  const Point o = canvas.origin;
  const int w = canvas.width, h = canvas.height;
  switch (kind) {
    case RegionKind::center: {
      int bw = w / 5, bh = h / 5;  // central 20% band per axis
      Point min{o.x + (w - bw) / 2, o.y + (h - bh) / 2};
      return {min, {min.x + bw, min.y + bh}};
    }
    case RegionKind::top_left:
      return {o, {o.x + w / 2, o.y + h / 2}};
    case RegionKind::top_right:
      return {{o.x + w / 2, o.y}, {o.x + w, o.y + h / 2}};
    case RegionKind::bottom_left:
      return {{o.x, o.y + h / 2}, {o.x + w / 2, o.y + h}};
    case RegionKind::bottom_right:
      return {{o.x + w / 2, o.y + h / 2}, {o.x + w, o.y + h}};
    case RegionKind::corners:
      break;  // callers use corner_rects()
  }
  return canvas.rect();
}

std::array<Rect, 4> corner_rects(const CanvasSpec& canvas) {
  const Point o = canvas.origin;
  const int w = canvas.width, h = canvas.height;
  const int cw = w / 4, ch = h / 4;
  return {Rect{{o.x, o.y}, {o.x + cw, o.y + ch}},
          Rect{{o.x + w - cw, o.y}, {o.x + w, o.y + ch}},
          Rect{{o.x, o.y + h - ch}, {o.x + cw, o.y + h}},
          Rect{{o.x + w - cw, o.y + h - ch}, {o.x + w, o.y + h}}};
}

HitResult hit_test(const UILayout& layout, Point p) {
  for (const auto& [tool, rect] : layout.tools)
    if (rect.contains(p)) return {HitResult::Kind::tool, tool, {}};
  for (const auto& c : layout.colors)
    if (c.hit.contains(p)) return {HitResult::Kind::color, ToolKind::pen, c.hex};
  if (layout.canvas.rect().contains(p)) return {HitResult::Kind::canvas, ToolKind::pen, {}};
  if (layout.window.contains_closed(p)) return {HitResult::Kind::window_void, ToolKind::pen, {}};
  return {HitResult::Kind::outside, ToolKind::pen, {}};
}

namespace {

std::string trim(std::string s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  return s;
}

bool read_ints(const std::string& text, std::span<int> out) {
  std::istringstream in(text);
  for (int& v : out)
    if (!(in >> v)) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace

std::variant<UILayout, std::string> load_layout(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "cannot open layout file: " + path;

  UILayout l;
  l.tools.clear();
  l.colors.clear();
  bool canvas_seen = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    // '#' starts a comment unless it is part of a color value (preceded by '=').
    if (hash != std::string::npos) {
      auto eq = line.find('=');
      if (eq == std::string::npos || hash < eq) line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      return "layout line " + std::to_string(lineno) + ": expected key = value";
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto fail = [&](const std::string& why) {
      return "layout line " + std::to_string(lineno) + " (" + key + "): " + why;
    };

    if (key == "version") {
      l.version = value;
    } else if (key == "canvas.origin") {
      int v[2];
      if (!read_ints(value, v)) return fail("expected two integers");
      l.canvas.origin = {v[0], v[1]};
      canvas_seen = true;
    } else if (key == "canvas.size") {
      int v[2];
      if (!read_ints(value, v)) return fail("expected two integers");
      l.canvas.width = v[0];
      l.canvas.height = v[1];
      canvas_seen = true;
    } else if (key == "canvas.background") {
      l.canvas.background = normalize_color(value);
    } else if (key == "window") {
      int v[4];
      if (!read_ints(value, v)) return fail("expected four integers");
      l.window = {{v[0], v[1]}, {v[2], v[3]}};
    } else if (key.starts_with("tool.")) {
      auto tool = tool_from_string(key.substr(5));
      if (!tool) return fail("unknown tool kind");
      int v[4];
      if (!read_ints(value, v)) return fail("expected center x, center y, width, height");
      l.tools.emplace_back(*tool, rect_from_center(v[0], v[1], v[2], v[3]));
    } else if (key.starts_with("color.")) {
      std::istringstream cv(value);
      std::string hex;
      int cx, cy, w, h;
      if (!(cv >> hex >> cx >> cy >> w >> h)) return fail("expected hex, center x/y, width, height");
      l.colors.push_back(ColorSwatch{normalize_color(hex), key.substr(6), rect_from_center(cx, cy, w, h)});
    } else {
      return fail("unknown key");
    }
  }
  if (!canvas_seen) return std::string("layout file missing canvas.origin / canvas.size");
  auto issues = l.validate();
  if (!issues.empty()) return "invalid layout: " + issues.front();
  return l;
}

}  // namespace drawbench
