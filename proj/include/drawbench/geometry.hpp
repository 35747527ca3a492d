#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace drawbench {

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned rectangle in screen pixels. min <= max on both axes;
/// zero-area rects are valid. Containment is half-open on the max edges
/// so that adjacent rects partition space without overlap.
struct Rect {
  Point min;
  Point max;

  int width() const { return max.x - min.x; }
  int height() const { return max.y - min.y; }
  double area() const { return static_cast<double>(width()) * static_cast<double>(height()); }
  Point centroid() const { return {(min.x + max.x) / 2, (min.y + max.y) / 2}; }

  bool contains(Point p) const {
    return p.x >= min.x && p.x < max.x && p.y >= min.y && p.y < max.y;
  }

  /// Closed containment on all edges; used for the cursor window only.
  bool contains_closed(Point p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }

  bool overlaps(const Rect& o) const {
    return min.x < o.max.x && o.min.x < max.x && min.y < o.max.y && o.min.y < max.y;
  }

  void expand(Point p);
  void expand(const Rect& r);

  /// Intersection with `frame`, or nothing when the rects are disjoint.
  std::optional<Rect> clipped_to(const Rect& frame) const;

  /// Normalized rect spanning two arbitrary corner points.
  static Rect spanning(Point a, Point b);

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct CanvasSpec {
  Point origin{90, 70};
  int width = 1000;
  int height = 700;
  std::string background = "#FFFFFF";

  Rect rect() const { return {origin, {origin.x + width, origin.y + height}}; }
};

enum class ToolKind { pen, eraser, fill, line, rectangle, circle };

inline constexpr std::array<ToolKind, 6> kAllTools = {
    ToolKind::pen,  ToolKind::eraser,    ToolKind::fill,
    ToolKind::line, ToolKind::rectangle, ToolKind::circle};

const char* to_string(ToolKind t);
std::optional<ToolKind> tool_from_string(std::string_view name);

/// Uppercases and prefixes '#' if missing; does not validate digits.
std::string normalize_color(std::string_view hex);

struct ColorSwatch {
  std::string hex;   // normalized "#RRGGBB"
  std::string name;  // human name ("red"); may equal hex for custom layouts
  Rect hit;
};

/// Screen layout of the drawing application: canvas placement, clickable
/// tool buttons, color swatches, and the valid cursor window.
struct UILayout {
  CanvasSpec canvas;
  Rect window{{0, 0}, {1100, 800}};
  std::vector<std::pair<ToolKind, Rect>> tools;
  std::vector<ColorSwatch> colors;
  std::string version = "1";

  static UILayout standard();

  std::optional<Rect> tool_rect(ToolKind t) const;
  /// Center of the tool's hit region; where feedback tells the model to click.
  std::optional<Point> tool_click_point(ToolKind t) const;
  const ColorSwatch* swatch(std::string_view hex) const;
  std::string color_name(std::string_view hex) const;

  /// Returns human-readable violations of the layout invariants
  /// (overlapping hit regions, regions on the canvas or outside the window).
  std::vector<std::string> validate() const;
};

enum class RegionKind { center, top_left, top_right, bottom_left, bottom_right, corners };

const char* to_string(RegionKind k);
std::optional<RegionKind> region_from_string(std::string_view name);

struct HitResult {
  enum class Kind { tool, color, canvas, window_void, outside };
  Kind kind = Kind::outside;
  ToolKind tool = ToolKind::pen;  // valid when kind == tool
  std::string color;              // valid when kind == color
};

/// Smallest rect containing every input; nothing for an empty list.
std::optional<Rect> bbox_union(std::span<const Rect> rects);

/// Bounding-box area over canvas area, after clipping the bbox to the
/// canvas and ignoring anything fully outside it. Empty content -> 0.
double coverage(const std::optional<Rect>& content_bbox, const CanvasSpec& canvas);

/// Screen rect for a single-region constraint. `corners` has four rects;
/// use corner_rects() for it.
Rect region_rect(RegionKind kind, const CanvasSpec& canvas);

/// The four 25%-width x 25%-height rects anchored at the canvas corners,
/// ordered top-left, top-right, bottom-left, bottom-right.
std::array<Rect, 4> corner_rects(const CanvasSpec& canvas);

/// Classifies a cursor position, testing tool -> color -> canvas -> window.
HitResult hit_test(const UILayout& layout, Point p);

/// Loads a layout from the key/value description format (docs/layout-format.md).
std::variant<UILayout, std::string> load_layout(const std::string& path);

}  // namespace drawbench
