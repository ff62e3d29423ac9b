#pragma once

namespace coreo {

/// Display coordinate; the engine never interprets it.
struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

}  // namespace coreo
