#include "rankone/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "rankone/error.hpp"

namespace rankone {

Mat2 Mat2::rotation(double theta) noexcept {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

Mat2 Mat2::radial(double tau) noexcept {
  const double e = std::exp(0.5 * tau);
  return {e, 0.0, 0.0, 1.0 / e};
}

Mat2 Mat2::from_point(HPoint z) {
  if (!(z.y > 0.0)) throw ValidationError("point must lie in the upper half-plane");
  const double r = std::sqrt(z.y);
  return {r, z.x / r, 0.0, 1.0 / r};
}

Mat2 Mat2::normalized() const {
  const double dt = det();
  if (!(dt > 0.0)) throw ValidationError("matrix is not in GL+(2,R)");
  const double k = 1.0 / std::sqrt(dt);
  return {a * k, b * k, c * k, d * k};
}

Mat2 operator*(const Mat2& g, const Mat2& h) noexcept {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
          g.c * h.b + g.d * h.d};
}

HPoint operator*(const Mat2& g, HPoint z) noexcept {
  // (a z + b) / (c z + d)
  const double re_den = g.c * z.x + g.d;
  const double im_den = g.c * z.y;
  const double den = re_den * re_den + im_den * im_den;
  const double re_num = g.a * z.x + g.b;
  const double im_num = g.a * z.y;
  return {(re_num * re_den + im_num * im_den) / den, (im_num * re_den - re_num * im_den) / den};
}

double hyp_dist(HPoint z, HPoint w) noexcept {
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  return 2.0 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(z.y * w.y)));
}

bool in_fundamental_domain(HPoint z, double tol) noexcept {
  return std::abs(z.x) <= 0.5 + tol && z.x * z.x + z.y * z.y >= 1.0 - tol;
}

Reduction reduce(HPoint z, int max_steps) {
  if (!(z.y > 0.0) || !std::isfinite(z.x) || !std::isfinite(z.y)) {
    throw ValidationError("reduce needs a finite point with y > 0");
  }
  Reduction out{z, Mat2::identity(), 0};
  while (true) {
    const double n = std::floor(out.point.x + 0.5);
    if (n != 0.0) {
      out.point.x -= n;
      out.word = Mat2{1.0, -n, 0.0, 1.0} * out.word;
    }
    const double r2 = out.point.x * out.point.x + out.point.y * out.point.y;
    if (r2 >= 1.0) return out;
    if (out.steps >= max_steps) {
      throw ConvergenceError("fundamental domain reduction exceeded the iteration cap");
    }
    out.point = {-out.point.x / r2, out.point.y / r2};
    out.word = Mat2{0.0, -1.0, 1.0, 0.0} * out.word;
    ++out.steps;
  }
}

Observable Observable::cusp(double height) {
  if (!(height >= 1.0) || !std::isfinite(height)) {
    throw ValidationError("cusp indicator needs height Y >= 1");
  }
  return Observable(Kind::cusp, {}, height, 0.0);
}

Observable Observable::disk(HPoint center, double radius) {
  if (!(radius > 0.0) || !(center.y > 0.0)) throw ValidationError("disk needs radius > 0 and y > 0");
  // Euclidean picture: center (x, y cosh r), radius y sinh r.
  const double ec = center.y * std::cosh(radius);
  const double er = center.y * std::sinh(radius);
  const bool inside = std::abs(center.x) + er <= 0.5 && std::hypot(center.x, ec) - er >= 1.0;
  if (!inside) throw ValidationError("disk must lie inside the fundamental domain");
  return Observable(Kind::disk, center, 0.0, radius);
}

Observable Observable::parse(std::string_view spec) {
  if (spec == "const" || spec == "constant") return constant();
  auto numbers = [](std::string_view text) {
    std::vector<double> v;
    std::string buf(text);
    std::istringstream in(buf);
    std::string item;
    while (std::getline(in, item, ',')) {
      char* end = nullptr;
      const double x = std::strtod(item.c_str(), &end);
      if (item.empty() || end != item.c_str() + item.size()) {
        throw ValidationError("invalid number in observable spec: '" + item + "'");
      }
      v.push_back(x);
    }
    return v;
  };
  if (spec.rfind("cusp:", 0) == 0) {
    const auto v = numbers(spec.substr(5));
    if (v.size() != 1) throw ValidationError("cusp observable is cusp:<Y>");
    return cusp(v[0]);
  }
  if (spec.rfind("disk:", 0) == 0) {
    const auto v = numbers(spec.substr(5));
    if (v.size() != 3) throw ValidationError("disk observable is disk:<x>,<y>,<r>");
    return disk({v[0], v[1]}, v[2]);
  }
  throw ValidationError("unknown observable '" + std::string(spec) + "'");
}

double Observable::eval(HPoint z) const noexcept {
  switch (kind_) {
    case Kind::constant: return 1.0;
    case Kind::cusp: return z.y > height_ ? 1.0 : 0.0;
    case Kind::disk: return hyp_dist(z, center_) < radius_ ? 1.0 : 0.0;
  }
  return 0.0;
}

double Observable::mean() const noexcept {
  switch (kind_) {
    case Kind::constant: return 1.0;
    // Area of {y > Y} in the domain is 1/Y; the surface has area pi/3.
    case Kind::cusp: return 3.0 / (std::numbers::pi * height_);
    case Kind::disk: return 6.0 * (std::cosh(radius_) - 1.0);
  }
  return 0.0;
}

std::string Observable::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case Kind::constant: return "const";
    case Kind::cusp: out << "cusp:" << height_; break;
    case Kind::disk: out << "disk:" << center_.x << "," << center_.y << "," << radius_; break;
  }
  return out.str();
}

}  // namespace rankone
