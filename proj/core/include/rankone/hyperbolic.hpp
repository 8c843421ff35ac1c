#pragma once

#include <string>
#include <string_view>

namespace rankone {

/// Point of the upper half-plane, y > 0.
struct HPoint {
  double x = 0.0;
  double y = 1.0;
};

/// Element of PSL(2, R), acting by Mobius transformations.
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Mat2 identity() noexcept { return {}; }
  /// Rotation about i by angle 2 theta.
  static Mat2 rotation(double theta) noexcept;
  /// diag(e^{tau/2}, e^{-tau/2}); maps i to e^tau i.
  static Mat2 radial(double tau) noexcept;
  /// The element mapping i to z: [[sqrt y, x/sqrt y], [0, 1/sqrt y]].
  static Mat2 from_point(HPoint z);

  double det() const noexcept { return a * d - b * c; }
  Mat2 inverse() const noexcept { return {d, -b, -c, a}; }
  /// Rescales to det = 1. Throws ValidationError if det <= 0.
  Mat2 normalized() const;
};

Mat2 operator*(const Mat2& g, const Mat2& h) noexcept;
HPoint operator*(const Mat2& g, HPoint z) noexcept;

/// Hyperbolic distance, cosh d = 1 + |z-w|^2 / (2 Im z Im w).
double hyp_dist(HPoint z, HPoint w) noexcept;

struct Reduction {
  HPoint point;
  Mat2 word;  // word * input == point
  int steps = 0;
};

/// Moves z into the closed standard fundamental domain of PSL(2, Z),
/// {|Re z| <= 1/2, |z| >= 1}. Throws ConvergenceError after max_steps inversions.
Reduction reduce(HPoint z, int max_steps = 1'000'000);

bool in_fundamental_domain(HPoint z, double tol = 1e-12) noexcept;

/// Functions on the modular surface, evaluated on reduced points.
class Observable {
 public:
  enum class Kind { constant, cusp, disk };

  static Observable constant() { return Observable(Kind::constant, {}, 1.0, 0.0); }
  /// Indicator of Im z > height, height >= 1.
  static Observable cusp(double height);
  /// Indicator of the hyperbolic disk; must lie inside the fundamental domain.
  static Observable disk(HPoint center, double radius);

  /// `const`, `cusp:<Y>`, `disk:<x>,<y>,<r>`.
  static Observable parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  double eval(HPoint reduced) const noexcept;
  /// Average over the modular surface with respect to the normalised measure
  /// dx dy / y^2 / (pi/3).
  double mean() const noexcept;
  std::string to_string() const;

 private:
  Observable(Kind kind, HPoint center, double height, double radius)
      : kind_(kind), center_(center), height_(height), radius_(radius) {}
  Kind kind_;
  HPoint center_;
  double height_;
  double radius_;
};

}  // namespace rankone
