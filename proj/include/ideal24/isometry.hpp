#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ideal24 {

/// Integer point of 4-space. 24-cell vertices have two entries equal to +-1.
using Vector4 = std::array<int, 4>;

int dot(const Vector4& a, const Vector4& b);
Vector4 negate(const Vector4& v);

/// Linear symmetry of the 24-cell, held exactly as the integer matrix 2*M.
///
/// Signed permutations have entries of 2*M in {0, +-2}; the remaining
/// symmetries (the ones that permute the three facet colours) have entries
/// in {+-1}. Construction through `from_twice_matrix` rejects anything that is
/// not orthogonal or does not preserve the 24 vertices.
class Isometry {
 public:
  Isometry();  // identity

  static Isometry identity() { return Isometry(); }
  static Isometry antipodal();
  /// out[i] = sign[i] * x[source[i]]
  static Isometry signed_permutation(const std::array<int, 4>& source, const std::array<int, 4>& sign);
  static Isometry from_twice_matrix(const std::array<int, 16>& twice);
  /// The unique symmetry sending each from[k] to to[k]; the points must span 4-space.
  static Isometry from_point_images(const std::vector<Vector4>& from, const std::vector<Vector4>& to);

  Vector4 apply(const Vector4& v) const;
  /// (*this) after rhs.
  Isometry compose(const Isometry& rhs) const;
  Isometry inverse() const;
  int determinant() const;
  bool is_identity() const;
  bool is_signed_permutation() const;

  const std::array<int, 16>& twice_matrix() const { return twice_; }

  /// Image coordinates as text, e.g. "-x,-y,z,w" or "(x+y-z-w)/2,...".
  std::string mapspec() const;

  auto operator<=>(const Isometry&) const = default;

 private:
  std::array<int, 16> twice_;
};

/// Parses a mapspec ("-x,-y,z,w", "(x-y+z+w)/2,..."). Throws EngineError(InvalidArgument)
/// with a message naming the offending component.
Isometry parse_mapspec(const std::string& text);

/// All 384 signed permutations, sorted.
const std::vector<Isometry>& signed_perm_group();

/// All 1152 linear symmetries of the 24-cell, sorted.
const std::vector<Isometry>& full_symmetry_group();

/// H(x,y,z,w) = (-x,-y,z,w).
Isometry map_h();

struct IsometryHash {
  std::size_t operator()(const Isometry& m) const noexcept;
};

}  // namespace ideal24
