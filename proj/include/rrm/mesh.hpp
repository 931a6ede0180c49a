#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace rrm::sim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

/// Icosphere receiver: a subdivided icosahedron with vertices on the unit
/// sphere. Faces are the spherical triangles spanned by their vertices, so
/// every subdivision level partitions the sphere exactly.
class ReceiverMesh {
 public:
  using Face = std::array<std::uint32_t, 3>;

  ReceiverMesh() = default;

  [[nodiscard]] int level() const { return static_cast<int>(levels_.size()) - 1; }
  [[nodiscard]] std::size_t triangle_count() const { return levels_.empty() ? 0 : levels_.back().size(); }
  [[nodiscard]] const std::vector<Vec3>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Face>& triangles() const { return levels_.back(); }

  /// Spherical area of face i on the unit sphere.
  [[nodiscard]] double triangle_area(std::size_t i) const;
  /// Nominal uniform area 4 pi / count.
  [[nodiscard]] double mean_triangle_area() const;
  [[nodiscard]] double total_area() const;
  [[nodiscard]] double area_ratio() const;  ///< max / min face area

  /// Finest-level face whose spherical triangle contains direction p.
  [[nodiscard]] std::uint32_t locate(const Vec3& p) const;

  [[nodiscard]] const std::vector<std::uint32_t>& receptor_ids() const { return receptor_ids_; }
  [[nodiscard]] bool is_receptor(std::uint32_t face) const { return receptor_flag_[face] != 0; }
  [[nodiscard]] bool all_receptors() const { return receptor_ids_.size() == triangle_count(); }

  friend ReceiverMesh build_mesh(int level);
  friend ReceiverMesh assign_receptors(ReceiverMesh mesh, std::size_t M, std::uint64_t seed);

 private:
  struct EdgeNormals {
    std::array<Vec3, 3> n;  // inward edge-plane normals
  };

  std::vector<Vec3> vertices_;
  std::vector<std::vector<Face>> levels_;  // children of face f at level l: 4f..4f+3 at l+1
  std::vector<std::vector<EdgeNormals>> normals_;
  std::vector<std::uint32_t> receptor_ids_;
  std::vector<std::uint8_t> receptor_flag_;
};

/// Level n gives 20 * 4^n faces. All faces start as receptors.
ReceiverMesh build_mesh(int level);

/// Uniformly random M-subset of faces, deterministic in seed.
ReceiverMesh assign_receptors(ReceiverMesh mesh, std::size_t M, std::uint64_t seed);

}  // namespace rrm::sim
