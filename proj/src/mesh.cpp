#include "rrm/mesh.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <unordered_map>

#include <boost/random/uniform_int_distribution.hpp>

#include "rrm/errors.hpp"

namespace rrm::sim {
namespace {

constexpr int kMaxLevel = 6;

std::array<Vec3, 3> corners(const std::vector<Vec3>& v, const ReceiverMesh::Face& f) {
  return {v[f[0]], v[f[1]], v[f[2]]};
}

double spherical_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = std::abs(dot(a, cross(b, c)));
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

double ReceiverMesh::triangle_area(std::size_t i) const {
  const auto [a, b, c] = corners(vertices_, triangles().at(i));
  return spherical_area(a, b, c);
}

double ReceiverMesh::mean_triangle_area() const {
  return 4.0 * std::numbers::pi / static_cast<double>(triangle_count());
}

double ReceiverMesh::total_area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < triangle_count(); ++i) s += triangle_area(i);
  return s;
}

double ReceiverMesh::area_ratio() const {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < triangle_count(); ++i) {
    const double a = triangle_area(i);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return hi / lo;
}

std::uint32_t ReceiverMesh::locate(const Vec3& p) const {
  auto score = [&](int lvl, std::uint32_t f) {
    const auto& n = normals_[lvl][f].n;
    return std::min({dot(p, n[0]), dot(p, n[1]), dot(p, n[2])});
  };
  std::uint32_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::uint32_t f = 0; f < levels_[0].size(); ++f) {
    const double s = score(0, f);
    if (s > best_score) {
      best_score = s;
      best = f;
      if (s >= 0.0) break;
    }
  }
  for (std::size_t lvl = 1; lvl < levels_.size(); ++lvl) {
    const std::uint32_t first = 4 * best;
    best_score = -std::numeric_limits<double>::infinity();
    for (std::uint32_t f = first; f < first + 4; ++f) {
      const double s = score(static_cast<int>(lvl), f);
      if (s > best_score) {
        best_score = s;
        best = f;
        if (s >= 0.0) break;
      }
    }
  }
  return best;
}

ReceiverMesh build_mesh(int level) {
  if (level < 0 || level > kMaxLevel) throw DomainError("subdivision level must lie in [0, 6]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  ReceiverMesh m;
  for (const Vec3& v : {Vec3{-1, t, 0}, Vec3{1, t, 0}, Vec3{-1, -t, 0}, Vec3{1, -t, 0},
                        Vec3{0, -1, t}, Vec3{0, 1, t}, Vec3{0, -1, -t}, Vec3{0, 1, -t},
                        Vec3{t, 0, -1}, Vec3{t, 0, 1}, Vec3{-t, 0, -1}, Vec3{-t, 0, 1}})
    m.vertices_.push_back(normalized(v));

  std::vector<ReceiverMesh::Face> base = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (auto& f : base) {
    const auto [a, b, c] = corners(m.vertices_, f);
    if (dot(cross(b - a, c - a), a) < 0.0) std::swap(f[1], f[2]);
  }
  m.levels_.push_back(std::move(base));

  std::unordered_map<std::uint64_t, std::uint32_t> midpoints;
  auto midpoint = [&](std::uint32_t i, std::uint32_t j) {
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(i, j)) << 32) | std::max(i, j);
    auto [it, inserted] = midpoints.try_emplace(key, static_cast<std::uint32_t>(m.vertices_.size()));
    if (inserted) m.vertices_.push_back(normalized(m.vertices_[i] + m.vertices_[j]));
    return it->second;
  };
  for (int l = 0; l < level; ++l) {
    std::vector<ReceiverMesh::Face> next;
    next.reserve(4 * m.levels_.back().size());
    for (const auto& f : m.levels_.back()) {
      const auto ab = midpoint(f[0], f[1]);
      const auto bc = midpoint(f[1], f[2]);
      const auto ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({ab, f[1], bc});
      next.push_back({ca, bc, f[2]});
      next.push_back({ab, bc, ca});
    }
    m.levels_.push_back(std::move(next));
  }

  for (const auto& faces : m.levels_) {
    std::vector<ReceiverMesh::EdgeNormals> ns;
    ns.reserve(faces.size());
    for (const auto& f : faces) {
      const auto [a, b, c] = corners(m.vertices_, f);
      ns.push_back({{normalized(cross(a, b)), normalized(cross(b, c)), normalized(cross(c, a))}});
    }
    m.normals_.push_back(std::move(ns));
  }

  m.receptor_ids_.resize(m.triangle_count());
  std::iota(m.receptor_ids_.begin(), m.receptor_ids_.end(), 0u);
  m.receptor_flag_.assign(m.triangle_count(), 1);
  return m;
}

ReceiverMesh assign_receptors(ReceiverMesh mesh, std::size_t M, std::uint64_t seed) {
  const std::size_t n = mesh.triangle_count();
  if (M > n) throw DomainError("receptor count exceeds triangle count");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x6d657368u};
  std::mt19937_64 rng(seq);
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  for (std::size_t i = 0; i < M; ++i) {
    boost::random::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(M);
  std::sort(ids.begin(), ids.end());
  mesh.receptor_flag_.assign(n, 0);
  for (auto id : ids) mesh.receptor_flag_[id] = 1;
  mesh.receptor_ids_ = std::move(ids);
  return mesh;
}

}  // namespace rrm::sim
