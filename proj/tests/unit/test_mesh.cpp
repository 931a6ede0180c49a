#include <doctest.h>

#include <numbers>
#include <random>
#include <set>

#include "rrm/errors.hpp"
#include "rrm/mesh.hpp"

using namespace rrm::sim;

namespace {

bool contains(const ReceiverMesh& mesh, std::uint32_t f, const Vec3& p) {
  const auto& v = mesh.vertices();
  const auto& t = mesh.triangles()[f];
  const Vec3 &a = v[t[0]], &b = v[t[1]], &c = v[t[2]];
  const double s1 = dot(p, cross(a, b)), s2 = dot(p, cross(b, c)), s3 = dot(p, cross(c, a));
  const double tol = 1e-12;
  return (s1 >= -tol && s2 >= -tol && s3 >= -tol) || (s1 <= tol && s2 <= tol && s3 <= tol);
}

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("triangle counts") {
    CHECK(build_mesh(0).triangle_count() == 20);
    CHECK(build_mesh(3).triangle_count() == 1280);
    CHECK(build_mesh(4).triangle_count() == 5120);
    CHECK_THROWS(build_mesh(-1));
    CHECK_THROWS(build_mesh(7));
  }

  TEST_CASE("geometry") {
    for (int level : {0, 2, 4}) {
      const auto mesh = build_mesh(level);
      for (const auto& v : mesh.vertices()) CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(mesh.total_area() == doctest::Approx(4 * std::numbers::pi).epsilon(1e-12));
      CHECK(mesh.vertices().size() == 10 * (std::size_t{1} << (2 * level)) + 2);
    }
    const auto mesh = build_mesh(4);
    CHECK(mesh.area_ratio() <= 1.3);
    double lo = 1e9, hi = 0.0;
    for (std::size_t i = 0; i < mesh.triangle_count(); ++i) {
      lo = std::min(lo, mesh.triangle_area(i));
      hi = std::max(hi, mesh.triangle_area(i));
    }
    CHECK(hi / lo == doctest::Approx(mesh.area_ratio()));
  }

  TEST_CASE("locate finds the containing face") {
    const auto mesh = build_mesh(3);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int i = 0; i < 3000; ++i) {
      const Vec3 p = normalized(Vec3{g(rng), g(rng), g(rng)});
      const auto f = mesh.locate(p);
      REQUIRE(f < mesh.triangle_count());
      CHECK(contains(mesh, f, p));
    }
    // Vertices and edge midpoints are on boundaries; any adjacent face is acceptable.
    for (const auto& v : mesh.vertices()) CHECK(contains(mesh, mesh.locate(v), v));
  }

  TEST_CASE("receptor assignment") {
    const auto base = build_mesh(4);
    const auto all = assign_receptors(base, 5120, 1);
    CHECK(all.all_receptors());
    const auto none = assign_receptors(base, 0, 1);
    CHECK(none.receptor_ids().empty());
    for (std::uint32_t f = 0; f < 50; ++f) CHECK_FALSE(none.is_receptor(f));

    const auto a = assign_receptors(base, 1000, 99);
    const auto b = assign_receptors(base, 1000, 99);
    const auto c = assign_receptors(base, 1000, 100);
    CHECK(a.receptor_ids() == b.receptor_ids());
    CHECK(a.receptor_ids() != c.receptor_ids());
    std::set<std::uint32_t> uniq(a.receptor_ids().begin(), a.receptor_ids().end());
    CHECK(uniq.size() == 1000);
    for (auto f : a.receptor_ids()) CHECK(a.is_receptor(f));
    CHECK_THROWS(assign_receptors(base, 5121, 1));
  }
}
