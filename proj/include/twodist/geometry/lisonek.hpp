#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "twodist/exactnum/quadext.hpp"

namespace twodist::geometry {

using exactnum::QuadExt;
using exactnum::Rational;

using Point = std::vector<Rational>;

/// The 45-point two-distance set in R^9 (affine dimension 8):
/// X1 = {-e_i + (1/3) sum_k e_k}, X2 = {e_i + e_j : i < j}, pairs in
/// lexicographic order so X2[b] matches block b of lisonek_design().
struct LisonekSet {
  std::vector<Point> X1;
  std::vector<Point> X2;
};

LisonekSet lisonek_coordinates();

Rational squared_distance(const Point& a, const Point& b);
Rational squared_norm(const Point& a);

/// Dimension of the affine hull.
std::size_t affine_dimension(const std::vector<Point>& points);

struct LisonekCheck {
  std::size_t point_count = 0;
  std::size_t affine_dim = 0;
  bool on_hyperplane = false;  ///< every coordinate sum equals 2
  std::set<Rational> squared_distances;
  /// Norms from the origin of R^9.
  std::set<Rational> x1_norm_sq;
  std::set<Rational> x2_norm_sq;
  /// Common centroid of X1 and X2, and the radii about it.
  Point centroid;
  std::set<Rational> x1_centroid_radius_sq;
  std::set<Rational> x2_centroid_radius_sq;

  QuadExt x1_norm() const;
  QuadExt x2_norm() const;
  QuadExt x1_centroid_radius() const;
  QuadExt x2_centroid_radius() const;
};

LisonekCheck check_lisonek_coordinates(const LisonekSet& set);

}  // namespace twodist::geometry
