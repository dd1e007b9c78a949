#include "twodist/geometry/lisonek.hpp"

#include "twodist/errors.hpp"

namespace twodist::geometry {

namespace {

constexpr int kDim = 9;

QuadExt root_of_single(const std::set<Rational>& values) {
  if (values.size() != 1) throw ConsistencyError("radius is not unique");
  return exactnum::sqrt_adjoin(*values.begin());
}

}  // namespace

LisonekSet lisonek_coordinates() {
  LisonekSet out;
  const Rational third(1, 3);
  for (int i = 0; i < kDim; ++i) {
    Point p(kDim, third);
    p[i] = p[i] - Rational(1);
    out.X1.push_back(std::move(p));
  }
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      Point p(kDim, Rational(0));
      p[i] = Rational(1);
      p[j] = Rational(1);
      out.X2.push_back(std::move(p));
    }
  }
  return out;
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("points of different dimension");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational d = a[i] - b[i];
    acc = acc + d * d;
  }
  return acc;
}

Rational squared_norm(const Point& a) { return squared_distance(a, Point(a.size(), Rational(0))); }

std::size_t affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return 0;
  std::vector<Point> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point r(points[i].size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = points[i][c] - points[0][c];
    rows.push_back(std::move(r));
  }
  // row echelon over Q
  std::size_t rank = 0;
  const std::size_t cols = points[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

QuadExt LisonekCheck::x1_norm() const { return root_of_single(x1_norm_sq); }
QuadExt LisonekCheck::x2_norm() const { return root_of_single(x2_norm_sq); }
QuadExt LisonekCheck::x1_centroid_radius() const { return root_of_single(x1_centroid_radius_sq); }
QuadExt LisonekCheck::x2_centroid_radius() const { return root_of_single(x2_centroid_radius_sq); }

LisonekCheck check_lisonek_coordinates(const LisonekSet& set) {
  LisonekCheck out;
  std::vector<Point> all = set.X1;
  all.insert(all.end(), set.X2.begin(), set.X2.end());
  out.point_count = all.size();
  out.affine_dim = affine_dimension(all);

  out.on_hyperplane = true;
  for (const auto& p : all) {
    Rational sum;
    for (const auto& c : p) sum = sum + c;
    out.on_hyperplane = out.on_hyperplane && sum == Rational(2);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      out.squared_distances.insert(squared_distance(all[i], all[j]));
    }
  }

  auto centroid_of = [](const std::vector<Point>& pts) {
    Point c(pts.at(0).size(), Rational(0));
    for (const auto& p : pts) {
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] + p[k];
    }
    const Rational count(static_cast<long>(pts.size()));
    for (auto& v : c) v = v / count;
    return c;
  };
  const Point c1 = centroid_of(set.X1);
  const Point c2 = centroid_of(set.X2);
  if (c1 != c2) throw ConsistencyError("X1 and X2 have different centroids");
  out.centroid = c1;

  for (const auto& p : set.X1) {
    out.x1_norm_sq.insert(squared_norm(p));
    out.x1_centroid_radius_sq.insert(squared_distance(p, out.centroid));
  }
  for (const auto& p : set.X2) {
    out.x2_norm_sq.insert(squared_norm(p));
    out.x2_centroid_radius_sq.insert(squared_distance(p, out.centroid));
  }
  return out;
}

}  // namespace twodist::geometry
