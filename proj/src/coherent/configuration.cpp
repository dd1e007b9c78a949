#include "twodist/coherent/configuration.hpp"

#include <set>

#include "twodist/errors.hpp"

namespace twodist::coherent {

using designs::IncidenceDesign;

CoherentConfig::CoherentConfig(IncidenceDesign d, designs::DesignParameters p)
    : design_(std::move(d)),
      params_(std::move(p)),
      m_(design_.point_count()),
      n_(static_cast<int>(design_.block_count())) {}

CoherentConfig CoherentConfig::from_design(const IncidenceDesign& d) {
  const auto inter = designs::intersection_numbers(d);
  if (!inter.quasi_symmetric) {
    throw StructureError("design is not quasi-symmetric: " +
                         std::to_string(inter.values.size()) + " intersection sizes");
  }
  const int alpha = *inter.alpha;
  const int beta = *inter.beta;
  auto params = designs::derive_parameters(d.point_count(), d.block_size(), alpha, beta);
  CoherentConfig cc(d, std::move(params));

  const std::size_t N = cc.size();
  const auto m = static_cast<std::size_t>(cc.m_);
  cc.labels_.assign(N * N, 0);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      std::uint8_t l = 0;
      if (x < m && y < m) {
        l = x == y ? 1 : 3;
      } else if (x >= m && y >= m) {
        if (x == y) {
          l = 2;
        } else {
          const int meet = designs::intersection_size(d.block(x - m), d.block(y - m));
          l = meet == alpha ? 4 : 5;
        }
      } else if (x < m) {
        l = d.contains(y - m, static_cast<int>(x)) ? 6 : 7;
      } else {
        l = d.contains(x - m, static_cast<int>(y)) ? 8 : 9;
      }
      cc.labels_[x * N + y] = l;
    }
  }
  return cc;
}

Matrix<int> CoherentConfig::adjacency(int relation) const {
  Matrix<int> a(size(), size());
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) a(x, y) = label(x, y) == relation ? 1 : 0;
  }
  return a;
}

long CoherentConfig::relation_size(int relation) const {
  long count = 0;
  for (auto l : labels_) count += l == relation ? 1 : 0;
  return count;
}

AxiomReport verify_axioms(const CoherentConfig& cc) {
  AxiomReport report;
  const std::size_t N = cc.size();
  auto fail = [&](std::string why) {
    if (report.ok) {
      report.ok = false;
      report.violation = std::move(why);
    }
  };

  // (1) partition of X x X
  for (std::size_t x = 0; x < N && report.ok; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      const int l = cc.label(x, y);
      if (l < 1 || l > kRelations) {
        fail("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no relation");
        break;
      }
    }
  }
  if (!report.ok) return report;

  // (2) closure under transposition
  report.transpose.fill(0);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      const int i = cc.label(x, y);
      const int t = cc.label(y, x);
      if (report.transpose[i] == 0) {
        report.transpose[i] = t;
      } else if (report.transpose[i] != t) {
        fail("transpose of R" + std::to_string(i) + " is not a single relation (pair (" +
             std::to_string(x) + "," + std::to_string(y) + "))");
        return report;
      }
    }
  }

  // (3) the diagonal is a union of relations
  std::set<int> diagonal;
  for (std::size_t x = 0; x < N; ++x) diagonal.insert(cc.label(x, x));
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (x != y && diagonal.contains(cc.label(x, y))) {
        fail("relation R" + std::to_string(cc.label(x, y)) +
             " mixes diagonal and off-diagonal pairs");
        return report;
      }
    }
  }

  // (4) intersection constants p_ij^k
  std::array<std::array<long, kRelations + 1>, kRelations + 1> counts{};
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      for (auto& row : counts) row.fill(0);
      for (std::size_t z = 0; z < N; ++z) ++counts[cc.label(x, z)][cc.label(z, y)];
      const int k = cc.label(x, y);
      for (int i = 1; i <= kRelations; ++i) {
        for (int j = 1; j <= kRelations; ++j) {
          auto& slot = report.constants[i][j][k];
          if (!slot) {
            slot = counts[i][j];
          } else if (*slot != counts[i][j]) {
            fail("p_{" + std::to_string(i) + std::to_string(j) + "}^" + std::to_string(k) +
                 " is not constant: " + std::to_string(*slot) + " vs " +
                 std::to_string(counts[i][j]) + " at (x,y) = (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace twodist::coherent
