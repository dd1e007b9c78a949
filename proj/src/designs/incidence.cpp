#include "twodist/designs/incidence.hpp"

#include <algorithm>
#include <map>

#include "twodist/errors.hpp"

namespace twodist::designs {

IncidenceDesign::IncidenceDesign(int m, std::vector<Block> blocks)
    : m_(m), blocks_(std::move(blocks)) {
  if (m_ < 1) throw StructureError("design needs at least one point");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    const std::string where = "block " + std::to_string(i);
    if (b.size() != blocks_.front().size()) {
      throw StructureError(where + " has size " + std::to_string(b.size()) + ", expected " +
                           std::to_string(blocks_.front().size()));
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] < 0 || b[j] >= m_) {
        throw StructureError(where + " entry " + std::to_string(b[j]) + " outside [0, " +
                             std::to_string(m_) + ")");
      }
      if (j > 0 && b[j - 1] >= b[j]) {
        throw StructureError(where + " is not strictly ascending");
      }
    }
  }
}

bool IncidenceDesign::contains(std::size_t block, int point) const {
  const Block& b = blocks_[block];
  return std::binary_search(b.begin(), b.end(), point);
}

int intersection_size(const Block& a, const Block& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

namespace {

exactnum::Integer binomial(int n, int k) {
  exactnum::Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

TDesignResult verify_t_design(const IncidenceDesign& d, int t) {
  if (t < 1 || t > d.block_size()) {
    throw DomainError("t = " + std::to_string(t) + " outside [1, " +
                      std::to_string(d.block_size()) + "]");
  }
  std::map<std::vector<int>, long> counts;
  std::vector<int> idx(static_cast<std::size_t>(t));
  std::vector<int> subset(static_cast<std::size_t>(t));
  const int S = d.block_size();
  for (const Block& b : d.blocks()) {
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < t; ++i) subset[i] = b[idx[i]];
      ++counts[subset];
      int i = t - 1;
      while (i >= 0 && idx[i] == S - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  TDesignResult result;
  const long common = counts.begin()->second;
  for (const auto& [s, c] : counts) {
    if (c != common) {
      result.discrepancy = subset_str(s) + " lies in " + std::to_string(c) + " blocks, " +
                           subset_str(counts.begin()->first) + " in " + std::to_string(common);
      return result;
    }
  }
  if (binomial(d.point_count(), t) != static_cast<unsigned long>(counts.size())) {
    // Some t-subset is covered by no block at all.
    std::vector<int> probe(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) probe[i] = i;
    while (counts.contains(probe)) {
      int i = t - 1;
      while (probe[i] == d.point_count() - t + i) --i;
      ++probe[i];
      for (int j = i + 1; j < t; ++j) probe[j] = probe[j - 1] + 1;
    }
    result.discrepancy = subset_str(probe) + " lies in 0 blocks, " +
                         subset_str(counts.begin()->first) + " in " + std::to_string(common);
    return result;
  }
  result.is_design = true;
  result.Lambda = exactnum::Integer(common);
  return result;
}

IntersectionNumbers intersection_numbers(const IncidenceDesign& d) {
  if (d.block_count() < 2) throw DomainError("intersection numbers need at least two blocks");
  IntersectionNumbers out;
  const auto& blocks = d.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      out.values.insert(intersection_size(blocks[i], blocks[j]));
    }
  }
  if (out.values.size() == 2) {
    out.quasi_symmetric = true;
    out.beta = *out.values.begin();
    out.alpha = *out.values.rbegin();
  }
  return out;
}

IncidenceDesign lisonek_design() {
  std::vector<Block> blocks;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) blocks.push_back({i, j});
  }
  return IncidenceDesign(9, std::move(blocks));
}

IncidenceDesign complement(const IncidenceDesign& d) {
  std::vector<Block> out;
  out.reserve(d.block_count());
  for (const Block& b : d.blocks()) {
    Block c;
    for (int p = 0; p < d.point_count(); ++p) {
      if (!std::binary_search(b.begin(), b.end(), p)) c.push_back(p);
    }
    out.push_back(std::move(c));
  }
  return IncidenceDesign(d.point_count(), std::move(out));
}

}  // namespace twodist::designs
