#pragma once

// Internal exhaustive-search machinery shared by the s-number, minimal monic
// vanishing degree, and root-atlas enumerations. Not installed.

#include <cstdint>
#include <optional>
#include <vector>

#include "ringforge/ring.hpp"

namespace ringforge::detail {

// Monomial value tables x^0, x^1, ..., extended on demand.
class MonomialTables {
 public:
  explicit MonomialTables(RingPtr ring) : ring_(std::move(ring)) {}

  const std::vector<Ring::Elem>& table(std::size_t exp) {
    while (tables_.size() <= exp) grow();
    return tables_[exp];
  }
  const RingPtr& ring() const { return ring_; }

 private:
  void grow() {
    const Ring& ring = *ring_;
    std::vector<Ring::Elem> next(ring.order());
    if (tables_.empty()) {
      for (Ring::Elem e = 0; e < ring.order(); ++e) next[e] = ring.one();
    } else {
      const auto& prev = tables_.back();
      for (Ring::Elem e = 0; e < ring.order(); ++e) next[e] = ring.mul(prev[e], e);
    }
    tables_.push_back(std::move(next));
  }

  RingPtr ring_;
  std::vector<std::vector<Ring::Elem>> tables_;
};

// Finds the lexicographically first coefficient tuple (c_0..c_{m-1}), each
// c_i drawn from `alphabet` (ascending), with
//     sum_i c_i * mono[i]  ==  target   pointwise over all ring elements.
//
// Subtrees are pruned at a fixed pivot subset: element e is checked at the
// level of its highest monomial with a nonzero value at e; beyond that level
// its partial sum is final. Every element has such a level, so reaching the
// bottom of the recursion certifies a full match, and pruning never skips a
// viable tuple -- the search remains exhaustive and deterministic.
class RealizationSearch {
 public:
  RealizationSearch(const Ring& ring, MonomialTables& mono, unsigned m,
                    const std::vector<Ring::Elem>& target,
                    const std::vector<Ring::Elem>& alphabet)
      : ring_(ring), mono_(mono), m_(m), target_(target), alphabet_(alphabet) {}

  std::optional<std::vector<Ring::Elem>> run() {
    const std::size_t n = ring_.order();
    pivots_at_.assign(m_, {});
    for (std::size_t e = 0; e < n; ++e) {
      unsigned last = 0;
      for (unsigned j = 0; j < m_; ++j)
        if (mono_.table(j)[e] != 0) last = j;
      pivots_at_[last].push_back(std::uint32_t(e));
    }
    partial_.assign(m_ + 1, std::vector<Ring::Elem>(n, 0));
    chosen_.assign(m_, 0);
    if (descend(0)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(unsigned level) {
    if (level == m_) return true;  // every element already checked at its pivot
    const auto& mt = mono_.table(level);
    const auto& prev = partial_[level];
    auto& cur = partial_[level + 1];
    const std::size_t n = ring_.order();
    for (Ring::Elem c : alphabet_) {
      ++nodes_;
      for (std::size_t e = 0; e < n; ++e)
        cur[e] = ring_.add(prev[e], ring_.mul(c, mt[e]));
      bool viable = true;
      for (std::uint32_t e : pivots_at_[level])
        if (cur[e] != target_[e]) {
          viable = false;
          break;
        }
      if (!viable) continue;
      chosen_[level] = c;
      if (descend(level + 1)) return true;
    }
    return false;
  }

  const Ring& ring_;
  MonomialTables& mono_;
  unsigned m_;
  const std::vector<Ring::Elem>& target_;
  const std::vector<Ring::Elem>& alphabet_;
  std::vector<std::vector<std::uint32_t>> pivots_at_;
  std::vector<std::vector<Ring::Elem>> partial_;
  std::vector<Ring::Elem> chosen_;
  std::uint64_t nodes_ = 0;
};

// Nominal coefficient-space size |alphabet|^m, saturating at 2^63.
inline std::uint64_t nominal_space(std::uint64_t alphabet_size, unsigned m) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (out > (std::uint64_t(1) << 63) / std::max<std::uint64_t>(alphabet_size, 1))
      return std::uint64_t(1) << 63;
    out *= alphabet_size;
  }
  return out;
}

}  // namespace ringforge::detail
