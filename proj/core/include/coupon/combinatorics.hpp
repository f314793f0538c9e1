#pragma once

// Integer compositions and the composition-weighted sums S_k, S_{k,l},
// R_{k,l} that make up the exact probability of k superfluous draws.
//
// A composition of k into `parts` slots is a vector of nonnegative integers
// summing to k. For an instance (n, m) the slots are the stages
// i = m+1, ..., n-1 (the stage i = n has failure probability 0 and never
// carries weight), and a composition c contributes
//
//     prod_i (1 - i/n)^{c_i}
//
// to S_k. Compositions with exactly l nonzero slots form I_{k,l}.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "coupon/model.hpp"
#include "coupon/numeric.hpp"

namespace coupon {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Enumeration cap: COUPON_POISSON_CAP from the environment when set to a
/// positive integer, kDefaultEnumerationCap otherwise.
std::uint64_t enumeration_cap();

/// C(total + parts - 1, total): the size of I_k for `parts` slots.
BigInt composition_count(unsigned total, std::size_t parts);

struct Composition {
  unsigned total = 0;
  std::vector<unsigned> parts;
  /// Stage index of parts[0]; m + 1 for compositions tied to an instance.
  std::int64_t first_index = 0;

  unsigned nonzero_count() const;
  unsigned at_index(std::int64_t i) const {
    return parts.at(static_cast<std::size_t>(i - first_index));
  }
};

struct CompositionFilter {
  std::optional<unsigned> exactly_nonzero;
  /// Slot position (0-based) that must hold zero.
  std::optional<std::size_t> forced_zero;
};

/// Streams compositions of `total` into `parts` slots in lexicographic order,
/// each exactly once, skipping those rejected by the filter.
///
///   for (const Composition& c : CompositionEnumerator(3, 4)) ...
///
/// Construction throws ResourceCapExceeded when the unfiltered set is larger
/// than `cap`, and std::invalid_argument for an out-of-range forced-zero slot.
class CompositionEnumerator {
 public:
  CompositionEnumerator(unsigned total, std::size_t parts, CompositionFilter filter = {},
                        std::uint64_t cap = enumeration_cap(), std::int64_t first_index = 0);

  /// Advances to the next qualifying composition. The first call positions on
  /// the first one. Returns false once exhausted.
  bool next();
  const Composition& current() const { return current_; }

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(CompositionEnumerator* owner) : owner_(owner) { advance(); }

    const Composition& operator*() const { return owner_->current(); }
    const Composition* operator->() const { return &owner_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return owner_ == nullptr; }

   private:
    void advance() {
      if (owner_ && !owner_->next()) owner_ = nullptr;
    }
    CompositionEnumerator* owner_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool step_unfiltered();
  bool accepted() const;

  CompositionFilter filter_;
  Composition current_;
  bool started_ = false;
  bool done_ = false;
};

inline CompositionEnumerator enumerate_compositions(unsigned total, std::size_t parts,
                                                    CompositionFilter filter = {}) {
  return CompositionEnumerator(total, parts, filter);
}

/// Compositions in I_k for an instance: parts indexed by i = m+1, ..., n-1.
CompositionEnumerator index_set(const CollectorInstance& instance, unsigned k,
                                CompositionFilter filter = {});

/// |I_{k,l}| = C(parts, l) * C(k-1, k-l). Zero when l > parts.
/// Throws std::invalid_argument unless 1 <= l <= k.
BigInt index_set_cardinality(unsigned k, unsigned l, std::size_t parts);

/// S_k split by the number of nonzero slots.
///
/// per_l[l] = S_{k,l}, remainders[l] = R_{k,l} for l = 0..k, where
/// R_{k,l} = sum over I_{k,l} of (1 - 1/prod c_i!) prod (1 - i/n)^{c_i}.
/// Only l = 0 is populated when k = 0 (S_0 = 1).
struct SumDecomposition {
  unsigned k = 0;
  std::vector<Rational> per_l;
  std::vector<Rational> remainders;
  Rational total;

  const Rational& S(unsigned l) const { return per_l.at(l); }
  const Rational& R(unsigned l) const { return remainders.at(l); }
  /// The multinomially weighted part S_{k,l} - R_{k,l}.
  Rational weighted(unsigned l) const { return per_l.at(l) - remainders.at(l); }
};

/// S_k by explicit enumeration of I_k. Throws ResourceCapExceeded past the cap.
SumDecomposition sum_S(const CollectorInstance& instance, unsigned k);

/// Same quantities via a generating-function recursion over the stages;
/// costs O((n-m) k^3) rational operations. Entry k holds order k.
std::vector<SumDecomposition> sum_S_dp(const CollectorInstance& instance, unsigned k_max);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// S_{k,k} two ways: directly over the 0/1 compositions, and as
/// lambda_n^k / k! minus the multinomially weighted sums over I_{k,l}, l < k.
IdentityCheck s_kk_identity_check(const CollectorInstance& instance, unsigned k);

/// The pieces of R_{k,k-1} (k >= 2):
///   r_kk1 = R_{k,k-1}
///   leading = (lambda_{n,2}/2) lambda_n^{k-2} / (k-2)!
///   r1 = (lambda_{n,2}/2) * sum_{l=1}^{k-3} of the weighted sums over I_{k-2,l}
///   r2 = (1/2) sum_j (1-j/n)^2 * sum over I_{k-2,k-2} with c_j = 1 of prod (1-i/n)^{c_i}
/// and r_kk1 = leading - r1 - r2 exactly.
struct RemainderSplit {
  unsigned k = 0;
  Rational r_kk1;
  Rational leading;
  Rational r1;
  Rational r2;
};

RemainderSplit remainder_split(const CollectorInstance& instance, unsigned k);
RemainderSplit remainder_split_dp(const CollectorInstance& instance, unsigned k);

}  // namespace coupon
