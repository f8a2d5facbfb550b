#pragma once

#include <vector>

namespace rwl {

enum class RootKind { Long, Short };
enum class RootSign { Positive, Negative };

/// An edge generator of the symplectic topology: an n-tuple with either one
/// nonzero component equal to +-2 (long) or two nonzero components equal to
/// +-1 (short). The sign is lexicographic: positive iff the first nonzero
/// component is positive.
struct RootVector {
  std::vector<int> components;
  RootKind kind = RootKind::Long;
  RootSign sign = RootSign::Positive;

  RootVector negated() const;
  bool operator==(const RootVector&) const = default;
};

/// All +-2 e_i; exactly 2n of them.
std::vector<RootVector> long_roots(int n);

/// All +-e_i +- e_j with i < j; exactly 2n(n-1) of them.
std::vector<RootVector> short_roots(int n);

/// Long and short roots together, sorted lexicographically by components;
/// exactly 2n^2 of them.
std::vector<RootVector> all_roots(int n);

/// The n^2 roots whose first nonzero component is positive.
std::vector<RootVector> positive_roots(int n);

/// The n(n+1)/2 roots with no negative component (+2 e_i and e_i + e_j).
/// These are the generators available at the all-zero corner, which is why
/// their count is the minimum symplectic degree.
std::vector<RootVector> strictly_positive_roots(int n);

}  // namespace rwl
