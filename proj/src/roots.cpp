#include "rwlattice/roots.hpp"

#include <algorithm>

#include "rwlattice/errors.hpp"

namespace rwl {

namespace {

RootSign sign_of(const std::vector<int>& components) {
  for (int c : components) {
    if (c > 0) return RootSign::Positive;
    if (c < 0) return RootSign::Negative;
  }
  throw DomainError("root vector has no nonzero component");
}

void check_rank(int n) {
  if (n < 1) throw DomainError("rank must be >= 1");
}

void sort_by_components(std::vector<RootVector>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const RootVector& a, const RootVector& b) {
              return a.components < b.components;
            });
}

}  // namespace

RootVector RootVector::negated() const {
  RootVector out = *this;
  for (int& c : out.components) c = -c;
  out.sign = sign == RootSign::Positive ? RootSign::Negative : RootSign::Positive;
  return out;
}

std::vector<RootVector> long_roots(int n) {
  check_rank(n);
  std::vector<RootVector> roots;
  roots.reserve(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int s : {2, -2}) {
      RootVector r;
      r.components.assign(static_cast<size_t>(n), 0);
      r.components[static_cast<size_t>(i)] = s;
      r.kind = RootKind::Long;
      r.sign = sign_of(r.components);
      roots.push_back(std::move(r));
    }
  }
  sort_by_components(roots);
  return roots;
}

std::vector<RootVector> short_roots(int n) {
  check_rank(n);
  std::vector<RootVector> roots;
  roots.reserve(static_cast<size_t>(2 * n * (n - 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          RootVector r;
          r.components.assign(static_cast<size_t>(n), 0);
          r.components[static_cast<size_t>(i)] = si;
          r.components[static_cast<size_t>(j)] = sj;
          r.kind = RootKind::Short;
          r.sign = sign_of(r.components);
          roots.push_back(std::move(r));
        }
      }
    }
  }
  sort_by_components(roots);
  return roots;
}

std::vector<RootVector> all_roots(int n) {
  auto roots = long_roots(n);
  auto shorts = short_roots(n);
  roots.insert(roots.end(), std::make_move_iterator(shorts.begin()),
               std::make_move_iterator(shorts.end()));
  sort_by_components(roots);
  return roots;
}

std::vector<RootVector> positive_roots(int n) {
  auto roots = all_roots(n);
  std::erase_if(roots, [](const RootVector& r) { return r.sign != RootSign::Positive; });
  return roots;
}

std::vector<RootVector> strictly_positive_roots(int n) {
  auto roots = all_roots(n);
  std::erase_if(roots, [](const RootVector& r) {
    return std::any_of(r.components.begin(), r.components.end(),
                       [](int c) { return c < 0; });
  });
  return roots;
}

}  // namespace rwl
