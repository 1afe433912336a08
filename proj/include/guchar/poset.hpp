#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace guchar {

// Finite poset on 0..size-1 holding its full strict-order relation. Callers
// declare generating relations and close transitively; product and join stay
// closed by construction. Chain counting is exact in long long, which is
// ample for the small posets used here (subspace posets of low rank and
// randomized posets of at most a dozen elements).
class Poset {
 public:
  explicit Poset(unsigned size);

  unsigned size() const { return n_; }
  void add_less(unsigned a, unsigned b);
  void transitive_close();
  bool less(unsigned a, unsigned b) const { return lt_[a * n_ + b]; }

  // reduced Euler characteristic of the order complex:
  //   -1 + #chains(1) - #chains(2) + #chains(3) - ...
  long long reduced_euler() const;
  long long reduced_euler(const std::vector<uint32_t>& subset) const;

  Poset induced(const std::vector<uint32_t>& subset) const;

  // disjoint union with every a-element below every b-element
  static Poset join(const Poset& a, const Poset& b);
  // componentwise order on pairs, pair (i,j) at index i*b.size()+j
  static Poset product(const Poset& a, const Poset& b);
  // adjoin a new minimum, appended as the last index
  Poset with_least() const;
  Poset remove_element(unsigned idx) const;
  std::optional<unsigned> least() const;

 private:
  unsigned n_ = 0;
  std::vector<char> lt_;
};

}  // namespace guchar
