#pragma once

#include "guchar/field.hpp"
#include "guchar/numeric.hpp"
#include "guchar/poset.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace guchar {

struct OracleBudgetExceeded : std::runtime_error {
  explicit OracleBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

using Vec = std::vector<uint16_t>;

struct Mat {
  unsigned n = 0;
  std::vector<uint16_t> a;  // row major
  uint16_t& at(unsigned i, unsigned j) { return a[i * n + j]; }
  uint16_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
  bool operator==(const Mat&) const = default;
  auto operator<=>(const Mat&) const = default;
};

// |GU(n,q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - (-1)^i)
Int gu_order(unsigned n, const Int& q);

// The general unitary group GU(n,q): invertible matrices over F_{q^2}
// preserving the form <u,v> = u A conj(v)^t, where conj is x -> x^q and A is
// the antidiagonal matrix with entries 1, -1, 1, ... from the top-right
// corner. Scaling A by a nonzero constant changes neither the isometry group
// nor which vectors pair to zero, so no generality is lost by fixing it.
//
// Construction enumerates the group by backtracking over rows with partial
// form constraints, verifies the count against the order formula, and builds
// the poset of nonzero proper totally isotropic subspaces together with the
// full action table.
class UnitaryGroup {
 public:
  UnitaryGroup(unsigned n, unsigned q, const Int& budget);

  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  const FieldTable& field() const { return field_; }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& gram() const { return gram_; }

  unsigned conj(unsigned x) const { return conj_[x]; }
  uint16_t form(const Vec& u, const Vec& v) const;
  Mat multiply(const Mat& a, const Mat& b) const;
  Mat identity() const;
  bool commute(const Mat& a, const Mat& b) const;
  unsigned element_order(const Mat& g) const;
  uint16_t det(const Mat& g) const;
  // coefficients of det(x I - g), constant first, monic of degree n
  std::vector<uint16_t> char_poly(const Mat& g) const;

  struct Subspace {
    unsigned dim = 0;
    std::vector<Vec> rows;  // reduced row echelon basis
    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;
  };
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Poset& poset() const { return poset_; }
  // image of subspace ui under right translation by element gi
  uint32_t act(uint32_t gi, uint32_t ui) const { return action_[gi][ui]; }

 private:
  unsigned n_ = 0, q_ = 0;
  FieldTable field_;
  std::vector<unsigned> conj_;
  Mat gram_;
  std::vector<Mat> elements_;
  std::vector<Subspace> subspaces_;
  Poset poset_{0};
  std::vector<std::vector<uint32_t>> action_;

  void enumerate_elements(const Int& budget);
  void build_subspaces();
  std::vector<Vec> rref(std::vector<Vec> rows) const;
  bool contains(const Subspace& big, const Subspace& small) const;
};

}  // namespace guchar
