#pragma once

#include <cstdint>
#include <vector>

namespace guchar {

// Arithmetic for F_{p^k}, p^k <= 2^16. Elements are the indices 0..p^k-1;
// index sum_i c_i p^i stands for the residue sum_i c_i t^i modulo the chosen
// irreducible. The modulus is the monic irreducible of degree k whose index
// encoding is least, so all tables are deterministic. Multiplication uses
// log/antilog tables with respect to a fixed generator; addition works on
// base-p digits. Small fields additionally get full table lookups.
//
// The constructor self-checks the axioms (fully for small sizes, sampled
// above that) and throws std::runtime_error on any violation.
class FieldTable {
 public:
  FieldTable(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned size() const { return size_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;  // a != 0
  unsigned pow(unsigned a, unsigned long long e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  unsigned generator() const { return gen_; }
  // k+1 base-p digits, constant first, leading digit 1
  const std::vector<unsigned>& modulus() const { return modulus_; }

 private:
  unsigned p_ = 0, k_ = 0, size_ = 0, gen_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<uint32_t> log_, alog_;
  std::vector<uint16_t> add_table_, mul_table_;  // filled for size <= 256
  bool tables_ = false;

  unsigned add_digits(unsigned a, unsigned b) const;
  void self_check() const;
};

}  // namespace guchar
