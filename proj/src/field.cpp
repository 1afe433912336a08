#include "guchar/field.hpp"

#include <stdexcept>
#include <string>

namespace guchar {

namespace {

bool prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// polynomial arithmetic on index encodings: digits base p are coefficients
std::vector<unsigned> digits_of(unsigned v, unsigned p, unsigned len) {
  std::vector<unsigned> d(len);
  for (unsigned i = 0; i < len && v; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

// product of two residues modulo the degree-k polynomial `mod` (monic,
// constant digit first, length k+1), all over F_p
unsigned mul_mod(unsigned a, unsigned b, const std::vector<unsigned>& mod, unsigned p,
                 unsigned k) {
  std::vector<unsigned> da = digits_of(a, p, k), db = digits_of(b, p, k);
  std::vector<unsigned> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
    unsigned c = prod[deg];
    if (!c) continue;
    prod[deg] = 0;
    for (unsigned i = 0; i < k; ++i) {
      unsigned sub = (c * mod[i]) % p;
      prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
    }
  }
  unsigned out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

// roots in F_p betray reducibility only for k <= 3; use full trial division
bool irreducible(const std::vector<unsigned>& mod, unsigned p, unsigned k) {
  // trial divide by every monic polynomial of degree 1..k/2 over F_p
  for (unsigned deg = 1; 2 * deg <= k; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      std::vector<unsigned> div = digits_of(idx, p, deg + 1);
      div[deg] = 1;
      // long division of mod by div, checking the remainder
      std::vector<unsigned> rem(mod);
      for (unsigned d = k; d >= deg; --d) {
        unsigned c = rem[d];
        if (!c) continue;
        for (unsigned i = 0; i <= deg; ++i)
          rem[d - deg + i] = (rem[d - deg + i] + p - (c * div[i]) % p) % p;
        if (rem[d]) throw std::logic_error("division failed to cancel the leading term");
        if (d == deg) break;
      }
      bool zero = true;
      for (unsigned i = 0; i < deg; ++i)
        if (rem[i]) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FieldTable::FieldTable(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!prime(p)) throw std::runtime_error("field characteristic must be prime");
  if (k == 0) throw std::runtime_error("field degree must be >= 1");
  unsigned long long sz = 1;
  for (unsigned i = 0; i < k; ++i) {
    sz *= p;
    if (sz > 65536) throw std::runtime_error("field size exceeds 2^16");
  }
  size_ = static_cast<unsigned>(sz);

  // least monic irreducible of degree k, by index encoding
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  if (k == 1) {
    // residues are plain F_p; modulus t + 0 would allow index 0 only, use t
    // itself: digits (0, 1)
  } else {
    unsigned count = size_;  // p^k choices of lower digits
    bool found = false;
    for (unsigned idx = 0; idx < count; ++idx) {
      std::vector<unsigned> cand = digits_of(idx, p, k + 1);
      cand[k] = 1;
      if (irreducible(cand, p, k)) {
        modulus_ = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("no irreducible polynomial found");
  }

  // discrete logs with respect to the least generator
  log_.assign(size_, 0);
  alog_.assign(size_ - 1, 0);
  auto mul_raw = [&](unsigned a, unsigned b) {
    if (k_ == 1) return (a * b) % p_;
    return mul_mod(a, b, modulus_, p_, k_);
  };
  unsigned order = size_ - 1;
  std::vector<unsigned> prime_factors;
  {
    unsigned m = order;
    for (unsigned d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
        m /= d;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  auto pow_raw = [&](unsigned a, unsigned e) {
    unsigned out = 1;
    while (e) {
      if (e & 1) out = mul_raw(out, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return out;
  };
  gen_ = 0;
  for (unsigned g = 1; g < size_; ++g) {
    bool primitive = true;
    for (unsigned f : prime_factors)
      if (pow_raw(g, order / f) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw std::runtime_error("no generator found");
  unsigned v = 1;
  for (unsigned e = 0; e < order; ++e) {
    alog_[e] = v;
    log_[v] = e;
    v = mul_raw(v, gen_);
  }
  if (v != 1) throw std::runtime_error("generator order mismatch");

  if (size_ <= 256) {
    add_table_.assign(static_cast<size_t>(size_) * size_, 0);
    mul_table_.assign(static_cast<size_t>(size_) * size_, 0);
    for (unsigned a = 0; a < size_; ++a)
      for (unsigned b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = static_cast<uint16_t>(add_digits(a, b));
        mul_table_[a * size_ + b] = static_cast<uint16_t>(mul_raw(a, b));
      }
    tables_ = true;
  }
  self_check();
}

unsigned FieldTable::add_digits(unsigned a, unsigned b) const {
  unsigned out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

unsigned FieldTable::add(unsigned a, unsigned b) const {
  if (tables_) return add_table_[a * size_ + b];
  return add_digits(a, b);
}

unsigned FieldTable::neg(unsigned a) const {
  unsigned out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned d = a % p_;
    out += (d ? p_ - d : 0) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

unsigned FieldTable::mul(unsigned a, unsigned b) const {
  if (tables_) return mul_table_[a * size_ + b];
  if (a == 0 || b == 0) return 0;
  unsigned order = size_ - 1;
  return alog_[(log_[a] + log_[b]) % order];
}

unsigned FieldTable::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  unsigned order = size_ - 1;
  return alog_[(order - log_[a]) % order];
}

unsigned FieldTable::pow(unsigned a, unsigned long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    return 0;
  }
  unsigned order = size_ - 1;
  unsigned long long le = (static_cast<unsigned long long>(log_[a]) * (e % order)) % order;
  return alog_[static_cast<unsigned>(le)];
}

void FieldTable::self_check() const {
  unsigned stride = size_ <= 64 ? 1 : size_ / 61;
  if (stride == 0) stride = 1;
  auto fail = [](const std::string& what) {
    throw std::runtime_error("field self-check failed: " + what);
  };
  if (add(0, 1) != 1 || mul(1, 1) != 1) fail("identity");
  for (unsigned a = 0; a < size_; a += stride) {
    if (add(a, neg(a)) != 0) fail("negation");
    if (a && mul(a, inv(a)) != 1) fail("inversion");
    if (mul(a, 0) != 0) fail("zero product");
    for (unsigned b = 0; b < size_; b += stride) {
      if (add(a, b) != add(b, a)) fail("commutative addition");
      if (mul(a, b) != mul(b, a)) fail("commutative multiplication");
      for (unsigned c = 0; c < size_; c += stride) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("associative addition");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associative multiplication");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
  // Frobenius is additive and fixes exactly the prime field elements 0..p-1
  // only for k = 1; in general it fixes a subfield of size p
  unsigned fixed = 0;
  for (unsigned a = 0; a < size_; ++a) {
    if (frobenius(a) == a) ++fixed;
    if (frobenius(add(a, 1)) != add(frobenius(a), 1)) fail("Frobenius additivity");
  }
  if (fixed != p_) fail("Frobenius fixed field");
}

}  // namespace guchar
