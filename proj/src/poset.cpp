#include "guchar/poset.hpp"

#include <stdexcept>

namespace guchar {

Poset::Poset(unsigned size) : n_(size), lt_(static_cast<size_t>(size) * size, 0) {}

void Poset::add_less(unsigned a, unsigned b) {
  if (a >= n_ || b >= n_) throw std::out_of_range("poset element out of range");
  if (a == b) throw std::invalid_argument("strict order is irreflexive");
  lt_[a * n_ + b] = 1;
}

void Poset::transitive_close() {
  for (unsigned k = 0; k < n_; ++k)
    for (unsigned i = 0; i < n_; ++i) {
      if (!lt_[i * n_ + k]) continue;
      for (unsigned j = 0; j < n_; ++j)
        if (lt_[k * n_ + j]) lt_[i * n_ + j] = 1;
    }
  for (unsigned i = 0; i < n_; ++i)
    if (lt_[i * n_ + i]) throw std::invalid_argument("relation has a cycle");
}

long long Poset::reduced_euler() const {
  // below[v] = sum over chains with top v of (-1)^{length+1}; processing in
  // topological order makes each value depend only on finished ones
  std::vector<long long> below(n_, 0);
  long long total = -1;
  std::vector<unsigned> topo;
  std::vector<char> placed(n_, 0);
  while (topo.size() < n_) {
    bool progressed = false;
    for (unsigned v = 0; v < n_; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (unsigned u = 0; u < n_; ++u)
        if (lt_[u * n_ + v] && !placed[u]) {
          ready = false;
          break;
        }
      if (!ready) continue;
      placed[v] = 1;
      topo.push_back(v);
      progressed = true;
    }
    if (!progressed) throw std::logic_error("order relation is not acyclic");
  }
  for (unsigned v : topo) {
    long long s = 1;  // the chain {v} alone, sign (-1)^{1+1}
    for (unsigned u = 0; u < n_; ++u)
      if (lt_[u * n_ + v]) s -= below[u];
    below[v] = s;
    total += s;
  }
  return total;
}

long long Poset::reduced_euler(const std::vector<uint32_t>& subset) const {
  return induced(subset).reduced_euler();
}

Poset Poset::induced(const std::vector<uint32_t>& subset) const {
  Poset out(static_cast<unsigned>(subset.size()));
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < subset.size(); ++j)
      if (i != j && less(subset[i], subset[j])) out.lt_[i * out.n_ + j] = 1;
  return out;
}

Poset Poset::join(const Poset& a, const Poset& b) {
  Poset out(a.n_ + b.n_);
  for (unsigned i = 0; i < a.n_; ++i)
    for (unsigned j = 0; j < a.n_; ++j)
      if (a.lt_[i * a.n_ + j]) out.lt_[i * out.n_ + j] = 1;
  for (unsigned i = 0; i < b.n_; ++i)
    for (unsigned j = 0; j < b.n_; ++j)
      if (b.lt_[i * b.n_ + j]) out.lt_[(a.n_ + i) * out.n_ + (a.n_ + j)] = 1;
  for (unsigned i = 0; i < a.n_; ++i)
    for (unsigned j = 0; j < b.n_; ++j) out.lt_[i * out.n_ + (a.n_ + j)] = 1;
  return out;
}

Poset Poset::product(const Poset& a, const Poset& b) {
  Poset out(a.n_ * b.n_);
  auto le = [](const Poset& p, unsigned x, unsigned y) { return x == y || p.less(x, y); };
  for (unsigned i1 = 0; i1 < a.n_; ++i1)
    for (unsigned j1 = 0; j1 < b.n_; ++j1)
      for (unsigned i2 = 0; i2 < a.n_; ++i2)
        for (unsigned j2 = 0; j2 < b.n_; ++j2) {
          unsigned x = i1 * b.n_ + j1, y = i2 * b.n_ + j2;
          if (x != y && le(a, i1, i2) && le(b, j1, j2)) out.lt_[x * out.n_ + y] = 1;
        }
  return out;
}

Poset Poset::with_least() const {
  Poset out(n_ + 1);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (lt_[i * n_ + j]) out.lt_[i * out.n_ + j] = 1;
  for (unsigned j = 0; j < n_; ++j) out.lt_[n_ * out.n_ + j] = 1;
  return out;
}

Poset Poset::remove_element(unsigned idx) const {
  if (idx >= n_) throw std::out_of_range("poset element out of range");
  std::vector<uint32_t> keep;
  for (unsigned i = 0; i < n_; ++i)
    if (i != idx) keep.push_back(i);
  return induced(keep);
}

std::optional<unsigned> Poset::least() const {
  for (unsigned v = 0; v < n_; ++v) {
    bool ok = true;
    for (unsigned u = 0; u < n_; ++u)
      if (u != v && !lt_[v * n_ + u]) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::nullopt;
}

}  // namespace guchar
