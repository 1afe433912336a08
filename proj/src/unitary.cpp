#include "guchar/unitary.hpp"

#include "guchar/arith.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace guchar {

Int gu_order(unsigned n, const Int& q) {
  Int out = int_pow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) out *= int_pow(q, i) - (i % 2 ? Int(-1) : Int(1));
  return out;
}

namespace {

FieldTable quadratic_extension(unsigned q) {
  auto pp = prime_power(Int(q));
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (static_cast<unsigned long long>(q) * q > 65536)
    throw std::invalid_argument("q^2 exceeds the supported field size");
  return FieldTable(pp->first, 2 * pp->second);
}

struct Ticker {
  Int left;
  void spend(const Int& amount, const char* phase) {
    left -= amount;
    if (left < 0)
      throw OracleBudgetExceeded(std::string("oracle budget exhausted during ") + phase);
  }
};

}  // namespace

UnitaryGroup::UnitaryGroup(unsigned n, unsigned q, const Int& budget)
    : n_(n), q_(q), field_(quadratic_extension(q)) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  conj_.resize(field_.size());
  for (unsigned x = 0; x < field_.size(); ++x) conj_[x] = field_.pow(x, q_);
  gram_.n = n;
  gram_.a.assign(static_cast<size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    gram_.at(i, n - 1 - i) = static_cast<uint16_t>(i % 2 ? field_.neg(1) : 1);
  enumerate_elements(budget);
  build_subspaces();
}

uint16_t UnitaryGroup::form(const Vec& u, const Vec& v) const {
  unsigned acc = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (!u[i]) continue;
    for (unsigned j = 0; j < n_; ++j) {
      uint16_t a = gram_.at(i, j);
      if (!a) continue;
      acc = field_.add(acc, field_.mul(field_.mul(u[i], a), conj_[v[j]]));
    }
  }
  return static_cast<uint16_t>(acc);
}

Mat UnitaryGroup::multiply(const Mat& a, const Mat& b) const {
  Mat c;
  c.n = n_;
  c.a.assign(static_cast<size_t>(n_) * n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      uint16_t aik = a.at(i, k);
      if (!aik) continue;
      for (unsigned j = 0; j < n_; ++j)
        c.at(i, j) = static_cast<uint16_t>(field_.add(c.at(i, j), field_.mul(aik, b.at(k, j))));
    }
  return c;
}

Mat UnitaryGroup::identity() const {
  Mat e;
  e.n = n_;
  e.a.assign(static_cast<size_t>(n_) * n_, 0);
  for (unsigned i = 0; i < n_; ++i) e.at(i, i) = 1;
  return e;
}

bool UnitaryGroup::commute(const Mat& a, const Mat& b) const {
  return multiply(a, b) == multiply(b, a);
}

unsigned UnitaryGroup::element_order(const Mat& g) const {
  Mat e = identity();
  Mat cur = g;
  unsigned order = 1;
  while (!(cur == e)) {
    cur = multiply(cur, g);
    ++order;
    if (order > 4 * field_.size() * field_.size())
      throw std::logic_error("element order exceeds any possible exponent");
  }
  return order;
}

uint16_t UnitaryGroup::det(const Mat& g) const {
  Mat m = g;
  unsigned d = 1;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && !m.at(pivot, col)) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(m.a[pivot * n_ + j], m.a[col * n_ + j]);
      d = field_.neg(d);
    }
    d = field_.mul(d, m.at(col, col));
    unsigned inv = field_.inv(m.at(col, col));
    for (unsigned row = col + 1; row < n_; ++row) {
      uint16_t f = m.at(row, col);
      if (!f) continue;
      unsigned scale = field_.mul(f, inv);
      for (unsigned j = col; j < n_; ++j)
        m.at(row, j) = static_cast<uint16_t>(
            field_.sub(m.at(row, j), field_.mul(scale, m.at(col, j))));
    }
  }
  return static_cast<uint16_t>(d);
}

std::vector<uint16_t> UnitaryGroup::char_poly(const Mat& g) const {
  // Leibniz expansion of det(x I - g); fine for the small n in scope
  std::vector<uint16_t> acc(n_ + 1, 0);
  std::vector<unsigned> perm(n_);
  for (unsigned i = 0; i < n_; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    // permutation parity by counting inversions
    unsigned inversions = 0;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = i + 1; j < n_; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<uint16_t> term(1, 1);  // constant 1
    for (unsigned i = 0; i < n_; ++i) {
      // entry (i, perm[i]) of x I - g
      std::vector<uint16_t> entry;
      entry.push_back(static_cast<uint16_t>(field_.neg(g.at(i, perm[i]))));
      if (perm[i] == i) entry.push_back(1);
      std::vector<uint16_t> next(term.size() + entry.size() - 1, 0);
      for (size_t s = 0; s < term.size(); ++s)
        for (size_t t = 0; t < entry.size(); ++t)
          next[s + t] =
              static_cast<uint16_t>(field_.add(next[s + t], field_.mul(term[s], entry[t])));
      term = std::move(next);
    }
    for (size_t s = 0; s < term.size(); ++s) {
      uint16_t v = inversions % 2 ? static_cast<uint16_t>(field_.neg(term[s])) : term[s];
      acc[s] = static_cast<uint16_t>(field_.add(acc[s], v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

void UnitaryGroup::enumerate_elements(const Int& budget) {
  Ticker ticker{budget};
  const unsigned fs = field_.size();
  unsigned long long nvec = 1;
  for (unsigned i = 0; i < n_; ++i) nvec *= fs;

  std::vector<Vec> rows;
  std::vector<Vec> basis;           // row echelon form of rows
  std::vector<unsigned> pivots;     // pivot column of each basis vector
  std::vector<uint16_t> v(n_, 0);

  auto reduce = [&](Vec w) {
    for (size_t b = 0; b < basis.size(); ++b) {
      uint16_t lead = w[pivots[b]];
      if (!lead) continue;
      for (unsigned j = 0; j < n_; ++j)
        w[j] = static_cast<uint16_t>(field_.sub(w[j], field_.mul(lead, basis[b][j])));
    }
    return w;
  };

  std::function<void()> rec = [&]() {
    unsigned i = static_cast<unsigned>(rows.size());
    if (i == n_) {
      Mat g;
      g.n = n_;
      g.a.reserve(static_cast<size_t>(n_) * n_);
      for (const Vec& r : rows) g.a.insert(g.a.end(), r.begin(), r.end());
      elements_.push_back(std::move(g));
      return;
    }
    for (unsigned long long idx = 0; idx < nvec; ++idx) {
      ticker.spend(1, "group enumeration");
      unsigned long long t = idx;
      for (unsigned j = 0; j < n_; ++j) {
        v[j] = static_cast<uint16_t>(t % fs);
        t /= fs;
      }
      bool ok = form(v, v) == gram_.at(i, i);
      for (unsigned j = 0; ok && j < i; ++j) ok = form(v, rows[j]) == gram_.at(i, j);
      if (!ok) continue;
      Vec red = reduce(v);
      unsigned piv = n_;
      for (unsigned j = 0; j < n_; ++j)
        if (red[j]) {
          piv = j;
          break;
        }
      if (piv == n_) continue;  // dependent on earlier rows
      unsigned inv = field_.inv(red[piv]);
      for (unsigned j = 0; j < n_; ++j)
        red[j] = static_cast<uint16_t>(field_.mul(red[j], inv));
      rows.push_back(v);
      basis.push_back(red);
      pivots.push_back(piv);
      rec();
      rows.pop_back();
      basis.pop_back();
      pivots.pop_back();
    }
  };
  rec();

  Int expected = gu_order(n_, Int(q_));
  if (Int(elements_.size()) != expected)
    throw std::logic_error("group enumeration found " + std::to_string(elements_.size()) +
                           " elements, order formula gives " + int_str(expected));
}

std::vector<Vec> UnitaryGroup::rref(std::vector<Vec> rows) const {
  size_t rank = 0;
  for (unsigned col = 0; col < n_ && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    unsigned inv = field_.inv(rows[rank][col]);
    for (unsigned j = 0; j < n_; ++j)
      rows[rank][j] = static_cast<uint16_t>(field_.mul(rows[rank][j], inv));
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      uint16_t f = rows[r][col];
      if (!f) continue;
      for (unsigned j = 0; j < n_; ++j)
        rows[r][j] =
            static_cast<uint16_t>(field_.sub(rows[r][j], field_.mul(f, rows[rank][j])));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

bool UnitaryGroup::contains(const Subspace& big, const Subspace& small) const {
  for (const Vec& row : small.rows) {
    Vec w = row;
    for (const Vec& b : big.rows) {
      unsigned piv = n_;
      for (unsigned j = 0; j < n_; ++j)
        if (b[j]) {
          piv = j;
          break;
        }
      if (piv == n_) continue;
      uint16_t lead = w[piv];
      if (!lead) continue;
      for (unsigned j = 0; j < n_; ++j)
        w[j] = static_cast<uint16_t>(field_.sub(w[j], field_.mul(lead, b[j])));
    }
    for (unsigned j = 0; j < n_; ++j)
      if (w[j]) return false;
  }
  return true;
}

void UnitaryGroup::build_subspaces() {
  const unsigned fs = field_.size();
  unsigned long long nvec = 1;
  for (unsigned i = 0; i < n_; ++i) nvec *= fs;

  std::vector<Subspace> frontier;
  std::vector<Vec> all_vectors;
  all_vectors.reserve(nvec);
  for (unsigned long long idx = 1; idx < nvec; ++idx) {
    Vec v(n_);
    unsigned long long t = idx;
    for (unsigned j = 0; j < n_; ++j) {
      v[j] = static_cast<uint16_t>(t % fs);
      t /= fs;
    }
    all_vectors.push_back(std::move(v));
  }

  // dimension 1: isotropic lines through isotropic vectors
  for (const Vec& v : all_vectors) {
    if (form(v, v)) continue;
    Subspace s{1, rref({v})};
    frontier.push_back(std::move(s));
  }
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  subspaces_ = frontier;

  // extend while totally isotropic subspaces of the next dimension exist
  while (!frontier.empty() && frontier.front().dim + 1 < n_) {
    std::vector<Subspace> next;
    for (const Subspace& s : frontier) {
      for (const Vec& v : all_vectors) {
        if (form(v, v)) continue;
        bool ok = true;
        for (const Vec& row : s.rows)
          if (form(v, row) || form(row, v)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::vector<Vec> rows = s.rows;
        rows.push_back(v);
        rows = rref(rows);
        if (rows.size() != s.dim + 1) continue;  // v already inside
        next.push_back(Subspace{s.dim + 1, std::move(rows)});
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    subspaces_.insert(subspaces_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(subspaces_.begin(), subspaces_.end());

  poset_ = Poset(static_cast<unsigned>(subspaces_.size()));
  for (size_t i = 0; i < subspaces_.size(); ++i)
    for (size_t j = 0; j < subspaces_.size(); ++j)
      if (subspaces_[i].dim < subspaces_[j].dim && contains(subspaces_[j], subspaces_[i]))
        poset_.add_less(static_cast<unsigned>(i), static_cast<unsigned>(j));
  poset_.transitive_close();

  action_.assign(elements_.size(), {});
  for (size_t gi = 0; gi < elements_.size(); ++gi) {
    const Mat& g = elements_[gi];
    action_[gi].resize(subspaces_.size());
    for (size_t ui = 0; ui < subspaces_.size(); ++ui) {
      std::vector<Vec> rows;
      rows.reserve(subspaces_[ui].rows.size());
      for (const Vec& row : subspaces_[ui].rows) {
        Vec img(n_, 0);
        for (unsigned j = 0; j < n_; ++j) {
          unsigned acc = 0;
          for (unsigned i = 0; i < n_; ++i)
            acc = field_.add(acc, field_.mul(row[i], g.at(i, j)));
          img[j] = static_cast<uint16_t>(acc);
        }
        rows.push_back(std::move(img));
      }
      Subspace image{subspaces_[ui].dim, rref(rows)};
      auto it = std::lower_bound(subspaces_.begin(), subspaces_.end(), image);
      if (it == subspaces_.end() || !(*it == image))
        throw std::logic_error("group action does not preserve the isotropic subspaces");
      action_[gi][ui] = static_cast<uint32_t>(it - subspaces_.begin());
    }
  }
}

}  // namespace guchar
