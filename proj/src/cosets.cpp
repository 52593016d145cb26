#include "homotower/cosets.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

#include "homotower/errors.hpp"

namespace homotower {

namespace {

// Signed letters are packed into table columns: generator g occupies
// column 2*(g-1), its inverse the column next to it, so `col ^ 1` is
// always the inverse letter's column.
int column_of(Letter l) {
  return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
}

std::vector<int> columns_of(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (Letter l : w.letters()) cols.push_back(column_of(l));
  return cols;
}

// Partial coset table used during HLT enumeration.  Rows are cosets
// (-1 marks an undefined entry); coincident cosets are tracked with a
// union-find whose class representative is always the smallest member,
// so coset 0 -- the subgroup -- is never replaced.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
             std::size_t cap)
      : ncols_(2 * p.ngens()), cap_(cap) {
    for (const Word& r : p.relators) relators_.push_back(columns_of(r));
    for (const Word& w : subgroup_gens) subgens_.push_back(columns_of(w));
  }

  CosetTable run(const Presentation& p, const std::vector<Word>& subgroup_gens);

 private:
  int& entry(int coset, int col) {
    return table_[static_cast<std::size_t>(coset) * ncols_ + col];
  }

  int rep(int k) {
    while (parent_[k] != k) {
      parent_[k] = parent_[parent_[k]];
      k = parent_[k];
    }
    return k;
  }

  int alloc_row() {
    if (nalloc_ >= cap_) {
      throw ResourceLimitError("coset enumeration exceeded cap of " +
                               std::to_string(cap_) + " cosets");
    }
    table_.resize(table_.size() + ncols_, -1);
    parent_.push_back(static_cast<int>(nalloc_));
    ++nalloc_;
    ++nlive_;
    return static_cast<int>(nalloc_ - 1);
  }

  void define(int from, int col) {
    int nu = alloc_row();
    entry(from, col) = nu;
    entry(nu, col ^ 1) = from;
  }

  void merge(int a, int b, std::vector<int>& dead_queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --nlive_;
    dead_queue.push_back(b);
  }

  // Replaces a pair of coincident cosets by their representative,
  // transplanting the dead rows' entries and chasing any further
  // coincidences that transplanting uncovers.
  void coincidence(int a, int b) {
    std::vector<int> dead;
    merge(a, b, dead);
    for (std::size_t t = 0; t < dead.size(); ++t) {
      int gamma = dead[t];
      for (int col = 0; col < ncols_; ++col) {
        int delta = entry(gamma, col);
        if (delta < 0) continue;
        if (entry(delta, col ^ 1) == gamma) entry(delta, col ^ 1) = -1;
        int mu = rep(gamma);
        int nu = rep(delta);
        int mu_img = entry(mu, col);
        int nu_pre = entry(nu, col ^ 1);
        if (mu_img >= 0) {
          merge(nu, mu_img, dead);
        } else if (nu_pre >= 0) {
          merge(mu, nu_pre, dead);
        } else {
          entry(mu, col) = nu;
          entry(nu, col ^ 1) = mu;
        }
      }
    }
  }

  // Traces w both ways from alpha.  A completed trace that closes on
  // two distinct cosets is a coincidence; a gap of one letter is filled
  // as a deduction; with `fill` set, wider gaps are bridged by defining
  // new cosets, otherwise the scan is abandoned.
  void scan(int alpha, const std::vector<int>& w, bool fill) {
    int f = alpha;
    int b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && entry(f, w[i]) >= 0) f = entry(f, w[i]), ++i;
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1) >= 0) b = entry(b, w[j - 1] ^ 1), --j;
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, w[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Scan-only pass over the whole table: finds coincidences that are
  // already implied without defining anything, so a following
  // compaction can reclaim rows.
  void lookahead() {
    for (std::size_t beta = 0; beta < nalloc_; ++beta) {
      int c = static_cast<int>(beta);
      if (rep(c) != c) continue;
      for (const auto& w : relators_) {
        scan(c, w, false);
        if (rep(c) != c) break;
      }
    }
  }

  // Renumbers live cosets consecutively, preserving their order, and
  // returns the new index of `follow` (or -1).
  int compact(int follow) {
    std::vector<int> newidx(nalloc_, -1);
    int m = 0;
    for (std::size_t i = 0; i < nalloc_; ++i) {
      if (rep(static_cast<int>(i)) == static_cast<int>(i))
        newidx[i] = m++;
    }
    std::vector<int> fresh(static_cast<std::size_t>(m) * ncols_, -1);
    for (std::size_t i = 0; i < nalloc_; ++i) {
      if (newidx[i] < 0) continue;
      for (int col = 0; col < ncols_; ++col) {
        int e = entry(static_cast<int>(i), col);
        fresh[static_cast<std::size_t>(newidx[i]) * ncols_ + col] =
            e < 0 ? -1 : newidx[rep(e)];
      }
    }
    table_.swap(fresh);
    nalloc_ = static_cast<std::size_t>(m);
    nlive_ = nalloc_;
    parent_.assign(nalloc_, 0);
    std::iota(parent_.begin(), parent_.end(), 0);
    return follow < 0 ? -1 : newidx[rep(follow)];
  }

  int ncols_;
  std::size_t cap_;
  std::vector<std::vector<int>> relators_, subgens_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::size_t nalloc_ = 0;
  std::size_t nlive_ = 0;
};

CosetTable Enumerator::run(const Presentation& p,
                           const std::vector<Word>& subgroup_gens) {
  std::size_t soft_limit = std::max<std::size_t>(2, cap_ - cap_ / 4);
  alloc_row();
  for (const auto& w : subgens_) scan(0, w, true);
  for (std::size_t beta = 0; beta < nalloc_; ++beta) {
    int c = static_cast<int>(beta);
    if (rep(c) != c) continue;
    if (nalloc_ >= soft_limit) {
      lookahead();
      c = compact(c);
      beta = static_cast<std::size_t>(c);
      soft_limit = std::min(
          cap_, nalloc_ + std::max<std::size_t>(1024, (cap_ - nalloc_) / 2));
    }
    bool died = false;
    for (const auto& w : relators_) {
      scan(c, w, true);
      if (rep(c) != c) {
        died = true;
        break;
      }
    }
    if (died) continue;
    for (int col = 0; col < ncols_; ++col)
      if (entry(c, col) < 0) define(c, col);
  }
  compact(-1);

  int n = static_cast<int>(nalloc_);
  std::vector<std::vector<int>> fwd(ncols_ / 2, std::vector<int>(n));
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < ncols_ / 2; ++g) {
      int e = entry(c, 2 * g);
      if (e < 0)
        throw std::logic_error("coset enumeration left an undefined entry");
      fwd[g][c] = e;
    }
  CosetTable t(ncols_ / 2, std::move(fwd));
  if (!is_valid_table(p, t, subgroup_gens))
    throw std::logic_error("coset enumeration produced an invalid table");
  return standardize(t);
}

}  // namespace

CosetTable::CosetTable(int ngens, std::vector<std::vector<int>> forward)
    : ngens_(ngens), fwd_(std::move(forward)) {
  if (ngens < 0 || fwd_.size() != static_cast<std::size_t>(ngens))
    throw std::invalid_argument("coset table needs one permutation per generator");
  std::size_t n = fwd_.empty() ? 0 : fwd_[0].size();
  bwd_.assign(fwd_.size(), std::vector<int>(n, -1));
  for (std::size_t g = 0; g < fwd_.size(); ++g) {
    if (fwd_[g].size() != n)
      throw std::invalid_argument("coset table rows differ in length");
    for (std::size_t c = 0; c < n; ++c) {
      int img = fwd_[g][c];
      if (img < 0 || static_cast<std::size_t>(img) >= n || bwd_[g][img] != -1)
        throw std::invalid_argument("generator action is not a permutation");
      bwd_[g][img] = static_cast<int>(c);
    }
  }
}

CosetTable table_from_phom(const Presentation& p, const PHom& h,
                           std::size_t coset_cap) {
  if (h.images.size() != static_cast<std::size_t>(p.ngens()))
    throw std::invalid_argument("quotient images do not match the presentation");
  for (const auto& im : h.images) {
    if (im.size() != h.rank)
      throw std::invalid_argument("quotient image has wrong length");
    for (std::uint32_t x : im)
      if (x >= h.p) throw std::invalid_argument("quotient image entry out of range");
  }
  const int r = static_cast<int>(h.rank);
  std::size_t n = 1;
  for (int i = 0; i < r; ++i) {
    if (n > coset_cap / h.p)
      throw ResourceLimitError("kernel index p^rank exceeds cap of " +
                               std::to_string(coset_cap) + " cosets");
    n *= h.p;
  }

  // Cosets are the vectors of F_p^rank in lexicographic order, so the
  // vector v sits at index sum(v[i] * p^(rank-1-i)) and generator g
  // translates by its image.
  std::vector<std::vector<int>> fwd(p.ngens(), std::vector<int>(n));
  std::vector<std::uint32_t> v(h.rank, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (int g = 0; g < p.ngens(); ++g) {
      std::size_t target = 0;
      for (int i = 0; i < r; ++i)
        target = target * h.p + (v[i] + h.images[g][i]) % h.p;
      fwd[g][idx] = static_cast<int>(target);
    }
    for (int i = r - 1; i >= 0; --i) {
      if (++v[i] < h.p) break;
      v[i] = 0;
    }
  }
  return CosetTable(p.ngens(), std::move(fwd));
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("coset cap must be positive");
  for (const Word& w : subgroup_gens)
    if (w.max_letter() > p.ngens())
      throw std::invalid_argument("subgroup generator uses an unknown generator");
  Enumerator e(p, subgroup_gens, cap);
  return e.run(p, subgroup_gens);
}

int trace(const CosetTable& t, int start, const Word& w) {
  if (start < 0 || start >= t.size())
    throw std::invalid_argument("trace start is not a coset");
  int c = start;
  for (Letter l : w.letters()) c = t.apply(c, l);
  return c;
}

CosetTable standardize(const CosetTable& t) {
  int n = t.size();
  std::vector<int> newidx(n, -1);
  std::vector<int> order;
  order.reserve(n);
  newidx[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int g = 1; g <= t.ngens(); ++g)
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        int d = t.apply(c, l);
        if (newidx[d] < 0) {
          newidx[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("coset table is not transitive");
  std::vector<std::vector<int>> fwd(t.ngens(), std::vector<int>(n));
  for (int g = 1; g <= t.ngens(); ++g)
    for (int c = 0; c < n; ++c)
      fwd[g - 1][newidx[c]] = newidx[t.permutation(g)[c]];
  return CosetTable(t.ngens(), std::move(fwd));
}

bool is_valid_table(const Presentation& p, const CosetTable& t,
                    const std::vector<Word>& subgroup_gens) {
  if (t.ngens() != p.ngens() || t.size() == 0) return false;
  for (const Word& r : p.relators)
    for (int c = 0; c < t.size(); ++c)
      if (trace(t, c, r) != c) return false;
  for (const Word& w : subgroup_gens)
    if (trace(t, 0, w) != 0) return false;
  std::vector<int> seen(t.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int g = 1; g <= t.ngens(); ++g)
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        int d = t.apply(c, l);
        if (!seen[d]) {
          seen[d] = 1;
          ++reached;
          stack.push_back(d);
        }
      }
  }
  return reached == t.size();
}

}  // namespace homotower
