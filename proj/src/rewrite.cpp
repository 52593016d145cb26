#include "homotower/rewrite.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace homotower {

Transversal schreier_transversal(const CosetTable& t) {
  int n = t.size();
  Transversal tr;
  tr.reps.resize(n);
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  seen[0] = 1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int g = 1; g <= t.ngens(); ++g)
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        int d = t.apply(c, l);
        if (!seen[d]) {
          seen[d] = 1;
          tr.reps[d] = concat(tr.reps[c], Word({l}));
          order.push_back(d);
        }
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("coset table is not transitive");
  return tr;
}

std::vector<SchreierGenerator> schreier_generators(const CosetTable& t,
                                                   const Transversal& tr) {
  std::vector<SchreierGenerator> out;
  for (int c = 0; c < t.size(); ++c)
    for (int g = 1; g <= t.ngens(); ++g) {
      int d = t.apply(c, g);
      Word w = concat(concat(tr.reps[c], Word({g})), invert(tr.reps[d]));
      if (!w.empty()) out.push_back({c, g, w});
    }
  return out;
}

RewriteResult rewrite_subgroup_presentation(const Presentation& p,
                                            const CosetTable& t) {
  if (t.ngens() != p.ngens())
    throw std::invalid_argument("coset table does not match the presentation");
  Transversal tr = schreier_transversal(t);
  RewriteResult res;
  res.generators = schreier_generators(t, tr);

  // Subgroup letter for each (coset, generator) edge; 0 on tree edges.
  std::vector<int> letter_of(static_cast<std::size_t>(t.size()) * p.ngens(), 0);
  std::vector<std::string> names;
  names.reserve(res.generators.size());
  for (std::size_t k = 0; k < res.generators.size(); ++k) {
    const SchreierGenerator& s = res.generators[k];
    letter_of[static_cast<std::size_t>(s.coset) * p.ngens() + s.gen - 1] =
        static_cast<int>(k + 1);
    names.push_back("x" + std::to_string(s.coset) + "_" + p.names[s.gen - 1]);
  }

  // The rewrite of reps[c] * w * reps[c]^-1 reads off, while tracing w
  // from c, the subgroup letter of each edge crossed (inverted when the
  // edge is crossed against its generator's direction).
  std::vector<Word> relators;
  for (const Word& w : p.relators)
    for (int c = 0; c < t.size(); ++c) {
      std::vector<Letter> out;
      int d = c;
      for (Letter l : w.letters()) {
        if (l > 0) {
          int k = letter_of[static_cast<std::size_t>(d) * p.ngens() + l - 1];
          if (k) out.push_back(k);
          d = t.apply(d, l);
        } else {
          int e = t.apply(d, l);
          int k = letter_of[static_cast<std::size_t>(e) * p.ngens() - l - 1];
          if (k) out.push_back(-k);
          d = e;
        }
      }
      relators.push_back(Word(std::move(out)));
    }
  res.raw_nrelators = static_cast<std::size_t>(t.size()) * p.relators.size();
  res.pres = make_presentation(std::move(names), std::move(relators));
  return res;
}

namespace {

// Booth's algorithm: index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[(k + i + 1) % n]) {
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

std::vector<Letter> rotated(const std::vector<Letter>& s, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out.push_back(s[(start + i) % s.size()]);
  return out;
}

// Least rotation of w or of its inverse; relators agreeing here are
// interchangeable as normal-closure generators.
std::vector<Letter> cyclic_canonical(const Word& w) {
  std::vector<Letter> a = rotated(w.letters(), least_rotation(w.letters()));
  std::vector<Letter> iv = invert(w).letters();
  std::vector<Letter> b = rotated(iv, least_rotation(iv));
  return std::min(a, b);
}

// Smallest generator occurring exactly once in r (necessarily with
// exponent +-1, since the word is reduced), or 0 if none.
int smallest_single_occurrence(const Word& r) {
  std::vector<int> idx;
  idx.reserve(r.size());
  for (Letter l : r.letters()) idx.push_back(std::abs(l));
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    if (j - i == 1) return idx[i];
    i = j;
  }
  return 0;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
  if (budget < 1) throw std::invalid_argument("tietze budget must be positive");
  std::vector<std::string> names = p.names;
  std::vector<char> alive(names.size(), 1);
  std::vector<Word> rels = p.relators;

  // Substituting a long word for an often-used generator can blow the
  // presentation up exponentially, so eliminations are only taken while
  // the predicted total relator length stays within a fixed budget.
  std::size_t total = 0;
  for (const Word& r : rels) total += r.size();
  const std::size_t length_limit = 2 * total + 1024;

  for (int pass = 0; pass < budget; ++pass) {
    bool changed = false;

    // Cyclic reduction, then empty/duplicate removal.
    std::vector<Word> kept;
    std::set<std::vector<Letter>> seen;
    for (const Word& r : rels) {
      Word core = cyclic_reduce(r).core;
      if (core.size() != r.size()) changed = true;
      if (core.empty()) {
        changed = true;
        continue;
      }
      if (!seen.insert(cyclic_canonical(core)).second) {
        changed = true;
        continue;
      }
      kept.push_back(std::move(core));
    }
    rels.swap(kept);

    // Eliminate generators with a single occurrence in some relator,
    // always taking the cheapest (relator length, relator index,
    // generator index) candidate first.  -1 marks a stale cache slot.
    std::vector<int> single(rels.size(), -1);
    std::vector<std::size_t> occ(names.size(), 0);
    total = 0;
    for (const Word& r : rels) {
      total += r.size();
      for (Letter l : r.letters()) ++occ[std::abs(l) - 1];
    }
    for (;;) {
      std::size_t best_r = rels.size();
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        if (single[ri] < 0) single[ri] = smallest_single_occurrence(rels[ri]);
        if (single[ri] == 0) continue;
        // Each of the other occurrences swells to len - 1 letters.
        const std::int64_t len = static_cast<std::int64_t>(rels[ri].size());
        const std::int64_t m =
            static_cast<std::int64_t>(occ[single[ri] - 1]) - 1;
        if (static_cast<std::int64_t>(total) - len + m * (len - 2) >
            static_cast<std::int64_t>(length_limit))
          continue;
        if (best_r == rels.size() || rels[ri].size() < rels[best_r].size())
          best_r = ri;
      }
      if (best_r == rels.size()) break;
      int g = single[best_r];

      const std::vector<Letter>& ls = rels[best_r].letters();
      std::size_t pos = 0;
      while (std::abs(ls[pos]) != g) ++pos;
      Word u(std::vector<Letter>(ls.begin(), ls.begin() + pos));
      Word v(std::vector<Letter>(ls.begin() + pos + 1, ls.end()));
      // u x v = 1 solves to x = u^-1 v^-1; u x^-1 v = 1 to x = v u.
      Word sub = ls[pos] > 0 ? concat(invert(u), invert(v)) : concat(v, u);
      Word sub_inv = invert(sub);

      std::vector<Word> next;
      std::vector<int> next_single;
      next.reserve(rels.size() - 1);
      next_single.reserve(rels.size() - 1);
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        bool touched = ri == best_r;
        if (!touched)
          for (Letter l : rels[ri].letters())
            if (std::abs(l) == g) {
              touched = true;
              break;
            }
        if (!touched) {
          next.push_back(std::move(rels[ri]));
          next_single.push_back(single[ri]);
          continue;
        }
        total -= rels[ri].size();
        for (Letter l : rels[ri].letters()) --occ[std::abs(l) - 1];
        if (ri == best_r) continue;
        std::vector<Letter> out;
        for (Letter l : rels[ri].letters()) {
          if (std::abs(l) != g) {
            out.push_back(l);
          } else {
            const Word& rep = l > 0 ? sub : sub_inv;
            out.insert(out.end(), rep.letters().begin(), rep.letters().end());
          }
        }
        Word w(std::move(out));
        total += w.size();
        for (Letter l : w.letters()) ++occ[std::abs(l) - 1];
        next.push_back(std::move(w));
        next_single.push_back(-1);
      }
      rels.swap(next);
      single.swap(next_single);
      alive[g - 1] = 0;
      changed = true;
    }

    if (!changed) break;
  }

  // Final compaction: dense renumbering of the surviving generators.
  std::vector<int> newnum(names.size(), 0);
  std::vector<std::string> survivors;
  for (std::size_t g = 0; g < names.size(); ++g)
    if (alive[g]) {
      survivors.push_back(names[g]);
      newnum[g] = static_cast<int>(survivors.size());
    }
  std::vector<Word> renumbered;
  renumbered.reserve(rels.size());
  for (const Word& r : rels) {
    std::vector<Letter> out;
    out.reserve(r.size());
    for (Letter l : r.letters()) {
      int nn = newnum[std::abs(l) - 1];
      out.push_back(l > 0 ? nn : -nn);
    }
    renumbered.push_back(Word(std::move(out)));
  }
  return make_presentation(std::move(survivors), std::move(renumbered));
}

}  // namespace homotower
