#include "homotower/baerq.hpp"

#include <stdexcept>

#include "homotower/abelian.hpp"
#include "homotower/exactlinalg.hpp"

namespace homotower {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("Baer correspondence needs an odd prime");
}

std::size_t wedge_dim(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// w += c * (a ^ b), the wedge expanded in (i, j) i<j coordinates.
void add_scaled_wedge(std::vector<std::uint32_t>& w, std::uint32_t c,
                      const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b, std::uint32_t p) {
  int n = static_cast<int>(a.size());
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      std::uint64_t coord =
          (static_cast<std::uint64_t>(a[i]) * b[j] +
           static_cast<std::uint64_t>(a[j]) * (p - b[i] % p)) %
          p;
      w[k] = static_cast<std::uint32_t>(
          (w[k] + c * coord) % p);
    }
}

}  // namespace

std::size_t wedge_index(int n, int i, int j) {
  if (!(0 <= i && i < j && j < n))
    throw std::invalid_argument("wedge index needs 0 <= i < j < n");
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
         (j - i - 1);
}

BaerElement baer_identity(std::uint32_t p, int n) {
  require_odd_prime(p);
  if (n < 0) throw std::invalid_argument("negative generator count");
  return {p, std::vector<std::uint32_t>(n, 0),
          std::vector<std::uint32_t>(wedge_dim(n), 0)};
}

BaerElement baer_generator(std::uint32_t p, int n, int k) {
  BaerElement e = baer_identity(p, n);
  if (k < 1 || k > n) throw std::invalid_argument("generator index out of range");
  e.v[k - 1] = 1;
  return e;
}

BaerElement baer_mul(const BaerElement& a, const BaerElement& b) {
  if (a.p != b.p || a.v.size() != b.v.size())
    throw std::invalid_argument("Baer elements from different groups");
  const std::uint32_t p = a.p;
  BaerElement out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = (a.v[i] + b.v[i]) % p;
  for (std::size_t k = 0; k < out.w.size(); ++k) out.w[k] = (a.w[k] + b.w[k]) % p;
  add_scaled_wedge(out.w, (p + 1) / 2, a.v, b.v, p);  // (p+1)/2 = 1/2 mod p
  return out;
}

BaerElement baer_inv(const BaerElement& a) {
  BaerElement out = a;
  for (auto& x : out.v) x = (a.p - x) % a.p;
  for (auto& x : out.w) x = (a.p - x) % a.p;
  return out;
}

BaerElement baer_eval(const Word& word, const std::vector<BaerElement>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  for (const BaerElement& e : images)
    if (e.p != images[0].p || e.v.size() != images[0].v.size())
      throw std::invalid_argument("Baer images from different groups");
  require_odd_prime(images[0].p);
  BaerElement acc =
      baer_identity(images[0].p, static_cast<int>(images[0].v.size()));
  for (Letter l : word.letters()) {
    std::size_t g = static_cast<std::size_t>(l > 0 ? l : -l);
    if (g > images.size())
      throw std::invalid_argument("word uses a generator with no image");
    acc = baer_mul(acc, l > 0 ? images[g - 1] : baer_inv(images[g - 1]));
  }
  return acc;
}

BaerQuotientReport class2_expp_quotient(const Presentation& pres,
                                        std::uint32_t p) {
  require_odd_prime(p);
  const int n = pres.ngens();
  const std::size_t nn = static_cast<std::size_t>(n);

  // The ideal generated by the relator images inside V + Lambda^2 V is
  // spanned by the images (v_k, w_k) plus the bracket rows
  // (0, v_k ^ e_j), and the latter span exactly 0 + (U ^ V) where
  // U = span{v_k}.  Splitting off that block,
  //
  //   dim ideal = dim(U ^ V) + dim span{(v_k, pi(w_k))}
  //
  // with pi : Lambda^2 V -> Lambda^2 (V/U) the induced projection, so
  // the wedge coordinates only ever need dim C(n - rank U, 2) instead
  // of C(n, 2).  That keeps the computation linear-algebra-small even
  // when the presentation has hundreds of generators.
  FpSpan linear(p, nn);
  std::vector<std::vector<std::uint32_t>> vparts;
  vparts.reserve(pres.relators.size());
  for (const Word& r : pres.relators) {
    std::vector<std::int64_t> ev = exponent_vector(r, n);
    std::vector<std::uint32_t> v(nn);
    for (std::size_t i = 0; i < nn; ++i)
      v[i] = static_cast<std::uint32_t>(((ev[i] % p) + p) % p);
    linear.insert(v);
    vparts.push_back(std::move(v));
  }
  const std::size_t u = linear.dim();

  // Fully reduce the echelon basis of U so each pivot coordinate is
  // expressed over the free coordinates alone.
  std::vector<std::vector<std::uint32_t>> rref = linear.rows();
  const std::vector<std::size_t>& piv = linear.pivots();
  for (std::size_t k = u; k-- > 0;)
    for (std::size_t r = 0; r < k; ++r) {
      std::uint32_t f = rref[r][piv[k]];
      if (f == 0) continue;
      for (std::size_t j = piv[k]; j < nn; ++j) {
        std::uint64_t x = rref[r][j] + static_cast<std::uint64_t>(p) -
                          static_cast<std::uint64_t>(f) * rref[k][j] % p;
        rref[r][j] = static_cast<std::uint32_t>(x % p);
      }
    }
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> in_pivots(nn, nn);
  for (std::size_t k = 0; k < u; ++k) in_pivots[piv[k]] = k;
  for (std::size_t j = 0; j < nn; ++j)
    if (in_pivots[j] == nn) free_cols.push_back(j);
  const std::size_t f = free_cols.size();
  const std::size_t qlam = f * (f > 0 ? f - 1 : 0) / 2;

  // expr[i] = coordinates of e_i's class in V/U over the free columns.
  std::vector<std::vector<std::uint32_t>> expr(nn,
                                               std::vector<std::uint32_t>(f, 0));
  for (std::size_t c = 0; c < f; ++c) expr[free_cols[c]][c] = 1;
  for (std::size_t j = 0; j < nn; ++j)
    if (in_pivots[j] != nn)
      for (std::size_t c = 0; c < f; ++c)
        expr[j][c] = (p - rref[in_pivots[j]][free_cols[c]]) % p;

  // Evaluate each relator with the wedge part tracked directly in
  // Lambda^2 (V/U): the projection commutes with the group law, so per
  // letter +-g it suffices to add 1/2 * (vq ^ +-expr[g]) and advance vq.
  const std::uint32_t inv2 = (p + 1) / 2;
  FpSpan span_q(p, nn + qlam);
  for (std::size_t k = 0; k < pres.relators.size(); ++k) {
    std::vector<std::uint32_t> vq(f, 0);
    std::vector<std::uint32_t> wq(qlam, 0);
    for (Letter l : pres.relators[k].letters()) {
      std::size_t g = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
      const std::uint32_t c = l > 0 ? inv2 : (p - inv2) % p;
      std::size_t idx = 0;
      for (std::size_t a = 0; a < f; ++a)
        for (std::size_t b = a + 1; b < f; ++b, ++idx) {
          std::uint64_t coord =
              (static_cast<std::uint64_t>(vq[a]) * expr[g][b] +
               static_cast<std::uint64_t>(vq[b]) * (p - expr[g][a]) % p) %
              p;
          wq[idx] = static_cast<std::uint32_t>((wq[idx] + c * coord) % p);
        }
      for (std::size_t a = 0; a < f; ++a)
        vq[a] = static_cast<std::uint32_t>(
            (vq[a] + static_cast<std::uint64_t>(
                         l > 0 ? expr[g][a] : (p - expr[g][a]) % p)) %
            p);
    }
    std::vector<std::uint32_t> row = vparts[k];
    row.insert(row.end(), wq.begin(), wq.end());
    span_q.insert(std::move(row));
  }

  const std::size_t wedge_u = u * (u > 0 ? u - 1 : 0) / 2 + u * (nn - u);
  const std::size_t dim = nn + wedge_dim(n);
  BaerQuotientReport rep;
  rep.p = p;
  rep.n = n;
  rep.dim_total = static_cast<int>(dim - wedge_u - span_q.dim());
  rep.dim_linear = static_cast<int>(nn - u);
  rep.elementary_abelian = rep.dim_total == rep.dim_linear;
  return rep;
}

ExpPCertificate certify_expp_elementary(const Presentation& pres,
                                        std::uint32_t p) {
  BaerQuotientReport rep = class2_expp_quotient(pres, p);
  return {rep.elementary_abelian, rep.dim_linear, p == 3};
}

}  // namespace homotower
