#include "isocount/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "isocount/numtheory.hpp"

namespace isocount::analytic {

DavenportResult davenport_count(const Region& r) {
  if (r.dim == 0 || r.bbox.size() != r.dim)
    throw std::domain_error("davenport_count: malformed region");
  // integer ranges per axis
  std::vector<long> lo(r.dim), hi(r.dim);
  for (unsigned i = 0; i < r.dim; ++i) {
    mpz_class l, h;
    mpz_cdiv_q(l.get_mpz_t(), r.bbox[i].first.get_num().get_mpz_t(),
               r.bbox[i].first.get_den().get_mpz_t());
    mpz_fdiv_q(h.get_mpz_t(), r.bbox[i].second.get_num().get_mpz_t(),
               r.bbox[i].second.get_den().get_mpz_t());
    if (!l.fits_slong_p() || !h.fits_slong_p())
      throw std::domain_error("davenport_count: bounding box too large");
    lo[i] = l.get_si();
    hi[i] = h.get_si();
  }
  long long count = 0;
  std::vector<mpq_class> pt(r.dim);
  std::vector<long> idx(r.dim);
  for (unsigned i = 0; i < r.dim; ++i) idx[i] = lo[i];
  bool done = false;
  for (unsigned i = 0; i < r.dim; ++i)
    if (lo[i] > hi[i]) done = true;
  while (!done) {
    for (unsigned i = 0; i < r.dim; ++i) pt[i] = idx[i];
    if (r.contains(pt)) ++count;
    unsigned i = 0;
    while (i < r.dim) {
      if (++idx[i] <= hi[i]) break;
      idx[i] = lo[i];
      ++i;
    }
    if (i == r.dim) done = true;
  }
  double bound = std::pow(static_cast<double>(r.h), static_cast<double>(r.dim));  // m=0 term
  for (unsigned m = 1; m < r.dim; ++m) {
    double vm = m - 1 < r.proj_volumes.size() ? r.proj_volumes[m - 1] : 0.0;
    bound += std::pow(static_cast<double>(r.h), static_cast<double>(r.dim - m)) * vm;
  }
  DavenportResult res{count, r.volume, bound};
  if (std::abs(static_cast<double>(count) - r.volume) > bound + 1e-9)
    throw std::logic_error("davenport_count: bound violated (region data inconsistent)");
  return res;
}

u64 summatory_b4(u64 T) {
  if (T < 1) throw std::domain_error("summatory_b4: T must be >= 1");
  std::vector<std::uint8_t> comp(T + 1, 0);
  for (u64 i = 2; i * i <= T; ++i)
    if (!comp[i])
      for (u64 j = i * i; j <= T; j += i) comp[j] = 1;
  // multiplicative marking: each prime p = 1 mod 4 contributes 4k+1 at v_p = k
  std::vector<std::uint32_t> f(T + 1, 1);
  for (u64 p = 5; p <= T; p += 4) {
    if (comp[p]) continue;
    u64 k = 1;
    for (u64 q = p; q <= T; ) {
      for (u64 nmul = q; nmul <= T; nmul += q)
        if ((nmul / q) % p != 0) f[nmul] *= static_cast<std::uint32_t>(4 * k + 1);
      if (q > T / p) break;
      q *= p;
      ++k;
    }
  }
  u64 s = 0;
  for (u64 n = 1; n <= T; ++n) s += f[n];
  return s;
}

GrowthFit fit_growth(std::span<const std::pair<double, double>> samples,
                     std::span<const int> beta_candidates) {
  if (samples.size() < 4)
    throw std::domain_error("fit_growth: need >= 4 samples");
  double xmin = samples[0].first, xmax = samples[0].first;
  for (auto& [x, y] : samples) {
    if (y <= 0) throw std::domain_error("fit_growth: counts must be positive");
    if (x <= 1) throw std::domain_error("fit_growth: X values must exceed 1");
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  if (std::log10(xmax) - std::log10(xmin) < 3.0 - 1e-9)
    throw std::domain_error("fit_growth: X values must span >= 3 decades");
  if (beta_candidates.empty())
    throw std::domain_error("fit_growth: no beta candidates");
  GrowthFit best;
  bool first = true;
  for (int beta : beta_candidates) {
    // least squares: z_i = log y_i - beta log log x_i = log c + alpha log x_i
    double su = 0, sz = 0, suu = 0, suz = 0;
    const double n = static_cast<double>(samples.size());
    for (auto& [x, y] : samples) {
      double u = std::log(x);
      double z = std::log(y) - beta * std::log(std::log(x));
      su += u;
      sz += z;
      suu += u * u;
      suz += u * z;
    }
    double denom = n * suu - su * su;
    double alpha = (n * suz - su * sz) / denom;
    double logc = (sz - alpha * su) / n;
    double res = 0;
    for (auto& [x, y] : samples) {
      double u = std::log(x);
      double z = std::log(y) - beta * std::log(std::log(x));
      double e = z - (logc + alpha * u);
      res += e * e;
    }
    if (first || res < best.residual) {
      best = GrowthFit{alpha, beta, std::exp(logc), res};
      first = false;
    }
  }
  return best;
}

}  // namespace isocount::analytic
