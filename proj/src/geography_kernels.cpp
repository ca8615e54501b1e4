#include "fourman/geography_kernels.hpp"

#include "fourman/obstruction.hpp"


namespace fourman::kernels {

namespace {

constexpr const char* bk_verdict = "realized";

// LeBrun on M # Sd # k CP2b with c1^2(M) = floor(3n/2d) + 1 and chi_h(M) = m/d;
// b2+(M) = 2m/d - 1 must exceed 1 for the Seiberg-Witten invariant to be defined.
std::string free_action_verdict(const Integer& n, const Integer& m, const Integer& d, const Integer& k)
{
  Integer c1sq = floor_div(3 * n, 2 * d) + 1;
  return m >= 2 * d && 3 * k >= c1sq ? verdict::einstein_obstructed : verdict::none;
}

template <class Point>
std::vector<Point> merge(std::vector<std::vector<Point>>& rows)
{
  std::vector<Point> out;
  std::size_t total = 0;
  for (const auto& r : rows)
    total += r.size();
  out.reserve(total);
  for (auto& r : rows)
    for (auto& p : r)
      out.push_back(std::move(p));
  return out;
}

} // namespace

Integer free_action_k(const Integer& n, const Integer& d)
{
  return floor_div(3 * n, 2 * d) + 1 - n / d;
}

std::vector<BkPoint> bk_region_serial(const BkQuery& q)
{
  std::vector<BkPoint> out;
  for (Integer x = 1; x <= q.x_max; ++x)
    for (Integer y = 1; y <= q.y_max; ++y)
      if (bk_predicate(q.eps_prime, q.c, x, y))
        out.push_back({x, y, bk_verdict});
  return out;
}

std::vector<FreeActionPoint> free_action_region_serial(const GeographyQuery& q)
{
  std::vector<FreeActionPoint> out;
  for (Integer n = 1; n <= q.n_max; ++n) {
    for (Integer m = 1; m <= q.m_max; ++m) {
      if (!free_action_predicate(q, n, m))
        continue;
      Integer k = free_action_k(n, q.d);
      out.push_back({n, m, k, free_action_verdict(n, m, q.d, k)});
    }
  }
  return out;
}

std::vector<BkPoint> bk_region_parallel(const BkQuery& q)
{
  const long long rows = q.x_max < 1 ? 0 : to_ll(q.x_max);
  std::vector<std::vector<BkPoint>> buckets(static_cast<std::size_t>(rows));
  const Rational slope = 9 - q.eps_prime;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long r = 0; r < rows; ++r) {
    Integer x = r + 1;
    Integer top = floor(slope * x - q.c);
    if (top > q.y_max)
      top = q.y_max;
    auto& bucket = buckets[static_cast<std::size_t>(r)];
    for (Integer y = 1; y <= top; ++y)
      bucket.push_back({x, y, bk_verdict});
  }
  return merge<BkPoint>(buckets);
}

std::vector<FreeActionPoint> free_action_region_parallel(const GeographyQuery& q)
{
  const long long rows = q.n_max < 1 ? 0 : to_ll(q.n_max);
  std::vector<std::vector<FreeActionPoint>> buckets(static_cast<std::size_t>(rows));
  const Rational slope = 6 - q.epsilon;
  const Rational shift = q.n_eps();
#pragma omp parallel for schedule(dynamic, 16)
  for (long long r = 0; r < rows; ++r) {
    Integer n = r + 1;
    if (!divides(q.d, n) || slope <= 0)
      continue;
    // n < slope * m - shift  <=>  m > (n + shift) / slope
    Integer lo = floor((n + shift) / slope) + 1;
    if (lo < 1)
      lo = 1;
    Integer rem = mod_floor(lo, q.d);
    if (rem != 0)
      lo += q.d - rem;
    Integer k = free_action_k(n, q.d);
    auto& bucket = buckets[static_cast<std::size_t>(r)];
    for (Integer m = lo; m <= q.m_max; m += q.d)
      bucket.push_back({n, m, k, free_action_verdict(n, m, q.d, k)});
  }
  return merge<FreeActionPoint>(buckets);
}

} // namespace fourman::kernels
