#include "exotica/diophantine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "exotica/error.hpp"

namespace exotica {

namespace {

long deg_or(const UniPoly& p, long fallback) {
  auto d = p.degree();
  return d ? static_cast<long>(*d) : fallback;
}

}  // namespace

AbcReport mason_verify(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
  if (!(a + b + c).is_zero()) throw Error(ErrorCode::kSumNonzero, "a + b + c != 0");
  if (a.is_constant() && b.is_constant() && c.is_constant())
    throw Error(ErrorCode::kAllConstant, "a, b, c are all constant");
  UniPoly g = uni_gcd(a, b);
  if (!g.is_constant())
    throw Error(ErrorCode::kCommonFactor, "gcd(a, b) = " + g.to_string() + " != 1");

  AbcReport r;
  r.max_deg = std::max({deg_or(a, 0), deg_or(b, 0), deg_or(c, 0)});
  r.d0_abc = static_cast<long>(distinct_root_count(a * b * c));
  r.holds = r.max_deg <= r.d0_abc - 1;
  r.tight = r.max_deg == r.d0_abc - 1;
  return r;
}

DavenportReport davenport_verify(const UniPoly& x, const UniPoly& y, long k, long l) {
  if (k < 1 || l < 1) throw Error(ErrorCode::kInvalidArgument, "exponents must be positive");
  if (std::gcd(k, l) != 1) throw Error(ErrorCode::kInvalidArgument, "gcd(k, l) != 1");
  UniPoly z = x.pow(static_cast<unsigned>(k)) - y.pow(static_cast<unsigned>(l));
  if (z.is_zero()) throw Error(ErrorCode::kZeroDifference, "x^k - y^l = 0");
  if (x.is_zero() || y.is_zero()) throw Error(ErrorCode::kShapeMismatch, "x and y must be nonzero");
  UniPoly g = uni_gcd(x, y);
  if (!g.is_constant()) throw Error(ErrorCode::kCommonFactor, "gcd(x, y) = " + g.to_string() + " != 1");

  long dx = static_cast<long>(*x.degree());
  long dy = static_cast<long>(*y.degree());
  long n = static_cast<long>(*z.degree());
  if (n >= std::max(k * dx, l * dy))
    throw Error(ErrorCode::kDegreeGap, "deg z must be below max(k deg x, l deg y)");
  if (dx % l != 0 || dy % k != 0 || dx / l != dy / k)
    throw Error(ErrorCode::kShapeMismatch, "no integer m with deg x = l*m and deg y = k*m");

  DavenportReport r;
  r.n = n;
  r.m = dx / l;
  r.k = k;
  r.l = l;
  r.bound = r.m * (k * l - k - l);
  r.holds = r.n > r.bound;
  return r;
}

namespace {

__extension__ using Wide = __int128;
using Coeffs = std::vector<Wide>;  // low degree first

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Coeffs power(const Coeffs& a, long e) {
  Coeffs r{1};
  for (long i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

UniPoly to_unipoly(const std::vector<long>& low_first) {
  std::vector<GaussRational> c;
  c.reserve(low_first.size());
  for (long v : low_first) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// Upper bound on |coefficients| of p^e for p of length len with entries of
// absolute value <= h: (len * h)^e, as a double to avoid overflow.
double power_bound(long len, long h, long e) {
  return std::pow(static_cast<double>(len) * static_cast<double>(std::max(h, 1L)), static_cast<double>(e));
}

struct ChunkBest {
  long n = std::numeric_limits<long>::max();
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
};

}  // namespace

std::optional<DavenportWitness> davenport_search(long k, long l, long m, long height, unsigned threads) {
  if (k < 1 || l < 1 || std::gcd(k, l) != 1)
    throw Error(ErrorCode::kInvalidArgument, "davenport_search needs positive coprime k, l");
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "davenport_search needs m >= 1");
  if (height < 0) throw Error(ErrorCode::kInvalidArgument, "davenport_search needs height >= 0");

  const long dx = l * m;
  const long dy = k * m;
  const long free = dx + dy;
  const std::uint64_t base = static_cast<std::uint64_t>(2 * height + 1);
  std::uint64_t total = 1;
  for (long i = 0; i < free; ++i) {
    if (total > (std::uint64_t{1} << 40) / base)
      throw Error(ErrorCode::kSearchSpaceTooLarge, "coefficient box exceeds 2^40 candidates");
    total *= base;
  }
  if (std::max(power_bound(dx + 1, height, k), power_bound(dy + 1, height, l)) > 1e36)
    throw Error(ErrorCode::kSearchSpaceTooLarge, "coefficients exceed 128-bit range");

  // Candidate index -> coefficient vector, most significant digit first:
  // x's coefficients from t^(dx-1) down to t^0, then y's likewise.
  auto decode = [&](std::uint64_t idx, std::vector<long>& x, std::vector<long>& y) {
    std::vector<long> digits(static_cast<std::size_t>(free));
    for (long i = free - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<long>(idx % base) - height;
      idx /= base;
    }
    x.assign(static_cast<std::size_t>(dx + 1), 0);
    y.assign(static_cast<std::size_t>(dy + 1), 0);
    x[static_cast<std::size_t>(dx)] = 1;
    y[static_cast<std::size_t>(dy)] = 1;
    for (long i = 0; i < dx; ++i) x[static_cast<std::size_t>(dx - 1 - i)] = digits[static_cast<std::size_t>(i)];
    for (long i = 0; i < dy; ++i)
      y[static_cast<std::size_t>(dy - 1 - i)] = digits[static_cast<std::size_t>(dx + i)];
  };

  std::atomic<long> global_best{std::numeric_limits<long>::max()};

  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    ChunkBest best;
    std::vector<long> x, y;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode(idx, x, y);
      Coeffs xw(x.begin(), x.end());
      Coeffs yw(y.begin(), y.end());
      Coeffs z = power(xw, k);
      Coeffs yl = power(yw, l);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] -= yl[i];
      long n = static_cast<long>(z.size()) - 1;
      while (n >= 0 && z[static_cast<std::size_t>(n)] == 0) --n;
      if (n < 0) continue;  // z == 0
      if (n > global_best.load(std::memory_order_relaxed) || n >= best.n) continue;
      if (!uni_gcd(to_unipoly(x), to_unipoly(y)).is_constant()) continue;
      best = {n, idx};
      long cur = global_best.load(std::memory_order_relaxed);
      while (n < cur && !global_best.compare_exchange_weak(cur, n)) {
      }
    }
    return best;
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 8);
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      std::uint64_t begin = total * c / chunks;
      std::uint64_t end = total * (c + 1) / chunks;
      results[c] = scan(begin, end);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ChunkBest best;
  for (const auto& r : results)
    if (r.n < best.n || (r.n == best.n && r.index < best.index)) best = r;
  if (best.n == std::numeric_limits<long>::max()) return std::nullopt;

  std::vector<long> x, y;
  decode(best.index, x, y);
  DavenportWitness w;
  w.n = best.n;
  w.x = to_unipoly(x);
  w.y = to_unipoly(y);
  w.report = davenport_verify(w.x, w.y, k, l);
  w.candidates = total;
  if (!w.report.holds || w.report.n != w.n)
    throw Error(ErrorCode::kInternal, "search witness fails the gap bound: " + w.x.to_string() + ", " +
                                          w.y.to_string());
  return w;
}

}  // namespace exotica
