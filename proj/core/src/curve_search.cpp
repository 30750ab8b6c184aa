// Exhaustive search for polynomial curves on x^k + y^l + z^m = 0.
//
// Rather than scanning all coefficient triples, the search fixes the degree
// of each component first. The top-degree terms must cancel, so the largest
// of k*dx, l*dy, m*dz is attained at least twice; other degree patterns
// contain no solutions. Within a pattern two components are enumerated and
// the third is recovered as the unique root of the remaining equation for
// each admissible leading coefficient, which visits every solution in the
// box exactly once.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <thread>

#include "exotica/error.hpp"
#include "exotica/singularities.hpp"

namespace exotica {

namespace {

__extension__ using Wide = __int128;

struct GaussInt {
  Wide re = 0;
  Wide im = 0;

  bool zero() const { return re == 0 && im == 0; }
  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  friend bool operator<(GaussInt a, GaussInt b) { return a.re != b.re ? a.re < b.re : a.im < b.im; }
};

// Exact quotient a / b in Z[i], if it exists.
std::optional<GaussInt> divide(GaussInt a, GaussInt b) {
  Wide n = b.re * b.re + b.im * b.im;
  GaussInt p = a * GaussInt{b.re, -b.im};
  if (p.re % n != 0 || p.im % n != 0) return std::nullopt;
  return GaussInt{p.re / n, p.im / n};
}

using Poly = std::vector<GaussInt>;  // low degree first, no trailing zeros

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

Poly pow(const Poly& a, long e) {
  Poly r{GaussInt{1, 0}};
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back().zero()) p.pop_back();
}

// Candidates of one exact degree, enumerated in lexicographic order of the
// coefficient vector read from the top coefficient down.
class DegreeBox {
 public:
  DegreeBox(long degree, const std::vector<GaussInt>& grid) : degree_(degree), grid_(grid) {
    if (degree_ < 0) {
      count_ = 1;
      return;
    }
    count_ = grid_.size() - 1;  // nonzero leading coefficient
    for (long i = 0; i < degree_; ++i) count_ *= grid_.size();
  }

  std::uint64_t count() const { return count_; }

  Poly decode(std::uint64_t idx) const {
    if (degree_ < 0) return {};
    Poly p(static_cast<std::size_t>(degree_ + 1));
    for (long j = 0; j < degree_; ++j) {
      p[static_cast<std::size_t>(j)] = grid_[idx % grid_.size()];
      idx /= grid_.size();
    }
    p[static_cast<std::size_t>(degree_)] = nonzero(idx);
    return p;
  }

 private:
  GaussInt nonzero(std::uint64_t idx) const {
    // grid_ is sorted and contains zero exactly once.
    std::size_t zero_at = static_cast<std::size_t>(
        std::find_if(grid_.begin(), grid_.end(), [](GaussInt g) { return g.zero(); }) - grid_.begin());
    std::size_t i = static_cast<std::size_t>(idx);
    return grid_[i < zero_at ? i : i + 1];
  }

  long degree_;
  const std::vector<GaussInt>& grid_;
  std::uint64_t count_ = 0;
};

struct Solver {
  long exponent;
  long degree;  // -1 for the zero polynomial
  long height;
  std::map<GaussInt, std::vector<GaussInt>> roots_of_lead;  // c^e -> all grid c

  bool in_box(GaussInt c) const {
    return c.re >= -height && c.re <= height && c.im >= -height && c.im <= height;
  }

  // All w in the box with deg w == degree and w^exponent == target.
  std::vector<Poly> solve(const Poly& target) const {
    std::vector<Poly> out;
    if (degree < 0) {
      if (target.empty()) out.emplace_back();
      return out;
    }
    const long n = exponent * degree;
    if (static_cast<long>(target.size()) - 1 != n) return out;
    auto it = roots_of_lead.find(target.back());
    if (it == roots_of_lead.end()) return out;
    for (GaussInt lead : it->second) {
      Poly w(static_cast<std::size_t>(degree + 1));
      w.back() = lead;
      // e * lead^(e-1): coefficient of the first unknown in each step.
      GaussInt scale = pow(Poly{lead}, exponent - 1).front() * GaussInt{exponent, 0};
      bool ok = true;
      for (long j = 1; j <= degree && ok; ++j) {
        Poly partial = pow(w, exponent);
        std::size_t at = static_cast<std::size_t>(n - j);
        GaussInt have = at < partial.size() ? partial[at] : GaussInt{};
        auto q = divide(target[at] - have, scale);
        if (!q || !in_box(*q)) ok = false;
        else w[static_cast<std::size_t>(degree - j)] = *q;
      }
      if (!ok) continue;
      Poly check = pow(w, exponent);
      trim(check);
      if (check.size() == target.size() && std::equal(check.begin(), check.end(), target.begin())) out.push_back(w);
    }
    return out;
  }
};

UniPoly to_unipoly(const Poly& p) {
  std::vector<GaussRational> c;
  c.reserve(p.size());
  for (GaussInt g : p)
    c.emplace_back(Rational(Integer(static_cast<long>(g.re))), Rational(Integer(static_cast<long>(g.im))));
  return UniPoly(std::move(c));
}

struct RawCurve {
  std::array<long, 3> degrees;
  std::array<Poly, 3> comps;
};

// Lexicographic comparison of coefficients from the top degree down.
bool coeff_less(const Poly& a, const Poly& b) {
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] == b[j]) continue;
    return a[j] < b[j];
  }
  return false;
}

bool raw_less(const RawCurve& a, const RawCurve& b) {
  if (a.degrees != b.degrees) return a.degrees < b.degrees;
  for (std::size_t i = 0; i < 3; ++i) {
    if (coeff_less(a.comps[i], b.comps[i])) return true;
    if (coeff_less(b.comps[i], a.comps[i])) return false;
  }
  return false;
}

bool pattern_admissible(const std::array<long, 3>& deg, const std::array<long, 3>& exps) {
  if (std::all_of(deg.begin(), deg.end(), [](long d) { return d <= 0; })) return false;
  long top = -1;
  int hits = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (deg[i] < 0) continue;
    long v = deg[i] * exps[i];
    if (v > top) {
      top = v;
      hits = 1;
    } else if (v == top) {
      ++hits;
    }
  }
  return hits >= 2;
}

}  // namespace

std::vector<FoundCurve> curve_search(const BrieskornTriple& t, const CurveSearchOptions& opts) {
  if (opts.max_deg < 0 || opts.height < 0)
    throw Error(ErrorCode::kInvalidArgument, "curve_search needs non-negative bounds");
  const long h = opts.height;
  const std::array<long, 3> exps{t.k, t.l, t.m};
  const double magnitude = static_cast<double>(opts.max_deg + 1) * static_cast<double>(std::max(h, 1L)) * 1.5;
  for (long e : exps)
    if (std::pow(magnitude, static_cast<double>(e)) > 1e36)
      throw Error(ErrorCode::kSearchSpaceTooLarge, "coefficients exceed 128-bit range");

  std::vector<GaussInt> grid;
  for (long a = -h; a <= h; ++a)
    for (long b = -h; b <= h; ++b) grid.push_back({a, b});

  std::vector<RawCurve> found;
  const unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  for (long dx = -1; dx <= opts.max_deg; ++dx) {
    for (long dy = -1; dy <= opts.max_deg; ++dy) {
      for (long dz = -1; dz <= opts.max_deg; ++dz) {
        const std::array<long, 3> deg{dx, dy, dz};
        if (!pattern_admissible(deg, exps)) continue;

        std::array<DegreeBox, 3> boxes{DegreeBox(dx, grid), DegreeBox(dy, grid), DegreeBox(dz, grid)};
        // Solve for the component with the largest box; enumerate the others.
        std::size_t solved = 0;
        for (std::size_t i = 1; i < 3; ++i)
          if (boxes[i].count() >= boxes[solved].count()) solved = i;
        const std::size_t a = solved == 0 ? 1 : 0;
        const std::size_t b = solved == 2 ? 1 : 2;
        if (static_cast<double>(boxes[a].count()) * static_cast<double>(boxes[b].count()) > 1e12)
          throw Error(ErrorCode::kSearchSpaceTooLarge, "curve search box too large");

        Solver solver{exps[solved], deg[solved], h, {}};
        if (deg[solved] >= 0) {
          for (GaussInt c : grid) {
            if (c.zero()) continue;
            solver.roots_of_lead[pow(Poly{c}, exps[solved]).front()].push_back(c);
          }
        }

        const std::uint64_t outer = boxes[a].count();
        std::vector<std::vector<RawCurve>> per_index(outer);
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
          for (std::uint64_t i; (i = next.fetch_add(1)) < outer;) {
            Poly pa = boxes[a].decode(i);
            Poly pa_pow = pow(pa, exps[a]);
            for (std::uint64_t j = 0; j < boxes[b].count(); ++j) {
              Poly pb = boxes[b].decode(j);
              Poly sum = pow(pb, exps[b]);
              if (sum.size() < pa_pow.size()) sum.resize(pa_pow.size());
              for (std::size_t q = 0; q < pa_pow.size(); ++q) sum[q] = sum[q] + pa_pow[q];
              for (auto& c : sum) c = GaussInt{} - c;
              trim(sum);
              for (Poly& w : solver.solve(sum)) {
                RawCurve rc;
                rc.degrees = deg;
                rc.comps[a] = pa;
                rc.comps[b] = pb;
                rc.comps[solved] = std::move(w);
                per_index[i].push_back(std::move(rc));
              }
            }
          }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        for (auto& v : per_index)
          for (auto& rc : v) found.push_back(std::move(rc));
      }
    }
  }

  std::sort(found.begin(), found.end(), raw_less);
  std::vector<FoundCurve> out;
  out.reserve(found.size());
  for (const auto& rc : found) {
    FoundCurve fc;
    fc.curve = {to_unipoly(rc.comps[0]), to_unipoly(rc.comps[1]), to_unipoly(rc.comps[2])};
    fc.hits_origin = curve_verify(fc.curve, t).hits_origin;
    out.push_back(std::move(fc));
  }
  return out;
}

}  // namespace exotica
