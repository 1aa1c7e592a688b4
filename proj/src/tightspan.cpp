#include "cubetight/tightspan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <mutex>
#include <set>

#include "cubetight/errors.hpp"
#include "cubetight/kernels.hpp"
#include "cubetight/parallel.hpp"

namespace cubetight {

FiniteMetric::FiniteMetric(std::vector<std::string> points, std::vector<Rational> dist)
    : points_(std::move(points)), d_(std::move(dist)) {
  const std::size_t n = points_.size();
  if (n == 0) throw InputError("metric has no points");
  if (d_.size() != n * n) throw InputError("distance matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(points_[i], i).second) throw InputError("duplicate point '" + points_[i] + "'");
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) throw InputError("nonzero diagonal at '" + points_[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) != d(j, i))
        throw InputError("asymmetric distance between '" + points_[i] + "' and '" + points_[j] + "'");
      if (i != j && d(i, j) <= 0)
        throw InputError("nonpositive distance between '" + points_[i] + "' and '" + points_[j] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d(i, k) > d(i, j) + d(j, k))
          throw InputError("triangle inequality fails for '" + points_[i] + "', '" + points_[j] + "', '" +
                           points_[k] + "'");
  d_double_.reserve(n * n);
  for (const auto& v : d_) d_double_.push_back(to_double(v));
}

std::size_t FiniteMetric::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown point '" + std::string(name) + "'");
  return it->second;
}

namespace {

void check_form(const FiniteMetric& M, const MetricForm& f) {
  if (f.size() != M.size())
    throw InputError("form has " + std::to_string(f.size()) + " values for " + std::to_string(M.size()) + " points");
}

void check_point(const FiniteMetric& M, std::size_t x) {
  if (x >= M.size()) throw InputError("point index out of range");
}

}  // namespace

bool in_delta(const FiniteMetric& M, const MetricForm& f) {
  check_form(M, f);
  for (std::size_t x = 0; x < M.size(); ++x)
    for (std::size_t y = x; y < M.size(); ++y)
      if (f[x] + f[y] < M.d(x, y)) return false;
  return true;
}

bool in_delta1(const FiniteMetric& M, const MetricForm& f) {
  if (!in_delta(M, f)) return false;
  for (std::size_t x = 0; x < M.size(); ++x)
    for (std::size_t y = 0; y < M.size(); ++y)
      if (f[x] - f[y] > M.d(x, y)) return false;
  return true;
}

MetricForm conjugate(const FiniteMetric& M, const MetricForm& f) {
  check_form(M, f);
  MetricForm out(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) {
    out[x] = -f[x];
    for (std::size_t y = 0; y < M.size(); ++y) out[x] = std::max(out[x], Rational(M.d(x, y) - f[y]));
  }
  return out;
}

bool is_extremal(const FiniteMetric& M, const MetricForm& f) {
  if (!in_delta(M, f)) throw InputError("form is not in Delta");
  if (conjugate(M, f) != f) return false;
  if (!in_delta1(M, f)) throw ConsistencyError("extremal form is not 1-Lipschitz");
  return true;
}

Rational sup_distance(const MetricForm& f, const MetricForm& g) {
  if (f.size() != g.size()) throw InputError("forms have different lengths");
  Rational best = 0;
  for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, Rational(abs(f[i] - g[i])));
  return best;
}

MetricForm kuratowski(const FiniteMetric& M, std::size_t x) {
  check_point(M, x);
  MetricForm e(M.size());
  for (std::size_t y = 0; y < M.size(); ++y) e[y] = M.d(x, y);
  return e;
}

namespace {

// Runs the averaged iteration from g in place until the sup-change drops below
// tol. Returns false when the cap is hit first.
bool iterate(const FiniteMetric& M, std::vector<double>& g, double tol, std::size_t cap) {
  const std::size_t n = M.size();
  std::vector<double> conj(n);
  for (std::size_t it = 0; it < cap; ++it) {
    kernels::max_plus_conjugate(M.d_double(), g, conj);
    double change = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const double next = 0.5 * (g[x] + conj[x]);
      change = std::max(change, std::abs(next - g[x]));
      g[x] = next;
    }
    if (change < tol) return true;
  }
  return false;
}

// Pushes a converged iterate as far as double precision allows.
void polish(const FiniteMetric& M, std::vector<double>& g) {
  double scale = 1;
  for (double v : M.d_double()) scale = std::max(scale, v);
  iterate(M, g, 1e-15 * scale, 200000);
}

struct Affine {
  int s = 0;  // coefficient of the component parameter
  Rational c;
};

std::optional<MetricForm> snap(const FiniteMetric& M, const MetricForm& f, const std::vector<double>& g, double thr) {
  const std::size_t n = M.size();
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (std::abs(g[x] + g[y] - M.d_double()[x * n + y]) <= thr) {
        tight[x].push_back(y);
        if (y != x) tight[y].push_back(x);
      }
  for (std::size_t x = 0; x < n; ++x)
    if (tight[x].empty()) return std::nullopt;

  std::vector<Affine> form(n);
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::optional<Rational>> param;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != n) continue;
    const std::size_t id = members.size();
    members.emplace_back();
    param.emplace_back();
    form[root] = {1, Rational(0)};
    comp[root] = id;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      members[id].push_back(u);
      for (auto v : tight[u])
        if (comp[v] == n) {
          comp[v] = id;
          form[v] = {-form[u].s, M.d(u, v) - form[u].c};
          queue.push_back(v);
        }
    }
    for (auto u : members[id])
      for (auto v : tight[u]) {
        if (v < u) continue;
        const int s = form[u].s + form[v].s;
        const Rational rest = M.d(u, v) - form[u].c - form[v].c;
        if (s == 0) {
          if (rest != 0) return std::nullopt;
          continue;
        }
        Rational t = rest / s;
        if (param[id] && *param[id] != t) return std::nullopt;
        param[id] = t;
      }
  }

  MetricForm out(n);
  std::vector<bool> fixed(n, false);
  auto value = [&](std::size_t v) { return form[v].s * *param[comp[v]] + form[v].c; };
  for (std::size_t v = 0; v < n; ++v)
    if (param[comp[v]]) {
      out[v] = value(v);
      fixed[v] = true;
    }

  for (std::size_t id = 0; id < members.size(); ++id) {
    if (param[id]) continue;
    // val(u) = s_u t + c_u; collect bounds on t
    const std::size_t root = members[id].front();
    const Rational estimate = from_double(g[root]);
    const Rational window = from_double(thr / 4);
    Rational lo = estimate - window, hi = estimate + window;
    auto bound = [&](int coeff, const Rational& rhs) {  // coeff * t >= rhs
      if (coeff > 0) lo = std::max(lo, Rational(rhs / coeff));
      else if (coeff < 0) hi = std::min(hi, Rational(rhs / coeff));
      else if (rhs > 0) lo = hi + 1;
    };
    for (auto u : members[id]) {
      bound(-form[u].s, form[u].c - f[u]);  // val(u) <= f(u)
      for (std::size_t w = 0; w < n; ++w) {
        if (comp[w] == id) {
          if (w < u) continue;
          bound(form[u].s + form[w].s, M.d(u, w) - form[u].c - form[w].c);
        } else if (fixed[w]) {
          bound(form[u].s, M.d(u, w) - form[u].c - out[w]);
        }
      }
    }
    if (lo > hi) return std::nullopt;
    param[id] = simplest_between(lo, hi);
    for (auto u : members[id]) {
      out[u] = value(u);
      fixed[u] = true;
    }
  }

  if (!in_delta(M, out) || conjugate(M, out) != out) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x)
    if (out[x] > f[x]) return std::nullopt;
  return out;
}

}  // namespace

std::vector<double> retract_numeric(const FiniteMetric& M, const MetricForm& f, const RetractOptions& opt) {
  if (!in_delta(M, f)) throw InputError("form is not in Delta");
  if (!(opt.tol > 0)) throw InputError("tolerance must be positive");
  std::vector<double> g;
  g.reserve(f.size());
  for (const auto& v : f) g.push_back(to_double(v));
  if (!iterate(M, g, opt.tol, opt.max_iterations))
    throw ConsistencyError("retraction did not converge within " + std::to_string(opt.max_iterations) +
                           " iterations; tolerance too small for double precision?");
  return g;
}

MetricForm retract(const FiniteMetric& M, const MetricForm& f, const RetractOptions& opt) {
  if (is_extremal(M, f)) return f;
  std::vector<double> g = retract_numeric(M, f, opt);
  polish(M, g);
  for (double thr : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
    if (auto out = snap(M, f, g, thr)) {
      if (!in_delta1(M, *out)) throw ConsistencyError("snapped form is not 1-Lipschitz");
      return *out;
    }
  }
  throw ConsistencyError("could not snap the retraction onto an exact extremal form");
}

TightSpanReport tight_span_cells(const FiniteMetric& M) {
  const std::size_t n = M.size();
  if (n > kMaxCellPoints)
    throw InputError("cell enumeration is limited to " + std::to_string(kMaxCellPoints) + " points");

  // integer scaling: e = d * D, h = 2 f D
  BigInt D = 1;
  for (const auto& v : [&] {
         std::vector<Rational> all;
         for (std::size_t i = 0; i < n * n; ++i) all.push_back(M.d(i / n, i % n));
         return all;
       }())
    D = boost::multiprecision::lcm(D, BigInt(boost::multiprecision::denominator(v)));
  std::vector<std::int64_t> e(n * n);
  const BigInt limit = BigInt(1) << 40;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational scaled = M.d(x, y) * D;
      BigInt v = boost::multiprecision::numerator(scaled);
      if (v > limit) throw InputError("metric values too large for cell enumeration");
      e[x * n + y] = v.convert_to<std::int64_t>();
    }

  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;

  std::set<std::vector<std::int64_t>> found;
  std::mutex mu;
  parallel_for(total, [&](std::size_t begin, std::size_t end) {
    std::set<std::vector<std::int64_t>> local;
    std::vector<std::size_t> p(n);
    std::vector<int> state(n);
    std::vector<std::int64_t> h(n);
    std::vector<bool> known(n);
    std::vector<std::size_t> path;
    for (std::size_t code = begin; code < end; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = c % n;
        c /= n;
      }
      // walk from each point; every cycle met must be odd
      std::fill(state.begin(), state.end(), 0);  // 0 new, 1 on current walk, 2 done
      std::fill(known.begin(), known.end(), false);
      bool ok = true;
      for (std::size_t s = 0; s < n && ok; ++s) {
        if (state[s] == 2) continue;
        path.clear();
        std::size_t v = s;
        while (state[v] == 0) {
          state[v] = 1;
          path.push_back(v);
          v = p[v];
        }
        if (state[v] == 1) {
          // new cycle starting at v
          auto start = std::find(path.begin(), path.end(), v);
          const std::size_t len = static_cast<std::size_t>(path.end() - start);
          if (len % 2 == 0) {
            ok = false;
            break;
          }
          std::int64_t alt = 0;
          for (std::size_t i = 0; i < len; ++i) {
            const std::size_t a = *(start + i), b = p[a];
            alt += (i % 2 == 0 ? 1 : -1) * e[a * n + b];
          }
          h[v] = alt;
          known[v] = true;
          for (std::size_t i = 0; i + 1 < len; ++i) {
            const std::size_t a = *(start + i), b = p[a];
            h[b] = 2 * e[a * n + b] - h[a];
            known[b] = true;
          }
        }
        // tree vertices on this walk, nearest-to-cycle first
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          if (!known[*it]) {
            h[*it] = 2 * e[*it * n + p[*it]] - h[p[*it]];
            known[*it] = true;
          }
          state[*it] = 2;
        }
      }
      if (!ok) continue;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = x; y < n; ++y)
          if (h[x] + h[y] < 2 * e[x * n + y]) {
            ok = false;
            break;
          }
      if (ok) local.insert(h);
    }
    std::lock_guard<std::mutex> lock(mu);
    found.merge(local);
  });

  TightSpanReport report;
  const Rational denom = Rational(2 * D);
  for (const auto& h : found) {
    MetricForm f(n);
    for (std::size_t x = 0; x < n; ++x) f[x] = Rational(h[x]) / denom;
    if (!is_extremal(M, f)) throw ConsistencyError("enumerated cell is not extremal");
    report.zero_cells.push_back(std::move(f));
  }
  std::sort(report.zero_cells.begin(), report.zero_cells.end());
  report.coarse_gap = 0;
  for (const auto& f : report.zero_cells) report.coarse_gap = std::max(report.coarse_gap, *std::min_element(f.begin(), f.end()));
  return report;
}

HellyOutcome helly_witness(const FiniteMetric& M, std::span<const HellyBall> balls, const RetractOptions& opt) {
  if (balls.empty()) throw InputError("helly_witness needs at least one ball");
  for (const auto& b : balls) {
    check_point(M, b.center);
    if (b.radius < 0) throw InputError("negative radius");
  }
  HellyOutcome out;
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (M.d(balls[i].center, balls[j].center) > balls[i].radius + balls[j].radius) {
        out.violating = {i, j};
        return out;
      }
  MetricForm g(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) {
    g[x] = balls[0].radius + M.d(x, balls[0].center);
    for (const auto& b : balls) g[x] = std::min(g[x], Rational(b.radius + M.d(x, b.center)));
  }
  if (!in_delta(M, g)) throw ConsistencyError("pairwise-compatible balls gave a form outside Delta");
  MetricForm f = retract(M, g, opt);
  for (const auto& b : balls)
    if (f[b.center] > b.radius) throw ConsistencyError("Helly witness misses a ball");
  out.witness = std::move(f);
  return out;
}

Tripod tripod_center(const FiniteMetric& M, std::size_t x, std::size_t y, std::size_t z, const RetractOptions& opt) {
  check_point(M, x);
  check_point(M, y);
  check_point(M, z);
  if (x == y || x == z || y == z) throw InputError("tripod needs three distinct points");
  Tripod t;
  t.a = (M.d(x, y) + M.d(x, z) - M.d(y, z)) / 2;
  t.b = (M.d(x, y) + M.d(y, z) - M.d(x, z)) / 2;
  t.c = (M.d(x, z) + M.d(y, z) - M.d(x, y)) / 2;
  MetricForm m0(M.size());
  for (std::size_t w = 0; w < M.size(); ++w)
    m0[w] = std::max({Rational(M.d(x, w) - t.a), Rational(M.d(y, w) - t.b), Rational(M.d(z, w) - t.c)});
  MetricForm star = conjugate(M, m0);
  for (std::size_t w = 0; w < M.size(); ++w) m0[w] = std::max(m0[w], star[w]);
  t.center = retract(M, m0, opt);
  if (sup_distance(t.center, kuratowski(M, x)) != t.a || sup_distance(t.center, kuratowski(M, y)) != t.b ||
      sup_distance(t.center, kuratowski(M, z)) != t.c)
    throw ConsistencyError("tripod center misses the leg lengths");
  return t;
}

MetricForm center(const FiniteMetric& M, std::span<const std::size_t> pts, const RetractOptions& opt) {
  if (pts.empty()) throw InputError("center needs at least one point");
  MetricForm avg(M.size(), Rational(0));
  for (auto p : pts) {
    check_point(M, p);
    for (std::size_t y = 0; y < M.size(); ++y) avg[y] += M.d(p, y);
  }
  for (auto& v : avg) v /= static_cast<long>(pts.size());
  return retract(M, avg, opt);
}

MetricForm comb(const FiniteMetric& M, const MetricForm& f, const MetricForm& g, const Rational& t,
                const RetractOptions& opt) {
  if (t < 0 || t > 1) throw InputError("comb parameter must lie in [0,1]");
  if (!is_extremal(M, f) || !is_extremal(M, g)) throw InputError("comb endpoints must be extremal");
  MetricForm h(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) h[x] = (1 - t) * f[x] + t * g[x];
  return retract(M, h, opt);
}

}  // namespace cubetight
