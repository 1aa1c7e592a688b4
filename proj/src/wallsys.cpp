#include "cubetight/wallsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubetight/errors.hpp"

namespace cubetight {

namespace {

constexpr int quarter_bit(Side a, Side b) { return 2 * static_cast<int>(a) + static_cast<int>(b); }

std::string describe(const ValidationReport& report) {
  std::string msg = "invalid wall system:";
  for (const auto& v : report) {
    msg += " [";
    if (v.wall) msg += "wall " + std::to_string(*v.wall) + ": ";
    msg += v.message + "]";
  }
  return msg;
}

}  // namespace

ValidationReport validate(const WallSystemSpec& spec) {
  ValidationReport report;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < spec.ground.size(); ++i) {
    if (!index.emplace(spec.ground[i], i).second)
      report.push_back({std::nullopt, "duplicate point '" + spec.ground[i] + "'"});
  }
  if (spec.ground.empty()) report.push_back({std::nullopt, "empty ground set"});

  const std::size_t n = spec.ground.size();
  std::vector<std::optional<Bitset>> canonical(spec.walls.size());
  for (std::size_t w = 0; w < spec.walls.size(); ++w) {
    const auto& wall = spec.walls[w];
    Bitset plus(n), minus(n);
    bool ok = true;
    auto collect = [&](const std::vector<std::string>& names, Bitset& into, const char* side) {
      for (const auto& name : names) {
        auto it = index.find(name);
        if (it == index.end()) {
          report.push_back({w, std::string("unknown point '") + name + "' on " + side + " side"});
          ok = false;
          continue;
        }
        into.set(it->second);
      }
    };
    collect(wall.plus, plus, "plus");
    collect(wall.minus, minus, "minus");
    if (wall.plus.empty()) {
      report.push_back({w, "empty plus side"});
      ok = false;
    }
    if (wall.minus.empty()) {
      report.push_back({w, "empty minus side"});
      ok = false;
    }
    if (plus.intersects(minus)) {
      report.push_back({w, "sides overlap"});
      ok = false;
    }
    if ((plus | minus).count() != n) {
      report.push_back({w, "sides do not cover the ground set"});
      ok = false;
    }
    if (ok) {
      // orientation-free key: the side not containing point 0
      canonical[w] = plus.test(0) ? minus : plus;
      for (std::size_t v = 0; v < w; ++v) {
        if (canonical[v] && *canonical[v] == *canonical[w]) {
          report.push_back({w, "duplicate wall (same bipartition as wall " + std::to_string(v) + ")"});
          break;
        }
      }
    }
  }
  return report;
}

WallSystem::WallSystem(const WallSystemSpec& spec) {
  auto report = validate(spec);
  if (!report.empty()) throw InputError(describe(report));
  ground_ = spec.ground;
  for (std::size_t i = 0; i < ground_.size(); ++i) index_.emplace(ground_[i], i);
  for (const auto& wall : spec.walls) {
    Bitset plus(ground_.size());
    for (const auto& name : wall.plus) plus.set(index_.at(name));
    plus_.push_back(std::move(plus));
  }
  build_relations();
}

WallSystem::WallSystem(std::vector<std::string> ground, std::vector<Bitset> plus_sides)
    : ground_(std::move(ground)), plus_(std::move(plus_sides)) {
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (!index_.emplace(ground_[i], i).second) throw InputError("duplicate point '" + ground_[i] + "'");
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  for (std::size_t w = 0; w < plus_.size(); ++w) {
    if (plus_[w].size() != ground_.size()) throw InputError("wall " + std::to_string(w) + " has wrong width");
    if (plus_[w].empty_set() || plus_[w].count() == ground_.size())
      throw InputError("wall " + std::to_string(w) + " has an empty side");
    Bitset key = plus_[w].test(0) ? plus_[w].complement() : plus_[w];
    if (auto [it, fresh] = seen.emplace(std::move(key), w); !fresh)
      throw InputError("duplicate wall " + std::to_string(w) + " (same bipartition as wall " +
                       std::to_string(it->second) + ")");
  }
  build_relations();
}

void WallSystem::build_relations() {
  minus_.clear();
  for (const auto& p : plus_) minus_.push_back(p.complement());
  const std::size_t n = plus_.size();
  quarter_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::uint8_t mask = 0;
      for (Side a : {Side::minus, Side::plus})
        for (Side b : {Side::minus, Side::plus})
          if (half_space({i, a}).intersects(half_space({j, b}))) mask |= std::uint8_t(1U << quarter_bit(a, b));
      quarter_[i * n + j] = mask;
      // transpose: swap the roles of the two walls
      std::uint8_t t = 0;
      for (Side a : {Side::minus, Side::plus})
        for (Side b : {Side::minus, Side::plus})
          if (mask & (1U << quarter_bit(a, b))) t |= std::uint8_t(1U << quarter_bit(b, a));
      quarter_[j * n + i] = t;
    }
  }
}

std::size_t WallSystem::point_index(std::string_view name) const {
  auto found = find_point(name);
  if (!found) throw InputError("unknown point '" + std::string(name) + "'");
  return *found;
}

std::optional<std::size_t> WallSystem::find_point(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WallSystem::crosses(std::size_t w1, std::size_t w2) const {
  if (w1 >= wall_count() || w2 >= wall_count()) throw InputError("wall index out of range");
  return quarters(w1, w2) == 0x0f;
}

bool WallSystem::nested_in(HalfSpace a, HalfSpace b) const {
  if (a.wall == b.wall) return false;
  return (quarters(a.wall, b.wall) & (1U << quarter_bit(a.side, opposite(b.side)))) == 0;
}

std::vector<std::size_t> WallSystem::separating_walls(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < wall_count(); ++w)
    if (separates(w, x, y)) out.push_back(w);
  return out;
}

Chain WallSystem::max_separating_chain(std::size_t x, std::size_t y) const {
  if (x >= ground_size() || y >= ground_size()) throw InputError("point index out of range");
  if (x == y) throw InputError("max_separating_chain requires distinct points");
  std::vector<HalfSpace> allowed;
  for (std::size_t w = 0; w < wall_count(); ++w)
    if (separates(w, x, y)) allowed.push_back({w, side_of(w, x)});
  // x-sides grow as we move from x toward y
  return longest_nested(allowed);
}

Chain WallSystem::max_separating_chain(std::string_view x, std::string_view y) const {
  return max_separating_chain(point_index(x), point_index(y));
}

Chain WallSystem::longest_chain(std::span<const std::size_t> walls) const {
  std::vector<HalfSpace> allowed;
  allowed.reserve(walls.size() * 2);
  for (auto w : walls) {
    if (w >= wall_count()) throw InputError("wall index out of range");
    allowed.push_back({w, Side::minus});
    allowed.push_back({w, Side::plus});
  }
  return longest_nested(allowed);
}

Chain WallSystem::longest_nested(std::span<const HalfSpace> allowed) const {
  const std::size_t m = allowed.size();
  if (m == 0) return {};
  // Strict containment is a partial order, so a longest path in its DAG is a
  // longest chain. Process from the largest half-spaces down.
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = half_space(allowed[i]).count();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  // len[i]: longest nested sequence starting at i and moving to supersets
  std::vector<std::size_t> len(m, 1);
  for (std::size_t oi = 0; oi < m; ++oi) {
    std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      std::size_t j = order[oj];
      if (sizes[j] > sizes[i] && nested_in(allowed[i], allowed[j])) len[i] = std::max(len[i], len[j] + 1);
    }
  }

  auto better = [&](std::size_t cand, std::optional<std::size_t> incumbent) {
    if (!incumbent) return true;
    const auto& a = allowed[cand];
    const auto& b = allowed[*incumbent];
    if (a.wall != b.wall) return a.wall < b.wall;
    return a.side < b.side;
  };

  std::size_t best_len = *std::max_element(len.begin(), len.end());
  std::optional<std::size_t> cur;
  for (std::size_t i = 0; i < m; ++i)
    if (len[i] == best_len && better(i, cur)) cur = i;

  Chain chain;
  chain.walls.push_back(allowed[*cur].wall);
  while (len[*cur] > 1) {
    std::optional<std::size_t> next;
    for (std::size_t j = 0; j < m; ++j) {
      if (len[j] + 1 == len[*cur] && sizes[j] > sizes[*cur] && nested_in(allowed[*cur], allowed[j]) &&
          better(j, next))
        next = j;
    }
    if (!next) throw ConsistencyError("longest_nested: broken DP backtrack");
    cur = next;
    chain.walls.push_back(allowed[*cur].wall);
  }
  return chain;
}

bool WallSystem::is_chain(const Chain& c) const {
  for (auto w : c.walls)
    if (w >= wall_count()) return false;
  std::set<std::size_t> distinct(c.walls.begin(), c.walls.end());
  if (distinct.size() != c.walls.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (crosses(c.walls[i], c.walls[j])) return false;
  // wall b separates a from c: a side of a inside one side of b, a side of c
  // inside the other side of b
  auto separates_walls = [&](std::size_t a, std::size_t b, std::size_t cw) {
    for (Side sb : {Side::minus, Side::plus}) {
      bool a_in = false, c_in = false;
      for (Side s : {Side::minus, Side::plus}) {
        if (nested_in({a, s}, {b, sb})) a_in = true;
        if (nested_in({cw, s}, {b, opposite(sb)})) c_in = true;
      }
      if (a_in && c_in) return true;
    }
    return false;
  };
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (!separates_walls(c.walls[i - 1], c.walls[i], c.walls[i + 1])) return false;
  return true;
}

WallSystemSpec WallSystem::to_spec() const {
  WallSystemSpec spec;
  spec.ground = ground_;
  for (std::size_t w = 0; w < wall_count(); ++w) {
    WallSpec ws;
    for (std::size_t p = 0; p < ground_size(); ++p) (plus_[w].test(p) ? ws.plus : ws.minus).push_back(ground_[p]);
    spec.walls.push_back(std::move(ws));
  }
  return spec;
}

}  // namespace cubetight
