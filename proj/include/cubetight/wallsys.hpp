#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubetight/bitset.hpp"

namespace cubetight {

enum class Side : std::uint8_t { minus = 0, plus = 1 };

constexpr Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

/// One side of one wall.
struct HalfSpace {
  std::size_t wall = 0;
  Side side = Side::plus;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// A wall as written in input files: two lists of point names.
struct WallSpec {
  std::vector<std::string> plus;
  std::vector<std::string> minus;
};

/// Unvalidated wall system, straight from a parser.
struct WallSystemSpec {
  std::vector<std::string> ground;
  std::vector<WallSpec> walls;
};

struct Violation {
  std::optional<std::size_t> wall;  // empty for ground-level problems
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Every broken wall invariant, tagged with the offending wall index.
ValidationReport validate(const WallSystemSpec& spec);

/// Ordered list of wall indices; consecutive members nest.
struct Chain {
  std::vector<std::size_t> walls;
  std::size_t size() const { return walls.size(); }
  bool empty() const { return walls.empty(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Finite family of bipartitions of a finite ground set. Immutable; pairwise
/// wall relations (crossing, nesting) are tabulated at construction.
class WallSystem {
 public:
  WallSystem() = default;
  /// Validates; throws InputError listing every violation.
  explicit WallSystem(const WallSystemSpec& spec);
  /// plus_sides[i] is the plus side of wall i as a subset of ground.
  WallSystem(std::vector<std::string> ground, std::vector<Bitset> plus_sides);

  std::size_t ground_size() const { return ground_.size(); }
  std::size_t wall_count() const { return plus_.size(); }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::string& point_name(std::size_t p) const { return ground_.at(p); }
  /// Throws InputError for unknown names.
  std::size_t point_index(std::string_view name) const;
  std::optional<std::size_t> find_point(std::string_view name) const;

  const Bitset& plus_side(std::size_t w) const { return plus_.at(w); }
  const Bitset& minus_side(std::size_t w) const { return minus_.at(w); }
  const Bitset& half_space(HalfSpace h) const { return h.side == Side::plus ? plus_[h.wall] : minus_[h.wall]; }

  Side side_of(std::size_t wall, std::size_t point) const {
    return plus_[wall].test(point) ? Side::plus : Side::minus;
  }

  bool separates(std::size_t wall, std::size_t x, std::size_t y) const {
    return plus_.at(wall).test(x) != plus_.at(wall).test(y);
  }
  bool separates(std::size_t wall, std::string_view x, std::string_view y) const {
    return separates(wall, point_index(x), point_index(y));
  }

  /// All four quarters nonempty. Irreflexive.
  bool crosses(std::size_t w1, std::size_t w2) const;

  /// a is strictly contained in b (distinct walls only).
  bool nested_in(HalfSpace a, HalfSpace b) const;

  /// Walls separating x from y, ascending.
  std::vector<std::size_t> separating_walls(std::size_t x, std::size_t y) const;

  /// Longest chain of walls separating x and y, ordered from x toward y.
  /// Ties go to the lexicographically smallest index sequence.
  /// Throws InputError when x == y.
  Chain max_separating_chain(std::size_t x, std::size_t y) const;
  Chain max_separating_chain(std::string_view x, std::string_view y) const;

  /// Longest chain using only the given walls (either orientation).
  Chain longest_chain(std::span<const std::size_t> walls) const;

  /// Longest strictly nested sequence drawn from the given half-spaces,
  /// ordered from smallest to largest half-space. Lexicographic ties.
  Chain longest_nested(std::span<const HalfSpace> allowed) const;

  /// Checks the chain invariants: pairwise non-crossing and each interior wall
  /// separating its two neighbours.
  bool is_chain(const Chain& c) const;

  /// Serializable form: wall order and orientation kept, each side listed in
  /// ground order.
  WallSystemSpec to_spec() const;

 private:
  void build_relations();
  // quarter_[i*n+j] bit (2*si + sj) set iff side si of i meets side sj of j
  std::uint8_t quarters(std::size_t i, std::size_t j) const { return quarter_[i * plus_.size() + j]; }

  std::vector<std::string> ground_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bitset> plus_;
  std::vector<Bitset> minus_;
  std::vector<std::uint8_t> quarter_;
};

}  // namespace cubetight
