#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Discrete global grid on the unit sphere: six cube faces, each subdivided as
// a quadtree walked by a Hilbert curve, 30 levels deep. Cell ids pack into a
// 64-bit integer: 3 face bits, 2 position bits per level, a marker bit set to
// 1, then zero padding. A level-L cell's marker sits at bit 2*(30-L).
namespace geolm::dgg {

struct LatLng {
  double lat_deg = 0.0;
  double lng_deg = 0.0;

  // Validating constructor: lat in [-90, 90], lng in (-180, 180], finite.
  static LatLng of(double lat_deg, double lng_deg);
};

class CellId {
 public:
  static constexpr int kMaxLevel = 30;
  static constexpr int kNumFaces = 6;

  constexpr CellId() = default;  // the zero id; not a valid cell
  explicit constexpr CellId(uint64_t bits) : bits_(bits) {}

  constexpr uint64_t bits() const { return bits_; }

  // True iff the face is in range and exactly one well-placed marker bit
  // exists (equivalently: the lowest set bit is at an even position).
  bool is_valid() const;

  // Subdivision depth, 0 (face cell) .. 30 (leaf). -1 for the zero id.
  int level() const;

  int face() const { return static_cast<int>(bits_ >> 61); }

  // Ancestor at a shallower (or equal) level. Throws ValidationError if
  // `level` is negative or deeper than this cell's level.
  CellId parent(int level) const;

  // True iff `other` lies within this cell's Hilbert-curve range
  // (geographic containment, including other == *this).
  bool contains(CellId other) const;

  friend constexpr bool operator==(CellId, CellId) = default;
  friend constexpr auto operator<=>(CellId a, CellId b) { return a.bits_ <=> b.bits_; }

 private:
  uint64_t lsb() const { return bits_ & (~bits_ + 1); }

  uint64_t bits_ = 0;
};

// Quantizes a point to the level-`level` cell containing it (cube-face
// projection + Hilbert curve). Throws ValidationError on bad input.
CellId latlng_to_cell(const LatLng& point, int level);

// Lowercase hex of the 64-bit id with trailing '0' characters stripped.
// A level-L token has exactly 1 + ceil(L/2) characters.
std::string cell_token(CellId cell);

// Inverse of cell_token. Throws ParseError on malformed or invalid tokens.
CellId token_to_cell(std::string_view token);

// Center point of the cell. Throws ValidationError on an invalid id.
LatLng cell_center(CellId cell);

// 33-character code carrying the full token ladder of levels 1..22.
// Levels pair up: the tokens of levels 2n-1 and 2n have equal length and
// differ only in their last character, so group n stores [last char of the
// odd token, last char of the even token, their shared penultimate char].
// Eleven groups of three cover levels 1..22 in 33 characters.
struct MultiLevelCode {
  static constexpr int kLength = 33;
  static constexpr int kGroups = 11;
  static constexpr int kMaxCodeLevel = 22;

  std::array<char, kLength> chars{};

  std::string str() const { return std::string(chars.data(), chars.size()); }

  // Throws ParseError unless `text` is exactly 33 hex characters.
  static MultiLevelCode parse(std::string_view text);
};

// Encodes a level-22 cell. Throws ValidationError for any other level.
MultiLevelCode encode_2lt3c(CellId cell);

// Reconstructs the tokens of levels 1..22 via the prefix recurrence:
// token(2n-1) = prefix_n + penult_n + lastOdd_n, token(2n) likewise with
// lastEven_n, prefix_{n+1} = token(2n) minus its last character. Throws
// ConsistencyError if any reconstructed token is not a cell of its level
// or breaks the parent chain.
std::array<std::string, MultiLevelCode::kMaxCodeLevel> decode_2lt3c(const MultiLevelCode& code);

// Lenient variant: decodes as deep as the ladder stays consistent and
// returns the cells of levels 1..k (possibly empty). Never throws.
std::vector<CellId> decode_2lt3c_partial(const MultiLevelCode& code);

}  // namespace geolm::dgg
