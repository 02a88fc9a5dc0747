#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcensus
{

/*! \brief Finite string over {0,1}; position 1 is the leftmost bit.
 *
 * Equal-length strings order lexicographically, which is the same as
 * unsigned numeric order with the leftmost bit most significant.
 */
class bit_string
{
public:
  bit_string() = default;
  explicit bit_string( std::vector<bool> bits ) : bits_( std::move( bits ) ) {}

  /* accepts only '0' and '1'; throws construction_error otherwise */
  static bit_string parse( std::string_view text );

  /* `width` low bits of `value`, most significant first */
  static bit_string from_uint( std::uint64_t value, std::size_t width );

  std::size_t length() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /* 1-based; throws construction_error outside 1..length */
  bool at( std::size_t k ) const;

  std::vector<bool> const& bits() const noexcept { return bits_; }
  std::string to_string() const;

  /* numeric value, only defined for length <= 64 */
  std::uint64_t to_uint() const;

  friend bool operator==( bit_string const&, bit_string const& ) = default;
  friend std::strong_ordering operator<=>( bit_string const& a, bit_string const& b );

private:
  std::vector<bool> bits_;
};

} // namespace pcensus
