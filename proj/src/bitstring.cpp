#include <pcensus/bitstring.hpp>
#include <pcensus/errors.hpp>

#include <algorithm>

namespace pcensus
{

bit_string bit_string::parse( std::string_view text )
{
  std::vector<bool> bits;
  bits.reserve( text.size() );
  for ( char ch : text )
  {
    if ( ch != '0' && ch != '1' )
    {
      throw construction_error( "bit string may only contain '0' and '1': \"" + std::string( text ) + "\"" );
    }
    bits.push_back( ch == '1' );
  }
  return bit_string( std::move( bits ) );
}

bit_string bit_string::from_uint( std::uint64_t value, std::size_t width )
{
  if ( width > 64 )
  {
    throw construction_error( "from_uint supports at most 64 bits" );
  }
  std::vector<bool> bits( width );
  for ( std::size_t i = 0; i < width; ++i )
  {
    bits[width - 1 - i] = ( ( value >> i ) & 1u ) != 0;
  }
  return bit_string( std::move( bits ) );
}

bool bit_string::at( std::size_t k ) const
{
  if ( k < 1 || k > bits_.size() )
  {
    throw construction_error( "bit index " + std::to_string( k ) + " outside 1.." + std::to_string( bits_.size() ) );
  }
  return bits_[k - 1];
}

std::string bit_string::to_string() const
{
  std::string out;
  out.reserve( bits_.size() );
  for ( bool bit : bits_ )
  {
    out.push_back( bit ? '1' : '0' );
  }
  return out;
}

std::uint64_t bit_string::to_uint() const
{
  if ( bits_.size() > 64 )
  {
    throw construction_error( "to_uint supports at most 64 bits" );
  }
  std::uint64_t value = 0;
  for ( bool bit : bits_ )
  {
    value = ( value << 1 ) | ( bit ? 1u : 0u );
  }
  return value;
}

std::strong_ordering operator<=>( bit_string const& a, bit_string const& b )
{
  /* shorter strings first, then lexicographic; only equal lengths matter in practice */
  if ( auto cmp = a.bits_.size() <=> b.bits_.size(); cmp != 0 )
  {
    return cmp;
  }
  auto const mismatch = std::mismatch( a.bits_.begin(), a.bits_.end(), b.bits_.begin() );
  if ( mismatch.first == a.bits_.end() )
  {
    return std::strong_ordering::equal;
  }
  return *mismatch.first ? std::strong_ordering::greater : std::strong_ordering::less;
}

} // namespace pcensus
