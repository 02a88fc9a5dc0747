#include <pcensus/errors.hpp>
#include <pcensus/query.hpp>

#include <cstdio>

namespace pcensus
{

namespace
{

std::string fixed4( std::uint64_t value, char const* what )
{
  if ( value > 9999 )
  {
    throw resource_limit_error( std::string( what ) + " = " + std::to_string( value ) +
                                " does not fit the four-digit canonical id" );
  }
  char buffer[8];
  std::snprintf( buffer, sizeof buffer, "%04u", static_cast<unsigned>( value ) );
  return buffer;
}

} // namespace

std::string canonical_id( bit_string const& x, query_key const& key )
{
  return fixed4( x.length(), "|x|" ) + "-" + x.to_string() + "-" + fixed4( key.c, "c" ) + "-" + fixed4( key.j, "j" ) +
         "-" + fixed4( key.k, "k" ) + "-" + ( key.b ? "1" : "0" );
}

} // namespace pcensus
