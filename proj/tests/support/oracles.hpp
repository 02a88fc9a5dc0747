// Test-only reference implementations. Nothing here calls into the
// evaluation or counting code under test.
#pragma once

#include <pcensus/circuit.hpp>
#include <pcensus/cnf.hpp>
#include <pcensus/machines.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace pcensus::testing
{

/* recursive evaluation straight from the gate list */
inline bool naive_value( circuit const& c, std::vector<bool> const& w, signal s )
{
  auto const& g = c.gates()[s];
  switch ( g.op )
  {
  case gate_op::input: return w[g.input - 1];
  case gate_op::const0: return false;
  case gate_op::const1: return true;
  case gate_op::not_: return !naive_value( c, w, g.a );
  case gate_op::and_: return naive_value( c, w, g.a ) && naive_value( c, w, g.b );
  case gate_op::or_: return naive_value( c, w, g.a ) || naive_value( c, w, g.b );
  case gate_op::xor_: return naive_value( c, w, g.a ) != naive_value( c, w, g.b );
  }
  return false;
}

inline std::vector<bool> bits_of( std::uint64_t value, std::size_t width )
{
  std::vector<bool> w( width );
  for ( std::size_t i = 0; i < width; ++i )
  {
    w[i] = ( ( value >> ( width - 1 - i ) ) & 1u ) != 0;
  }
  return w;
}

inline std::uint64_t naive_count( circuit const& c )
{
  std::uint64_t n = 0;
  for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << c.input_count() ); ++a )
  {
    n += naive_value( c, bits_of( a, c.input_count() ), c.output() ) ? 1 : 0;
  }
  return n;
}

/* counts assignments over all variables, literal by literal */
inline std::uint64_t naive_models( cnf_formula const& f )
{
  std::uint64_t n = 0;
  for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << f.var_count() ); ++a )
  {
    bool all = true;
    for ( auto const& cl : f.clauses() )
    {
      bool any = false;
      for ( auto lit : cl )
      {
        bool const v = ( ( a >> ( std::abs( lit ) - 1 ) ) & 1u ) != 0;
        any = any || ( lit > 0 ? v : !v );
      }
      all = all && any;
    }
    n += all ? 1 : 0;
  }
  return n;
}

/* random well-formed circuit; some inputs may stay unreferenced */
inline circuit random_circuit( std::mt19937_64& rng, std::size_t inputs, std::size_t internal_gates )
{
  std::vector<gate> gates;
  std::uniform_int_distribution<int> op_pick( 0, 9 );
  for ( std::size_t i = 0; i < internal_gates + 1; ++i )
  {
    auto const roll = op_pick( rng );
    if ( gates.empty() || roll <= 2 )
    {
      if ( inputs == 0 || roll == 0 )
      {
        gates.push_back( { ( rng() & 1 ) ? gate_op::const1 : gate_op::const0 } );
      }
      else
      {
        gates.push_back( { gate_op::input, static_cast<std::uint32_t>( rng() % inputs + 1 ) } );
      }
      continue;
    }
    auto const pick = [&] { return static_cast<signal>( rng() % gates.size() ); };
    switch ( roll )
    {
    case 3: gates.push_back( { gate_op::not_, 0, pick() } ); break;
    case 4:
    case 5: gates.push_back( { gate_op::and_, 0, pick(), pick() } ); break;
    case 6:
    case 7: gates.push_back( { gate_op::or_, 0, pick(), pick() } ); break;
    default: gates.push_back( { gate_op::xor_, 0, pick(), pick() } ); break;
    }
  }
  auto const output = static_cast<signal>( gates.size() - 1 );
  return circuit( inputs, std::move( gates ), output );
}

inline cnf_formula random_formula( std::mt19937_64& rng, std::size_t vars, std::size_t clauses, std::size_t width )
{
  std::vector<clause> out;
  for ( std::size_t i = 0; i < clauses; ++i )
  {
    clause cl;
    auto const len = rng() % ( width + 1 );
    for ( std::size_t t = 0; t < len && vars > 0; ++t )
    {
      auto const v = static_cast<literal>( rng() % vars + 1 );
      auto const lit = ( rng() & 1 ) ? v : -v;
      if ( std::find( cl.begin(), cl.end(), -lit ) == cl.end() && std::find( cl.begin(), cl.end(), lit ) == cl.end() )
      {
        cl.push_back( lit );
      }
    }
    if ( !cl.empty() )
    {
      out.push_back( std::move( cl ) );
    }
  }
  return cnf_formula( vars, rng() % ( vars + 1 ), std::move( out ) );
}

/*! Number of strictly increasing c-tuples drawn from `paths` (already sorted)
 *  whose j-th member has bit k equal to b. */
inline std::uint64_t listing_count( std::vector<bit_string> const& paths, std::uint64_t c, std::uint64_t j,
                                    std::uint64_t k, bool b )
{
  std::uint64_t total = 0;
  std::vector<std::size_t> pick;
  std::function<void( std::size_t )> rec = [&]( std::size_t from ) {
    if ( pick.size() == c )
    {
      total += paths[pick[j - 1]].at( k ) == b ? 1 : 0;
      return;
    }
    for ( auto i = from; i < paths.size(); ++i )
    {
      pick.push_back( i );
      rec( i + 1 );
      pick.pop_back();
    }
  };
  rec( 0 );
  return total;
}

} // namespace pcensus::testing
