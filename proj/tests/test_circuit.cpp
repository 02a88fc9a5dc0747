#include <doctest.h>

#include "support/oracles.hpp"

#include <pcensus/circuit.hpp>
#include <pcensus/errors.hpp>

#include <algorithm>
#include <numeric>

using namespace pcensus;
using pcensus::testing::naive_count;

namespace
{

circuit two_input( gate_op op )
{
  circuit_builder b( 2 );
  auto const x1 = b.input( 1 ), x2 = b.input( 2 );
  switch ( op )
  {
  case gate_op::and_: return b.build( b.and_( x1, x2 ) );
  case gate_op::or_: return b.build( b.or_( x1, x2 ) );
  default: return b.build( b.xor_( x1, x2 ) );
  }
}

circuit exactly_one_of_three()
{
  circuit_builder b( 3 );
  auto const x1 = b.input( 1 ), x2 = b.input( 2 ), x3 = b.input( 3 );
  auto const odd = b.xor_( b.xor_( x1, x2 ), x3 );
  auto const all = b.and_( b.and_( x1, x2 ), x3 );
  return b.build( b.and_( odd, b.not_( all ) ) );
}

bit_string bits( char const* s )
{
  return bit_string::parse( s );
}

} // namespace

TEST_CASE( "bit_string indexing and order" )
{
  auto const s = bits( "0110" );
  CHECK( s.length() == 4 );
  CHECK( s.at( 1 ) == false );
  CHECK( s.at( 2 ) == true );
  CHECK_THROWS_AS( s.at( 0 ), construction_error );
  CHECK_THROWS_AS( s.at( 5 ), construction_error );
  CHECK_THROWS_AS( bit_string::parse( "01a" ), construction_error );

  for ( std::uint64_t a = 0; a < 16; ++a )
  {
    for ( std::uint64_t b = 0; b < 16; ++b )
    {
      CHECK( ( bit_string::from_uint( a, 4 ) < bit_string::from_uint( b, 4 ) ) == ( a < b ) );
    }
    CHECK( bit_string::from_uint( a, 4 ).to_uint() == a );
  }
}

TEST_CASE( "evaluate" )
{
  CHECK( evaluate( two_input( gate_op::and_ ), bits( "11" ) ) );
  CHECK_FALSE( evaluate( two_input( gate_op::and_ ), bits( "10" ) ) );
  CHECK( evaluate( two_input( gate_op::xor_ ), bits( "01" ) ) );

  SUBCASE( "length mismatch" )
  {
    CHECK_THROWS_AS( evaluate( two_input( gate_op::and_ ), bits( "1" ) ), input_arity_error );
    CHECK_THROWS_AS( evaluate( two_input( gate_op::and_ ), bits( "101" ) ), input_arity_error );
  }

  SUBCASE( "repeated calls agree" )
  {
    auto const c = exactly_one_of_three();
    for ( std::uint64_t a = 0; a < 8; ++a )
    {
      auto const w = bit_string::from_uint( a, 3 );
      auto const first = evaluate( c, w );
      for ( int rep = 0; rep < 3; ++rep )
      {
        CHECK( evaluate( c, w ) == first );
      }
    }
  }
}

TEST_CASE( "circuit well-formedness" )
{
  CHECK_THROWS_AS( circuit( 2, { { gate_op::and_, 0, 0, 1 } }, 0 ), construction_error );
  CHECK_THROWS_AS( circuit( 2, { { gate_op::input, 3 } }, 0 ), construction_error );
  CHECK_THROWS_AS( circuit( 2, { { gate_op::input, 0 } }, 0 ), construction_error );
  CHECK_THROWS_AS( circuit( 2, { { gate_op::input, 1 } }, 1 ), construction_error );
  CHECK_THROWS_AS( circuit( 2, { { gate_op::input, 1 }, { gate_op::not_, 0, 1 } }, 1 ), construction_error );
  CHECK_NOTHROW( circuit( 2, { { gate_op::input, 1 }, { gate_op::not_, 0, 0 } }, 1 ) );

  circuit_builder b( 2 );
  CHECK_THROWS_AS( b.input( 3 ), construction_error );
  CHECK_THROWS_AS( b.not_( 7 ), construction_error );
  CHECK( b.input( 1 ) == b.input( 1 ) );
}

TEST_CASE( "count_witnesses" )
{
  circuit_builder zero( 2 );
  CHECK( count_witnesses( zero.build( zero.constant( false ) ) ) == 0 );
  CHECK( count_witnesses( two_input( gate_op::xor_ ) ) == 2 );
  CHECK( count_witnesses( exactly_one_of_three() ) == 3 );

  SUBCASE( "cap" )
  {
    circuit_builder wide( 25 );
    auto const c = wide.build( wide.input( 1 ) );
    CHECK_THROWS_AS( count_witnesses( c ), resource_limit_error );
    CHECK( count_witnesses( c, 25 ) == ( std::uint64_t{ 1 } << 24 ) );
  }

  SUBCASE( "unreferenced inputs double the count" )
  {
    circuit_builder b( 5 );
    auto const c = b.build( b.and_( b.input( 2 ), b.input( 4 ) ) );
    CHECK( count_witnesses( c ) == 8 );
  }

  SUBCASE( "enumerate_witnesses lists the XOR witnesses in order" )
  {
    auto const paths = enumerate_witnesses( two_input( gate_op::xor_ ) );
    REQUIRE( paths.size() == 2 );
    CHECK( paths[0] == bits( "01" ) );
    CHECK( paths[1] == bits( "10" ) );
  }
}

TEST_CASE( "count_witnesses agrees with an independent naive evaluator" )
{
  std::mt19937_64 rng( 20240611 );
  for ( int round = 0; round < 300; ++round )
  {
    auto const inputs = static_cast<std::size_t>( rng() % 13 );
    auto const c = testing::random_circuit( rng, inputs, rng() % 30 );
    auto const expected = naive_count( c );
    CHECK( count_witnesses( c ) == expected );
    CHECK( count_witnesses_pruned( c ) == expected );
    CHECK( enumerate_witnesses( c ).size() == expected );
  }
}

TEST_CASE( "count_witnesses_pruned budget" )
{
  circuit_builder b( 20 );
  auto acc = b.input( 1 );
  for ( std::size_t i = 2; i <= 20; ++i )
  {
    acc = b.xor_( acc, b.input( i ) );
  }
  auto const parity = b.build( acc );
  CHECK( count_witnesses_pruned( parity ) == ( std::uint64_t{ 1 } << 19 ) );
  CHECK_THROWS_AS( count_witnesses_pruned( parity, 1000 ), resource_limit_error );
}

TEST_CASE( "build_less_than" )
{
  std::vector<std::size_t> const a2{ 1, 2 }, b2{ 3, 4 };
  auto const lt = build_less_than( 4, a2, b2 );
  CHECK( evaluate( lt, bits( "0110" ) ) );
  CHECK_FALSE( evaluate( lt, bits( "1010" ) ) );
  CHECK( count_witnesses( lt ) == 6 );

  SUBCASE( "irreflexive at every width" )
  {
    for ( std::size_t width = 1; width <= 4; ++width )
    {
      std::vector<std::size_t> a( width ), b( width );
      std::iota( a.begin(), a.end(), 1 );
      std::iota( b.begin(), b.end(), width + 1 );
      auto const c = build_less_than( 2 * width, a, b );
      for ( std::uint64_t v = 0; v < ( 1u << width ); ++v )
      {
        auto const w = bit_string::from_uint( ( v << width ) | v, 2 * width );
        CHECK_FALSE( evaluate( c, w ) );
      }
    }
  }

  SUBCASE( "matches unsigned comparison, widths 1..4, exhaustive" )
  {
    for ( std::size_t width = 1; width <= 4; ++width )
    {
      std::vector<std::size_t> a( width ), b( width );
      std::iota( a.begin(), a.end(), 1 );
      std::iota( b.begin(), b.end(), width + 1 );
      auto const c = build_less_than( 2 * width, a, b );
      for ( std::uint64_t x = 0; x < ( 1u << width ); ++x )
      {
        for ( std::uint64_t y = 0; y < ( 1u << width ); ++y )
        {
          CHECK( evaluate( c, bit_string::from_uint( ( x << width ) | y, 2 * width ) ) == ( x < y ) );
        }
      }
    }
  }

  SUBCASE( "operands may interleave and reuse the host space" )
  {
    std::vector<std::size_t> const a{ 3, 1 }, b{ 2, 4 };
    auto const c = build_less_than( 5, a, b );
    for ( std::uint64_t v = 0; v < 32; ++v )
    {
      auto const w = bit_string::from_uint( v, 5 );
      auto const av = ( w.at( 3 ) ? 2 : 0 ) + ( w.at( 1 ) ? 1 : 0 );
      auto const bv = ( w.at( 2 ) ? 2 : 0 ) + ( w.at( 4 ) ? 1 : 0 );
      CHECK( evaluate( c, w ) == ( av < bv ) );
    }
  }

  std::vector<std::size_t> const one{ 1 }, none{};
  CHECK_THROWS_AS( build_less_than( 4, a2, one ), construction_error );
  CHECK_THROWS_AS( build_less_than( 4, none, none ), construction_error );
}

TEST_CASE( "build_bit_equals" )
{
  auto const eq1 = build_bit_equals( 1, 1, true );
  auto const eq0 = build_bit_equals( 1, 1, false );
  CHECK( evaluate( eq1, bits( "1" ) ) );
  CHECK_FALSE( evaluate( eq0, bits( "1" ) ) );
  CHECK_THROWS_AS( build_bit_equals( 2, 3, true ), construction_error );

  SUBCASE( "composition with less_than keeps witness counts" )
  {
    std::vector<std::size_t> const a{ 1, 2 }, b{ 3, 4 };
    for ( std::size_t index = 1; index <= 4; ++index )
    {
      for ( bool value : { false, true } )
      {
        std::vector<circuit> parts{ build_less_than( 4, a, b ), build_bit_equals( 4, index, value ) };
        auto const both = conjoin( 4, parts );
        CHECK( count_witnesses( both ) == naive_count( both ) );
        /* the naive evaluator is run on each part separately */
        std::uint64_t expected = 0;
        for ( std::uint64_t v = 0; v < 16; ++v )
        {
          auto const w = testing::bits_of( v, 4 );
          expected += ( testing::naive_value( parts[0], w, parts[0].output() ) &&
                        testing::naive_value( parts[1], w, parts[1].output() ) )
                          ? 1
                          : 0;
        }
        CHECK( count_witnesses( both ) == expected );
      }
    }
  }
}

TEST_CASE( "conjoin" )
{
  CHECK( count_witnesses( conjoin( 2, {} ) ) == 4 );

  auto const x = two_input( gate_op::xor_ );
  std::vector<circuit> single{ x };
  auto const same = conjoin( 2, single );
  for ( std::uint64_t v = 0; v < 4; ++v )
  {
    CHECK( evaluate( same, bit_string::from_uint( v, 2 ) ) == evaluate( x, bit_string::from_uint( v, 2 ) ) );
  }

  std::vector<circuit> pair{ x, build_bit_equals( 2, 1, false ) };
  auto const only01 = conjoin( 2, pair );
  CHECK( count_witnesses( only01 ) == 1 );
  CHECK( enumerate_witnesses( only01 ).front() == bits( "01" ) );

  std::vector<circuit> mixed{ x, build_bit_equals( 3, 1, false ) };
  CHECK_THROWS_AS( conjoin( 2, mixed ), construction_error );

  SUBCASE( "permuting fragments keeps the witness set" )
  {
    std::mt19937_64 rng( 7 );
    for ( int round = 0; round < 40; ++round )
    {
      std::vector<circuit> fragments;
      for ( int i = 0; i < 4; ++i )
      {
        fragments.push_back( testing::random_circuit( rng, 6, 8 ) );
      }
      auto const reference = enumerate_witnesses( conjoin( 6, fragments ) );
      std::vector<int> order{ 0, 1, 2, 3 };
      while ( std::next_permutation( order.begin(), order.end() ) )
      {
        std::vector<circuit> permuted;
        for ( auto i : order )
        {
          permuted.push_back( fragments[i] );
        }
        CHECK( enumerate_witnesses( conjoin( 6, permuted ) ) == reference );
      }
      /* regrouping: (f0 & f1) & (f2 & f3) */
      std::vector<circuit> left{ fragments[0], fragments[1] }, right{ fragments[2], fragments[3] };
      std::vector<circuit> grouped{ conjoin( 6, left ), conjoin( 6, right ) };
      CHECK( enumerate_witnesses( conjoin( 6, grouped ) ) == reference );
    }
  }
}
