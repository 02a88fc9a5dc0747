#include <pcensus/errors.hpp>
#include <pcensus/machines.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace pcensus
{

poly_bound::poly_bound( std::vector<std::uint64_t> coefficients ) : coefficients_( std::move( coefficients ) )
{
  if ( coefficients_.empty() )
  {
    throw construction_error( "polynomial needs at least one coefficient" );
  }
}

std::uint64_t poly_bound::operator()( std::uint64_t n ) const
{
  /* Horner; all terms non-negative so overflow is detectable step by step */
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 0;
  for ( auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it )
  {
    if ( n != 0 && acc > max / n )
    {
      throw resource_limit_error( "polynomial " + to_string() + " overflows at n = " + std::to_string( n ) );
    }
    acc *= n;
    if ( acc > max - *it )
    {
      throw resource_limit_error( "polynomial " + to_string() + " overflows at n = " + std::to_string( n ) );
    }
    acc += *it;
  }
  return acc;
}

std::string poly_bound::to_string() const
{
  std::string out;
  for ( std::size_t i = 0; i < coefficients_.size(); ++i )
  {
    if ( coefficients_[i] == 0 && coefficients_.size() > 1 )
    {
      continue;
    }
    if ( !out.empty() )
    {
      out += " + ";
    }
    out += std::to_string( coefficients_[i] );
    if ( i == 1 ) out += "n";
    if ( i > 1 ) out += "n^" + std::to_string( i );
  }
  return out.empty() ? "0" : out;
}

few_language::few_language( std::string name, poly_bound path_length, poly_bound census_bound,
                            verifier_generator generator, named_predicate decision )
    : name_( std::move( name ) ),
      p_( std::move( path_length ) ),
      q_( std::move( census_bound ) ),
      verifier_( std::move( generator ) ),
      decision_( std::move( decision ) )
{
  if ( !verifier_ || !decision_.fn )
  {
    throw construction_error( name_ + ": verifier generator and predicate are required" );
  }
  if ( p_( 1 ) < 1 )
  {
    throw construction_error( name_ + ": path length " + p_.to_string() + " must be at least 1 on nonempty inputs" );
  }
  for ( auto const* sample : { "0", "1", "10" } )
  {
    (void)this->verifier( bit_string::parse( sample ) );
  }
}

circuit few_language::verifier( bit_string const& x ) const
{
  auto const p = path_length( x );
  if ( p < 1 )
  {
    throw construction_error( name_ + ": path length is 0 on input \"" + x.to_string() + "\"" );
  }
  auto c = verifier_( x );
  if ( c.input_count() != p )
  {
    throw construction_error( name_ + ": verifier on \"" + x.to_string() + "\" has " +
                              std::to_string( c.input_count() ) + " inputs, path length is " + std::to_string( p ) );
  }
  return c;
}

few_language few_language::with_predicate( named_predicate decision ) const
{
  auto copy = *this;
  copy.decision_ = std::move( decision );
  return copy;
}

few_language few_language::with_census_bound( poly_bound census_bound ) const
{
  auto copy = *this;
  copy.q_ = std::move( census_bound );
  return copy;
}

std::uint64_t brute_force_f( few_language const& lang, bit_string const& x, std::size_t cap )
{
  return count_witnesses( lang.verifier( x ), cap );
}

std::vector<bit_string> brute_force_paths( few_language const& lang, bit_string const& x, std::size_t cap )
{
  return enumerate_witnesses( lang.verifier( x ), cap );
}

promise_check verify_promise( few_language const& lang, bit_string const& x, std::size_t cap )
{
  auto const f = brute_force_f( lang, x, cap );
  auto const bound = lang.census_bound( x );
  return { f <= bound, f, bound };
}

named_predicate parity_predicate()
{
  return { "parity", []( bit_string const&, std::uint64_t f ) { return f % 2 == 1; } };
}

named_predicate fewp_predicate()
{
  return { "fewp", []( bit_string const&, std::uint64_t f ) { return f > 0; } };
}

named_predicate is_zero_predicate()
{
  return { "is-zero", []( bit_string const&, std::uint64_t f ) { return f == 0; } };
}

few_language as_up( few_language const& lang )
{
  return lang.with_census_bound( poly_bound::constant( 1 ) ).with_predicate( fewp_predicate() );
}

few_language as_fewp( few_language const& lang )
{
  return lang.with_predicate( fewp_predicate() );
}

few_language make_const0( std::uint64_t path_length )
{
  return few_language(
      "const0", poly_bound::constant( path_length ), poly_bound::constant( 1 ),
      [path_length]( bit_string const& ) {
        circuit_builder builder( path_length );
        return builder.build( builder.constant( false ) );
      },
      fewp_predicate() );
}

few_language make_exact1( bit_string const& pattern )
{
  if ( pattern.empty() )
  {
    throw construction_error( "exact1: pattern must be nonempty" );
  }
  return few_language(
      "exact1", poly_bound::constant( pattern.length() ), poly_bound::constant( 1 ),
      [pattern]( bit_string const& ) {
        circuit_builder builder( pattern.length() );
        std::vector<signal> matches;
        for ( std::size_t k = 1; k <= pattern.length(); ++k )
        {
          matches.push_back( bit_equals( builder, builder.input( k ), pattern.at( k ) ) );
        }
        return builder.build( builder.and_all( matches ) );
      },
      fewp_predicate() );
}

few_language make_xor2()
{
  return few_language(
      "xor2", poly_bound::constant( 2 ), poly_bound::constant( 2 ),
      []( bit_string const& ) {
        circuit_builder builder( 2 );
        return builder.build( builder.xor_( builder.input( 1 ), builder.input( 2 ) ) );
      },
      fewp_predicate() );
}

few_language make_onehot()
{
  return few_language(
      "onehot", poly_bound::identity(), poly_bound::identity(),
      []( bit_string const& x ) {
        auto const n = x.length();
        circuit_builder builder( n );
        /* seen_one / seen_two over a left-to-right scan */
        signal seen_one = builder.constant( false );
        signal seen_two = builder.constant( false );
        for ( std::size_t k = 1; k <= n; ++k )
        {
          auto const bit = builder.input( k );
          seen_two = builder.or_( seen_two, builder.and_( seen_one, bit ) );
          seen_one = builder.or_( seen_one, bit );
        }
        return builder.build( builder.and_( seen_one, builder.not_( seen_two ) ) );
      },
      fewp_predicate() );
}

few_language make_subsetsum( std::uint64_t target, std::uint64_t bound )
{
  return few_language(
      "subsetsum", poly_bound::identity(), poly_bound::constant( bound ),
      [target]( bit_string const& x ) {
        auto const n = x.length();
        auto const max_sum = n * ( n + 1 ) / 2;
        auto const width = static_cast<std::size_t>( std::max( std::bit_width( max_sum ), std::bit_width( target ) ) ) + 1;

        circuit_builder builder( n );
        auto const zero = builder.constant( false );
        std::vector<signal> sum( width, zero ); /* least significant first */
        std::vector<signal> conditions;
        for ( std::size_t i = 1; i <= n; ++i )
        {
          auto const chosen = builder.input( i );
          if ( !x.at( i ) )
          {
            conditions.push_back( bit_equals( builder, chosen, false ) );
            continue;
          }
          /* ripple-carry add of (chosen ? i : 0) */
          signal carry = zero;
          for ( std::size_t t = 0; t < width; ++t )
          {
            auto const addend = ( ( i >> t ) & 1u ) ? chosen : zero;
            auto const half = builder.xor_( sum[t], addend );
            auto const next_carry = builder.or_( builder.and_( sum[t], addend ), builder.and_( carry, half ) );
            sum[t] = builder.xor_( half, carry );
            carry = next_carry;
          }
        }
        for ( std::size_t t = 0; t < width; ++t )
        {
          conditions.push_back( bit_equals( builder, sum[t], ( ( target >> t ) & 1u ) != 0 ) );
        }
        return builder.build( builder.and_all( conditions ) );
      },
      fewp_predicate() );
}

std::vector<std::string> machine_names()
{
  return { "const0", "exact1", "xor2", "onehot", "subsetsum" };
}

std::vector<std::string> predicate_names()
{
  return { "fewp", "parity", "is-zero" };
}

namespace
{

std::uint64_t param_or( std::span<std::uint64_t const> params, std::size_t i, std::uint64_t fallback )
{
  return i < params.size() ? params[i] : fallback;
}

void expect_at_most( std::string const& name, std::span<std::uint64_t const> params, std::size_t n )
{
  if ( params.size() > n )
  {
    throw construction_error( name + " takes at most " + std::to_string( n ) + " parameter(s), got " +
                              std::to_string( params.size() ) );
  }
}

} // namespace

few_language make_machine( std::string const& name, std::span<std::uint64_t const> params )
{
  if ( name == "const0" )
  {
    expect_at_most( name, params, 1 );
    return make_const0( param_or( params, 0, 2 ) );
  }
  if ( name == "exact1" )
  {
    expect_at_most( name, params, 2 );
    auto const width = param_or( params, 0, 2 );
    auto const value = param_or( params, 1, 2 );
    if ( width < 1 || width > 64 || ( width < 64 && value >> width != 0 ) )
    {
      throw construction_error( "exact1: value " + std::to_string( value ) + " does not fit width " +
                                std::to_string( width ) );
    }
    return make_exact1( bit_string::from_uint( value, width ) );
  }
  if ( name == "xor2" )
  {
    expect_at_most( name, params, 0 );
    return make_xor2();
  }
  if ( name == "onehot" )
  {
    expect_at_most( name, params, 0 );
    return make_onehot();
  }
  if ( name == "subsetsum" )
  {
    expect_at_most( name, params, 2 );
    return make_subsetsum( param_or( params, 0, 5 ), param_or( params, 1, 4 ) );
  }
  throw construction_error( "unknown machine \"" + name + "\"" );
}

named_predicate make_predicate( std::string const& name )
{
  if ( name == "fewp" || name == "nonzero" ) return fewp_predicate();
  if ( name == "parity" ) return parity_predicate();
  if ( name == "is-zero" ) return is_zero_predicate();
  throw construction_error( "unknown predicate \"" + name + "\"" );
}

} // namespace pcensus
