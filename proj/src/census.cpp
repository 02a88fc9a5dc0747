#include <pcensus/census.hpp>
#include <pcensus/detail/parallel.hpp>
#include <pcensus/errors.hpp>

#include <algorithm>

namespace pcensus
{

namespace
{

void check_key( few_language const& lang, bit_string const& x, query_key const& key )
{
  auto const p = lang.path_length( x );
  if ( key.c < 1 || key.j < 1 || key.j > key.c || key.k < 1 || key.k > p )
  {
    throw construction_error( "J-instance (c=" + std::to_string( key.c ) + ", j=" + std::to_string( key.j ) +
                              ", k=" + std::to_string( key.k ) + ") outside 1 <= j <= c, 1 <= k <= " +
                              std::to_string( p ) );
  }
}

} // namespace

circuit build_j_circuit( few_language const& lang, bit_string const& x, query_key const& key )
{
  check_key( lang, x, key );
  auto const verifier = lang.verifier( x );
  auto const p = static_cast<std::size_t>( lang.path_length( x ) );
  auto const c = static_cast<std::size_t>( key.c );

  circuit_builder builder( c * p );
  std::vector<std::vector<signal>> blocks( c );
  std::vector<signal> conjuncts;
  std::vector<std::size_t> positions( p );
  for ( std::size_t i = 0; i < c; ++i )
  {
    for ( std::size_t t = 0; t < p; ++t )
    {
      positions[t] = i * p + t + 1;
      blocks[i].push_back( builder.input( positions[t] ) );
    }
    conjuncts.push_back( builder.embed( verifier, positions ) );
  }
  for ( std::size_t i = 0; i + 1 < c; ++i )
  {
    conjuncts.push_back( less_than( builder, blocks[i], blocks[i + 1] ) );
  }
  conjuncts.push_back( bit_equals( builder, blocks[key.j - 1][key.k - 1], key.b ) );
  return builder.build( builder.and_all( conjuncts ) );
}

std::vector<query_key> battery_keys( few_language const& lang, bit_string const& x, census_limits const& limits )
{
  auto const p = lang.path_length( x );
  auto const q = lang.census_bound( x );
  if ( p > limits.max_path_length )
  {
    throw resource_limit_error( "path length " + std::to_string( p ) + " exceeds limit " +
                                std::to_string( limits.max_path_length ) );
  }
  if ( q > limits.max_census_bound )
  {
    throw resource_limit_error( "census bound " + std::to_string( q ) + " exceeds limit " +
                                std::to_string( limits.max_census_bound ) );
  }
  auto const total = p * q * ( q + 1 );
  if ( total > limits.max_queries )
  {
    throw resource_limit_error( "battery of " + std::to_string( total ) + " queries exceeds limit " +
                                std::to_string( limits.max_queries ) );
  }

  std::vector<query_key> keys;
  keys.reserve( total );
  for ( std::uint64_t c = 1; c <= q; ++c )
  {
    for ( std::uint64_t j = 1; j <= c; ++j )
    {
      for ( std::uint64_t k = 1; k <= p; ++k )
      {
        keys.push_back( { c, j, k, false } );
        keys.push_back( { c, j, k, true } );
      }
    }
  }
  return keys;
}

std::vector<query> generate_queries( few_language const& lang, bit_string const& x, census_limits const& limits )
{
  auto const keys = battery_keys( lang, x, limits );
  std::vector<std::optional<query>> built( keys.size() );
  detail::parallel_for( keys.size(), [&]( std::size_t i ) {
    built[i].emplace( query{ keys[i], tseitin_parsimonious( build_j_circuit( lang, x, keys[i] ) ),
                             canonical_id( x, keys[i] ) } );
  } );
  std::vector<query> queries;
  queries.reserve( keys.size() );
  for ( auto& q : built )
  {
    queries.push_back( std::move( *q ) );
  }
  return queries;
}

census_result census_result::inconsistent( std::string reason )
{
  census_result r;
  r.consistent = false;
  r.reason = std::move( reason );
  return r;
}

census_result decode_answers( few_language const& lang, bit_string const& x, answer_map const& answers )
{
  auto const keys = battery_keys( lang, x, { ~0ull, ~0ull, ~0ull } );
  if ( answers.size() != keys.size() )
  {
    throw protocol_error( "expected answers for " + std::to_string( keys.size() ) + " queries, got " +
                          std::to_string( answers.size() ) );
  }
  for ( auto const& key : keys )
  {
    if ( !answers.contains( key ) )
    {
      throw protocol_error( "no answer for " + canonical_id( x, key ) );
    }
  }

  std::uint64_t c_hat = 0;
  for ( auto const& [key, yes] : answers )
  {
    if ( yes )
    {
      c_hat = std::max( c_hat, key.c );
    }
  }

  census_result result;
  if ( c_hat == 0 )
  {
    result.f_hat = 0;
    result.member = lang.decide( x, 0 );
    result.consistent = true;
    return result;
  }

  auto const p = lang.path_length( x );
  std::vector<bit_string> paths;
  for ( std::uint64_t j = 1; j <= c_hat; ++j )
  {
    std::vector<bool> bits( p );
    for ( std::uint64_t k = 1; k <= p; ++k )
    {
      auto const zero = answers.at( { c_hat, j, k, false } );
      auto const one = answers.at( { c_hat, j, k, true } );
      if ( zero == one )
      {
        return census_result::inconsistent( std::string( zero ? "ambiguous bit" : "missing bit" ) + " at c=" +
                                            std::to_string( c_hat ) + " j=" + std::to_string( j ) +
                                            " k=" + std::to_string( k ) );
      }
      bits[k - 1] = one;
    }
    paths.emplace_back( std::move( bits ) );
  }

  for ( std::size_t i = 0; i + 1 < paths.size(); ++i )
  {
    if ( !( paths[i] < paths[i + 1] ) )
    {
      return census_result::inconsistent( "paths not strictly increasing at j=" + std::to_string( i + 1 ) );
    }
  }
  auto const verifier = lang.verifier( x );
  for ( std::size_t i = 0; i < paths.size(); ++i )
  {
    if ( !evaluate( verifier, paths[i] ) )
    {
      return census_result::inconsistent( "reconstructed path j=" + std::to_string( i + 1 ) + " (" +
                                          paths[i].to_string() + ") is not accepting" );
    }
  }

  result.f_hat = c_hat;
  result.paths = std::move( paths );
  result.member = lang.decide( x, c_hat );
  result.consistent = true;
  return result;
}

census_result run_pipeline( few_language const& lang, bit_string const& x, batch_oracle const& oracle,
                            oracle_log& log, pipeline_options const& options )
{
  auto const battery = generate_queries( lang, x, options.limits );
  auto const answers = answer_batch( battery, oracle, log );
  auto result = decode_answers( lang, x, answers );
  if ( options.promise_guard )
  {
    auto const promise = verify_promise( lang, x, options.guard_cap );
    if ( !promise.ok )
    {
      return census_result::inconsistent( "promise violated: f(x) = " + std::to_string( promise.census ) +
                                          " exceeds q(|x|) = " + std::to_string( promise.bound ) );
    }
  }
  return result;
}

census_result run_pipeline( few_language const& lang, bit_string const& x, q_predicate const& q, oracle_log& log,
                            pipeline_options const& options )
{
  return run_pipeline( lang, x, usatq_oracle( q ), log, options );
}

} // namespace pcensus
