#include <pcensus/detail/parallel.hpp>
#include <pcensus/errors.hpp>
#include <pcensus/oracle.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace pcensus
{

q_predicate q_predicate::seeded_random( std::uint64_t seed )
{
  q_predicate q( kind::seeded_random );
  q.seed_ = seed;
  return q;
}

q_predicate q_predicate::member_list( std::set<std::string> dimacs_members )
{
  q_predicate q( kind::member_list );
  q.members_ = std::move( dimacs_members );
  return q;
}

std::string q_predicate::name() const
{
  switch ( kind_ )
  {
  case kind::const_no: return "const-no";
  case kind::const_yes: return "const-yes";
  case kind::seeded_random: return "random:" + std::to_string( seed_ );
  case kind::anti_sat: return "anti-sat";
  case kind::member_list: return "member-list:" + std::to_string( members_.size() );
  }
  return "?";
}

bool q_predicate::operator()( cnf_formula const& f, std::string_view dimacs ) const
{
  switch ( kind_ )
  {
  case kind::const_no: return false;
  case kind::const_yes: return true;
  case kind::seeded_random: return ( fnv1a_splitmix64( seed_, dimacs ) >> 63 ) != 0;
  case kind::anti_sat: return count_models_dpll( f, { .saturate_at = 1 } ) == 0;
  case kind::member_list: return members_.contains( std::string( dimacs ) );
  }
  return false;
}

std::vector<q_predicate> standard_q_family( std::uint64_t first_seed )
{
  return { q_predicate::const_no(),
           q_predicate::const_yes(),
           q_predicate::anti_sat(),
           q_predicate::seeded_random( first_seed ),
           q_predicate::seeded_random( first_seed + 1 ),
           q_predicate::seeded_random( first_seed + 2 ) };
}

std::uint64_t fnv1a_splitmix64( std::uint64_t seed, std::string_view bytes )
{
  std::uint64_t h = 0xcbf29ce484222325ull ^ ( seed * 0x9E3779B97F4A7C15ull );
  for ( unsigned char byte : bytes )
  {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

std::uint64_t external_counter::count( std::string const& dimacs ) const
{
  auto path = ( std::filesystem::temp_directory_path() / "pcensus-XXXXXX" ).string();
  auto const fd = ::mkstemp( path.data() );
  if ( fd < 0 )
  {
    throw error( "external counter: cannot create temporary file" );
  }
  ::close( fd );
  struct remove_on_exit
  {
    std::string path;
    ~remove_on_exit() { std::filesystem::remove( path ); }
  } cleanup{ path };
  {
    std::ofstream out( path, std::ios::binary );
    out << dimacs;
  }

  auto const command = command_ + " < '" + path + "'";
  auto* pipe = ::popen( command.c_str(), "r" );
  if ( !pipe )
  {
    throw error( "external counter: cannot run \"" + command_ + "\"" );
  }
  std::string output;
  char buffer[256];
  while ( auto n = std::fread( buffer, 1, sizeof buffer, pipe ) )
  {
    output.append( buffer, n );
  }
  auto const status = ::pclose( pipe );
  if ( status != 0 )
  {
    throw error( "external counter \"" + command_ + "\" exited with status " + std::to_string( status ) );
  }

  auto const begin = output.find_first_not_of( " \t\r\n" );
  auto const end = output.find_last_not_of( " \t\r\n" );
  std::uint64_t value = 0;
  if ( begin != std::string::npos )
  {
    auto const* first = output.data() + begin;
    auto const* last = output.data() + end + 1;
    auto const [ptr, ec] = std::from_chars( first, last, value );
    if ( ec == std::errc{} && ptr == last )
    {
      return value;
    }
  }
  throw error( "external counter \"" + command_ + "\" printed \"" + output + "\", expected a decimal count" );
}

bool usatq_answer( cnf_formula const& f, q_predicate const& q, oracle_options const& options )
{
  auto counting = options.counting;
  counting.saturate_at = 2;
  auto const models = count_models_dpll( f, counting );
  auto const dimacs = to_dimacs( f );
  if ( options.cross_check )
  {
    auto const external = std::min<std::uint64_t>( options.cross_check->count( dimacs ), 2 );
    if ( external != models )
    {
      throw cross_check_error( "external counter reports " + std::to_string( external ) + " (saturated at 2), internal count is " +
                   std::to_string( models ) );
    }
  }
  if ( models <= 1 )
  {
    return models == 1;
  }
  return q( f, dimacs );
}

std::vector<bool> usatq_oracle::answer( std::span<query const> queries ) const
{
  std::vector<char> verdicts( queries.size() );
  detail::parallel_for( queries.size(), [&]( std::size_t i ) {
    try
    {
      verdicts[i] = usatq_answer( queries[i].formula, q_, options_ ) ? 1 : 0;
    }
    catch ( resource_limit_error const& e )
    {
      throw resource_limit_error( queries[i].canonical_id + ": " + e.what() );
    }
  } );
  return { verdicts.begin(), verdicts.end() };
}

void oracle_log::append( batch_record record )
{
  std::lock_guard lock( mutex_ );
  batches_.push_back( std::move( record ) );
}

std::vector<batch_record> oracle_log::batches() const
{
  std::lock_guard lock( mutex_ );
  return batches_;
}

std::size_t oracle_log::size() const
{
  std::lock_guard lock( mutex_ );
  return batches_.size();
}

answer_map answer_batch( std::span<query const> queries, batch_oracle const& oracle, oracle_log& log )
{
  auto const verdicts = oracle.answer( queries );
  if ( verdicts.size() != queries.size() )
  {
    throw protocol_error( oracle.name() + " returned " + std::to_string( verdicts.size() ) + " verdicts for " +
                          std::to_string( queries.size() ) + " queries" );
  }
  batch_record record;
  answer_map answers;
  for ( std::size_t i = 0; i < queries.size(); ++i )
  {
    if ( !answers.emplace( queries[i].key, verdicts[i] ).second )
    {
      throw protocol_error( "batch repeats query " + queries[i].canonical_id );
    }
    record.ids.push_back( queries[i].canonical_id );
    record.verdicts.push_back( verdicts[i] );
  }
  log.append( std::move( record ) );
  return answers;
}

answer_map answer_batch( std::span<query const> queries, q_predicate const& q, oracle_log& log )
{
  return answer_batch( queries, usatq_oracle( q ), log );
}

} // namespace pcensus
