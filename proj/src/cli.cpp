#include <pcensus/census.hpp>
#include <pcensus/cli.hpp>
#include <pcensus/errors.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace pcensus::cli
{

namespace
{

struct run_config
{
  std::string machine;
  std::vector<std::uint64_t> params;
  std::string input;
  std::string predicate = "fewp";
  std::string q = "anti-sat";
  std::uint64_t seed = 1;
  std::size_t cap = default_enumeration_cap;
  std::string out_dir;
  std::string trace_file;
  std::optional<std::uint64_t> q_bound;
  std::string external_counter;
  bool promise_guard = false;
};

/* everything resolved from a run_config, before any work is done */
struct session
{
  few_language lang;
  bit_string x;
  q_predicate q;
  oracle_options oracle;
  pipeline_options pipeline;
};

q_predicate make_q( std::string const& name, std::uint64_t seed )
{
  if ( name == "const-no" ) return q_predicate::const_no();
  if ( name == "const-yes" ) return q_predicate::const_yes();
  if ( name == "anti-sat" ) return q_predicate::anti_sat();
  if ( name == "random" ) return q_predicate::seeded_random( seed );
  throw construction_error( "unknown Q \"" + name + "\" (expected const-no, const-yes, anti-sat or random)" );
}

session resolve( run_config const& config )
{
  if ( config.input.empty() )
  {
    throw construction_error( "--input must be a nonempty string over {0,1}" );
  }
  if ( config.cap == 0 )
  {
    throw construction_error( "--cap must be positive" );
  }
  auto x = bit_string::parse( config.input );
  auto q = make_q( config.q, config.seed );
  auto decision = make_predicate( config.predicate );
  auto lang = make_machine( config.machine, config.params ).with_predicate( std::move( decision ) );
  if ( config.q_bound )
  {
    lang = lang.with_census_bound( poly_bound::constant( *config.q_bound ) );
  }
  oracle_options oracle;
  if ( !config.external_counter.empty() )
  {
    oracle.cross_check.emplace( config.external_counter );
  }
  pipeline_options pipeline;
  pipeline.promise_guard = config.promise_guard;
  pipeline.guard_cap = config.cap;
  return { std::move( lang ), std::move( x ), std::move( q ), std::move( oracle ), pipeline };
}

std::string join_paths( std::vector<bit_string> const& paths )
{
  std::string out;
  for ( auto const& path : paths )
  {
    if ( !out.empty() ) out += ' ';
    out += path.to_string();
  }
  return out.empty() ? "-" : out;
}

std::string describe( census_result const& r )
{
  if ( !r.ok() )
  {
    return "inconsistent: " + r.reason;
  }
  return "f_hat=" + std::to_string( *r.f_hat ) + " paths=" + join_paths( r.paths ) + " member=" +
         ( *r.member ? "1" : "0" );
}

void write_trace( std::string const& file, std::vector<query> const& battery, answer_map const& answers )
{
  std::ofstream out( file, std::ios::binary );
  if ( !out )
  {
    throw error( "cannot write trace file " + file );
  }
  out << "c\tj\tk\tb\tcnf_vars\tcnf_clauses\tanswer\n";
  for ( auto const& q : battery )
  {
    out << q.key.c << '\t' << q.key.j << '\t' << q.key.k << '\t' << ( q.key.b ? 1 : 0 ) << '\t'
        << q.formula.var_count() << '\t' << q.formula.clauses().size() << '\t' << ( answers.at( q.key ) ? 1 : 0 )
        << '\n';
  }
}

int cmd_run( run_config const& config, std::ostream& out )
{
  auto s = resolve( config );
  usatq_oracle oracle( s.q, s.oracle );
  oracle_log log;

  /* same steps as run_pipeline, kept apart so the answers can be traced */
  auto const battery = generate_queries( s.lang, s.x, s.pipeline.limits );
  auto const answers = answer_batch( battery, oracle, log );
  auto result = decode_answers( s.lang, s.x, answers );
  if ( s.pipeline.promise_guard )
  {
    auto const promise = verify_promise( s.lang, s.x, s.pipeline.guard_cap );
    if ( !promise.ok )
    {
      result = census_result::inconsistent( "promise violated: f(x) = " + std::to_string( promise.census ) +
                                            " exceeds q(|x|) = " + std::to_string( promise.bound ) );
    }
  }
  if ( !config.trace_file.empty() )
  {
    write_trace( config.trace_file, battery, answers );
  }

  out << "machine     " << s.lang.name() << '\n';
  out << "input       " << s.x.to_string() << '\n';
  out << "predicate   " << s.lang.predicate_name() << '\n';
  out << "oracle      " << oracle.name() << '\n';
  out << "p(|x|)      " << s.lang.path_length( s.x ) << '\n';
  out << "q(|x|)      " << s.lang.census_bound( s.x ) << '\n';
  out << "queries     " << battery.size() << '\n';
  out << "batches     " << log.size() << '\n';
  if ( !result.ok() )
  {
    out << "consistent  inconsistent: " << result.reason << '\n';
    return exit_inconsistent;
  }
  out << "f_hat       " << *result.f_hat << '\n';
  out << "paths       " << join_paths( result.paths ) << '\n';
  out << "member      " << ( *result.member ? 1 : 0 ) << '\n';
  out << "consistent  ok\n";
  return exit_ok;
}

int cmd_queries( run_config const& config, std::ostream& out )
{
  auto s = resolve( config );
  auto const battery = generate_queries( s.lang, s.x, s.pipeline.limits );
  out << "c\tj\tk\tb\tcnf_vars\tcnf_clauses\tid\n";
  for ( auto const& q : battery )
  {
    out << q.key.c << '\t' << q.key.j << '\t' << q.key.k << '\t' << ( q.key.b ? 1 : 0 ) << '\t'
        << q.formula.var_count() << '\t' << q.formula.clauses().size() << '\t' << q.canonical_id << '\n';
  }
  return exit_ok;
}

int cmd_emit_dimacs( run_config const& config, std::ostream& out, std::ostream& err )
{
  namespace fs = std::filesystem;
  if ( config.out_dir.empty() )
  {
    err << "emit-dimacs requires --out DIR\n";
    return exit_usage;
  }
  auto s = resolve( config );
  fs::path const dir( config.out_dir );
  if ( fs::exists( dir ) && ( !fs::is_directory( dir ) || !fs::is_empty( dir ) ) )
  {
    err << "refusing to write into non-empty " << dir.string() << '\n';
    return exit_usage;
  }
  auto const battery = generate_queries( s.lang, s.x, s.pipeline.limits );
  fs::create_directories( dir );
  for ( auto const& q : battery )
  {
    std::ofstream file( dir / ( q.canonical_id + ".cnf" ), std::ios::binary );
    file << to_dimacs( q.formula );
    if ( !file )
    {
      throw error( "cannot write " + ( dir / ( q.canonical_id + ".cnf" ) ).string() );
    }
  }
  out << "wrote " << battery.size() << " files to " << dir.string() << '\n';
  return exit_ok;
}

int cmd_verify( run_config const& config, std::ostream& out )
{
  auto s = resolve( config );
  oracle_log log;
  auto const result = run_pipeline( s.lang, s.x, usatq_oracle( s.q, s.oracle ), log, s.pipeline );
  auto const battery_size = battery_keys( s.lang, s.x, s.pipeline.limits ).size();
  auto const f = brute_force_f( s.lang, s.x, config.cap );
  auto const paths = brute_force_paths( s.lang, s.x, config.cap );
  auto const member = s.lang.decide( s.x, f );
  auto const bound = s.lang.census_bound( s.x );

  auto const batches = log.batches();
  bool const one_batch = batches.size() == 1 && batches.front().ids.size() == battery_size;
  bool const f_match = result.ok() && *result.f_hat == f;
  bool const paths_match = result.ok() && result.paths == paths;
  bool const member_match = result.ok() && *result.member == member;

  auto const mark = []( bool ok ) { return ok ? "match" : "MISMATCH"; };
  out << "promise     " << ( f <= bound ? "ok" : "violated" ) << " (f=" << f << ", q=" << bound << ")\n";
  out << "pipeline    " << describe( result ) << '\n';
  out << "f_hat       " << mark( f_match ) << " (brute force " << f << ")\n";
  out << "paths       " << mark( paths_match ) << " (brute force " << join_paths( paths ) << ")\n";
  out << "member      " << mark( member_match ) << " (brute force " << ( member ? 1 : 0 ) << ")\n";
  out << "batches     " << batches.size() << ( one_batch ? " (single batch = battery)" : " (PROTOCOL)" ) << '\n';

  if ( f > bound )
  {
    out << "verdict     promise violation\n";
    return exit_inconsistent;
  }
  bool const all = f_match && paths_match && member_match && one_batch;
  out << "verdict     " << ( all ? "all-match" : "MISMATCH" ) << '\n';
  return all ? exit_ok : exit_mismatch;
}

int cmd_q_sweep( run_config const& config, std::ostream& out )
{
  auto s = resolve( config );
  std::optional<census_result> first;
  bool identical = true;
  bool all_ok = true;
  out << "Q\tresult\n";
  for ( auto const& q : standard_q_family( config.seed ) )
  {
    oracle_log log;
    auto const result = run_pipeline( s.lang, s.x, usatq_oracle( q, s.oracle ), log, s.pipeline );
    out << q.name() << '\t' << describe( result ) << '\n';
    if ( !first )
    {
      first = result;
    }
    identical = identical && result == *first;
    all_ok = all_ok && result.ok();
  }
  out << "Q-independent: " << ( identical ? "yes" : "no" ) << '\n';
  if ( !identical )
  {
    return exit_mismatch;
  }
  return all_ok ? exit_ok : exit_inconsistent;
}

} // namespace

int run( std::span<std::string const> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Parallel census over a USAT_Q oracle" };
  app.require_subcommand( 1 );
  app.fallthrough();
  app.set_config( "--config", "", "key=value configuration file" );

  run_config config;
  app.add_option( "--machine", config.machine, "machine name" )->required();
  app.add_option( "--param", config.params, "machine parameter (repeatable)" );
  app.add_option( "--input", config.input, "input bit string" )->required();
  app.add_option( "--r", config.predicate, "decision predicate: fewp, parity, is-zero" );
  app.add_option( "--q", config.q, "Q predicate: const-no, const-yes, anti-sat, random" );
  app.add_option( "--seed", config.seed, "seed for Q = random and the first q-sweep seed" );
  app.add_option( "--cap", config.cap, "enumeration cap for brute-force checks" );
  app.add_option( "--out", config.out_dir, "output directory for emit-dimacs" );
  app.add_option( "--trace", config.trace_file, "TSV trace of the oracle batch (run)" );
  app.add_option( "--q-bound", config.q_bound, "override the census bound with a constant" );
  app.add_option( "--external-counter", config.external_counter,
                  "command that reads DIMACS on stdin and prints a model count; cross-checks every query" );
  app.add_flag( "--promise-guard", config.promise_guard, "report inconsistent when f(x) > q(|x|)" );

  auto* run_cmd = app.add_subcommand( "run", "run the pipeline and print the census" );
  auto* queries_cmd = app.add_subcommand( "queries", "list the query battery without consulting the oracle" );
  auto* emit_cmd = app.add_subcommand( "emit-dimacs", "write one DIMACS file per query" );
  auto* verify_cmd = app.add_subcommand( "verify", "compare the pipeline with brute force" );
  auto* sweep_cmd = app.add_subcommand( "q-sweep", "run the pipeline under every Q of the standard family" );

  std::vector<std::string> reversed( args.rbegin(), args.rend() - ( args.empty() ? 0 : 1 ) );
  try
  {
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( CLI::ParseError const& e )
  {
    err << e.what() << '\n';
    return exit_usage;
  }

  try
  {
    if ( run_cmd->parsed() ) return cmd_run( config, out );
    if ( queries_cmd->parsed() ) return cmd_queries( config, out );
    if ( emit_cmd->parsed() ) return cmd_emit_dimacs( config, out, err );
    if ( verify_cmd->parsed() ) return cmd_verify( config, out );
    if ( sweep_cmd->parsed() ) return cmd_q_sweep( config, out );
  }
  catch ( resource_limit_error const& e )
  {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource_limit;
  }
  catch ( construction_error const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( cross_check_error const& e )
  {
    err << "cross-check failed: " << e.what() << '\n';
    return exit_mismatch;
  }
  catch ( protocol_error const& e )
  {
    err << "protocol error: " << e.what() << '\n';
    return exit_inconsistent;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

int main( int argc, char** argv )
{
  std::vector<std::string> args( argv, argv + argc );
  return run( args, std::cout, std::cerr );
}

} // namespace pcensus::cli
