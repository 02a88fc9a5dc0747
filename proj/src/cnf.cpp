#include <pcensus/cnf.hpp>
#include <pcensus/errors.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <optional>

namespace pcensus
{

cnf_formula::cnf_formula( std::size_t var_count, std::size_t witness_var_count, std::vector<clause> clauses )
    : var_count_( var_count ), witness_var_count_( witness_var_count ), clauses_( std::move( clauses ) )
{
  if ( witness_var_count_ > var_count_ )
  {
    throw construction_error( "witness variable count " + std::to_string( witness_var_count_ ) +
                              " exceeds variable count " + std::to_string( var_count_ ) );
  }
  if ( var_count_ > static_cast<std::size_t>( std::numeric_limits<literal>::max() - 1 ) )
  {
    throw construction_error( "too many variables" );
  }
  for ( std::size_t i = 0; i < clauses_.size(); ++i )
  {
    auto const& cl = clauses_[i];
    for ( auto lit : cl )
    {
      if ( lit == 0 || static_cast<std::size_t>( std::abs( lit ) ) > var_count_ )
      {
        throw construction_error( "clause " + std::to_string( i + 1 ) + ": literal " + std::to_string( lit ) +
                                  " outside +-1.." + std::to_string( var_count_ ) );
      }
      if ( std::find( cl.begin(), cl.end(), -lit ) != cl.end() )
      {
        throw construction_error( "clause " + std::to_string( i + 1 ) + " is tautological (contains " +
                                  std::to_string( std::abs( lit ) ) + " and its negation)" );
      }
    }
  }
}

cnf_formula cnf_formula::constant_false( std::size_t var_count, std::size_t witness_var_count )
{
  return cnf_formula( var_count, witness_var_count, { clause{} } );
}

namespace
{

/* folded constants; negation maps one onto the other */
constexpr literal lit_true = std::numeric_limits<literal>::max();
constexpr literal lit_false = -lit_true;

class tseitin_encoder
{
public:
  explicit tseitin_encoder( circuit const& c ) : c_( c ), next_var_( static_cast<literal>( c.input_count() ) ) {}

  cnf_formula run()
  {
    auto const& gates = c_.gates();
    std::vector<bool> live( gates.size() );
    live[c_.output()] = true;
    for ( auto i = gates.size(); i-- > 0; )
    {
      if ( !live[i] )
      {
        continue;
      }
      auto const n = arity( gates[i].op );
      if ( n >= 1 ) live[gates[i].a] = true;
      if ( n >= 2 ) live[gates[i].b] = true;
    }

    std::vector<literal> lit( gates.size(), lit_false );
    for ( std::size_t i = 0; i < gates.size(); ++i )
    {
      if ( !live[i] )
      {
        continue;
      }
      auto const& g = gates[i];
      switch ( g.op )
      {
      case gate_op::input: lit[i] = static_cast<literal>( g.input ); break;
      case gate_op::const0: lit[i] = lit_false; break;
      case gate_op::const1: lit[i] = lit_true; break;
      case gate_op::not_: lit[i] = -lit[g.a]; break;
      case gate_op::and_: lit[i] = encode_and( lit[g.a], lit[g.b] ); break;
      case gate_op::or_: lit[i] = -encode_and( -lit[g.a], -lit[g.b] ); break;
      case gate_op::xor_: lit[i] = encode_xor( lit[g.a], lit[g.b] ); break;
      }
    }

    auto const w = c_.input_count();
    auto const out = lit[c_.output()];
    if ( out == lit_false )
    {
      return cnf_formula::constant_false( w, w );
    }
    if ( out != lit_true )
    {
      clauses_.push_back( { out } );
    }
    return cnf_formula( static_cast<std::size_t>( next_var_ ), w, std::move( clauses_ ) );
  }

private:
  literal encode_and( literal a, literal b )
  {
    if ( a == lit_false || b == lit_false || a == -b ) return lit_false;
    if ( a == lit_true ) return b;
    if ( b == lit_true || a == b ) return a;
    auto const v = ++next_var_;
    clauses_.push_back( { -v, a } );
    clauses_.push_back( { -v, b } );
    clauses_.push_back( { v, -a, -b } );
    return v;
  }

  literal encode_xor( literal a, literal b )
  {
    if ( a == lit_false ) return b;
    if ( b == lit_false ) return a;
    if ( a == lit_true ) return -b;
    if ( b == lit_true ) return -a;
    if ( a == b ) return lit_false;
    if ( a == -b ) return lit_true;
    auto const v = ++next_var_;
    clauses_.push_back( { -v, a, b } );
    clauses_.push_back( { -v, -a, -b } );
    clauses_.push_back( { v, -a, b } );
    clauses_.push_back( { v, a, -b } );
    return v;
  }

  circuit const& c_;
  literal next_var_;
  std::vector<clause> clauses_;
};

} // namespace

cnf_formula tseitin_parsimonious( circuit const& c )
{
  return tseitin_encoder( c ).run();
}

std::uint64_t count_models( cnf_formula const& f, std::size_t cap )
{
  if ( f.var_count() > cap || f.var_count() > 62 )
  {
    throw resource_limit_error( "model enumeration over " + std::to_string( f.var_count() ) +
                                " variables exceeds cap " + std::to_string( cap ) );
  }
  struct masks
  {
    std::uint64_t pos = 0, neg = 0;
  };
  std::vector<masks> compiled;
  compiled.reserve( f.clauses().size() );
  for ( auto const& cl : f.clauses() )
  {
    masks m;
    for ( auto lit : cl )
    {
      auto const bit = std::uint64_t{ 1 } << ( std::abs( lit ) - 1 );
      ( lit > 0 ? m.pos : m.neg ) |= bit;
    }
    compiled.push_back( m );
  }
  std::uint64_t models = 0;
  auto const total = std::uint64_t{ 1 } << f.var_count();
  for ( std::uint64_t a = 0; a < total; ++a )
  {
    auto const satisfied = std::all_of( compiled.begin(), compiled.end(),
                                        [a]( masks const& m ) { return ( ( a & m.pos ) | ( ~a & m.neg ) ) != 0; } );
    models += satisfied ? 1 : 0;
  }
  return models;
}

std::string to_dimacs( cnf_formula const& f )
{
  std::string out = "c witness " + std::to_string( f.witness_var_count() ) + "\n";
  out += "p cnf " + std::to_string( f.var_count() ) + " " + std::to_string( f.clauses().size() ) + "\n";
  for ( auto const& cl : f.clauses() )
  {
    for ( auto lit : cl )
    {
      out += std::to_string( lit );
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

namespace
{

std::vector<std::string_view> split_tokens( std::string_view line )
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while ( pos < line.size() )
  {
    while ( pos < line.size() && ( line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ) ) ++pos;
    auto const start = pos;
    while ( pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r' ) ++pos;
    if ( pos > start )
    {
      tokens.push_back( line.substr( start, pos - start ) );
    }
  }
  return tokens;
}

template<typename T>
std::optional<T> parse_number( std::string_view token )
{
  T value{};
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    return std::nullopt;
  }
  return value;
}

} // namespace

cnf_formula from_dimacs( std::string_view text )
{
  std::optional<std::size_t> witness;
  std::optional<std::size_t> var_count;
  std::size_t declared_clauses = 0;
  std::vector<clause> clauses;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while ( pos < text.size() )
  {
    auto const eol = text.find( '\n', pos );
    auto const line = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    auto const tokens = split_tokens( line );
    if ( tokens.empty() )
    {
      continue;
    }
    if ( tokens[0] == "c" )
    {
      if ( tokens.size() == 3 && tokens[1] == "witness" )
      {
        if ( var_count || witness )
        {
          throw parse_error( line_no, "witness comment must precede the header and appear once" );
        }
        witness = parse_number<std::size_t>( tokens[2] );
        if ( !witness )
        {
          throw parse_error( line_no, "malformed witness count \"" + std::string( tokens[2] ) + "\"" );
        }
      }
      continue;
    }
    if ( tokens[0] == "p" )
    {
      if ( var_count )
      {
        throw parse_error( line_no, "duplicate header" );
      }
      if ( tokens.size() != 4 || tokens[1] != "cnf" )
      {
        throw parse_error( line_no, "malformed header, expected \"p cnf <vars> <clauses>\"" );
      }
      var_count = parse_number<std::size_t>( tokens[2] );
      auto const count = parse_number<std::size_t>( tokens[3] );
      if ( !var_count || !count )
      {
        throw parse_error( line_no, "malformed header counts" );
      }
      declared_clauses = *count;
      continue;
    }
    if ( !var_count )
    {
      throw parse_error( line_no, "clause before header" );
    }

    clause cl;
    for ( std::size_t t = 0; t < tokens.size(); ++t )
    {
      auto const lit = parse_number<literal>( tokens[t] );
      if ( !lit )
      {
        throw parse_error( line_no, "malformed literal \"" + std::string( tokens[t] ) + "\"" );
      }
      if ( *lit == 0 )
      {
        if ( t + 1 != tokens.size() )
        {
          throw parse_error( line_no, "literal 0 inside a clause body" );
        }
        break;
      }
      if ( *lit == std::numeric_limits<literal>::min() ||
           static_cast<std::size_t>( std::abs( *lit ) ) > *var_count )
      {
        throw parse_error( line_no, "literal " + std::string( tokens[t] ) + " out of range" );
      }
      if ( t + 1 == tokens.size() )
      {
        throw parse_error( line_no, "clause not terminated by 0" );
      }
      cl.push_back( *lit );
    }
    if ( std::any_of( cl.begin(), cl.end(),
                      [&]( literal l ) { return std::find( cl.begin(), cl.end(), -l ) != cl.end(); } ) )
    {
      throw parse_error( line_no, "tautological clause" );
    }
    clauses.push_back( std::move( cl ) );
  }

  if ( !var_count )
  {
    throw parse_error( std::max<std::size_t>( line_no, 1 ), "missing header" );
  }
  if ( clauses.size() != declared_clauses )
  {
    throw parse_error( line_no, "header declares " + std::to_string( declared_clauses ) + " clauses, found " +
                                    std::to_string( clauses.size() ) );
  }
  auto const w = witness.value_or( 0 );
  if ( w > *var_count )
  {
    throw parse_error( 1, "witness count exceeds variable count" );
  }
  return cnf_formula( *var_count, w, std::move( clauses ) );
}

} // namespace pcensus
