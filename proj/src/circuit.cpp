#include <pcensus/circuit.hpp>
#include <pcensus/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>

namespace pcensus
{

std::string_view to_string( gate_op op )
{
  switch ( op )
  {
  case gate_op::input: return "INPUT";
  case gate_op::const0: return "CONST0";
  case gate_op::const1: return "CONST1";
  case gate_op::not_: return "NOT";
  case gate_op::and_: return "AND";
  case gate_op::or_: return "OR";
  case gate_op::xor_: return "XOR";
  }
  return "?";
}

std::size_t arity( gate_op op )
{
  switch ( op )
  {
  case gate_op::not_: return 1;
  case gate_op::and_:
  case gate_op::or_:
  case gate_op::xor_: return 2;
  default: return 0;
  }
}

circuit::circuit( std::size_t input_count, std::vector<gate> gates, signal output )
    : input_count_( input_count ), gates_( std::move( gates ) ), output_( output )
{
  for ( std::size_t i = 0; i < gates_.size(); ++i )
  {
    auto const& g = gates_[i];
    auto const n = arity( g.op );
    if ( g.op == gate_op::input && ( g.input < 1 || g.input > input_count_ ) )
    {
      throw construction_error( "gate " + std::to_string( i ) + ": INPUT(" + std::to_string( g.input ) +
                                ") outside 1.." + std::to_string( input_count_ ) );
    }
    if ( ( n >= 1 && g.a >= i ) || ( n >= 2 && g.b >= i ) )
    {
      throw construction_error( "gate " + std::to_string( i ) + " (" + std::string( to_string( g.op ) ) +
                                ") reads a gate that does not precede it" );
    }
  }
  if ( output_ >= gates_.size() )
  {
    throw construction_error( "output index " + std::to_string( output_ ) + " does not name a gate" );
  }
}

circuit_builder::circuit_builder( std::size_t input_count )
    : input_count_( input_count ), input_signals_( input_count, no_signal )
{
}

signal circuit_builder::push( gate g )
{
  gates_.push_back( g );
  return static_cast<signal>( gates_.size() - 1 );
}

void circuit_builder::check( signal s ) const
{
  if ( s >= gates_.size() )
  {
    throw construction_error( "signal " + std::to_string( s ) + " does not belong to this builder" );
  }
}

signal circuit_builder::input( std::size_t position )
{
  if ( position < 1 || position > input_count_ )
  {
    throw construction_error( "input " + std::to_string( position ) + " outside 1.." + std::to_string( input_count_ ) );
  }
  auto& slot = input_signals_[position - 1];
  if ( slot == no_signal )
  {
    slot = push( { gate_op::input, static_cast<std::uint32_t>( position ) } );
  }
  return slot;
}

signal circuit_builder::constant( bool value )
{
  auto& slot = value ? const1_ : const0_;
  if ( slot == no_signal )
  {
    slot = push( { value ? gate_op::const1 : gate_op::const0 } );
  }
  return slot;
}

signal circuit_builder::not_( signal a )
{
  check( a );
  return push( { gate_op::not_, 0, a } );
}

signal circuit_builder::and_( signal a, signal b )
{
  check( a );
  check( b );
  return push( { gate_op::and_, 0, a, b } );
}

signal circuit_builder::or_( signal a, signal b )
{
  check( a );
  check( b );
  return push( { gate_op::or_, 0, a, b } );
}

signal circuit_builder::xor_( signal a, signal b )
{
  check( a );
  check( b );
  return push( { gate_op::xor_, 0, a, b } );
}

signal circuit_builder::and_all( std::span<signal const> signals )
{
  if ( signals.empty() )
  {
    return constant( true );
  }
  signal acc = signals.front();
  check( acc );
  for ( auto s : signals.subspan( 1 ) )
  {
    acc = and_( acc, s );
  }
  return acc;
}

signal circuit_builder::embed( circuit const& other, std::span<std::size_t const> input_map )
{
  if ( input_map.size() != other.input_count() )
  {
    throw construction_error( "embed: input map has " + std::to_string( input_map.size() ) + " entries, circuit has " +
                              std::to_string( other.input_count() ) + " inputs" );
  }
  std::vector<signal> local( other.gates().size() );
  for ( std::size_t i = 0; i < other.gates().size(); ++i )
  {
    auto const& g = other.gates()[i];
    switch ( g.op )
    {
    case gate_op::input: local[i] = input( input_map[g.input - 1] ); break;
    case gate_op::const0: local[i] = constant( false ); break;
    case gate_op::const1: local[i] = constant( true ); break;
    case gate_op::not_: local[i] = not_( local[g.a] ); break;
    case gate_op::and_: local[i] = and_( local[g.a], local[g.b] ); break;
    case gate_op::or_: local[i] = or_( local[g.a], local[g.b] ); break;
    case gate_op::xor_: local[i] = xor_( local[g.a], local[g.b] ); break;
    }
  }
  return local[other.output()];
}

circuit circuit_builder::build( signal output ) const
{
  check( output );
  return circuit( input_count_, gates_, output );
}

signal less_than( circuit_builder& builder, std::span<signal const> a, std::span<signal const> b )
{
  if ( a.size() != b.size() || a.empty() )
  {
    throw construction_error( "less_than: operand widths " + std::to_string( a.size() ) + " and " +
                              std::to_string( b.size() ) + " must be equal and nonzero" );
  }
  /* lt_i = (!a_i & b_i) | (!(a_i ^ b_i) & lt_{i+1}), folded from the least significant end */
  signal lt = builder.and_( builder.not_( a.back() ), b.back() );
  for ( std::size_t i = a.size() - 1; i-- > 0; )
  {
    auto const strictly_below = builder.and_( builder.not_( a[i] ), b[i] );
    auto const equal = builder.not_( builder.xor_( a[i], b[i] ) );
    lt = builder.or_( strictly_below, builder.and_( equal, lt ) );
  }
  return lt;
}

signal bit_equals( circuit_builder& builder, signal bit, bool value )
{
  return value ? bit : builder.not_( bit );
}

circuit build_less_than( std::size_t input_count, std::span<std::size_t const> a_inputs,
                         std::span<std::size_t const> b_inputs )
{
  if ( a_inputs.size() != b_inputs.size() || a_inputs.empty() )
  {
    throw construction_error( "build_less_than: index sequences of lengths " + std::to_string( a_inputs.size() ) +
                              " and " + std::to_string( b_inputs.size() ) + " must be equal and nonzero" );
  }
  circuit_builder builder( input_count );
  std::vector<signal> a, b;
  for ( auto i : a_inputs )
  {
    a.push_back( builder.input( i ) );
  }
  for ( auto i : b_inputs )
  {
    b.push_back( builder.input( i ) );
  }
  return builder.build( less_than( builder, a, b ) );
}

circuit build_bit_equals( std::size_t input_count, std::size_t input_index, bool value )
{
  circuit_builder builder( input_count );
  return builder.build( bit_equals( builder, builder.input( input_index ), value ) );
}

circuit conjoin( std::size_t input_count, std::span<circuit const> fragments )
{
  circuit_builder builder( input_count );
  std::vector<std::size_t> identity( input_count );
  for ( std::size_t i = 0; i < input_count; ++i )
  {
    identity[i] = i + 1;
  }
  std::vector<signal> outputs;
  for ( auto const& fragment : fragments )
  {
    if ( fragment.input_count() != input_count )
    {
      throw construction_error( "conjoin: fragment has " + std::to_string( fragment.input_count() ) +
                                " inputs, expected " + std::to_string( input_count ) );
    }
    outputs.push_back( builder.embed( fragment, identity ) );
  }
  return builder.build( builder.and_all( outputs ) );
}

bool evaluate( circuit const& c, bit_string const& assignment )
{
  if ( assignment.length() != c.input_count() )
  {
    throw input_arity_error( "assignment has " + std::to_string( assignment.length() ) + " bits, circuit expects " +
                             std::to_string( c.input_count() ) );
  }
  auto const& bits = assignment.bits();
  std::vector<bool> value( c.gates().size() );
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    auto const& g = c.gates()[i];
    switch ( g.op )
    {
    case gate_op::input: value[i] = bits[g.input - 1]; break;
    case gate_op::const0: value[i] = false; break;
    case gate_op::const1: value[i] = true; break;
    case gate_op::not_: value[i] = !value[g.a]; break;
    case gate_op::and_: value[i] = value[g.a] && value[g.b]; break;
    case gate_op::or_: value[i] = value[g.a] || value[g.b]; break;
    case gate_op::xor_: value[i] = value[g.a] != value[g.b]; break;
    }
  }
  return value[c.output()];
}

namespace
{

void check_cap( std::size_t inputs, std::size_t cap )
{
  if ( inputs > cap )
  {
    throw resource_limit_error( "enumeration over " + std::to_string( inputs ) + " bits exceeds cap " +
                                std::to_string( cap ) );
  }
}

/* Evaluates 64 consecutive assignments per call. Assignment number `a`
 * sets witness bit i (1-based, leftmost) to bit (n - i) of `a`. */
class lane_evaluator
{
public:
  explicit lane_evaluator( circuit const& c ) : c_( c ), values_( c.gates().size() ) {}

  std::uint64_t run( std::uint64_t block, std::uint64_t valid_mask )
  {
    static constexpr std::array<std::uint64_t, 6> lane_patterns = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };
    auto const n = c_.input_count();
    for ( std::size_t i = 0; i < c_.gates().size(); ++i )
    {
      auto const& g = c_.gates()[i];
      switch ( g.op )
      {
      case gate_op::input:
      {
        auto const shift = n - g.input;
        values_[i] = shift < 6 ? lane_patterns[shift] : ( ( ( block >> ( shift - 6 ) ) & 1u ) ? ~0ull : 0ull );
        break;
      }
      case gate_op::const0: values_[i] = 0; break;
      case gate_op::const1: values_[i] = ~0ull; break;
      case gate_op::not_: values_[i] = ~values_[g.a]; break;
      case gate_op::and_: values_[i] = values_[g.a] & values_[g.b]; break;
      case gate_op::or_: values_[i] = values_[g.a] | values_[g.b]; break;
      case gate_op::xor_: values_[i] = values_[g.a] ^ values_[g.b]; break;
      }
    }
    return values_[c_.output()] & valid_mask;
  }

private:
  circuit const& c_;
  std::vector<std::uint64_t> values_;
};

template<typename Fn>
void for_each_block( circuit const& c, Fn&& fn )
{
  auto const n = c.input_count();
  lane_evaluator eval( c );
  if ( n < 6 )
  {
    auto const valid = ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n ) ) - 1;
    fn( 0, eval.run( 0, valid ) );
    return;
  }
  auto const blocks = std::uint64_t{ 1 } << ( n - 6 );
  for ( std::uint64_t block = 0; block < blocks; ++block )
  {
    fn( block, eval.run( block, ~0ull ) );
  }
}

} // namespace

std::uint64_t count_witnesses( circuit const& c, std::size_t cap )
{
  check_cap( c.input_count(), cap );
  std::uint64_t total = 0;
  for_each_block( c, [&]( std::uint64_t, std::uint64_t hits ) { total += std::popcount( hits ); } );
  return total;
}

std::vector<bit_string> enumerate_witnesses( circuit const& c, std::size_t cap )
{
  check_cap( c.input_count(), cap );
  std::vector<bit_string> out;
  for_each_block( c, [&]( std::uint64_t block, std::uint64_t hits ) {
    while ( hits )
    {
      auto const lane = static_cast<std::uint64_t>( std::countr_zero( hits ) );
      hits &= hits - 1;
      out.push_back( bit_string::from_uint( ( block << 6 ) | lane, c.input_count() ) );
    }
  } );
  return out;
}

namespace
{

enum class tri : std::uint8_t
{
  zero,
  one,
  unknown
};

class prefix_counter
{
public:
  prefix_counter( circuit const& c, std::uint64_t budget )
      : c_( c ), budget_( budget ), assignment_( c.input_count(), tri::unknown ), values_( c.gates().size() )
  {
  }

  std::uint64_t count( std::size_t depth )
  {
    if ( ++visited_ > budget_ )
    {
      throw resource_limit_error( "pruned witness count visited more than " + std::to_string( budget_ ) +
                                  " prefixes" );
    }
    switch ( output() )
    {
    case tri::zero: return 0;
    case tri::one: return std::uint64_t{ 1 } << ( c_.input_count() - depth );
    case tri::unknown: break;
    }
    std::uint64_t total = 0;
    for ( auto value : { tri::zero, tri::one } )
    {
      assignment_[depth] = value;
      total += count( depth + 1 );
    }
    assignment_[depth] = tri::unknown;
    return total;
  }

private:
  tri output()
  {
    for ( std::size_t i = 0; i < c_.gates().size(); ++i )
    {
      auto const& g = c_.gates()[i];
      auto& v = values_[i];
      switch ( g.op )
      {
      case gate_op::input: v = assignment_[g.input - 1]; break;
      case gate_op::const0: v = tri::zero; break;
      case gate_op::const1: v = tri::one; break;
      case gate_op::not_:
        v = values_[g.a] == tri::unknown ? tri::unknown : ( values_[g.a] == tri::one ? tri::zero : tri::one );
        break;
      case gate_op::and_:
      {
        auto const a = values_[g.a], b = values_[g.b];
        v = ( a == tri::zero || b == tri::zero ) ? tri::zero
            : ( a == tri::one && b == tri::one ) ? tri::one
                                                 : tri::unknown;
        break;
      }
      case gate_op::or_:
      {
        auto const a = values_[g.a], b = values_[g.b];
        v = ( a == tri::one || b == tri::one ) ? tri::one
            : ( a == tri::zero && b == tri::zero ) ? tri::zero
                                                   : tri::unknown;
        break;
      }
      case gate_op::xor_:
      {
        auto const a = values_[g.a], b = values_[g.b];
        v = ( a == tri::unknown || b == tri::unknown ) ? tri::unknown : ( a == b ? tri::zero : tri::one );
        break;
      }
      }
    }
    return values_[c_.output()];
  }

  circuit const& c_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<tri> assignment_;
  std::vector<tri> values_;
};

} // namespace

std::uint64_t count_witnesses_pruned( circuit const& c, std::uint64_t node_budget )
{
  check_cap( c.input_count(), 62 );
  return prefix_counter( c, node_budget ).count( 0 );
}

} // namespace pcensus
