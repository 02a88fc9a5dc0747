/*!
  \file circuit.hpp
  \brief Single-output boolean circuits over witness bits.

  A circuit is a topologically ordered gate list: every operand index
  precedes the gate that reads it. Inputs are numbered 1..input_count and
  input 1 is the leftmost witness bit. Inputs that no gate reads are still
  part of the witness and double the witness count each.
*/

#pragma once

#include <pcensus/bitstring.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcensus
{

inline constexpr std::size_t default_enumeration_cap = 24;

enum class gate_op : std::uint8_t
{
  input,
  const0,
  const1,
  not_,
  and_,
  or_,
  xor_
};

std::string_view to_string( gate_op op );
std::size_t arity( gate_op op );

struct gate
{
  gate_op op;
  std::uint32_t input = 0; /* 1-based witness position, INPUT only */
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==( gate const&, gate const& ) = default;
};

/* index of a gate inside its circuit */
using signal = std::uint32_t;

class circuit
{
public:
  /* validates acyclicity, arity and input ranges; throws construction_error */
  circuit( std::size_t input_count, std::vector<gate> gates, signal output );

  std::size_t input_count() const noexcept { return input_count_; }
  std::vector<gate> const& gates() const noexcept { return gates_; }
  signal output() const noexcept { return output_; }

  friend bool operator==( circuit const&, circuit const& ) = default;

private:
  std::size_t input_count_;
  std::vector<gate> gates_;
  signal output_;
};

/*! \brief Incremental construction of a circuit over a fixed input space.
 *
 * Input and constant gates are created once and shared.
 */
class circuit_builder
{
public:
  explicit circuit_builder( std::size_t input_count );

  std::size_t input_count() const noexcept { return input_count_; }

  signal input( std::size_t position );
  signal constant( bool value );
  signal not_( signal a );
  signal and_( signal a, signal b );
  signal or_( signal a, signal b );
  signal xor_( signal a, signal b );

  /* AND of all signals; CONST1 for an empty list */
  signal and_all( std::span<signal const> signals );

  /*! \brief Copies `other` into this builder.
   *
   * Input i of `other` is wired to host input `input_map[i - 1]`.
   * Returns the signal of the copied output.
   */
  signal embed( circuit const& other, std::span<std::size_t const> input_map );

  circuit build( signal output ) const;

private:
  signal push( gate g );
  void check( signal s ) const;

  std::size_t input_count_;
  std::vector<gate> gates_;
  std::vector<signal> input_signals_;
  signal const0_ = no_signal;
  signal const1_ = no_signal;

  static constexpr signal no_signal = ~signal{ 0 };
};

/* signal-level builders, used to assemble larger verifiers */
signal less_than( circuit_builder& builder, std::span<signal const> a, std::span<signal const> b );
signal bit_equals( circuit_builder& builder, signal bit, bool value );

/*! \brief Strict lexicographic comparison of two input blocks.
 *
 * The fragment is 1 iff the bits read from `a_inputs` form a string
 * strictly below the one read from `b_inputs`; the first listed index is
 * the most significant bit.
 */
circuit build_less_than( std::size_t input_count, std::span<std::size_t const> a_inputs,
                         std::span<std::size_t const> b_inputs );

circuit build_bit_equals( std::size_t input_count, std::size_t input_index, bool value );

/* AND of fragments sharing one input space; CONST1 when empty */
circuit conjoin( std::size_t input_count, std::span<circuit const> fragments );

bool evaluate( circuit const& c, bit_string const& assignment );

/* exhaustive enumeration of all 2^input_count assignments */
std::uint64_t count_witnesses( circuit const& c, std::size_t cap = default_enumeration_cap );

/*! \brief Exact witness count by enumeration with determined-subtree skipping.
 *
 * Walks assignments in lexicographic order, evaluating the circuit in
 * three-valued logic on each prefix. A prefix whose output is already 0 is
 * skipped and one whose output is already 1 contributes 2^(free bits).
 * Throws resource_limit_error once more than `node_budget` prefixes are
 * visited, or when input_count exceeds 62.
 */
std::uint64_t count_witnesses_pruned( circuit const& c, std::uint64_t node_budget = std::uint64_t{ 1 } << 24 );

/* accepting assignments in increasing lexicographic order */
std::vector<bit_string> enumerate_witnesses( circuit const& c, std::size_t cap = default_enumeration_cap );

} // namespace pcensus
