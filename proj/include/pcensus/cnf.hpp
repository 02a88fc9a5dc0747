/*!
  \file cnf.hpp
  \brief CNF formulas, the parsimonious circuit encoder and DIMACS I/O.

  Variables 1..witness_var_count are the witness bits of the source
  circuit; auxiliary variables follow. Model counts are always taken over
  all var_count variables.
*/

#pragma once

#include <pcensus/circuit.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcensus
{

using literal = std::int32_t;
using clause = std::vector<literal>;

class cnf_formula
{
public:
  /* rejects zero literals, out-of-range literals and tautological clauses */
  cnf_formula( std::size_t var_count, std::size_t witness_var_count, std::vector<clause> clauses );

  /* one empty clause; no model */
  static cnf_formula constant_false( std::size_t var_count, std::size_t witness_var_count );

  std::size_t var_count() const noexcept { return var_count_; }
  std::size_t witness_var_count() const noexcept { return witness_var_count_; }
  std::vector<clause> const& clauses() const noexcept { return clauses_; }

  friend bool operator==( cnf_formula const&, cnf_formula const& ) = default;

private:
  std::size_t var_count_;
  std::size_t witness_var_count_;
  std::vector<clause> clauses_;
};

/*! \brief Compiles a circuit into a CNF with exactly its witness count.
 *
 * Inputs become variables 1..input_count in order. Every gate in the
 * output cone that is not an input, a negation or constant-foldable gets
 * one defining variable, numbered in gate order, whose clauses pin it to
 * the gate's function. The output literal is asserted by a unit clause.
 * A constant-false output gives the constant-false formula; a
 * constant-true output gives a formula with no clauses.
 */
cnf_formula tseitin_parsimonious( circuit const& c );

/* exhaustive over all 2^var_count assignments */
std::uint64_t count_models( cnf_formula const& f, std::size_t cap = default_enumeration_cap );

std::string to_dimacs( cnf_formula const& f );

/* accepts the output of to_dimacs plus ordinary comment lines; throws parse_error */
cnf_formula from_dimacs( std::string_view text );

} // namespace pcensus
