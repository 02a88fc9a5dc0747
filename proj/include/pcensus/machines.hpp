/*!
  \file machines.hpp
  \brief Few-style languages: a witness verifier family with a path-length
  polynomial p, a census bound q and a decision predicate R on the count.

  A computation path of the machine on input x is a witness string of
  length p(|x|); it is accepting iff the verifier circuit for x outputs 1.
  The language is { x | R(x, f(x)) } where f(x) counts accepting paths.
*/

#pragma once

#include <pcensus/bitstring.hpp>
#include <pcensus/circuit.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pcensus
{

/*! \brief Polynomial with non-negative integer coefficients, constant term first. */
class poly_bound
{
public:
  explicit poly_bound( std::vector<std::uint64_t> coefficients );

  static poly_bound constant( std::uint64_t value ) { return poly_bound( { value } ); }
  static poly_bound identity() { return poly_bound( { 0, 1 } ); }

  /* throws resource_limit_error on 64-bit overflow */
  std::uint64_t operator()( std::uint64_t n ) const;

  std::vector<std::uint64_t> const& coefficients() const noexcept { return coefficients_; }
  std::string to_string() const;

private:
  std::vector<std::uint64_t> coefficients_;
};

using verifier_generator = std::function<circuit( bit_string const& )>;
using decision_predicate = std::function<bool( bit_string const&, std::uint64_t )>;

struct named_predicate
{
  std::string name;
  decision_predicate fn;
};

class few_language
{
public:
  /*! Checks that p is positive on nonempty inputs and that the verifier has
   *  p(|x|) inputs on a few sample strings. The census promise is not
   *  checked here; see verify_promise. */
  few_language( std::string name, poly_bound path_length, poly_bound census_bound, verifier_generator generator,
                named_predicate decision );

  std::string const& name() const noexcept { return name_; }
  poly_bound const& path_length() const noexcept { return p_; }
  poly_bound const& census_bound() const noexcept { return q_; }
  std::string const& predicate_name() const noexcept { return decision_.name; }

  std::uint64_t path_length( bit_string const& x ) const { return p_( x.length() ); }
  std::uint64_t census_bound( bit_string const& x ) const { return q_( x.length() ); }

  /* verifier for x; throws construction_error unless it has p(|x|) >= 1 inputs */
  circuit verifier( bit_string const& x ) const;

  bool decide( bit_string const& x, std::uint64_t count ) const { return decision_.fn( x, count ); }

  few_language with_predicate( named_predicate decision ) const;
  few_language with_census_bound( poly_bound census_bound ) const;

private:
  std::string name_;
  poly_bound p_;
  poly_bound q_;
  verifier_generator verifier_;
  named_predicate decision_;
};

/* reference oracles: plain enumeration over all paths */
std::uint64_t brute_force_f( few_language const& lang, bit_string const& x, std::size_t cap = default_enumeration_cap );
std::vector<bit_string> brute_force_paths( few_language const& lang, bit_string const& x,
                                           std::size_t cap = default_enumeration_cap );

struct promise_check
{
  bool ok;
  std::uint64_t census;
  std::uint64_t bound;
};

promise_check verify_promise( few_language const& lang, bit_string const& x, std::size_t cap = default_enumeration_cap );

/* R(x, f) = "f is odd" */
named_predicate parity_predicate();
/* R(x, f) = "f > 0", the FewP acceptance rule */
named_predicate fewp_predicate();
/* R(x, f) = "f = 0" */
named_predicate is_zero_predicate();

/* q = 1 with R = "f > 0" */
few_language as_up( few_language const& lang );
/* keeps q, sets R = "f > 0" */
few_language as_fewp( few_language const& lang );

/* f = 0; p = path_length, q = 1 */
few_language make_const0( std::uint64_t path_length = 2 );
/* accepts exactly the path equal to `pattern`; f = 1, q = 1 */
few_language make_exact1( bit_string const& pattern );
/* p = 2, verifier w1 xor w2, f = 2, q = 2 */
few_language make_xor2();
/* p(n) = n, verifier "exactly one bit set", f = n, q(n) = n */
few_language make_onehot();

/*! \brief Subset-sum over the positions of x.
 *
 * Position i of x carries weight i and may be selected iff x_i = 1. A
 * path is a selection vector of length |x| whose weights sum to `target`,
 * so f(x) varies with x and can exceed the census bound.
 */
few_language make_subsetsum( std::uint64_t target, std::uint64_t bound );

std::vector<std::string> machine_names();
std::vector<std::string> predicate_names();

/*! \brief Library lookup by name.
 *
 * Parameters: const0 [path_length], exact1 [width value], xor2, onehot,
 * subsetsum [target bound]. Throws construction_error for unknown names or
 * wrong parameter counts.
 */
few_language make_machine( std::string const& name, std::span<std::uint64_t const> params = {} );
named_predicate make_predicate( std::string const& name );

} // namespace pcensus
