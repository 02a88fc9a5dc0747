#pragma once

#include <pcensus/bitstring.hpp>
#include <pcensus/cnf.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace pcensus
{

/* one probe: "is there a strictly increasing list of c accepting paths whose
   j-th member has bit k equal to b?" */
struct query_key
{
  std::uint64_t c;
  std::uint64_t j;
  std::uint64_t k;
  bool b;

  friend auto operator<=>( query_key const&, query_key const& ) = default;
};

struct query
{
  query_key key;
  cnf_formula formula;
  std::string canonical_id;
};

using answer_map = std::map<query_key, bool>;

/*! \brief Canonical byte encoding of (x, c, j, k, b).
 *
 * "<|x|>-<x>-<c>-<j>-<k>-<b>" with |x|, c, j and k as four-digit decimals,
 * e.g. "0004-0110-0002-0001-0001-1". Usable as a file name.
 */
std::string canonical_id( bit_string const& x, query_key const& key );

} // namespace pcensus
