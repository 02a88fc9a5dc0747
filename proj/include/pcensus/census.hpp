/*!
  \file census.hpp
  \brief Parallel census: probe every cardinality guess at once and read the
  accepting paths off the answers at the right guess.

  For a guess c, the J-circuit on input (x, c, j, k, b) has c blocks of
  p(|x|) witness bits, p_1 || ... || p_c, and accepts iff every block is an
  accepting path of the verifier for x, the blocks are strictly
  increasing, and bit k of block j equals b. At c = f(x) there is exactly
  one such listing, so each of these questions has zero or one witness;
  above f(x) every one has none.
*/

#pragma once

#include <pcensus/circuit.hpp>
#include <pcensus/machines.hpp>
#include <pcensus/oracle.hpp>
#include <pcensus/query.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcensus
{

struct census_limits
{
  std::uint64_t max_path_length = 64;
  std::uint64_t max_census_bound = 64;
  std::uint64_t max_queries = 100000;
};

/* requires 1 <= j <= c and 1 <= k <= p(|x|); c may exceed q(|x|) */
circuit build_j_circuit( few_language const& lang, bit_string const& x, query_key const& key );

/* the battery's keys in canonical order: ascending c, then j, then k, then b */
std::vector<query_key> battery_keys( few_language const& lang, bit_string const& x, census_limits const& limits = {} );

/* one compiled query per battery key; p(|x|) * q(|x|) * (q(|x|) + 1) in total */
std::vector<query> generate_queries( few_language const& lang, bit_string const& x,
                                     census_limits const& limits = {} );

struct census_result
{
  std::optional<std::uint64_t> f_hat;
  std::vector<bit_string> paths;
  std::optional<bool> member;
  bool consistent = false;
  std::string reason;

  bool ok() const noexcept { return consistent; }
  static census_result inconsistent( std::string reason );

  friend bool operator==( census_result const&, census_result const& ) = default;
};

/*! \brief Turns the battery's answers into the census, paths and verdict.
 *
 * All "no" means f(x) = 0. Otherwise the largest c with a "yes" is taken
 * as f(x) and bit k of path j is the unique b answered "yes" at that c.
 * The paths must be strictly increasing and accepting; any failure gives
 * an inconsistent result. Throws protocol_error if `answers` is not keyed
 * by exactly the battery.
 */
census_result decode_answers( few_language const& lang, bit_string const& x, answer_map const& answers );

struct pipeline_options
{
  census_limits limits{};
  /* after decoding, enumerate paths and report inconsistent if f(x) > q(|x|) */
  bool promise_guard = false;
  std::size_t guard_cap = default_enumeration_cap;
};

/*! \brief Battery, one oracle batch, decode.
 *
 * The whole battery is built before the oracle is consulted and is
 * submitted as a single logged batch.
 */
census_result run_pipeline( few_language const& lang, bit_string const& x, batch_oracle const& oracle,
                            oracle_log& log, pipeline_options const& options = {} );

census_result run_pipeline( few_language const& lang, bit_string const& x, q_predicate const& q, oracle_log& log,
                            pipeline_options const& options = {} );

} // namespace pcensus
