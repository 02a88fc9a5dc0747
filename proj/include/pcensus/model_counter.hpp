#pragma once

#include <pcensus/cnf.hpp>

#include <cstdint>

namespace pcensus
{

struct counting_options
{
  /* stop once this many models are found; 0 counts exhaustively */
  std::uint64_t saturate_at = 0;
  /* maximum number of decisions before resource_limit_error */
  std::uint64_t decision_budget = std::uint64_t{ 1 } << 26;
};

/*! \brief Exact model count by DPLL search with unit propagation.
 *
 * Branches on the lowest unassigned variable, so witness variables are
 * decided before auxiliaries. When every clause is satisfied the remaining
 * free variables contribute 2^free. With `saturate_at = s > 0` the result
 * is min(count, s). Counts that do not fit 64 bits throw
 * resource_limit_error.
 */
std::uint64_t count_models_dpll( cnf_formula const& f, counting_options const& options = {} );

} // namespace pcensus
