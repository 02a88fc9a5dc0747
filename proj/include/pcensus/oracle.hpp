/*!
  \file oracle.hpp
  \brief The USAT_Q promise oracle.

  A formula with zero models is answered "no" and one with exactly one
  model "yes", whatever Q is. Only formulas with two or more models are
  handed to Q, which sees the canonical DIMACS bytes of the formula.
*/

#pragma once

#include <pcensus/model_counter.hpp>
#include <pcensus/query.hpp>

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcensus
{

class q_predicate
{
public:
  enum class kind
  {
    const_no,
    const_yes,
    seeded_random,
    anti_sat,
    member_list
  };

  static q_predicate const_no() { return q_predicate( kind::const_no ); }
  static q_predicate const_yes() { return q_predicate( kind::const_yes ); }
  static q_predicate seeded_random( std::uint64_t seed );
  /* "yes" exactly on unsatisfiable formulas */
  static q_predicate anti_sat() { return q_predicate( kind::anti_sat ); }
  static q_predicate member_list( std::set<std::string> dimacs_members );

  kind type() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::string name() const;

  bool operator()( cnf_formula const& f, std::string_view dimacs ) const;

private:
  explicit q_predicate( kind k ) : kind_( k ) {}

  kind kind_;
  std::uint64_t seed_ = 0;
  std::set<std::string> members_;
};

/* the canonical test family: const-no, const-yes, anti-sat and three seeds */
std::vector<q_predicate> standard_q_family( std::uint64_t first_seed = 1 );

/*! \brief Keyed pseudo-random function behind seeded_random.
 *
 * FNV-1a 64 over the bytes with the seed folded into the offset basis,
 * then the splitmix64 finalizer. Stable across platforms.
 */
std::uint64_t fnv1a_splitmix64( std::uint64_t seed, std::string_view bytes );

/*! \brief External exact model counter used as a cross-check.
 *
 * The command reads DIMACS on standard input and prints the model count
 * as a decimal integer.
 */
class external_counter
{
public:
  explicit external_counter( std::string command ) : command_( std::move( command ) ) {}

  std::uint64_t count( std::string const& dimacs ) const;
  std::string const& command() const noexcept { return command_; }

private:
  std::string command_;
};

struct oracle_options
{
  counting_options counting{};
  std::optional<external_counter> cross_check;
};

/*! \brief USAT_Q verdict for one formula.
 *
 * m = 0 gives false and m = 1 gives true; otherwise Q decides.
 */
bool usatq_answer( cnf_formula const& f, q_predicate const& q, oracle_options const& options = {} );

class batch_oracle
{
public:
  virtual ~batch_oracle() = default;

  /* one verdict per query, in submission order */
  virtual std::vector<bool> answer( std::span<query const> queries ) const = 0;
  virtual std::string name() const = 0;
};

class usatq_oracle : public batch_oracle
{
public:
  explicit usatq_oracle( q_predicate q, oracle_options options = {} )
      : q_( std::move( q ) ), options_( std::move( options ) )
  {
  }

  std::vector<bool> answer( std::span<query const> queries ) const override;
  std::string name() const override { return "usat[" + q_.name() + "]"; }

  q_predicate const& predicate() const noexcept { return q_; }

private:
  q_predicate q_;
  oracle_options options_;
};

struct batch_record
{
  std::vector<std::string> ids;
  std::vector<bool> verdicts;
};

/* append-only; each batch is recorded in one step */
class oracle_log
{
public:
  oracle_log() = default;
  oracle_log( oracle_log const& ) = delete;
  oracle_log& operator=( oracle_log const& ) = delete;

  void append( batch_record record );
  std::vector<batch_record> batches() const;
  std::size_t size() const;

private:
  mutable std::mutex mutex_;
  std::vector<batch_record> batches_;
};

/*! \brief Submits all queries as a single batch and logs it.
 *
 * Resource errors are rethrown annotated with the offending canonical id.
 * Throws protocol_error if the oracle returns the wrong number of verdicts
 * or the batch repeats a key.
 */
answer_map answer_batch( std::span<query const> queries, batch_oracle const& oracle, oracle_log& log );
answer_map answer_batch( std::span<query const> queries, q_predicate const& q, oracle_log& log );

} // namespace pcensus
