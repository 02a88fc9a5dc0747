#include <pcensus/errors.hpp>
#include <pcensus/model_counter.hpp>

#include <algorithm>
#include <cstdlib>

namespace pcensus
{

namespace
{

class dpll_counter
{
public:
  dpll_counter( cnf_formula const& f, counting_options const& options )
      : options_( options ),
        var_count_( f.var_count() ),
        clauses_( f.clauses() ),
        occurrences_( 2 * ( f.var_count() + 1 ) ),
        value_( f.var_count() + 1, unassigned ),
        false_count_( clauses_.size() ),
        true_count_( clauses_.size() )
  {
    for ( std::uint32_t i = 0; i < clauses_.size(); ++i )
    {
      for ( auto lit : clauses_[i] )
      {
        occurrences_[index( lit )].push_back( i );
      }
    }
  }

  std::uint64_t run()
  {
    for ( std::uint32_t i = 0; i < clauses_.size(); ++i )
    {
      if ( clauses_[i].empty() )
      {
        return 0;
      }
      if ( clauses_[i].size() == 1 )
      {
        pending_.push_back( i );
      }
    }
    if ( !propagate() )
    {
      return 0;
    }
    return search();
  }

private:
  static constexpr std::int8_t unassigned = -1;

  static std::size_t index( literal lit ) { return 2 * static_cast<std::size_t>( std::abs( lit ) ) + ( lit < 0 ? 1 : 0 ); }

  void assign( literal lit )
  {
    value_[std::abs( lit )] = lit > 0 ? 1 : 0;
    trail_.push_back( lit );
    for ( auto c : occurrences_[index( lit )] )
    {
      if ( true_count_[c]++ == 0 )
      {
        ++satisfied_;
      }
    }
    for ( auto c : occurrences_[index( -lit )] )
    {
      ++false_count_[c];
      if ( true_count_[c] == 0 )
      {
        if ( false_count_[c] == clauses_[c].size() )
        {
          conflict_ = true;
        }
        else if ( false_count_[c] + 1 == clauses_[c].size() )
        {
          pending_.push_back( c );
        }
      }
    }
  }

  void undo( std::size_t mark )
  {
    while ( trail_.size() > mark )
    {
      auto const lit = trail_.back();
      trail_.pop_back();
      for ( auto c : occurrences_[index( lit )] )
      {
        if ( --true_count_[c] == 0 )
        {
          --satisfied_;
        }
      }
      for ( auto c : occurrences_[index( -lit )] )
      {
        --false_count_[c];
      }
      value_[std::abs( lit )] = unassigned;
    }
    pending_.clear();
    conflict_ = false;
  }

  bool propagate()
  {
    while ( !conflict_ && !pending_.empty() )
    {
      auto const c = pending_.back();
      pending_.pop_back();
      if ( true_count_[c] > 0 )
      {
        continue;
      }
      for ( auto lit : clauses_[c] )
      {
        if ( value_[std::abs( lit )] == unassigned )
        {
          assign( lit );
          break;
        }
      }
    }
    pending_.clear();
    return !conflict_;
  }

  std::uint64_t free_models() const
  {
    auto const free_vars = var_count_ - trail_.size();
    if ( free_vars >= 64 )
    {
      throw resource_limit_error( "model count 2^" + std::to_string( free_vars ) + " does not fit 64 bits" );
    }
    return std::uint64_t{ 1 } << free_vars;
  }

  std::uint64_t search()
  {
    if ( satisfied_ == clauses_.size() )
    {
      return free_models();
    }
    if ( ++decisions_ > options_.decision_budget )
    {
      throw resource_limit_error( "model counting exceeded " + std::to_string( options_.decision_budget ) +
                                  " decisions" );
    }
    while ( value_[next_var_] != unassigned )
    {
      ++next_var_;
    }
    auto const var = static_cast<literal>( next_var_ );
    auto const saved_next = next_var_;

    std::uint64_t total = 0;
    for ( auto lit : { var, -var } )
    {
      auto const mark = trail_.size();
      assign( lit );
      if ( propagate() )
      {
        auto const sub = search();
        if ( sub > ~std::uint64_t{ 0 } - total )
        {
          throw resource_limit_error( "model count does not fit 64 bits" );
        }
        total += sub;
      }
      undo( mark );
      next_var_ = saved_next;
      if ( options_.saturate_at != 0 && total >= options_.saturate_at )
      {
        return options_.saturate_at;
      }
    }
    return total;
  }

  counting_options options_;
  std::size_t var_count_;
  std::vector<clause> const& clauses_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
  std::vector<std::int8_t> value_;
  std::vector<std::size_t> false_count_;
  std::vector<std::size_t> true_count_;
  std::vector<literal> trail_;
  std::vector<std::uint32_t> pending_;
  std::size_t satisfied_ = 0;
  std::size_t next_var_ = 1;
  std::uint64_t decisions_ = 0;
  bool conflict_ = false;
};

} // namespace

std::uint64_t count_models_dpll( cnf_formula const& f, counting_options const& options )
{
  auto const count = dpll_counter( f, options ).run();
  return options.saturate_at != 0 ? std::min( count, options.saturate_at ) : count;
}

} // namespace pcensus
