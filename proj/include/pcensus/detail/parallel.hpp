#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace pcensus::detail
{

/*! \brief Runs fn(0..n-1) on a small worker pool.
 *
 * If several indices throw, the exception of the lowest index is
 * rethrown, so failures do not depend on scheduling.
 */
template<typename Fn>
void parallel_for( std::size_t n, Fn&& fn )
{
  auto const workers = std::min<std::size_t>( n, std::max( 1u, std::thread::hardware_concurrency() ) );
  if ( workers <= 1 )
  {
    for ( std::size_t i = 0; i < n; ++i )
    {
      fn( i );
    }
    return;
  }

  std::atomic<std::size_t> next{ 0 };
  std::mutex failure_mutex;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto work = [&] {
    for ( auto i = next.fetch_add( 1 ); i < n; i = next.fetch_add( 1 ) )
    {
      try
      {
        fn( i );
      }
      catch ( ... )
      {
        std::lock_guard lock( failure_mutex );
        if ( i < failed_index )
        {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for ( std::size_t w = 0; w < workers; ++w )
    {
      pool.emplace_back( work );
    }
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

} // namespace pcensus::detail
