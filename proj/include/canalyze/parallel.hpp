// Copyright 2026 The canalyze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace canalyze
{

/*! \brief Splits [0, count) into `jobs` contiguous chunks and runs one thread per chunk

  `fn(chunk, first, last)` is called once per chunk; chunk boundaries depend
  only on `count` and `jobs`.  Callers merge per-chunk results in chunk order,
  which keeps aggregates independent of scheduling.  The first exception
  thrown by a worker is rethrown after all workers have joined.
*/
template<typename Fn>
void parallel_chunks( uint64_t count, unsigned jobs, Fn&& fn )
{
  jobs = std::max( 1u, jobs );
  if ( jobs == 1 || count < 2 )
  {
    fn( 0u, uint64_t{ 0 }, count );
    return;
  }
  std::vector<std::exception_ptr> errors( jobs );
  {
    std::vector<std::jthread> workers;
    workers.reserve( jobs );
    for ( unsigned c = 0; c < jobs; ++c )
    {
      const uint64_t first = count * c / jobs;
      const uint64_t last = count * ( c + 1 ) / jobs;
      workers.emplace_back( [&, c, first, last] {
        try
        {
          fn( c, first, last );
        }
        catch ( ... )
        {
          errors[c] = std::current_exception();
        }
      } );
    }
  }
  for ( auto& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

/*! \brief Sorts and deduplicates a vector in place */
template<typename T>
void sort_unique( std::vector<T>& v )
{
  std::sort( v.begin(), v.end() );
  v.erase( std::unique( v.begin(), v.end() ), v.end() );
}

} // namespace canalyze
