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

/*!
  \file canalizing.hpp
  \brief Canalizing-function censuses, the single-minority-bit concatenation
         count, and generation of the (n+1)-variable canalizing set by
         concatenation
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmap.hpp"
#include "parallel.hpp"
#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze
{

namespace detail
{

inline void require_census_arity( unsigned n )
{
  if ( n > 4 )
  {
    throw std::domain_error( "exhaustive census is limited to n <= 4 (got " + std::to_string( n ) + "); use generate_next" );
  }
}

} // namespace detail

/*! \brief All canalizing n-variable functions in integer order, n <= 4 */
inline std::vector<TruthTable> canalizing_set( unsigned n, unsigned jobs = 1 )
{
  detail::require_census_arity( n );
  const auto all = enumerate_all( n );
  std::vector<std::vector<TruthTable>> parts( std::max( 1u, jobs ) );
  parallel_chunks( all.size(), jobs, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( auto f : all.subrange( first, last ) )
    {
      if ( is_canalizing( f ) )
        parts[chunk].push_back( std::move( f ) );
    }
  } );
  std::vector<TruthTable> out;
  for ( auto& p : parts )
    out.insert( out.end(), std::make_move_iterator( p.begin() ), std::make_move_iterator( p.end() ) );
  return out;
}

inline uint64_t census_canalizing( unsigned n, unsigned jobs = 1 )
{
  detail::require_census_arity( n );
  const auto all = enumerate_all( n );
  std::vector<uint64_t> counts( std::max( 1u, jobs ), 0u );
  parallel_chunks( all.size(), jobs, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( const auto& f : all.subrange( first, last ) )
      counts[chunk] += is_canalizing( f ) ? 1u : 0u;
  } );
  uint64_t total = 0;
  for ( auto c : counts )
    total += c;
  return total;
}

/*! \brief 2 * sum_{x=1..n} C(n,x) 2^(2^n / 2^x) (-1)^(x-1), for 1 <= n <= 6

  Number of ways to extend a function at Hamming distance 1 from a constant
  by a second half (on either side) so that the result stays canalizing in
  one of the original n variables.
*/
inline int64_t minority_bit_formula( unsigned n )
{
  if ( n < 1 || n > 6 )
  {
    throw std::domain_error( "single-minority-bit count is defined here for 1 <= n <= 6" );
  }
  int64_t sum = 0;
  int64_t binom = 1;
  for ( unsigned x = 1; x <= n; ++x )
  {
    binom = binom * static_cast<int64_t>( n - x + 1 ) / static_cast<int64_t>( x );
    const int64_t term = binom * ( int64_t{ 1 } << ( ( 1u << n ) >> x ) );
    sum += ( x % 2 == 1 ) ? term : -term;
  }
  return 2 * sum;
}

/*! \brief Brute-force count of (side, g) with the concatenation canalizing in an original variable

  f must be at Hamming distance 1 from a constant.  Sides are f g and g f;
  canalization through the new variable x_1 does not count.
*/
inline uint64_t minority_bit_oracle( const TruthTable& f )
{
  if ( min_const_hd( f ) != 1 )
  {
    throw std::invalid_argument( "minority_bit_oracle needs a function at Hamming distance 1 from a constant" );
  }
  const unsigned n = f.arity();
  if ( n > 4 )
  {
    throw std::domain_error( "minority_bit_oracle enumerates all g and is limited to n <= 4" );
  }
  auto canalizing_in_original = []( const TruthTable& h ) {
    for ( unsigned v = 2; v <= h.arity(); ++v )
      if ( cofactor_constant( h, v, false ) || cofactor_constant( h, v, true ) )
        return true;
    return false;
  };
  uint64_t count = 0;
  for ( const auto& g : enumerate_all( n ) )
  {
    count += canalizing_in_original( concat( f, g ) ) ? 1u : 0u;
    count += canalizing_in_original( concat( g, f ) ) ? 1u : 0u;
  }
  return count;
}

struct GenerationStats
{
  uint64_t source_count = 0;    ///< X = |C_n|
  uint64_t checks_performed = 0; ///< concatenations tested with the K-map detector
  uint64_t emitted_free = 0;     ///< concatenations accepted without a test (before dedup)
  uint64_t skipped = 0;          ///< f f' pairs rejected without a test
  uint64_t result_count = 0;     ///< |C_{n+1}|

  /* (X-2)^2 - (X-2) */
  uint64_t check_bound() const noexcept
  {
    const uint64_t y = source_count >= 2 ? source_count - 2 : 0;
    return y * y - y;
  }
};

struct Generation
{
  std::vector<TruthTable> functions; ///< C_{n+1} in integer order
  GenerationStats stats;
};

/*! \brief C_{n+1} from C_n by concatenation, 1 <= n <= 4

  Accepted without testing: c g and g c for both constants c and every g
  (this covers every non-canalizing f paired with a constant), and f f for
  every f in C_n.  Rejected without testing: f f' for non-constant f, and
  every pair involving a non-canalizing function and a non-constant.  The
  remaining ordered pairs of non-constant members of C_n are tested with
  detect_canalizing_kmap.

  Tested pairs are partitioned by their first element across `jobs`
  threads; the output is sorted, so it does not depend on `jobs`.
*/
inline Generation generate_next( const std::vector<TruthTable>& source, unsigned jobs = 1 )
{
  if ( source.empty() )
  {
    throw std::invalid_argument( "generate_next: empty source set" );
  }
  const unsigned n = source.front().arity();
  if ( n < 1 || n > 4 )
  {
    throw std::domain_error( "generate_next supports source arity 1..4" );
  }
  for ( const auto& f : source )
  {
    if ( f.arity() != n )
      throw std::invalid_argument( "generate_next: mixed arities in source set" );
  }
  const auto zero = constant( n, false );
  const auto one = constant( n, true );

  std::vector<TruthTable> members;
  bool has_zero = false, has_one = false;
  for ( const auto& f : source )
  {
    if ( f == zero )
      has_zero = true;
    else if ( f == one )
      has_one = true;
    else
      members.push_back( f );
  }
  if ( !has_zero || !has_one )
  {
    throw std::invalid_argument( "generate_next: source set lacks a constant function, so it is not C_n" );
  }
  sort_unique( members );

  Generation gen;
  gen.stats.source_count = members.size() + 2;

  // n + 1 <= 5, so every result fits in one word
  std::vector<uint64_t> free_words;
  for ( const auto& g : enumerate_all( n ) )
  {
    for ( const auto* c : { &zero, &one } )
    {
      free_words.push_back( concat( *c, g ).word() );
      free_words.push_back( concat( g, *c ).word() );
      gen.stats.emitted_free += 2;
    }
  }
  for ( const auto& f : members )
  {
    free_words.push_back( concat( f, f ).word() );
    ++gen.stats.emitted_free;
  }
  sort_unique( free_words );

  const unsigned workers = std::max( 1u, jobs );
  std::vector<std::vector<uint64_t>> found( workers );
  std::vector<uint64_t> checks( workers, 0u );
  std::vector<uint64_t> skips( workers, 0u );
  parallel_chunks( members.size(), workers, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    auto& out = found[chunk];
    for ( auto i = first; i < last; ++i )
    {
      const auto& f = members[i];
      const auto fc = complement( f );
      for ( const auto& g : members )
      {
        if ( &g == &f )
          continue;
        if ( g == fc )
        {
          ++skips[chunk];
          continue;
        }
        ++checks[chunk];
        auto h = concat( f, g );
        if ( detect_canalizing_kmap( h ) )
          out.push_back( h.word() );
      }
      if ( out.size() > ( std::size_t{ 1 } << 22 ) )
        sort_unique( out );
    }
    sort_unique( out );
  } );

  std::vector<uint64_t> words = std::move( free_words );
  for ( unsigned c = 0; c < workers; ++c )
  {
    words.insert( words.end(), found[c].begin(), found[c].end() );
    gen.stats.checks_performed += checks[c];
    gen.stats.skipped += skips[c];
  }
  sort_unique( words );

  gen.functions.reserve( words.size() );
  for ( auto w : words )
    gen.functions.push_back( TruthTable::from_word( n + 1, w ) );
  gen.stats.result_count = gen.functions.size();
  return gen;
}

} // namespace canalyze
