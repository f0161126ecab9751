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
  \file pncf.hpp
  \brief Canalizing depth and the partially nested canalizing census

  A chain step on a non-constant remainder g picks (x_i, a, b) with g|x_i=a
  constant b and continues with g|x_i=!a.  The canalizing depth of f is the
  longest chain reachable this way.  A chain stops at a constant or
  non-canalizing remainder; a chain through all n variables makes f nested
  canalizing.  Constant functions are reported with depth 1.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncf.hpp"
#include "parallel.hpp"
#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze
{

enum class RemainderClass
{
  constant,
  non_canalizing,
  nested
};

inline const char* to_string( RemainderClass c ) noexcept
{
  switch ( c )
  {
  case RemainderClass::constant:
    return "constant";
  case RemainderClass::non_canalizing:
    return "non_canalizing";
  case RemainderClass::nested:
    return "nested";
  }
  return "?";
}

struct DepthReport
{
  unsigned depth = 0;
  NestedChain chain;
  RemainderClass remainder_class = RemainderClass::constant;
  std::optional<TruthTable> remainder; ///< arity n - depth; absent when nested
};

namespace detail
{

/* memoized longest chain length from a remainder; exhaustive over all choices */
class DepthSearch
{
public:
  unsigned depth( const TruthTable& g )
  {
    if ( is_constant( g ) )
      return 0;
    if ( auto it = memo_.find( g ); it != memo_.end() )
      return it->second;
    unsigned best = 0;
    for ( unsigned i = 1; i <= g.arity() && best < g.arity(); ++i )
      for ( bool a : { false, true } )
        if ( cofactor_constant( g, i, a ) )
          best = std::max( best, 1 + depth( cofactor( g, i, !a ) ) );
    memo_.emplace( g, best );
    return best;
  }

private:
  std::unordered_map<TruthTable, unsigned> memo_;
};

} // namespace detail

/*! \brief Maximal canalizing chain of f, or nothing if f is neither
           canalizing nor constant

  Among maximal chains the one taking the smallest variable, then input 0,
  at each step is reported.
*/
inline std::optional<DepthReport> canalizing_depth( const TruthTable& f )
{
  const unsigned n = f.arity();
  if ( n == 0 )
  {
    return std::nullopt;
  }
  DepthReport report;
  if ( is_constant( f ) )
  {
    const bool b = f.bit( 0 );
    report.depth = 1;
    report.chain.entries.push_back( { 1, false, b } );
    report.remainder_class = RemainderClass::constant;
    report.remainder = constant( n - 1, b );
    return report;
  }
  if ( !is_canalizing( f ) )
  {
    return std::nullopt;
  }

  detail::DepthSearch search;
  auto vars = detail::identity_vars( n );
  TruthTable g = f;
  unsigned remaining = search.depth( f );
  report.depth = remaining;
  while ( remaining > 0 )
  {
    bool stepped = false;
    for ( unsigned i = 1; i <= g.arity() && !stepped; ++i )
    {
      for ( bool a : { false, true } )
      {
        const auto b = cofactor_constant( g, i, a );
        if ( !b )
          continue;
        auto next = cofactor( g, i, !a );
        if ( 1 + search.depth( next ) != remaining )
          continue;
        report.chain.entries.push_back( { vars[i - 1], a, *b } );
        vars = detail::without( vars, i );
        g = std::move( next );
        stepped = true;
        break;
      }
    }
    if ( !stepped )
      throw std::logic_error( "canalizing_depth: chain reconstruction failed" );
    --remaining;
  }

  if ( report.depth == n )
  {
    report.chain.complete = true;
    report.remainder_class = RemainderClass::nested;
  }
  else
  {
    report.remainder_class = is_constant( g ) ? RemainderClass::constant : RemainderClass::non_canalizing;
    report.remainder = std::move( g );
  }
  return report;
}

/*! \brief Counts of one depth split by remainder class */
struct DepthBucket
{
  uint64_t constant = 0;
  uint64_t non_canalizing = 0;
  uint64_t nested = 0;

  uint64_t total() const noexcept { return constant + non_canalizing + nested; }

  uint64_t& operator[]( RemainderClass c ) noexcept
  {
    return c == RemainderClass::constant ? constant : c == RemainderClass::non_canalizing ? non_canalizing : nested;
  }

  friend bool operator==( const DepthBucket&, const DepthBucket& ) = default;
};

struct DepthCensus
{
  unsigned arity = 0;
  std::vector<DepthBucket> by_depth; ///< index d - 1 for depth d = 1..n

  uint64_t total() const noexcept
  {
    uint64_t s = 0;
    for ( const auto& b : by_depth )
      s += b.total();
    return s;
  }

  const DepthBucket& depth( unsigned d ) const { return by_depth.at( d - 1 ); }

  friend bool operator==( const DepthCensus&, const DepthCensus& ) = default;
};

using FamilyKey = std::pair<unsigned, RemainderClass>;
using Families = std::map<FamilyKey, std::vector<TruthTable>>;

namespace detail
{

inline void require_depth_arity( unsigned n )
{
  if ( n < 1 || n > 4 )
    throw std::domain_error( "depth census sweeps all functions and supports 1 <= n <= 4" );
}

} // namespace detail

/*! \brief Every canalizing n-variable function grouped by (depth, remainder class), n <= 4 */
inline Families depth_members( unsigned n, unsigned jobs = 1 )
{
  detail::require_depth_arity( n );
  const auto all = enumerate_all( n );
  const unsigned workers = std::max( 1u, jobs );
  std::vector<Families> parts( workers );
  parallel_chunks( all.size(), workers, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( auto f : all.subrange( first, last ) )
      if ( auto r = canalizing_depth( f ) )
        parts[chunk][{ r->depth, r->remainder_class }].push_back( std::move( f ) );
  } );
  Families out;
  for ( auto& p : parts )
    for ( auto& [key, fs] : p )
    {
      auto& dst = out[key];
      dst.insert( dst.end(), fs.begin(), fs.end() );
    }
  for ( auto& [key, fs] : out )
    sort_unique( fs );
  return out;
}

inline DepthCensus depth_census( unsigned n, unsigned jobs = 1 )
{
  detail::require_depth_arity( n );
  const auto all = enumerate_all( n );
  const unsigned workers = std::max( 1u, jobs );
  std::vector<std::vector<DepthBucket>> parts( workers, std::vector<DepthBucket>( n ) );
  parallel_chunks( all.size(), workers, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( const auto& f : all.subrange( first, last ) )
      if ( auto r = canalizing_depth( f ) )
        parts[chunk][r->depth - 1][r->remainder_class] += 1;
  } );
  DepthCensus census{ n, std::vector<DepthBucket>( n ) };
  for ( const auto& p : parts )
    for ( unsigned d = 0; d < n; ++d )
    {
      census.by_depth[d].constant += p[d].constant;
      census.by_depth[d].non_canalizing += p[d].non_canalizing;
      census.by_depth[d].nested += p[d].nested;
    }
  return census;
}

namespace detail
{

/* f(x) = b_t for the first t with x_{vars[t]} = a_t, otherwise g on the
   remaining variables in increasing index order */
inline TruthTable assemble( unsigned n, const std::vector<CanalizingTriple>& chain, const TruthTable& g )
{
  TruthTable f( n );
  std::vector<bool> used( n + 1, false );
  for ( const auto& e : chain )
    used[e.variable] = true;
  for ( uint64_t k = 0; k < f.num_bits(); ++k )
  {
    auto value = [&]() -> bool {
      for ( const auto& e : chain )
        if ( ( ( k >> ( n - e.variable ) ) & 1u ) == e.input )
          return e.output;
      uint64_t r = 0;
      for ( unsigned v = 1; v <= n; ++v )
        if ( !used[v] )
          r = ( r << 1 ) | ( ( k >> ( n - v ) ) & 1u );
      return g.bit( r );
    }();
    f.set_bit( k, value );
  }
  return f;
}

/* ordered selections of d distinct variables out of 1..n */
inline void ordered_selections( unsigned n, unsigned d, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out )
{
  if ( cur.size() == d )
  {
    out.push_back( cur );
    return;
  }
  for ( unsigned v = 1; v <= n; ++v )
  {
    if ( std::find( cur.begin(), cur.end(), v ) != cur.end() )
      continue;
    cur.push_back( v );
    ordered_selections( n, d, cur, out );
    cur.pop_back();
  }
}

} // namespace detail

/*! \brief Constructive enumeration of every (depth, remainder class) family, n <= 4

  Depth d < n with a constant remainder: a chain over d ordered variables
  closed by !b_d (plus the two constants at depth 1).  Depth d < n with a
  non-canalizing remainder: a chain over d ordered variables followed by any
  non-constant, non-canalizing g of the other n - d variables.  Depth n: the
  merge enumeration of nested canalizing functions.
*/
inline Families depth_families( unsigned n )
{
  detail::require_depth_arity( n );
  Families out;
  out[{ 1, RemainderClass::constant }] = { constant( n, false ), constant( n, true ) };

  for ( unsigned d = 1; d < n; ++d )
  {
    std::vector<TruthTable> remainders;
    for ( const auto& g : enumerate_all( n - d ) )
      if ( !is_constant( g ) && !is_canalizing( g ) )
        remainders.push_back( g );

    std::vector<std::vector<unsigned>> orders;
    std::vector<unsigned> cur;
    detail::ordered_selections( n, d, cur, orders );

    auto& with_constant = out[{ d, RemainderClass::constant }];
    auto& with_noncanal = out[{ d, RemainderClass::non_canalizing }];
    for ( const auto& order : orders )
    {
      for ( uint64_t ab = 0; ab < ( uint64_t{ 1 } << ( 2 * d ) ); ++ab )
      {
        std::vector<CanalizingTriple> chain;
        for ( unsigned t = 0; t < d; ++t )
          chain.push_back( { order[t], bool( ( ab >> ( 2 * t ) ) & 1u ), bool( ( ab >> ( 2 * t + 1 ) ) & 1u ) } );
        with_constant.push_back( detail::assemble( n, chain, constant( n - d, !chain.back().output ) ) );
        for ( const auto& g : remainders )
          with_noncanal.push_back( detail::assemble( n, chain, g ) );
      }
    }
  }
  out[{ n, RemainderClass::nested }] = enumerate_ncf( n );

  for ( auto it = out.begin(); it != out.end(); )
  {
    sort_unique( it->second );
    if ( it->second.empty() )
      it = out.erase( it );
    else
      ++it;
  }
  return out;
}

} // namespace canalyze
