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
  \file oracles.hpp
  \brief Slow reference implementations used only by the tests

  Everything here works on explicit assignments through evaluate(), never on
  bit layouts, so it shares no code path with the library routines it checks.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <canalyze/truth_table.hpp>

namespace canalyze::oracle
{

inline Assignment assignment( unsigned n, uint64_t k )
{
  Assignment a;
  a.values.resize( n );
  for ( unsigned v = 1; v <= n; ++v )
    a.values[v - 1] = ( k >> ( n - v ) ) & 1u;
  return a;
}

inline std::vector<Assignment> all_assignments( unsigned n )
{
  std::vector<Assignment> out;
  for ( uint64_t k = 0; k < ( uint64_t{ 1 } << n ); ++k )
    out.push_back( assignment( n, k ) );
  return out;
}

/* f is constant on every assignment with x_i = a */
inline std::optional<bool> canalizes( const TruthTable& f, unsigned i, bool a )
{
  std::optional<bool> seen;
  for ( const auto& x : all_assignments( f.arity() ) )
  {
    if ( x.values[i - 1] != a )
      continue;
    const bool v = evaluate( f, x );
    if ( seen && *seen != v )
      return std::nullopt;
    seen = v;
  }
  return seen;
}

inline bool canalizing( const TruthTable& f )
{
  for ( unsigned i = 1; i <= f.arity(); ++i )
    for ( bool a : { false, true } )
      if ( canalizes( f, i, a ) )
        return true;
  return false;
}

/* every function of the nested display: over all orders sigma and all (a, b) vectors */
inline std::set<TruthTable> ncf_by_display( unsigned n )
{
  std::set<TruthTable> out;
  std::vector<unsigned> sigma( n );
  std::iota( sigma.begin(), sigma.end(), 1u );
  const auto xs = all_assignments( n );
  do
  {
    for ( uint64_t av = 0; av < ( uint64_t{ 1 } << n ); ++av )
      for ( uint64_t bv = 0; bv < ( uint64_t{ 1 } << n ); ++bv )
      {
        TruthTable f( n );
        for ( uint64_t k = 0; k < xs.size(); ++k )
        {
          bool value = !( ( bv >> ( n - 1 ) ) & 1u );
          for ( unsigned t = 0; t < n; ++t )
            if ( xs[k].values[sigma[t] - 1] == bool( ( av >> t ) & 1u ) )
            {
              value = ( bv >> t ) & 1u;
              break;
            }
          f.set_bit( k, value );
        }
        out.insert( f );
      }
  } while ( std::next_permutation( sigma.begin(), sigma.end() ) );
  return out;
}

/* longest chain of canalizing steps on the sub-cube fixed so far; `fixed[v]` is -1 or the forced value */
inline unsigned chain_length( const TruthTable& f, std::vector<int>& fixed )
{
  const unsigned n = f.arity();
  auto consistent = [&]( const Assignment& x ) {
    for ( unsigned v = 1; v <= n; ++v )
      if ( fixed[v] >= 0 && x.values[v - 1] != bool( fixed[v] ) )
        return false;
    return true;
  };
  const auto xs = all_assignments( n );
  std::optional<bool> first;
  bool constant_here = true;
  for ( const auto& x : xs )
    if ( consistent( x ) )
    {
      const bool v = evaluate( f, x );
      if ( first && *first != v )
        constant_here = false;
      first = v;
    }
  if ( constant_here )
    return 0;

  unsigned best = 0;
  for ( unsigned i = 1; i <= n; ++i )
  {
    if ( fixed[i] >= 0 )
      continue;
    for ( bool a : { false, true } )
    {
      std::optional<bool> seen;
      bool ok = true;
      for ( const auto& x : xs )
      {
        if ( !consistent( x ) || x.values[i - 1] != a )
          continue;
        const bool v = evaluate( f, x );
        if ( seen && *seen != v )
        {
          ok = false;
          break;
        }
        seen = v;
      }
      if ( !ok )
        continue;
      fixed[i] = !a;
      best = std::max( best, 1 + chain_length( f, fixed ) );
      fixed[i] = -1;
    }
  }
  return best;
}

/* canalizing depth by direct search; constants are depth 1, non-canalizing f gives nothing */
inline std::optional<unsigned> depth( const TruthTable& f )
{
  if ( f.arity() == 0 )
    return std::nullopt;
  std::vector<int> fixed( f.arity() + 1, -1 );
  const unsigned d = chain_length( f, fixed );
  if ( d == 0 )
    return canalizing( f ) ? std::optional<unsigned>( 1 ) : std::nullopt;
  return d;
}

} // namespace canalyze::oracle
