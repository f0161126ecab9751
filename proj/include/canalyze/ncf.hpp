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
  \file ncf.hpp
  \brief Nested canalizing functions: chain extraction, enumeration by
         merging, and the start-variable / Hamming-distance count matrix
*/

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze
{

/*! \brief Ordered canalizing chain (sigma(t), a_t, b_t)

  Variables are indices of the original function.  A complete chain covers
  all n variables and its final else-branch is !b_n.
*/
struct NestedChain
{
  std::vector<CanalizingTriple> entries;
  bool complete = false;

  friend bool operator==( const NestedChain&, const NestedChain& ) = default;
};

namespace detail
{

/* local variable position -> original variable index */
using VarMap = std::vector<unsigned>;

inline VarMap identity_vars( unsigned n )
{
  VarMap v( n );
  for ( unsigned i = 0; i < n; ++i )
    v[i] = i + 1;
  return v;
}

inline VarMap without( const VarMap& vars, unsigned local )
{
  VarMap v = vars;
  v.erase( v.begin() + ( local - 1 ) );
  return v;
}

/* smallest-variable-first complete chain of g, appended to `out` */
inline bool find_chain( const TruthTable& g, const VarMap& vars, std::vector<CanalizingTriple>& out )
{
  if ( g.arity() == 0 )
  {
    return false;
  }
  if ( g.arity() == 1 )
  {
    // only x and !x qualify: b on one side, !b on the other
    if ( g.bit( 0 ) == g.bit( 1 ) )
      return false;
    out.push_back( { vars[0], false, g.bit( 0 ) } );
    return true;
  }
  for ( unsigned i = 1; i <= g.arity(); ++i )
  {
    for ( bool a : { false, true } )
    {
      const auto b = cofactor_constant( g, i, a );
      if ( !b )
        continue;
      out.push_back( { vars[i - 1], a, *b } );
      if ( find_chain( cofactor( g, i, !a ), without( vars, i ), out ) )
        return true;
      out.pop_back();
    }
  }
  return false;
}

} // namespace detail

/*! \brief Canonical complete chain of f, if f is nested canalizing

  At every level the smallest variable index is tried first, then input 0;
  the first choice that still completes is kept.
*/
inline std::optional<NestedChain> ncf_chain( const TruthTable& f )
{
  NestedChain chain;
  if ( !detail::find_chain( f, detail::identity_vars( f.arity() ), chain.entries ) )
  {
    return std::nullopt;
  }
  chain.complete = true;
  return chain;
}

inline bool is_ncf( const TruthTable& f )
{
  std::vector<CanalizingTriple> scratch;
  return detail::find_chain( f, detail::identity_vars( f.arity() ), scratch );
}

/*! \brief Evaluates a complete chain as an n-variable function */
inline TruthTable chain_function( const NestedChain& chain, unsigned n )
{
  if ( chain.entries.empty() )
  {
    throw std::invalid_argument( "chain_function: empty chain" );
  }
  TruthTable f( n );
  for ( uint64_t k = 0; k < f.num_bits(); ++k )
  {
    bool value = !chain.entries.back().output;
    for ( const auto& e : chain.entries )
    {
      if ( ( ( k >> ( n - e.variable ) ) & 1u ) == e.input )
      {
        value = e.output;
        break;
      }
    }
    f.set_bit( k, value );
  }
  return f;
}

/*! \brief All nested canalizing functions of arity n, in integer order

  NCF(1) = {x, !x}; NCF(n) is every merge of an NCF(n-1) member at every
  position with every (input, output), deduplicated.
*/
inline std::vector<TruthTable> enumerate_ncf( unsigned n, unsigned jobs = 1 )
{
  if ( n < 1 || n > 7 )
  {
    throw std::domain_error( "enumerate_ncf supports 1 <= n <= 7" );
  }
  // integer order: "10" (= !x) before "01" (= x)
  std::vector<TruthTable> level{ from_binary( "10", 1 ), from_binary( "01", 1 ) };
  for ( unsigned m = 1; m < n; ++m )
  {
    const unsigned workers = std::max( 1u, jobs );
    std::vector<std::vector<TruthTable>> parts( workers );
    parallel_chunks( level.size(), workers, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
      auto& out = parts[chunk];
      for ( auto k = first; k < last; ++k )
        for ( unsigned pos = 1; pos <= m + 1; ++pos )
          for ( bool a : { false, true } )
            for ( bool c : { false, true } )
              out.push_back( merge( level[k], pos, a, c ) );
      sort_unique( out );
    } );
    std::vector<TruthTable> next;
    for ( auto& p : parts )
      next.insert( next.end(), std::make_move_iterator( p.begin() ), std::make_move_iterator( p.end() ) );
    sort_unique( next );
    level = std::move( next );
  }
  return level;
}

/*! \brief Integer matrix indexed by start variable i (rows 1..n) and
           Hamming-distance class j (columns 1..2^(n-2), H.D = 2j - 1) */
class HDMatrix
{
public:
  HDMatrix() = default;

  explicit HDMatrix( unsigned n )
      : arity_( n )
  {
    if ( n < 2 || n > 24 )
    {
      throw std::domain_error( "H.D matrix needs 2 <= n <= 24" );
    }
    cells_.assign( n, std::vector<uint64_t>( std::size_t{ 1 } << ( n - 2 ), 0u ) );
  }

  unsigned arity() const noexcept { return arity_; }
  std::size_t rows() const noexcept { return cells_.size(); }
  std::size_t cols() const noexcept { return cells_.empty() ? 0 : cells_.front().size(); }

  /* 1-based access */
  uint64_t at( std::size_t i, std::size_t j ) const { return cells_.at( i - 1 ).at( j - 1 ); }
  uint64_t& at( std::size_t i, std::size_t j ) { return cells_.at( i - 1 ).at( j - 1 ); }

  const std::vector<std::vector<uint64_t>>& cells() const noexcept { return cells_; }

  uint64_t total() const
  {
    uint64_t s = 0;
    for ( const auto& row : cells_ )
      for ( auto v : row )
      {
        if ( v > std::numeric_limits<uint64_t>::max() - s )
          throw std::overflow_error( "H.D matrix total overflows 64 bits" );
        s += v;
      }
    return s;
  }

  /* N_c = 4 * sum of all cells */
  uint64_t ncf_count() const
  {
    const auto t = total();
    if ( t > std::numeric_limits<uint64_t>::max() / 4 )
      throw std::overflow_error( "NCF count overflows 64 bits" );
    return 4 * t;
  }

  friend bool operator==( const HDMatrix&, const HDMatrix& ) = default;

private:
  unsigned arity_ = 0;
  std::vector<std::vector<uint64_t>> cells_;
};

/*! \brief Start-variable / H.D count matrix M_n by recursion

  M_2 = (2, 0)^T.  For n > 2, with h = 2^(n-3) and w = 2^(n-2) columns:
    M_n[n][j] = 0                               for j <= h
    M_n[i][j] = 2 * sum_{k=i}^{n-1} M_{n-1}[k][j] for j <= h, i < n
    M_n[i][j] = M_n[1][w + 1 - j]               for j > h
*/
inline HDMatrix hd_matrix( unsigned n )
{
  HDMatrix m( n );
  m.at( 1, 1 ) = 2;
  for ( unsigned k = 3; k <= n; ++k )
  {
    HDMatrix next( k );
    const std::size_t h = std::size_t{ 1 } << ( k - 3 );
    const std::size_t w = std::size_t{ 1 } << ( k - 2 );
    for ( std::size_t j = 1; j <= h; ++j )
    {
      uint64_t suffix = 0;
      for ( std::size_t i = k - 1; i >= 1; --i )
      {
        const auto v = m.at( i, j );
        if ( v > ( std::numeric_limits<uint64_t>::max() / 2 - suffix ) )
          throw std::overflow_error( "H.D matrix entry overflows 64 bits" );
        suffix += v;
        next.at( i, j ) = 2 * suffix;
      }
      next.at( k, j ) = 0;
    }
    for ( std::size_t i = 1; i <= k; ++i )
      for ( std::size_t j = h + 1; j <= w; ++j )
        next.at( i, j ) = next.at( 1, w + 1 - j );
    m = std::move( next );
  }
  return m;
}

enum class StartRule
{
  min_feasible,      ///< smallest x_i that begins some complete chain
  canonical_chain    ///< first variable of the lexicographically smallest chain (ncf_chain)
};

/*! \brief Smallest variable that starts a complete chain of NCF f, 0 if f is not an NCF */
inline unsigned min_start_variable( const TruthTable& f )
{
  if ( f.arity() == 1 )
    return f.bit( 0 ) != f.bit( 1 ) ? 1u : 0u;
  for ( unsigned i = 1; i <= f.arity(); ++i )
    for ( bool a : { false, true } )
      if ( cofactor_constant( f, i, a ) && is_ncf( cofactor( f, i, !a ) ) )
        return i;
  return 0;
}

/*! \brief NCF counts bucketed by (start variable, (H.D + 1) / 2), n <= 5 */
inline HDMatrix hd_histogram( unsigned n, StartRule rule = StartRule::min_feasible, unsigned jobs = 1 )
{
  if ( n < 2 || n > 5 )
  {
    throw std::domain_error( "hd_histogram enumerates NCFs exhaustively and supports 2 <= n <= 5" );
  }
  const auto ncfs = enumerate_ncf( n, jobs );
  const unsigned workers = std::max( 1u, jobs );
  std::vector<HDMatrix> parts( workers, HDMatrix( n ) );
  parallel_chunks( ncfs.size(), workers, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( auto k = first; k < last; ++k )
    {
      const auto& f = ncfs[k];
      const unsigned start = rule == StartRule::min_feasible ? min_start_variable( f ) : ncf_chain( f )->entries.front().variable;
      const auto hd = min_const_hd( f );
      if ( start == 0 || hd % 2 == 0 )
        throw std::logic_error( "hd_histogram: " + to_binary( f ) + " is not a well-formed NCF" );
      parts[chunk].at( start, ( hd + 1 ) / 2 ) += 1;
    }
  } );
  HDMatrix out( n );
  for ( const auto& p : parts )
    for ( std::size_t i = 1; i <= out.rows(); ++i )
      for ( std::size_t j = 1; j <= out.cols(); ++j )
        out.at( i, j ) += p.at( i, j );
  return out;
}

} // namespace canalyze
