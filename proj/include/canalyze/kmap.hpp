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
  \file kmap.hpp
  \brief Gray-code Karnaugh maps and structural canalization detection

  An n-variable function is laid out on 2^ceil(n/2) rows and 2^floor(n/2)
  columns.  Rows are labelled with the reflected Gray code over
  x_1 .. x_ceil(n/2) (x_1 is the most significant label bit) and columns with
  the reflected Gray code over the remaining variables.

  Detection works on recursive half splits.  Splitting a block along an axis
  gives K_i, the first half of its lines, and K_i*, the second half with the
  line order reversed.  Because the code is reflected, line r of K_i and line
  r of K_i* carry the same residual label; the pair is exactly the two
  cofactors of the variable split off at that level.

  The pairwise relation `similar` (A ~ B) holds when at least half of the
  rows, or at least half of the columns, are constant with one common value
  at the same positions in both blocks.  It is a necessary condition for any
  deeper variable on the same axis to be canalizing, so the detector uses a
  failed ~ at level i to stop descending that axis.  The verdict for the
  level-i variable itself is read off the union of all level-i blocks on one
  side, which must be constant.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze
{

enum class Axis
{
  row,
  col
};

enum class Half
{
  first,          ///< K_i
  reversed_second ///< K_i*
};

namespace detail
{

constexpr uint32_t gray( uint32_t i ) noexcept { return i ^ ( i >> 1 ); }

inline std::string label_string( uint32_t label, unsigned bits )
{
  std::string s( bits, '0' );
  for ( unsigned b = 0; b < bits; ++b )
  {
    if ( ( label >> ( bits - 1 - b ) ) & 1u )
    {
      s[b] = '1';
    }
  }
  return s;
}

} // namespace detail

class KMap
{
public:
  KMap() = default;

  explicit KMap( const TruthTable& f )
  {
    if ( f.arity() < 2 )
    {
      throw std::invalid_argument( "K-map needs at least 2 variables, got " + std::to_string( f.arity() ) );
    }
    if ( f.arity() > 20 )
    {
      throw std::invalid_argument( "K-map of " + std::to_string( f.arity() ) + " variables is too large" );
    }
    arity_ = f.arity();
    row_vars_ = ( arity_ + 1 ) / 2;
    col_vars_ = arity_ / 2;
    row_labels_.resize( std::size_t{ 1 } << row_vars_ );
    col_labels_.resize( std::size_t{ 1 } << col_vars_ );
    for ( uint32_t r = 0; r < row_labels_.size(); ++r )
    {
      row_labels_[r] = detail::gray( r );
    }
    for ( uint32_t c = 0; c < col_labels_.size(); ++c )
    {
      col_labels_[c] = detail::gray( c );
    }
    cells_.resize( rows() * cols() );
    for ( std::size_t r = 0; r < rows(); ++r )
    {
      for ( std::size_t c = 0; c < cols(); ++c )
      {
        cells_[r * cols() + c] = f.bit( table_index( r, c ) );
      }
    }
  }

  unsigned arity() const noexcept { return arity_; }
  unsigned row_vars() const noexcept { return row_vars_; }
  unsigned col_vars() const noexcept { return col_vars_; }
  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }

  bool cell( std::size_t r, std::size_t c ) const noexcept { return cells_[r * cols() + c]; }

  const std::vector<uint32_t>& row_labels() const noexcept { return row_labels_; }
  const std::vector<uint32_t>& col_labels() const noexcept { return col_labels_; }

  /* truth-table bit shown at (r, c) */
  uint64_t table_index( std::size_t r, std::size_t c ) const noexcept
  {
    return ( uint64_t{ row_labels_[r] } << col_vars_ ) | col_labels_[c];
  }

  /* value of variable x_var in the assignment shown at (r, c) */
  bool variable_at( std::size_t r, std::size_t c, unsigned var ) const noexcept
  {
    return ( table_index( r, c ) >> ( arity_ - var ) ) & 1u;
  }

private:
  unsigned arity_ = 0;
  unsigned row_vars_ = 0;
  unsigned col_vars_ = 0;
  std::vector<uint8_t> cells_;
  std::vector<uint32_t> row_labels_;
  std::vector<uint32_t> col_labels_;
};

inline KMap build_kmap( const TruthTable& f )
{
  return KMap( f );
}

struct Decomposition;

/*! \brief Rectangular block of a KMap reached by a sequence of half splits

  A view: it refers to its map, which must outlive it.  Lines are stored as
  indices into the map in block order, so a reversed half is just a reversed
  index list.
*/
class SubMap
{
public:
  using Step = std::pair<Axis, Half>;

  static SubMap whole( KMap&& ) = delete;

  static SubMap whole( const KMap& map )
  {
    SubMap s;
    s.map_ = &map;
    s.rows_.resize( map.rows() );
    s.cols_.resize( map.cols() );
    for ( std::size_t r = 0; r < map.rows(); ++r )
      s.rows_[r] = r;
    for ( std::size_t c = 0; c < map.cols(); ++c )
      s.cols_[c] = c;
    return s;
  }

  const KMap& map() const noexcept { return *map_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  bool cell( std::size_t r, std::size_t c ) const noexcept { return map_->cell( rows_[r], cols_[c] ); }

  const std::vector<std::size_t>& row_indices() const noexcept { return rows_; }
  const std::vector<std::size_t>& col_indices() const noexcept { return cols_; }
  const std::vector<Step>& path() const noexcept { return path_; }

  /* number of row (column) variables already split off */
  unsigned row_depth() const noexcept { return row_depth_; }
  unsigned col_depth() const noexcept { return col_depth_; }

  /* Gray label of line r restricted to the variables not yet split off */
  uint32_t residual_row_label( std::size_t r ) const noexcept
  {
    const unsigned bits = map_->row_vars() - row_depth_;
    return map_->row_labels()[rows_[r]] & ( ( uint32_t{ 1 } << bits ) - 1u );
  }

  uint32_t residual_col_label( std::size_t c ) const noexcept
  {
    const unsigned bits = map_->col_vars() - col_depth_;
    return map_->col_labels()[cols_[c]] & ( ( uint32_t{ 1 } << bits ) - 1u );
  }

  std::optional<bool> constant_value() const noexcept
  {
    const bool v = cell( 0, 0 );
    for ( std::size_t r = 0; r < rows(); ++r )
      for ( std::size_t c = 0; c < cols(); ++c )
        if ( cell( r, c ) != v )
          return std::nullopt;
    return v;
  }

  std::optional<bool> row_value( std::size_t r ) const noexcept
  {
    const bool v = cell( r, 0 );
    for ( std::size_t c = 1; c < cols(); ++c )
      if ( cell( r, c ) != v )
        return std::nullopt;
    return v;
  }

  std::optional<bool> col_value( std::size_t c ) const noexcept
  {
    const bool v = cell( 0, c );
    for ( std::size_t r = 1; r < rows(); ++r )
      if ( cell( r, c ) != v )
        return std::nullopt;
    return v;
  }

private:
  friend struct Decomposition;
  friend Decomposition decompose( const SubMap& block, Axis axis );

  const KMap* map_ = nullptr;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  unsigned row_depth_ = 0;
  unsigned col_depth_ = 0;
  std::vector<Step> path_;
};

/*! \brief The pair (K_i, K_i*) produced by one split */
struct Decomposition
{
  SubMap first;
  SubMap second;

  const SubMap& side( bool input ) const noexcept { return input ? second : first; }
};

inline Decomposition decompose( const SubMap& block, Axis axis )
{
  const auto& lines = axis == Axis::row ? block.rows_ : block.cols_;
  if ( lines.size() < 2 )
  {
    throw std::invalid_argument( std::string( "cannot split a block with a single " ) + ( axis == Axis::row ? "row" : "column" ) );
  }
  const auto half = static_cast<std::ptrdiff_t>( lines.size() / 2 );
  Decomposition d{ block, block };
  auto& a = axis == Axis::row ? d.first.rows_ : d.first.cols_;
  auto& b = axis == Axis::row ? d.second.rows_ : d.second.cols_;
  a.assign( lines.begin(), lines.begin() + half );
  b.assign( lines.rbegin(), lines.rbegin() + half );
  for ( auto* s : { &d.first, &d.second } )
  {
    ( axis == Axis::row ? s->row_depth_ : s->col_depth_ ) += 1;
  }
  d.first.path_.emplace_back( axis, Half::first );
  d.second.path_.emplace_back( axis, Half::reversed_second );
  return d;
}

inline Decomposition decompose( const KMap& map, Axis axis )
{
  return decompose( SubMap::whole( map ), axis );
}

/* blocks point into their map, so a temporary map would dangle */
Decomposition decompose( KMap&& map, Axis axis ) = delete;

/*! \brief The relation A ~ B

  True iff at least half the rows of both blocks, at the same positions, are
  constant with one common value, or the same holds for columns.  Blocks must
  have the same shape and residual labels.
*/
inline bool similar( const SubMap& a, const SubMap& b )
{
  if ( a.rows() != b.rows() || a.cols() != b.cols() )
  {
    throw std::invalid_argument( "similar: block shapes differ" );
  }
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    if ( a.residual_row_label( r ) != b.residual_row_label( r ) )
      throw std::invalid_argument( "similar: row labels are not aligned" );
  }
  for ( std::size_t c = 0; c < a.cols(); ++c )
  {
    if ( a.residual_col_label( c ) != b.residual_col_label( c ) )
      throw std::invalid_argument( "similar: column labels are not aligned" );
  }

  std::size_t rows_with[2] = { 0, 0 };
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    const auto va = a.row_value( r );
    if ( va && va == b.row_value( r ) )
      ++rows_with[*va];
  }
  std::size_t cols_with[2] = { 0, 0 };
  for ( std::size_t c = 0; c < a.cols(); ++c )
  {
    const auto va = a.col_value( c );
    if ( va && va == b.col_value( c ) )
      ++cols_with[*va];
  }
  for ( int v = 0; v < 2; ++v )
  {
    if ( 2 * rows_with[v] >= a.rows() || 2 * cols_with[v] >= a.cols() )
      return true;
  }
  return false;
}

/*! \brief All level-`level` blocks along `axis` on side `input`

  Level 1 gives {K_1} (input 0) or {K_1*} (input 1); level i collects that
  side of every pair obtained by splitting all 2^(i-1) level-(i-1) blocks.
*/
inline std::vector<SubMap> level_blocks( const KMap& map, Axis axis, unsigned level, bool input )
{
  const unsigned vars = axis == Axis::row ? map.row_vars() : map.col_vars();
  if ( level < 1 || level > vars )
  {
    throw std::out_of_range( "level " + std::to_string( level ) + " not in 1.." + std::to_string( vars ) );
  }
  std::vector<SubMap> blocks{ SubMap::whole( map ) };
  for ( unsigned l = 1; l < level; ++l )
  {
    std::vector<SubMap> next;
    for ( const auto& b : blocks )
    {
      auto d = decompose( b, axis );
      next.push_back( std::move( d.first ) );
      next.push_back( std::move( d.second ) );
    }
    blocks = std::move( next );
  }
  std::vector<SubMap> out;
  for ( const auto& b : blocks )
  {
    out.push_back( decompose( b, axis ).side( input ) );
  }
  return out;
}

std::vector<SubMap> level_blocks( KMap&& map, Axis axis, unsigned level, bool input ) = delete;

/*! \brief Cells (row, col) whose assignment has x_var = value */
inline std::vector<std::pair<std::size_t, std::size_t>> region( const KMap& map, unsigned var, bool value )
{
  if ( var < 1 || var > map.arity() )
  {
    throw std::out_of_range( "variable x" + std::to_string( var ) + " not in 1.." + std::to_string( map.arity() ) );
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for ( std::size_t r = 0; r < map.rows(); ++r )
    for ( std::size_t c = 0; c < map.cols(); ++c )
      if ( map.variable_at( r, c, var ) == value )
        out.emplace_back( r, c );
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> region( const TruthTable& f, unsigned var, bool value )
{
  return region( build_kmap( f ), var, value );
}

namespace detail
{

/* at least half the rows, or half the columns, of the whole map are constant with one value */
inline bool has_constant_half( const SubMap& k )
{
  std::size_t rows_with[2] = { 0, 0 };
  std::size_t cols_with[2] = { 0, 0 };
  for ( std::size_t r = 0; r < k.rows(); ++r )
    if ( auto v = k.row_value( r ) )
      ++rows_with[*v];
  for ( std::size_t c = 0; c < k.cols(); ++c )
    if ( auto v = k.col_value( c ) )
      ++cols_with[*v];
  for ( int v = 0; v < 2; ++v )
    if ( 2 * rows_with[v] >= k.rows() || 2 * cols_with[v] >= k.cols() )
      return true;
  return false;
}

/* common constant value of one side across all pairs */
inline std::optional<bool> side_value( const std::vector<Decomposition>& pairs, bool input )
{
  std::optional<bool> value;
  for ( const auto& p : pairs )
  {
    const auto v = p.side( input ).constant_value();
    if ( !v || ( value && *value != *v ) )
      return std::nullopt;
    value = v;
  }
  return value;
}

} // namespace detail

/*! \brief Structural canalization test on the K-map of f

  Row variables are examined level by level (x_1, x_2, ...), then column
  variables.  Level 1 accepts when K_1 or K_1* is constant.  A deeper level
  is only reached while every pair at the previous level satisfies ~, and
  accepts when one side is constant with the same value across all pairs.
  Returns the witness with the smallest variable index, input 0 before 1.

  Functions of fewer than two variables and constants have no meaningful
  map decomposition and are answered by the definitional test.
*/
inline std::optional<CanalizingTriple> detect_canalizing_kmap( const TruthTable& f )
{
  if ( f.arity() < 2 || is_constant( f ) )
  {
    const auto t = canalizing_triples( f );
    if ( t.empty() )
      return std::nullopt;
    return t.front();
  }

  const KMap map( f );
  const auto whole = SubMap::whole( map );
  if ( !detail::has_constant_half( whole ) )
  {
    return std::nullopt;
  }

  for ( Axis axis : { Axis::row, Axis::col } )
  {
    const unsigned vars = axis == Axis::row ? map.row_vars() : map.col_vars();
    const unsigned offset = axis == Axis::row ? 0u : map.row_vars();
    std::vector<SubMap> blocks{ whole };
    for ( unsigned level = 1; level <= vars; ++level )
    {
      std::vector<Decomposition> pairs;
      pairs.reserve( blocks.size() );
      for ( const auto& b : blocks )
      {
        pairs.push_back( decompose( b, axis ) );
      }
      for ( bool input : { false, true } )
      {
        if ( auto b = detail::side_value( pairs, input ) )
        {
          return CanalizingTriple{ offset + level, input, *b };
        }
      }
      if ( level == vars )
      {
        break;
      }
      bool chained = true;
      for ( const auto& p : pairs )
      {
        if ( !similar( p.first, p.second ) )
        {
          chained = false;
          break;
        }
      }
      if ( !chained )
      {
        break;
      }
      blocks.clear();
      for ( auto& p : pairs )
      {
        blocks.push_back( std::move( p.first ) );
        blocks.push_back( std::move( p.second ) );
      }
    }
  }
  return std::nullopt;
}

/*! \brief Aligned text grid with binary Gray labels

  The corner cell names the row and column variables, e.g. "x1x2\x3".
*/
inline std::string render_kmap( const KMap& map )
{
  std::string corner;
  for ( unsigned v = 1; v <= map.row_vars(); ++v )
    corner += "x" + std::to_string( v );
  corner += "\\";
  for ( unsigned v = map.row_vars() + 1; v <= map.arity(); ++v )
    corner += "x" + std::to_string( v );

  const std::size_t label_width = std::max<std::size_t>( corner.size(), map.row_vars() );
  const std::size_t cell_width = std::max<std::size_t>( map.col_vars(), 1 );
  std::ostringstream os;
  os << corner << std::string( label_width - corner.size(), ' ' );
  for ( std::size_t c = 0; c < map.cols(); ++c )
  {
    os << ' ' << detail::label_string( map.col_labels()[c], map.col_vars() );
  }
  os << '\n';
  for ( std::size_t r = 0; r < map.rows(); ++r )
  {
    const auto label = detail::label_string( map.row_labels()[r], map.row_vars() );
    os << std::string( label_width - label.size(), ' ' ) << label;
    for ( std::size_t c = 0; c < map.cols(); ++c )
    {
      os << ' ' << std::string( cell_width - 1, ' ' ) << ( map.cell( r, c ) ? '1' : '0' );
    }
    os << '\n';
  }
  return os.str();
}

} // namespace canalyze
