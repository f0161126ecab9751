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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include <canalyze/kmap.hpp>
#include <canalyze/triple.hpp>

#include "oracles.hpp"

namespace canalyze
{
namespace
{

const char* canalizing_in_x3 = "11010000111100001111000011110000";
const char* non_canalizing_32 = "00001110000111111110000111110000";

using Cells = std::set<std::pair<std::size_t, std::size_t>>;

Cells cells_of( const SubMap& s )
{
  Cells out;
  for ( auto r : s.row_indices() )
    for ( auto c : s.col_indices() )
      out.emplace( r, c );
  return out;
}

Cells as_cells( const std::vector<std::pair<std::size_t, std::size_t>>& v )
{
  return Cells( v.begin(), v.end() );
}

TEST( KMap, Dimensions )
{
  EXPECT_EQ( build_kmap( from_binary( "01010101", 3 ) ).rows(), 4u );
  EXPECT_EQ( build_kmap( from_binary( "01010101", 3 ) ).cols(), 2u );
  EXPECT_EQ( build_kmap( from_binary( canalizing_in_x3, 5 ) ).rows(), 8u );
  EXPECT_EQ( build_kmap( from_binary( canalizing_in_x3, 5 ) ).cols(), 4u );
  EXPECT_THROW( build_kmap( from_binary( "01", 1 ) ), std::invalid_argument );
}

TEST( KMap, SumOfOddMintermsHasRowsZeroOne )
{
  const auto m = build_kmap( from_binary( "01010101", 3 ) );
  for ( std::size_t r = 0; r < m.rows(); ++r )
  {
    EXPECT_FALSE( m.cell( r, 0 ) );
    EXPECT_TRUE( m.cell( r, 1 ) );
  }
}

TEST( KMap, ConstantZeroGrid )
{
  const auto m = build_kmap( constant( 2, false ) );
  for ( std::size_t r = 0; r < 2; ++r )
    for ( std::size_t c = 0; c < 2; ++c )
      EXPECT_FALSE( m.cell( r, c ) );
}

TEST( KMap, GrayLabelsAndBijection )
{
  const auto m = build_kmap( from_binary( canalizing_in_x3, 5 ) );
  EXPECT_EQ( m.col_labels(), ( std::vector<uint32_t>{ 0, 1, 3, 2 } ) );
  for ( const auto* labels : { &m.row_labels(), &m.col_labels() } )
    for ( std::size_t i = 1; i < labels->size(); ++i )
      EXPECT_EQ( __builtin_popcount( ( *labels )[i] ^ ( *labels )[i - 1] ), 1 );
  std::set<uint64_t> indices;
  const auto f = from_binary( canalizing_in_x3, 5 );
  for ( std::size_t r = 0; r < m.rows(); ++r )
    for ( std::size_t c = 0; c < m.cols(); ++c )
    {
      indices.insert( m.table_index( r, c ) );
      EXPECT_EQ( m.cell( r, c ), f.bit( m.table_index( r, c ) ) );
    }
  EXPECT_EQ( indices.size(), 32u );
}

TEST( KMap, ExampleTwoXThreeCellsAreZero )
{
  const auto m = build_kmap( from_binary( canalizing_in_x3, 5 ) );
  for ( const auto& [r, c] : region( m, 3, true ) )
    EXPECT_FALSE( m.cell( r, c ) );
}

TEST( Decompose, AndOfTwoVariables )
{
  const auto m = build_kmap( from_binary( "0001", 2 ) );
  const auto d = decompose( m, Axis::row );
  EXPECT_FALSE( d.first.cell( 0, 0 ) );
  EXPECT_FALSE( d.first.cell( 0, 1 ) );
  EXPECT_TRUE( d.second.cell( 0, 1 ) );
  EXPECT_FALSE( d.second.cell( 0, 0 ) );
}

TEST( Decompose, SelfConcatenationHalvesMatch )
{
  for ( const auto& f : enumerate_all( 3 ) )
  {
    const auto m = build_kmap( concat( f, f ) );
    const auto d = decompose( m, Axis::row );
    for ( std::size_t r = 0; r < d.first.rows(); ++r )
      for ( std::size_t c = 0; c < d.first.cols(); ++c )
        ASSERT_EQ( d.first.cell( r, c ), d.second.cell( r, c ) );
  }
}

TEST( Decompose, ExampleTwoThirdLevelIsZero )
{
  const auto m = build_kmap( from_binary( canalizing_in_x3, 5 ) );
  for ( const auto& block : level_blocks( m, Axis::row, 3, true ) )
    EXPECT_EQ( block.constant_value(), std::optional<bool>( false ) );
  EXPECT_THROW( level_blocks( m, Axis::row, 4, true ), std::out_of_range );
}

TEST( Decompose, ResidualLabelsAlign )
{
  for ( unsigned n = 2; n <= 7; ++n )
  {
    const auto m = build_kmap( projection( 1, n ) );
    for ( auto axis : { Axis::row, Axis::col } )
    {
      const unsigned vars = axis == Axis::row ? m.row_vars() : m.col_vars();
      std::vector<SubMap> blocks{ SubMap::whole( m ) };
      for ( unsigned level = 1; level <= vars; ++level )
      {
        std::vector<SubMap> next;
        for ( const auto& b : blocks )
        {
          const auto d = decompose( b, axis );
          ASSERT_EQ( d.first.rows(), d.second.rows() );
          ASSERT_EQ( d.first.cols(), d.second.cols() );
          for ( std::size_t r = 0; r < d.first.rows(); ++r )
            ASSERT_EQ( d.first.residual_row_label( r ), d.second.residual_row_label( r ) );
          for ( std::size_t c = 0; c < d.first.cols(); ++c )
            ASSERT_EQ( d.first.residual_col_label( c ), d.second.residual_col_label( c ) );
          next.push_back( d.first );
          next.push_back( d.second );
        }
        blocks = std::move( next );
      }
      EXPECT_THROW( decompose( blocks.front(), axis ), std::invalid_argument );
    }
  }
}

TEST( Region, Examples )
{
  const auto m3 = build_kmap( projection( 1, 3 ) );
  EXPECT_EQ( as_cells( region( m3, 1, false ) ), ( Cells{ { 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } } ) );
  // rows labelled 01 and 11 are the middle two
  EXPECT_EQ( as_cells( region( m3, 2, true ) ), ( Cells{ { 1, 0 }, { 1, 1 }, { 2, 0 }, { 2, 1 } } ) );
  const auto m5 = build_kmap( projection( 1, 5 ) );
  for ( const auto& [r, c] : region( m5, 4, false ) )
    EXPECT_LT( c, 2u ); // column labels 00 and 01
  EXPECT_EQ( region( m5, 4, false ).size(), 16u );
}

TEST( Region, LevelBlocksCoverExactlyTheRegion )
{
  for ( unsigned n = 2; n <= 5; ++n )
  {
    const auto m = build_kmap( constant( n, false ) );
    for ( auto axis : { Axis::row, Axis::col } )
    {
      const unsigned vars = axis == Axis::row ? m.row_vars() : m.col_vars();
      const unsigned offset = axis == Axis::row ? 0 : m.row_vars();
      for ( unsigned level = 1; level <= vars; ++level )
        for ( bool a : { false, true } )
        {
          Cells got;
          for ( const auto& b : level_blocks( m, axis, level, a ) )
          {
            const auto cells = cells_of( b );
            got.insert( cells.begin(), cells.end() );
          }
          ASSERT_EQ( got, as_cells( region( m, offset + level, a ) ) ) << "n=" << n << " level=" << level;
        }
    }
  }
}

TEST( Similar, WorkedExamples )
{
  const auto m2 = build_kmap( from_binary( canalizing_in_x3, 5 ) );
  const auto d2 = decompose( m2, Axis::row );
  EXPECT_TRUE( similar( d2.first, d2.second ) );
  const auto m3 = build_kmap( from_binary( non_canalizing_32, 5 ) );
  const auto d3 = decompose( m3, Axis::row );
  EXPECT_FALSE( similar( d3.first, d3.second ) );
  const auto ones = build_kmap( constant( 4, true ) );
  const auto z = decompose( ones, Axis::col );
  EXPECT_TRUE( similar( z.first, z.second ) );
  EXPECT_THROW( similar( d2.first, decompose( m2, Axis::col ).first ), std::invalid_argument );
}

TEST( Detector, WorkedExamples )
{
  const auto w2 = detect_canalizing_kmap( from_binary( canalizing_in_x3, 5 ) );
  ASSERT_TRUE( w2 );
  EXPECT_EQ( *w2, ( CanalizingTriple{ 3, true, false } ) );
  EXPECT_FALSE( detect_canalizing_kmap( from_binary( non_canalizing_32, 5 ) ) );
  EXPECT_FALSE( detect_canalizing_kmap( from_binary( "0110", 2 ) ) );
  EXPECT_FALSE( detect_canalizing_kmap( from_binary( "1001", 2 ) ) );
}

TEST( Detector, AgreesWithOracleExhaustive )
{
  for ( unsigned n = 1; n <= 4; ++n )
    for ( const auto& f : enumerate_all( n ) )
    {
      const auto w = detect_canalizing_kmap( f );
      ASSERT_EQ( w.has_value(), oracle::canalizing( f ) ) << to_binary( f );
      if ( w )
      {
        ASSERT_EQ( oracle::canalizes( f, w->variable, w->input ), std::optional<bool>( w->output ) );
        // smallest variable, then input 0
        ASSERT_EQ( *w, canalizing_triples( f ).front() );
      }
    }
}

TEST( Detector, AgreesWithDefinitionOnRandomLargerFunctions )
{
  std::mt19937_64 rng( 11 );
  for ( unsigned n = 5; n <= 8; ++n )
    for ( int trial = 0; trial < 3000; ++trial )
    {
      TruthTable f( n );
      for ( uint64_t k = 0; k < f.num_bits(); ++k )
        f.set_bit( k, rng() & 1u );
      // bias half the samples towards canalizing functions
      if ( trial % 2 )
      {
        const unsigned v = 1 + rng() % n;
        const bool a = rng() & 1u, b = rng() & 1u;
        for ( uint64_t k = 0; k < f.num_bits(); ++k )
          if ( ( ( k >> ( n - v ) ) & 1u ) == a )
            f.set_bit( k, b );
      }
      const auto w = detect_canalizing_kmap( f );
      ASSERT_EQ( w.has_value(), is_canalizing( f ) ) << to_binary( f );
      if ( w )
        ASSERT_EQ( *w, canalizing_triples( f ).front() );
    }
}

TEST( Render, CornerAndRows )
{
  const auto text = render_kmap( build_kmap( from_binary( canalizing_in_x3, 5 ) ) );
  EXPECT_EQ( text.substr( 0, text.find( '\n' ) ), "x1x2x3\\x4x5 00 01 11 10" );
  EXPECT_EQ( std::count( text.begin(), text.end(), '\n' ), 9 );
}

} // namespace
} // namespace canalyze
