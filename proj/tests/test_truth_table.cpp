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

#include <random>
#include <stdexcept>
#include <unordered_set>

#include <gtest/gtest.h>

#include <canalyze/truth_table.hpp>

#include "oracles.hpp"

namespace canalyze
{
namespace
{

TruthTable B( const char* s, unsigned n )
{
  return from_binary( s, n );
}

TEST( Codec, BinaryToInteger )
{
  EXPECT_EQ( to_integer( B( "1000", 2 ) ), "1" );
  EXPECT_EQ( to_integer( B( "0110", 2 ) ), "6" );
  EXPECT_EQ( to_binary( from_integer( "0", 3 ) ), "00000000" );
  EXPECT_EQ( to_binary( from_integer( "0", 5 ) ), std::string( 32, '0' ) );
}

TEST( Codec, HexIsNibbleFirst )
{
  EXPECT_EQ( to_hex( B( "11010000111100001111000011110000", 5 ) ), "D0F0F0F0" );
  EXPECT_EQ( to_binary( from_hex( "D0F0F0F0", 5 ) ), "11010000111100001111000011110000" );
  EXPECT_EQ( to_hex( B( "0001", 2 ) ), "1" );
}

TEST( Codec, LargeIntegerRoundTrip )
{
  // 2^64 - 1 at n = 6 and a 128-bit value at n = 7
  const auto ones = constant( 6, true );
  EXPECT_EQ( to_integer( ones ), "18446744073709551615" );
  const auto f = from_integer( "340282366920938463463374607431768211455", 7 );
  EXPECT_EQ( f, constant( 7, true ) );
  EXPECT_THROW( from_integer( "340282366920938463463374607431768211456", 7 ), std::invalid_argument );
}

TEST( Codec, RandomRoundTrip )
{
  std::mt19937_64 rng( 7 );
  for ( unsigned n = 0; n <= 8; ++n )
    for ( int trial = 0; trial < 200; ++trial )
    {
      TruthTable f( n );
      for ( uint64_t k = 0; k < f.num_bits(); ++k )
        f.set_bit( k, rng() & 1u );
      EXPECT_EQ( from_binary( to_binary( f ), n ), f );
      EXPECT_EQ( from_integer( to_integer( f ), n ), f );
      if ( n >= 2 )
      {
        EXPECT_EQ( from_hex( to_hex( f ), n ), f );
        EXPECT_EQ( to_hex( from_hex( to_hex( f ), n ) ), to_hex( f ) );
      }
      for ( auto e : { Encoding::binary, Encoding::integer } )
        EXPECT_EQ( parse( format( f, e ), e, n ), f );
    }
}

TEST( Codec, RejectsMalformedInput )
{
  EXPECT_THROW( from_binary( "010", 2 ), std::invalid_argument );
  EXPECT_THROW( from_binary( "01x0", 2 ), std::invalid_argument );
  EXPECT_THROW( from_hex( "G0", 3 ), std::invalid_argument );
  EXPECT_THROW( from_hex( "0", 3 ), std::invalid_argument );
  EXPECT_THROW( from_integer( "16", 2 ), std::invalid_argument );
  EXPECT_THROW( from_integer( "-1", 2 ), std::invalid_argument );
  EXPECT_THROW( from_integer( "", 2 ), std::invalid_argument );
}

TEST( Evaluate, FollowsTableOneOrder )
{
  const auto f = B( "01010101", 3 );
  EXPECT_TRUE( evaluate( f, { { true, false, true } } ) );
  EXPECT_FALSE( evaluate( f, { { true, true, false } } ) );
  EXPECT_TRUE( evaluate( constant( 3, true ), { { false, true, false } } ) );
  EXPECT_THROW( evaluate( f, { { true, false } } ), std::invalid_argument );
}

TEST( Projection, Examples )
{
  EXPECT_EQ( to_binary( projection( 1, 3 ) ), "00001111" );
  EXPECT_EQ( to_binary( projection( 3, 3 ) ), "01010101" );
  EXPECT_EQ( to_binary( projection( 2, 3 ) ), "00110011" );
  EXPECT_THROW( projection( 4, 3 ), std::out_of_range );
}

TEST( Cofactor, Examples )
{
  EXPECT_EQ( to_binary( cofactor( B( "01010101", 3 ), 3, true ) ), "1111" );
  EXPECT_EQ( to_binary( cofactor( B( "01010101", 3 ), 1, false ) ), "0101" );
  EXPECT_EQ( to_binary( cofactor( B( "0001", 2 ), 2, false ) ), "00" );
  EXPECT_THROW( cofactor( B( "0001", 2 ), 3, false ), std::out_of_range );
}

TEST( Cofactor, ShannonExpansionExhaustive )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( const auto& f : enumerate_all( n ) )
      for ( unsigned i = 1; i <= n; ++i )
        for ( uint64_t k = 0; k < f.num_bits(); ++k )
        {
          const auto x = oracle::assignment( n, k );
          Assignment rest;
          for ( unsigned v = 1; v <= n; ++v )
            if ( v != i )
              rest.values.push_back( x.values[v - 1] );
          ASSERT_EQ( evaluate( f, x ), evaluate( cofactor( f, i, x.values[i - 1] ), rest ) );
        }
}

TEST( Cofactor, LargeArity )
{
  // the word-vector path: x_1 over 8 variables
  const auto x1 = projection( 1, 8 );
  EXPECT_EQ( cofactor( x1, 1, false ), constant( 7, false ) );
  EXPECT_EQ( cofactor( x1, 1, true ), constant( 7, true ) );
  EXPECT_EQ( cofactor( x1, 8, true ), projection( 1, 7 ) );
  EXPECT_EQ( cofactor( projection( 8, 8 ), 3, false ), projection( 7, 7 ) );
}

TEST( Concat, Examples )
{
  EXPECT_EQ( to_binary( complement( B( "0110", 2 ) ) ), "1001" );
  EXPECT_EQ( to_binary( concat( B( "0001", 2 ), B( "1111", 2 ) ) ), "00011111" );
  EXPECT_EQ( concat( constant( 2, false ), complement( constant( 2, false ) ) ), projection( 1, 3 ) );
  EXPECT_THROW( concat( B( "01", 1 ), B( "0001", 2 ) ), std::invalid_argument );
}

TEST( Concat, CofactorsAreTheHalvesExhaustive )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( const auto& f : enumerate_all( n ) )
      for ( const auto& g : enumerate_all( n ) )
      {
        const auto h = concat( f, g );
        ASSERT_EQ( cofactor( h, 1, false ), f );
        ASSERT_EQ( cofactor( h, 1, true ), g );
      }
  const auto a = projection( 3, 7 ), b = projection( 5, 7 );
  EXPECT_EQ( cofactor( concat( a, b ), 1, true ), b );
}

TEST( Merge, Examples )
{
  EXPECT_EQ( to_binary( merge( B( "01", 1 ), 1, false, false ) ), "0001" );
  EXPECT_EQ( to_binary( merge( B( "01", 1 ), 1, true, true ) ), "0111" );
  EXPECT_EQ( to_binary( merge( B( "01", 1 ), 2, true, false ) ), "0010" );
  EXPECT_THROW( merge( B( "01", 1 ), 3, true, false ), std::out_of_range );
}

TEST( Merge, CofactorPropertyExhaustive )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( const auto& f : enumerate_all( n ) )
      for ( unsigned i = 1; i <= n + 1; ++i )
        for ( bool a : { false, true } )
          for ( bool c : { false, true } )
          {
            const auto h = merge( f, i, a, c );
            ASSERT_EQ( cofactor( h, i, a ), constant( n, c ) );
            ASSERT_EQ( cofactor( h, i, !a ), f );
          }
}

TEST( Weight, Examples )
{
  EXPECT_EQ( min_const_hd( B( "0001", 2 ) ), 1u );
  EXPECT_EQ( hamming( B( "0110", 2 ), B( "1001", 2 ) ), 4u );
  EXPECT_EQ( weight( B( "01010101", 3 ) ), 4u );
  EXPECT_THROW( hamming( B( "01", 1 ), B( "0110", 2 ) ), std::invalid_argument );
}

TEST( Weight, ComplementInvariantsExhaustive )
{
  for ( unsigned n = 0; n <= 3; ++n )
    for ( const auto& f : enumerate_all( n ) )
    {
      const auto fc = complement( f );
      ASSERT_EQ( complement( fc ), f );
      ASSERT_EQ( hamming( f, fc ), f.num_bits() );
      ASSERT_EQ( min_const_hd( f ), min_const_hd( fc ) );
    }
}

TEST( Enumerate, IntegerOrderAndPartitions )
{
  const auto all = enumerate_all( 2 );
  ASSERT_EQ( all.size(), 16u );
  uint64_t i = 0;
  for ( const auto& f : all )
    EXPECT_EQ( to_integer( f ), std::to_string( i++ ) );
  EXPECT_EQ( function_count( 4 ), 65536u );

  std::unordered_set<TruthTable> seen;
  const auto all3 = enumerate_all( 3 );
  for ( uint64_t first = 0; first < all3.size(); first += 37 )
    for ( const auto& f : all3.subrange( first, std::min<uint64_t>( first + 37, all3.size() ) ) )
      EXPECT_TRUE( seen.insert( f ).second );
  EXPECT_EQ( seen.size(), 256u );
  EXPECT_THROW( enumerate_all( 6 ), std::domain_error );
}

TEST( TruthTable, ArityIsPartOfTheValue )
{
  EXPECT_NE( constant( 2, false ), constant( 3, false ) );
  EXPECT_LT( constant( 2, true ), constant( 3, false ) );
  EXPECT_THROW( TruthTable( 33 ), std::invalid_argument );
}

} // namespace
} // namespace canalyze
