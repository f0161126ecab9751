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
  \file verify.hpp
  \brief Reproduction checks: reference counts, matrices and worked
         examples, plus the agreement of independent routes, each with an
         expected/actual record
*/

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "canalizing.hpp"
#include "kmap.hpp"
#include "ncf.hpp"
#include "parallel.hpp"
#include "pncf.hpp"
#include "report.hpp"
#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze::verify
{

struct Options
{
  uint64_t seed = 0x5eed;
  unsigned jobs = 1;
  uint64_t samples = 100000;
};

struct CheckResult
{
  int id = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
  double limit_seconds = 0.0; ///< 0 means no time limit
  std::vector<std::string> diagnostics;
};

/* |C_5| from an inclusion-exclusion count over the 4n events "f|x_i=a == b" */
inline constexpr uint64_t canalizing_count_5 = 1292276;

/* the fourteen canalizing functions of two variables */
inline const std::vector<std::string>& two_variable_list()
{
  static const std::vector<std::string> list = { "1100", "1101", "1110", "1111", "0000", "0001", "0010",
                                                 "0011", "0111", "1011", "0100", "0101", "1000", "1010" };
  return list;
}

inline const std::string& canalizing_in_x3() // canalizing in x3
{
  static const std::string s = "11010000111100001111000011110000";
  return s;
}

inline const std::string& non_canalizing_32() // not canalizing
{
  static const std::string s = "00001110000111111110000111110000";
  return s;
}

/* counter-based sample stream: sample i depends only on (seed, i) */
inline uint64_t sample_word( uint64_t seed, uint64_t i ) noexcept
{
  uint64_t z = seed + ( i + 1 ) * 0x9e3779b97f4a7c15ull;
  z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31 );
}

inline TruthTable sample_function( unsigned n, uint64_t seed, uint64_t i )
{
  const uint64_t w = sample_word( seed, i );
  return TruthTable::from_word( n, n >= 6 ? w : w & ( ( uint64_t{ 1 } << ( 1u << n ) ) - 1u ) );
}

namespace detail
{

template<typename Fn>
CheckResult timed( int id, std::string name, double limit, Fn&& body )
{
  CheckResult r;
  r.id = id;
  r.name = std::move( name );
  r.limit_seconds = limit;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try
  {
    ok = body( r );
  }
  catch ( const std::exception& e )
  {
    r.diagnostics.push_back( std::string( "exception: " ) + e.what() );
    ok = false;
  }
  r.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
  r.passed = ok && ( limit <= 0.0 || r.seconds <= limit );
  if ( ok && !r.passed )
    r.diagnostics.push_back( "time limit exceeded: " + std::to_string( r.seconds ) + "s > " + std::to_string( limit ) + "s" );
  return r;
}

inline std::string join( const std::vector<std::string>& parts, const std::string& sep = ", " )
{
  std::string s;
  for ( std::size_t i = 0; i < parts.size(); ++i )
    s += ( i ? sep : "" ) + parts[i];
  return s;
}

inline std::string matrix_string( const HDMatrix& m )
{
  std::string s = "[";
  for ( std::size_t i = 0; i < m.rows(); ++i )
  {
    s += i ? ";" : "";
    for ( std::size_t j = 0; j < m.cols(); ++j )
      s += ( j ? "," : "" ) + std::to_string( m.cells()[i][j] );
  }
  return s + "]";
}

inline HDMatrix scaled( const HDMatrix& m, uint64_t factor )
{
  HDMatrix r = m;
  for ( std::size_t i = 1; i <= r.rows(); ++i )
    for ( std::size_t j = 1; j <= r.cols(); ++j )
      r.at( i, j ) *= factor;
  return r;
}

/* disagreements between the K-map and definitional detectors, plus unsound witnesses */
inline uint64_t detector_disagreements( const std::function<TruthTable( uint64_t )>& function_at_index, uint64_t count, unsigned jobs )
{
  std::vector<uint64_t> bad( std::max( 1u, jobs ), 0u );
  parallel_chunks( count, jobs, [&]( unsigned chunk, uint64_t first, uint64_t last ) {
    for ( auto i = first; i < last; ++i )
    {
      const auto f = function_at_index( i );
      const auto w = detect_canalizing_kmap( f );
      if ( w.has_value() != is_canalizing( f ) )
        ++bad[chunk];
      else if ( w && cofactor_constant( f, w->variable, w->input ) != std::optional<bool>( w->output ) )
        ++bad[chunk];
    }
  } );
  uint64_t total = 0;
  for ( auto b : bad )
    total += b;
  return total;
}

} // namespace detail

/* ------------------------------------------ concatenation properties */

/*! \brief Counter-examples per concatenation property

  complement            f canalizing iff !f canalizing
  self_concat           f canalizing implies f f canalizing
  complement_concat     f !f (and !f f) canalizing iff f constant
  non_canalizing_half   f non-canalizing: f g (and g f) canalizing iff g constant
  constant_half         f constant: f g and g f canalizing
  both_non_canalizing   f, g non-canalizing: f g non-canalizing
*/
struct ConcatTally
{
  uint64_t complement = 0;
  uint64_t self_concat = 0;
  uint64_t complement_concat = 0;
  uint64_t non_canalizing_half = 0;
  uint64_t constant_half = 0;
  uint64_t both_non_canalizing = 0;
  uint64_t cases = 0;

  uint64_t total() const noexcept
  {
    return complement + self_concat + complement_concat + non_canalizing_half + constant_half + both_non_canalizing;
  }
};

namespace detail
{

inline void check_single( const TruthTable& f, ConcatTally& t )
{
  const bool cf = is_canalizing( f );
  const auto fc = complement( f );
  t.complement += cf != is_canalizing( fc );
  if ( cf )
    t.self_concat += !is_canalizing( concat( f, f ) );
  const bool k = is_constant( f );
  t.complement_concat += is_canalizing( concat( f, fc ) ) != k;
  t.complement_concat += is_canalizing( concat( fc, f ) ) != k;
  ++t.cases;
}

inline void check_pair( const TruthTable& f, const TruthTable& g, ConcatTally& t )
{
  const bool cf = is_canalizing( f );
  const bool cg = is_canalizing( g );
  const bool fg = is_canalizing( concat( f, g ) );
  const bool gf = is_canalizing( concat( g, f ) );
  if ( !cf )
  {
    t.non_canalizing_half += fg != is_constant( g );
    t.non_canalizing_half += gf != is_constant( g );
  }
  if ( is_constant( f ) )
  {
    t.constant_half += !fg;
    t.constant_half += !gf;
  }
  if ( !cf && !cg )
    t.both_non_canalizing += fg;
  ++t.cases;
}

} // namespace detail

inline ConcatTally concat_properties_exhaustive( unsigned n )
{
  ConcatTally t;
  const auto all = enumerate_all( n );
  for ( const auto& f : all )
  {
    detail::check_single( f, t );
    for ( const auto& g : all )
      detail::check_pair( f, g, t );
  }
  return t;
}

/*! \brief Sampled property checks at arity n <= 5

  Samples are biased so each property's hypothesis is hit: every fourth f is
  drawn until non-canalizing, every eighth g is a constant.
*/
inline ConcatTally concat_properties_sampled( unsigned n, uint64_t samples, uint64_t seed )
{
  ConcatTally t;
  uint64_t stream = 0;
  for ( uint64_t s = 0; s < samples; ++s )
  {
    auto f = sample_function( n, seed, stream++ );
    if ( s % 4 == 1 )
      while ( is_canalizing( f ) )
        f = sample_function( n, seed, stream++ );
    if ( s % 16 == 3 )
      f = constant( n, s % 32 == 3 );
    auto g = sample_function( n, seed ^ 0xabcdefull, s );
    if ( s % 8 == 5 )
      g = constant( n, s % 16 == 5 );
    detail::check_single( f, t );
    detail::check_pair( f, g, t );
  }
  return t;
}

/* ------------------------------------------------------------- criteria */

inline CheckResult criterion_1( const Options& )
{
  return detail::timed( 1, "two-variable canalizing census equals the explicit list", 1.0, [&]( CheckResult& r ) {
    const auto set = canalizing_set( 2 );
    std::set<std::string> got;
    for ( const auto& f : set )
      got.insert( to_binary( f ) );
    const std::set<std::string> want( two_variable_list().begin(), two_variable_list().end() );
    const bool xor_out = !got.count( "0110" ) && !got.count( "1001" );
    r.expected = "count=14, set=list, 0110/1001 excluded";
    r.actual = "count=" + std::to_string( set.size() ) + ", set" + ( got == want ? "=" : "!=" ) + "list, 0110/1001 " + ( xor_out ? "excluded" : "present" );
    return set.size() == 14 && census_canalizing( 2 ) == 14 && got == want && xor_out;
  } );
}

inline CheckResult criterion_2( const Options& o )
{
  return detail::timed( 2, "K-map and definitional detectors agree", 60.0, [&]( CheckResult& r ) {
    std::vector<std::string> parts;
    uint64_t total = 0;
    for ( unsigned n = 2; n <= 4; ++n )
    {
      const auto d = detail::detector_disagreements( [n]( uint64_t i ) { return function_at( n, i ); }, function_count( n ), o.jobs );
      parts.push_back( "n=" + std::to_string( n ) + ":" + std::to_string( d ) + "/" + std::to_string( function_count( n ) ) );
      total += d;
    }
    for ( unsigned n = 5; n <= 6; ++n )
    {
      const auto d = detail::detector_disagreements( [&, n]( uint64_t i ) { return sample_function( n, o.seed + n, i ); }, o.samples, o.jobs );
      parts.push_back( "n=" + std::to_string( n ) + ":" + std::to_string( d ) + "/" + std::to_string( o.samples ) );
      total += d;
    }
    const auto w2 = detect_canalizing_kmap( from_binary( canalizing_in_x3(), 5 ) );
    const auto w3 = detect_canalizing_kmap( from_binary( non_canalizing_32(), 5 ) );
    const bool ex2 = w2 && w2->variable == 3 && w2->input && !w2->output;
    const bool ex3 = !w3 && !is_canalizing( from_binary( non_canalizing_32(), 5 ) );
    parts.push_back( std::string( "x3 example: " ) + ( w2 ? report::triple_text( *w2 ) : "none" ) );
    parts.push_back( std::string( "non-canalizing example: " ) + ( w3 ? report::triple_text( *w3 ) : "none" ) );
    r.expected = "0 disagreements (n=2..4 exhaustive, n=5,6 " + std::to_string( o.samples ) + " samples); x3 example x3=1 -> 0; non-canalizing example none";
    r.actual = detail::join( parts );
    return total == 0 && ex2 && ex3 && o.samples >= 100000;
  } );
}

inline CheckResult criterion_3( const Options& o )
{
  return detail::timed( 3, "concatenation properties", 60.0, [&]( CheckResult& r ) {
    std::vector<std::string> parts;
    uint64_t bad = 0;
    auto record = [&]( const std::string& label, const ConcatTally& t ) {
      parts.push_back( label + ": complement=" + std::to_string( t.complement ) + " self=" + std::to_string( t.self_concat ) +
                       " f!f=" + std::to_string( t.complement_concat ) + " non-canalizing-half=" + std::to_string( t.non_canalizing_half ) +
                       " constant-half=" + std::to_string( t.constant_half ) + " both-non-canalizing=" + std::to_string( t.both_non_canalizing ) + " (" +
                       std::to_string( t.cases ) + " cases)" );
      bad += t.total();
    };
    for ( unsigned n = 1; n <= 3; ++n )
      record( "n=" + std::to_string( n ), concat_properties_exhaustive( n ) );
    record( "n=4 sampled", concat_properties_sampled( 4, o.samples, o.seed ) );
    r.expected = "0 counter-examples";
    r.actual = detail::join( parts, "; " );
    return bad == 0 && o.samples >= 100000;
  } );
}

inline CheckResult criterion_4( const Options& )
{
  return detail::timed( 4, "single-minority-bit formula equals brute force", 60.0, [&]( CheckResult& r ) {
    bool ok = minority_bit_formula( 2 ) == 12 && minority_bit_formula( 3 ) == 76;
    std::vector<std::string> parts;
    for ( unsigned n = 2; n <= 3; ++n )
    {
      const auto formula = minority_bit_formula( n );
      uint64_t checked = 0, mismatched = 0;
      for ( const auto& f : enumerate_all( n ) )
      {
        if ( min_const_hd( f ) != 1 )
          continue;
        ++checked;
        if ( static_cast<int64_t>( minority_bit_oracle( f ) ) != formula )
          ++mismatched;
      }
      parts.push_back( "formula(" + std::to_string( n ) + ")=" + std::to_string( formula ) + ", oracle mismatches " + std::to_string( mismatched ) + "/" + std::to_string( checked ) );
      ok = ok && mismatched == 0 && checked == 2 * ( uint64_t{ 1 } << n );
    }
    r.expected = "formula(2)=12, formula(3)=76, oracle equal for all weight-1 and weight-(2^n-1) f";
    r.actual = detail::join( parts, "; " );
    return ok;
  } );
}

inline CheckResult criterion_5( const Options& o )
{
  return detail::timed( 5, "generation of C_(n+1) from C_n", 600.0, [&]( CheckResult& r ) {
    std::vector<std::string> parts;
    bool ok = true;
    for ( unsigned n = 2; n <= 3; ++n )
    {
      const auto gen = generate_next( canalizing_set( n, o.jobs ), o.jobs );
      const auto exhaustive = canalizing_set( n + 1, o.jobs );
      const bool same = gen.functions == exhaustive;
      const bool bounded = gen.stats.checks_performed <= gen.stats.check_bound();
      parts.push_back( "C" + std::to_string( n + 1 ) + ": " + std::to_string( gen.functions.size() ) + ( same ? " (= exhaustive)" : " (!= exhaustive)" ) +
                       ", checks " + std::to_string( gen.stats.checks_performed ) + " <= " + std::to_string( gen.stats.check_bound() ) );
      ok = ok && same && bounded;
    }
    ok = ok && canalizing_set( 3 ).size() == 120 && canalizing_set( 4 ).size() == 3514;

    const auto c4 = canalizing_set( 4, o.jobs );
    const auto serial = generate_next( c4, 1 );
    const auto parallel = generate_next( c4, std::max( 4u, o.jobs ) );
    const bool stable = serial.functions == parallel.functions;
    // spot checks: sampled members are canalizing; sampled functions are members iff canalizing
    uint64_t unsound = 0, incomplete = 0;
    for ( uint64_t i = 0; i < 10000; ++i )
    {
      const auto& f = serial.functions[sample_word( o.seed, i ) % serial.functions.size()];
      unsound += !is_canalizing( f );
    }
    for ( uint64_t i = 0; i < o.samples; ++i )
    {
      const auto f = sample_function( 5, o.seed ^ 0x55, i );
      incomplete += std::binary_search( serial.functions.begin(), serial.functions.end(), f ) != is_canalizing( f );
    }
    parts.push_back( "C5: " + std::to_string( serial.functions.size() ) + ( stable ? " (jobs 1 = jobs 4)" : " (jobs 1 != jobs 4)" ) +
                     ", checks " + std::to_string( serial.stats.checks_performed ) + ", spot-check failures " + std::to_string( unsound + incomplete ) );
    ok = ok && stable && serial.functions.size() == canalizing_count_5 && unsound == 0 && incomplete == 0 &&
         serial.stats.checks_performed <= serial.stats.check_bound();
    r.expected = "C3=120 (<=132 checks), C4=3514 (<=13806 checks), C5 partition-independent, |C5|=" + std::to_string( canalizing_count_5 );
    r.actual = detail::join( parts, "; " );
    return ok;
  } );
}

inline CheckResult criterion_6( const Options& o )
{
  return detail::timed( 6, "nested canalizing counts and chain agreement", 60.0, [&]( CheckResult& r ) {
    std::vector<std::string> parts;
    bool ok = true;
    for ( unsigned n = 1; n <= 4; ++n )
    {
      const auto merged = enumerate_ncf( n, o.jobs );
      std::vector<TruthTable> accepted;
      for ( const auto& f : enumerate_all( n ) )
        if ( ncf_chain( f ) )
          accepted.push_back( f );
      parts.push_back( "n=" + std::to_string( n ) + ": " + std::to_string( merged.size() ) + ( merged == accepted ? " (= chain set)" : " (!= chain set)" ) );
      ok = ok && merged == accepted;
      if ( n == 3 )
        ok = ok && merged.size() == 64;
      if ( n == 4 )
        ok = ok && merged.size() == 736;
    }
    r.expected = "|NCF(3)|=64, |NCF(4)|=736, merge set = chain set for n<=4";
    r.actual = detail::join( parts );
    return ok;
  } );
}

inline CheckResult criterion_7( const Options& o )
{
  return detail::timed( 7, "H.D matrix recursion", 60.0, [&]( CheckResult& r ) {
    const auto m2 = hd_matrix( 2 ), m3 = hd_matrix( 3 ), m4 = hd_matrix( 4 ), m5 = hd_matrix( 5 );
    const std::vector<std::vector<uint64_t>> w2 = { { 2 }, { 0 } };
    const std::vector<std::vector<uint64_t>> w3 = { { 4, 4 }, { 0, 4 }, { 0, 4 } };
    const std::vector<std::vector<uint64_t>> w4 = { { 8, 24, 24, 8 }, { 0, 16, 24, 8 }, { 0, 8, 24, 8 }, { 0, 0, 24, 8 } };
    const auto ncf5 = enumerate_ncf( 5, o.jobs ).size();
    r.expected = "M2=[2;0], M3=[4,4;0,4;0,4], M4=[8,24,24,8;0,16,24,8;0,8,24,8;0,0,24,8], Nc=64,736,10624=|NCF(5)|";
    r.actual = "M2=" + detail::matrix_string( m2 ) + ", M3=" + detail::matrix_string( m3 ) + ", M4=" + detail::matrix_string( m4 ) +
               ", Nc=" + std::to_string( m3.ncf_count() ) + "," + std::to_string( m4.ncf_count() ) + "," + std::to_string( m5.ncf_count() ) +
               ", |NCF(5)|=" + std::to_string( ncf5 );
    return m2.cells() == w2 && m3.cells() == w3 && m4.cells() == w4 && m3.ncf_count() == 64 && m4.ncf_count() == 736 &&
           m5.ncf_count() == 10624 && ncf5 == 10624;
  } );
}

inline CheckResult criterion_8( const Options& o )
{
  return detail::timed( 8, "NCF histogram by start variable and H.D equals 4*M", 60.0, [&]( CheckResult& r ) {
    bool ok = true;
    std::vector<std::string> parts;
    for ( unsigned n = 2; n <= 4; ++n )
    {
      const auto hist = hd_histogram( n, StartRule::min_feasible, o.jobs );
      const auto want = detail::scaled( hd_matrix( n ), 4 );
      parts.push_back( "n=" + std::to_string( n ) + ": " + detail::matrix_string( hist ) );
      if ( hist != want )
      {
        ok = false;
        const auto alt = hd_histogram( n, StartRule::canonical_chain, o.jobs );
        r.diagnostics.push_back( "n=" + std::to_string( n ) + " min-feasible histogram " + detail::matrix_string( hist ) + " != 4*M " +
                                 detail::matrix_string( want ) + "; canonical-chain tie-break gives " + detail::matrix_string( alt ) +
                                 ( alt == want ? " (matches)" : " (also differs)" ) );
      }
    }
    r.expected = "bucket(i,j) = 4*M_n[i][j] for n=2,3,4";
    r.actual = detail::join( parts, "; " );
    return ok;
  } );
}

inline CheckResult criterion_9( const Options& o )
{
  return detail::timed( 9, "partially nested canalizing census for n=4", 60.0, [&]( CheckResult& r ) {
    const auto census = depth_census( 4, o.jobs );
    const auto members = depth_members( 4, o.jobs );
    const auto families = depth_families( 4 );
    const auto& d1 = census.depth( 1 );
    const auto& d2 = census.depth( 2 );
    const auto& d3 = census.depth( 3 );
    const auto& d4 = census.depth( 4 );
    const auto canalizing = census_canalizing( 4, o.jobs );
    r.expected = "d1=2186 (10+2176), d2=336 (48 constant), d3=256 (all constant), d4=736, total=3514=census, families=buckets";
    r.actual = "d1=" + std::to_string( d1.total() ) + " (" + std::to_string( d1.constant ) + "+" + std::to_string( d1.non_canalizing ) + "), d2=" +
               std::to_string( d2.total() ) + " (" + std::to_string( d2.constant ) + " constant), d3=" + std::to_string( d3.total() ) + " (" +
               std::to_string( d3.constant ) + " constant), d4=" + std::to_string( d4.total() ) + ", total=" + std::to_string( census.total() ) +
               ", census=" + std::to_string( canalizing ) + ", families" + ( families == members ? "=" : "!=" ) + "buckets";
    return d1.constant == 10 && d1.non_canalizing == 2176 && d1.total() == 2186 && d2.total() == 336 && d2.constant == 48 &&
           d3.total() == 256 && d3.constant == 256 && d4.total() == 736 && d4.nested == 736 && census.total() == 3514 &&
           canalizing == 3514 && families == members;
  } );
}

/*! \brief Machine output of every sweep, for byte comparison across job counts */
inline std::string sweep_outputs( unsigned jobs )
{
  std::string out;
  out += report::census_json( 4, "canalizing", census_canalizing( 4, jobs ) );
  out += report::function_list( canalizing_set( 3, jobs ), Encoding::binary, true );
  out += report::census_json( 5, "ncf", enumerate_ncf( 5, jobs ).size() );
  out += report::function_list( enumerate_ncf( 4, jobs ), Encoding::hex, true );
  out += report::depth_census_json( depth_census( 4, jobs ) );
  out += report::matrix_json( hd_matrix( 6 ) );
  out += report::matrix_json( hd_histogram( 4, StartRule::min_feasible, jobs ) );
  const auto gen = generate_next( canalizing_set( 3, jobs ), jobs );
  out += report::generation_json( 3, gen.stats );
  out += report::function_list( gen.functions, Encoding::hex, true );
  return out;
}

inline CheckResult criterion_10( const Options& )
{
  return detail::timed( 10, "sweeps are byte-identical across job counts and runs", 0.0, [&]( CheckResult& r ) {
    const auto a = sweep_outputs( 1 );
    const auto b = sweep_outputs( 4 );
    const auto c = sweep_outputs( 1 );
    const auto d = sweep_outputs( 4 );
    const auto h = std::hash<std::string>{}( a );
    r.expected = "identical output for jobs 1, 4 and repeated runs";
    std::ostringstream os;
    os << a.size() << " bytes, hash " << std::hex << h << std::dec << ", jobs1=jobs4: " << ( a == b ? "yes" : "no" ) << ", rerun: " << ( a == c && b == d ? "yes" : "no" );
    r.actual = os.str();
    return a == b && a == c && b == d;
  } );
}

inline std::vector<std::function<CheckResult( const Options& )>> all_criteria()
{
  return { criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9, criterion_10 };
}

inline std::string to_text( const CheckResult& r )
{
  std::ostringstream os;
  os.setf( std::ios::fixed );
  os.precision( 2 );
  os << ( r.passed ? "PASS" : "FAIL" ) << " [" << r.id << "] " << r.name << " (" << r.seconds << "s";
  if ( r.limit_seconds > 0 )
    os << " / limit " << r.limit_seconds << "s";
  os << ")\n       expected: " << r.expected << "\n       actual:   " << r.actual << "\n";
  for ( const auto& d : r.diagnostics )
    os << "       note:     " << d << "\n";
  return os.str();
}

inline std::string to_json( const CheckResult& r )
{
  return report::line( report::json{ { "id", r.id },
                                     { "name", r.name },
                                     { "passed", r.passed },
                                     { "expected", r.expected },
                                     { "actual", r.actual },
                                     { "diagnostics", r.diagnostics } } );
}

} // namespace canalyze::verify
