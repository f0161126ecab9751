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
  \file report.hpp
  \brief Machine-readable (JSON lines, CSV) and plain-text renderings

  JSON output uses insertion-ordered objects so that field order, and hence
  the bytes written, is fixed.  Every renderer returns text terminated by a
  line feed.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canalizing.hpp"
#include "kmap.hpp"
#include "ncf.hpp"
#include "pncf.hpp"
#include "triple.hpp"
#include "truth_table.hpp"

namespace canalyze::report
{

using json = nlohmann::ordered_json;

inline json to_json( const CanalizingTriple& t )
{
  return json{ { "variable", t.variable }, { "input", int( t.input ) }, { "output", int( t.output ) } };
}

inline json to_json( const NestedChain& c )
{
  json entries = json::array();
  for ( const auto& e : c.entries )
    entries.push_back( to_json( e ) );
  return json{ { "entries", entries }, { "complete", c.complete } };
}

inline json to_json( const DepthReport& r )
{
  json j{ { "depth", r.depth }, { "remainder_class", to_string( r.remainder_class ) }, { "chain", to_json( r.chain ) } };
  j["remainder"] = r.remainder ? json( to_binary( *r.remainder ) ) : json( nullptr );
  return j;
}

inline std::string line( const json& j )
{
  return j.dump() + "\n";
}

/* ------------------------------------------------------------ classify */

struct Classification
{
  TruthTable function;
  bool definitional = false;
  std::optional<CanalizingTriple> kmap_witness;
  std::vector<CanalizingTriple> triples;
  std::optional<NestedChain> chain;
  std::optional<DepthReport> depth;

  bool kmap_verdict() const noexcept { return kmap_witness.has_value(); }
  bool agree() const noexcept { return definitional == kmap_verdict(); }
};

inline Classification classify( const TruthTable& f )
{
  Classification c;
  c.function = f;
  c.triples = canalizing_triples( f );
  c.definitional = !c.triples.empty();
  c.kmap_witness = detect_canalizing_kmap( f );
  c.chain = ncf_chain( f );
  c.depth = canalizing_depth( f );
  return c;
}

inline json to_json( const Classification& c )
{
  json triples = json::array();
  for ( const auto& t : c.triples )
    triples.push_back( to_json( t ) );
  json j;
  j["arity"] = c.function.arity();
  j["tt"] = to_binary( c.function );
  j["canalizing"] = json{ { "definitional", c.definitional }, { "kmap", c.kmap_verdict() }, { "agree", c.agree() } };
  j["kmap_witness"] = c.kmap_witness ? to_json( *c.kmap_witness ) : json( nullptr );
  j["triples"] = triples;
  j["ncf"] = c.chain ? to_json( *c.chain ) : json( nullptr );
  j["depth"] = c.depth ? to_json( *c.depth ) : json( nullptr );
  return j;
}

inline std::string triple_text( const CanalizingTriple& t )
{
  return "x" + std::to_string( t.variable ) + "=" + std::to_string( int( t.input ) ) + " -> " + std::to_string( int( t.output ) );
}

inline std::string to_text( const Classification& c )
{
  std::ostringstream os;
  os << "function     " << to_binary( c.function ) << " (n=" << c.function.arity() << ")\n";
  os << "canalizing   " << ( c.definitional ? "yes" : "no" ) << " (definitional: " << ( c.definitional ? "yes" : "no" )
     << ", k-map: " << ( c.kmap_verdict() ? "yes" : "no" ) << ", " << ( c.agree() ? "agree" : "DISAGREE" ) << ")\n";
  if ( c.kmap_witness )
    os << "witness      " << triple_text( *c.kmap_witness ) << "\n";
  if ( !c.triples.empty() )
  {
    os << "triples     ";
    for ( const auto& t : c.triples )
      os << " (" << t.variable << "," << int( t.input ) << "," << int( t.output ) << ")";
    os << "\n";
  }
  if ( c.chain )
  {
    os << "nested       yes, chain";
    for ( const auto& t : c.chain->entries )
      os << " (" << t.variable << "," << int( t.input ) << "," << int( t.output ) << ")";
    os << "\n";
  }
  else
  {
    os << "nested       no\n";
  }
  if ( c.depth )
  {
    os << "depth        " << c.depth->depth << " (remainder " << to_string( c.depth->remainder_class );
    if ( c.depth->remainder )
      os << " " << to_binary( *c.depth->remainder );
    os << ")\n";
  }
  return os.str();
}

/* -------------------------------------------------------------- census */

inline std::string census_json( unsigned n, const std::string& cls, uint64_t count )
{
  return line( json{ { "arity", n }, { "class", cls }, { "count", count } } );
}

inline std::string census_csv( unsigned n, const std::string& cls, uint64_t count )
{
  return "arity,class,count\n" + std::to_string( n ) + "," + cls + "," + std::to_string( count ) + "\n";
}

namespace detail
{

/* (depth, class, count) rows in a fixed order, omitting impossible classes */
inline std::vector<std::pair<unsigned, std::pair<RemainderClass, uint64_t>>> depth_rows( const DepthCensus& c )
{
  std::vector<std::pair<unsigned, std::pair<RemainderClass, uint64_t>>> rows;
  for ( unsigned d = 1; d <= c.arity; ++d )
  {
    const auto& b = c.depth( d );
    // constants sit at depth 1 even when n = 1
    if ( d < c.arity || d == 1 )
      rows.push_back( { d, { RemainderClass::constant, b.constant } } );
    // a non-canalizing remainder needs at least two variables
    if ( d + 1 < c.arity )
      rows.push_back( { d, { RemainderClass::non_canalizing, b.non_canalizing } } );
    if ( d == c.arity )
      rows.push_back( { d, { RemainderClass::nested, b.nested } } );
  }
  return rows;
}

} // namespace detail

inline std::string depth_census_json( const DepthCensus& c )
{
  std::string out;
  for ( const auto& [d, rc] : detail::depth_rows( c ) )
    out += line( json{ { "arity", c.arity }, { "depth", d }, { "remainder_class", to_string( rc.first ) }, { "count", rc.second } } );
  return out;
}

inline std::string depth_census_csv( const DepthCensus& c )
{
  std::string out = "arity,depth,remainder_class,count\n";
  for ( const auto& [d, rc] : detail::depth_rows( c ) )
    out += std::to_string( c.arity ) + "," + std::to_string( d ) + "," + to_string( rc.first ) + "," + std::to_string( rc.second ) + "\n";
  return out;
}

inline std::string depth_census_text( const DepthCensus& c )
{
  std::ostringstream os;
  os << "depth  constant  non_canalizing  nested  total\n";
  for ( unsigned d = 1; d <= c.arity; ++d )
  {
    const auto& b = c.depth( d );
    os << std::string( 5 - std::min<std::size_t>( 5, std::to_string( d ).size() ), ' ' ) << d;
    for ( auto [v, w] : { std::pair{ b.constant, 10 }, std::pair{ b.non_canalizing, 16 }, std::pair{ b.nested, 8 }, std::pair{ b.total(), 7 } } )
    {
      const auto s = std::to_string( v );
      os << std::string( static_cast<std::size_t>( w ) - std::min<std::size_t>( static_cast<std::size_t>( w ), s.size() ), ' ' ) << s;
    }
    os << "\n";
  }
  os << "total " << c.total() << "\n";
  return os.str();
}

/* -------------------------------------------------------------- matrix */

inline json matrix_json_value( const HDMatrix& m )
{
  json hd = json::array();
  for ( std::size_t j = 1; j <= m.cols(); ++j )
    hd.push_back( 2 * j - 1 );
  json rows = json::array();
  for ( const auto& r : m.cells() )
    rows.push_back( r );
  return json{ { "arity", m.arity() }, { "hd", hd }, { "rows", rows }, { "ncf_count", m.ncf_count() } };
}

inline std::string matrix_json( const HDMatrix& m )
{
  return line( matrix_json_value( m ) );
}

inline std::string matrix_csv( const HDMatrix& m )
{
  std::string out = "start_variable";
  for ( std::size_t j = 1; j <= m.cols(); ++j )
    out += ",hd_" + std::to_string( 2 * j - 1 );
  out += "\n";
  for ( std::size_t i = 1; i <= m.rows(); ++i )
  {
    out += std::to_string( i );
    for ( std::size_t j = 1; j <= m.cols(); ++j )
      out += "," + std::to_string( m.at( i, j ) );
    out += "\n";
  }
  return out;
}

inline std::string matrix_text( const HDMatrix& m, const std::string& title )
{
  std::size_t width = 3;
  for ( const auto& r : m.cells() )
    for ( auto v : r )
      width = std::max( width, std::to_string( v ).size() );
  auto pad = [&]( const std::string& s ) { return std::string( width + 1 - std::min( width + 1, s.size() ), ' ' ) + s; };
  std::ostringstream os;
  os << title << "\n";
  os << "H.D   ";
  for ( std::size_t j = 1; j <= m.cols(); ++j )
    os << pad( std::to_string( 2 * j - 1 ) );
  os << "\n";
  for ( std::size_t i = 1; i <= m.rows(); ++i )
  {
    const auto label = "x" + std::to_string( i );
    os << label << std::string( 6 - std::min<std::size_t>( 6, label.size() ), ' ' );
    for ( std::size_t j = 1; j <= m.cols(); ++j )
      os << pad( std::to_string( m.at( i, j ) ) );
    os << "\n";
  }
  return os.str();
}

/* ---------------------------------------------------------- generation */

inline std::string generation_json( unsigned source_arity, const GenerationStats& s )
{
  return line( json{ { "source_arity", source_arity },
                     { "arity", source_arity + 1 },
                     { "source_count", s.source_count },
                     { "checks_performed", s.checks_performed },
                     { "check_bound", s.check_bound() },
                     { "emitted_free", s.emitted_free },
                     { "skipped", s.skipped },
                     { "result_count", s.result_count } } );
}

inline std::string generation_text( unsigned source_arity, const GenerationStats& s )
{
  std::ostringstream os;
  os << "C_" << source_arity << " -> C_" << source_arity + 1 << "\n"
     << "source_count      " << s.source_count << "\n"
     << "checks_performed  " << s.checks_performed << " (bound " << s.check_bound() << ")\n"
     << "emitted_free      " << s.emitted_free << "\n"
     << "skipped           " << s.skipped << "\n"
     << "result_count      " << s.result_count << "\n";
  return os.str();
}

/* ------------------------------------------------------------ listings */

inline std::string function_list( const std::vector<TruthTable>& fs, Encoding encoding, bool as_json )
{
  std::string out;
  for ( const auto& f : fs )
    out += as_json ? line( json{ { "tt", format( f, encoding ) } } ) : format( f, encoding ) + "\n";
  return out;
}

} // namespace canalyze::report
