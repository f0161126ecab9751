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
  \file canalyze_cli.hpp
  \brief The canalyze command line, callable in-process

  run_cli writes results to `out` and diagnostics to `err` and returns the
  exit code: 0 on success, 1 when a verification check fails, 2 on a usage,
  parse or domain error.
*/

#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <canalyze/canalizing.hpp>
#include <canalyze/kmap.hpp>
#include <canalyze/ncf.hpp>
#include <canalyze/pncf.hpp>
#include <canalyze/report.hpp>
#include <canalyze/truth_table.hpp>
#include <canalyze/verify.hpp>

namespace canalyze::cli
{

enum ExitCode : int
{
  success = 0,
  verification_failed = 1,
  usage_error = 2
};

namespace detail
{

inline const std::map<std::string, Encoding>& encodings()
{
  static const std::map<std::string, Encoding> m = { { "binary", Encoding::binary }, { "hex", Encoding::hex }, { "int", Encoding::integer } };
  return m;
}

struct Settings
{
  unsigned n = 0;
  std::string tt;
  std::string format = "binary";
  std::string cls = "canalizing";
  unsigned depth = 0;
  unsigned jobs = 1;
  uint64_t seed = verify::Options{}.seed;
  bool json = false;
  bool csv = false;
  bool list = false;
  bool kmap = false;
  bool histogram = false;
  std::string out_path;
};

inline std::string run_classify( const Settings& s )
{
  const auto f = parse( s.tt, encodings().at( s.format ), s.n );
  const auto c = report::classify( f );
  if ( s.json )
    return report::line( report::to_json( c ) );
  auto text = report::to_text( c );
  if ( s.kmap && f.arity() >= 2 )
    text += render_kmap( build_kmap( f ) );
  return text;
}

inline std::string run_census( const Settings& s )
{
  if ( s.cls == "pncf" )
  {
    const auto census = depth_census( s.n, s.jobs );
    if ( s.json )
      return report::depth_census_json( census );
    if ( s.csv )
      return report::depth_census_csv( census );
    return report::depth_census_text( census );
  }
  std::vector<TruthTable> members;
  uint64_t count = 0;
  if ( s.cls == "ncf" )
  {
    members = enumerate_ncf( s.n, s.jobs );
    count = members.size();
  }
  else if ( s.list )
  {
    members = canalizing_set( s.n, s.jobs );
    count = members.size();
  }
  else
  {
    count = census_canalizing( s.n, s.jobs );
  }
  if ( s.list )
    return report::function_list( members, encodings().at( s.format ), s.json );
  if ( s.json )
    return report::census_json( s.n, s.cls, count );
  if ( s.csv )
    return report::census_csv( s.n, s.cls, count );
  return s.cls + " functions of " + std::to_string( s.n ) + " variables: " + std::to_string( count ) + "\n";
}

inline std::string run_generate( const Settings& s )
{
  const auto gen = generate_next( canalizing_set( s.n, s.jobs ), s.jobs );
  if ( s.list )
    return report::function_list( gen.functions, encodings().at( s.format ), s.json );
  return s.json ? report::generation_json( s.n, gen.stats ) : report::generation_text( s.n, gen.stats );
}

inline std::string run_matrix( const Settings& s )
{
  const auto m = s.histogram ? hd_histogram( s.n, StartRule::min_feasible, s.jobs ) : hd_matrix( s.n );
  if ( s.json )
    return report::matrix_json( m );
  if ( s.csv )
    return report::matrix_csv( m );
  const std::string title = s.histogram ? "NCF histogram, n = " + std::to_string( s.n ) + " (start variable by H.D)"
                                        : "M_" + std::to_string( s.n ) + " (start variable by H.D)";
  return report::matrix_text( m, title ) + ( s.histogram ? "NCF total " + std::to_string( m.total() ) : "N_c " + std::to_string( m.ncf_count() ) ) + "\n";
}

inline std::string run_enumerate( const Settings& s )
{
  const auto encoding = encodings().at( s.format );
  if ( s.cls == "canalizing" )
    return report::function_list( canalizing_set( s.n, s.jobs ), encoding, s.json );
  if ( s.cls == "ncf" )
    return report::function_list( enumerate_ncf( s.n, s.jobs ), encoding, s.json );

  // pncf: every canalizing function grouped by depth, optionally one depth only
  if ( s.depth > s.n )
    throw std::domain_error( "--depth must not exceed --n" );
  std::string out;
  for ( const auto& [key, fs] : depth_members( s.n, s.jobs ) )
  {
    if ( s.depth != 0 && key.first != s.depth )
      continue;
    for ( const auto& f : fs )
    {
      if ( s.json )
        out += report::line( report::json{ { "tt", format( f, encoding ) }, { "depth", key.first }, { "remainder_class", to_string( key.second ) } } );
      else
        out += format( f, encoding ) + " " + std::to_string( key.first ) + " " + to_string( key.second ) + "\n";
    }
  }
  return out;
}

inline std::pair<std::string, bool> run_verify( const Settings& s )
{
  verify::Options o;
  o.seed = s.seed;
  o.jobs = s.jobs;
  std::string out;
  bool all = true;
  for ( const auto& criterion : verify::all_criteria() )
  {
    const auto r = criterion( o );
    all = all && r.passed;
    out += s.json ? verify::to_json( r ) : verify::to_text( r );
  }
  if ( s.json )
    out += report::line( report::json{ { "all_passed", all } } );
  else
    out += all ? "all checks passed\n" : "some checks FAILED\n";
  return { out, all };
}

} // namespace detail

inline int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
  detail::Settings s;
  CLI::App app{ "canalyze: canalizing, nested canalizing and partially nested canalizing Boolean functions" };
  app.require_subcommand( 1 );

  auto add_jobs = [&]( CLI::App* sub ) { sub->add_option( "--jobs", s.jobs, "worker threads for sweeps" )->check( CLI::Range( 1u, 256u ) ); };
  auto add_out = [&]( CLI::App* sub ) { sub->add_option( "--out", s.out_path, "write results to this file instead of stdout" ); };
  auto add_format = [&]( CLI::App* sub ) {
    sub->add_option( "--format", s.format, "truth-table encoding" )->check( CLI::IsMember( { "binary", "hex", "int" } ) );
  };

  auto* classify = app.add_subcommand( "classify", "classify one function" );
  classify->add_option( "--n", s.n, "arity" )->required();
  classify->add_option( "--tt", s.tt, "truth table in the chosen --format" )->required();
  add_format( classify );
  classify->add_flag( "--json", s.json, "one JSON record" );
  classify->add_flag( "--kmap", s.kmap, "also print the Karnaugh map" );
  add_out( classify );

  auto* census = app.add_subcommand( "census", "count a function class exhaustively" );
  census->add_option( "--class", s.cls, "function class" )->check( CLI::IsMember( { "canalizing", "ncf", "pncf" } ) );
  census->add_option( "--n", s.n, "arity" )->required();
  census->add_flag( "--json", s.json, "JSON lines" );
  census->add_flag( "--csv", s.csv, "CSV with header" );
  census->add_flag( "--list", s.list, "list members instead of counting" );
  add_format( census );
  add_jobs( census );
  add_out( census );

  auto* generate = app.add_subcommand( "generate", "build C_(n+1) from C_n by concatenation" );
  generate->add_option( "--n", s.n, "source arity (1..4)" )->required();
  generate->add_flag( "--json", s.json, "JSON output" );
  generate->add_flag( "--list", s.list, "list the generated functions" );
  add_format( generate );
  add_jobs( generate );
  add_out( generate );

  auto* matrix = app.add_subcommand( "matrix", "start-variable by H.D count matrix" );
  matrix->add_option( "--n", s.n, "arity" )->required();
  matrix->add_flag( "--histogram", s.histogram, "count enumerated NCFs instead of using the recursion" );
  matrix->add_flag( "--json", s.json, "JSON output" );
  matrix->add_flag( "--csv", s.csv, "CSV with header" );
  add_jobs( matrix );
  add_out( matrix );

  auto* enumerate = app.add_subcommand( "enumerate", "list the members of a function class" );
  enumerate->add_option( "--class", s.cls, "function class" )->check( CLI::IsMember( { "canalizing", "ncf", "pncf" } ) );
  enumerate->add_option( "--n", s.n, "arity" )->required();
  enumerate->add_option( "--depth", s.depth, "pncf only: restrict to this canalizing depth" );
  enumerate->add_flag( "--json", s.json, "JSON lines" );
  add_format( enumerate );
  add_jobs( enumerate );
  add_out( enumerate );

  auto* verify = app.add_subcommand( "verify", "run every reproduction check" );
  verify->add_option( "--seed", s.seed, "seed for sampled sweeps" );
  verify->add_flag( "--json", s.json, "JSON lines" );
  add_jobs( verify );
  add_out( verify );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e, out, err );
    return code == 0 ? success : usage_error;
  }
  if ( s.json && s.csv )
  {
    err << "error: --json and --csv are mutually exclusive\n";
    return usage_error;
  }

  std::string text;
  int code = success;
  try
  {
    if ( *classify )
      text = detail::run_classify( s );
    else if ( *census )
      text = detail::run_census( s );
    else if ( *generate )
      text = detail::run_generate( s );
    else if ( *matrix )
      text = detail::run_matrix( s );
    else if ( *enumerate )
      text = detail::run_enumerate( s );
    else
    {
      auto [t, ok] = detail::run_verify( s );
      text = std::move( t );
      code = ok ? success : verification_failed;
    }
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  if ( s.out_path.empty() )
  {
    out << text;
  }
  else
  {
    std::ofstream file( s.out_path, std::ios::binary );
    if ( !file || !( file << text ) )
    {
      err << "error: cannot write " << s.out_path << "\n";
      return usage_error;
    }
  }
  return code;
}

} // namespace canalyze::cli
