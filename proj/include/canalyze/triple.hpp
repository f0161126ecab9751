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
  \file triple.hpp
  \brief Definitional canalization test
*/

#pragma once

#include <compare>
#include <vector>

#include "truth_table.hpp"

namespace canalyze
{

/*! \brief Witness that fixing x_variable = input forces the output to `output` */
struct CanalizingTriple
{
  unsigned variable = 0;
  bool input = false;
  bool output = false;

  friend auto operator<=>( const CanalizingTriple&, const CanalizingTriple& ) = default;
};

/*! \brief All triples (i, a, b) with f|x_i=a constant b, ordered by (i, a)

  Constants of arity >= 1 satisfy every (i, a) with b equal to the constant.
*/
inline std::vector<CanalizingTriple> canalizing_triples( const TruthTable& f )
{
  std::vector<CanalizingTriple> out;
  for ( unsigned i = 1; i <= f.arity(); ++i )
  {
    for ( bool a : { false, true } )
    {
      if ( auto b = cofactor_constant( f, i, a ) )
      {
        out.push_back( { i, a, *b } );
      }
    }
  }
  return out;
}

inline bool is_canalizing( const TruthTable& f )
{
  for ( unsigned i = 1; i <= f.arity(); ++i )
  {
    if ( cofactor_constant( f, i, false ) || cofactor_constant( f, i, true ) )
    {
      return true;
    }
  }
  return false;
}

} // namespace canalyze
