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
  \file truth_table.hpp
  \brief Truth-table value type, encodings and the algebraic operations on it

  Bit k of an n-variable table is f(x_1, ..., x_n) where the binary
  expansion of k has x_1 as its most significant bit and x_n as its least
  significant bit.  Variables are numbered from 1.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canalyze
{

/*! \brief Boolean function of a fixed arity stored as 2^n bits

  Tables with at most six variables live in a single inline word; larger
  tables spill to the heap.  Bits past 2^n in the last word are always zero,
  so equality and ordering are plain word comparisons.
*/
class TruthTable
{
public:
  static constexpr unsigned max_arity = 32;

  TruthTable() = default;

  explicit TruthTable( unsigned arity )
      : arity_( arity )
  {
    if ( arity > max_arity )
    {
      throw std::invalid_argument( "arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_arity ) );
    }
    if ( arity > 6 )
    {
      large_.assign( std::size_t{ 1 } << ( arity - 6 ), 0u );
    }
  }

  /* bits are given in table order: bit k of `word` is table bit k */
  static TruthTable from_word( unsigned arity, uint64_t word )
  {
    if ( arity > 6 )
    {
      throw std::invalid_argument( "from_word needs arity <= 6" );
    }
    TruthTable tt( arity );
    tt.small_ = word & tt.last_mask();
    if ( tt.small_ != word )
    {
      throw std::invalid_argument( "word has bits beyond 2^n" );
    }
    return tt;
  }

  unsigned arity() const noexcept { return arity_; }

  uint64_t num_bits() const noexcept { return uint64_t{ 1 } << arity_; }

  bool bit( uint64_t k ) const noexcept
  {
    return ( words()[k >> 6] >> ( k & 63u ) ) & 1u;
  }

  void set_bit( uint64_t k, bool value ) noexcept
  {
    auto& w = mutable_words()[k >> 6];
    const uint64_t m = uint64_t{ 1 } << ( k & 63u );
    w = value ? ( w | m ) : ( w & ~m );
  }

  std::span<const uint64_t> words() const noexcept
  {
    return arity_ <= 6 ? std::span<const uint64_t>( &small_, 1 ) : std::span<const uint64_t>( large_ );
  }

  std::span<uint64_t> mutable_words() noexcept
  {
    return arity_ <= 6 ? std::span<uint64_t>( &small_, 1 ) : std::span<uint64_t>( large_ );
  }

  /* only meaningful for arity <= 6 */
  uint64_t word() const noexcept { return small_; }

  /* mask of valid bits in the last (or only) word */
  uint64_t last_mask() const noexcept
  {
    return arity_ >= 6 ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << ( uint64_t{ 1 } << arity_ ) ) - 1u );
  }

  friend bool operator==( const TruthTable& a, const TruthTable& b ) noexcept
  {
    return a.arity_ == b.arity_ && a.small_ == b.small_ && a.large_ == b.large_;
  }

  /*! Orders by arity, then by the integer value sum_k f(k) 2^k. */
  friend std::strong_ordering operator<=>( const TruthTable& a, const TruthTable& b ) noexcept
  {
    if ( auto c = a.arity_ <=> b.arity_; c != 0 )
    {
      return c;
    }
    const auto wa = a.words();
    const auto wb = b.words();
    for ( auto i = wa.size(); i-- > 0; )
    {
      if ( auto c = wa[i] <=> wb[i]; c != 0 )
      {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

private:
  unsigned arity_ = 0;
  uint64_t small_ = 0;
  std::vector<uint64_t> large_;
};

/*! \brief Input vector (x_1, ..., x_n) */
struct Assignment
{
  std::vector<bool> values;
};

enum class Encoding
{
  binary,
  hex,
  integer
};

namespace detail
{

inline void require_arity( unsigned n )
{
  if ( n > TruthTable::max_arity )
  {
    throw std::invalid_argument( "arity " + std::to_string( n ) + " is out of range" );
  }
}

inline void require_same_arity( const TruthTable& f, const TruthTable& g, const char* what )
{
  if ( f.arity() != g.arity() )
  {
    throw std::invalid_argument( std::string( what ) + ": arity mismatch (" + std::to_string( f.arity() ) + " vs " + std::to_string( g.arity() ) + ")" );
  }
}

inline void require_variable( const TruthTable& f, unsigned var )
{
  if ( var < 1 || var > f.arity() )
  {
    throw std::out_of_range( "variable x" + std::to_string( var ) + " not in 1.." + std::to_string( f.arity() ) );
  }
}

/* index k with bit `value` inserted at position `shift` */
constexpr uint64_t insert_bit( uint64_t k, unsigned shift, bool value ) noexcept
{
  const uint64_t low = k & ( ( uint64_t{ 1 } << shift ) - 1u );
  return ( ( k >> shift ) << ( shift + 1 ) ) | ( uint64_t{ value } << shift ) | low;
}

/* projection masks within one 64-bit word for variables of a <= 6 table */
constexpr uint64_t var_mask_word( unsigned shift ) noexcept
{
  constexpr uint64_t masks[] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
                                 0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  return masks[shift];
}

} // namespace detail

/*! \brief Constant function of arity n */
inline TruthTable constant( unsigned n, bool value )
{
  TruthTable tt( n );
  if ( value )
  {
    auto w = tt.mutable_words();
    std::fill( w.begin(), w.end(), ~uint64_t{ 0 } );
    w.back() &= tt.last_mask();
  }
  return tt;
}

inline bool is_constant( const TruthTable& f ) noexcept
{
  const auto w = f.words();
  const uint64_t first = ( w[0] & 1u ) ? ~uint64_t{ 0 } : 0u;
  for ( std::size_t i = 0; i + 1 < w.size(); ++i )
  {
    if ( w[i] != first )
    {
      return false;
    }
  }
  return w.back() == ( first & f.last_mask() );
}

/*! \brief Function x_i over n variables: blocks of 2^{n-i} zeros then ones */
inline TruthTable projection( unsigned i, unsigned n )
{
  detail::require_arity( n );
  if ( i < 1 || i > n )
  {
    throw std::out_of_range( "projection x" + std::to_string( i ) + " over " + std::to_string( n ) + " variables" );
  }
  TruthTable tt( n );
  const unsigned shift = n - i;
  for ( uint64_t k = 0; k < tt.num_bits(); ++k )
  {
    tt.set_bit( k, ( k >> shift ) & 1u );
  }
  return tt;
}

inline bool evaluate( const TruthTable& f, const Assignment& a )
{
  if ( a.values.size() != f.arity() )
  {
    throw std::invalid_argument( "evaluate: assignment has " + std::to_string( a.values.size() ) + " values for arity " + std::to_string( f.arity() ) );
  }
  uint64_t k = 0;
  for ( bool v : a.values )
  {
    k = ( k << 1 ) | uint64_t{ v };
  }
  return f.bit( k );
}

/*! \brief Restriction f|x_var=value, an (n-1)-variable table */
inline TruthTable cofactor( const TruthTable& f, unsigned var, bool value )
{
  detail::require_variable( f, var );
  const unsigned shift = f.arity() - var;
  TruthTable r( f.arity() - 1 );
  for ( uint64_t k = 0; k < r.num_bits(); ++k )
  {
    r.set_bit( k, f.bit( detail::insert_bit( k, shift, value ) ) );
  }
  return r;
}

/*! \brief Value b if f|x_var=value is constant b, nothing otherwise

  Does not materialize the cofactor.
*/
inline std::optional<bool> cofactor_constant( const TruthTable& f, unsigned var, bool value )
{
  detail::require_variable( f, var );
  const unsigned shift = f.arity() - var;
  if ( f.arity() <= 6 )
  {
    const uint64_t side = ( value ? detail::var_mask_word( shift ) : ~detail::var_mask_word( shift ) ) & f.last_mask();
    const uint64_t hit = f.word() & side;
    if ( hit == 0 )
    {
      return false;
    }
    if ( hit == side )
    {
      return true;
    }
    return std::nullopt;
  }
  const bool first = f.bit( detail::insert_bit( 0, shift, value ) );
  const uint64_t half = f.num_bits() >> 1;
  for ( uint64_t k = 1; k < half; ++k )
  {
    if ( f.bit( detail::insert_bit( k, shift, value ) ) != first )
    {
      return std::nullopt;
    }
  }
  return first;
}

inline TruthTable complement( const TruthTable& f )
{
  TruthTable r = f;
  auto w = r.mutable_words();
  for ( auto& x : w )
  {
    x = ~x;
  }
  w.back() &= r.last_mask();
  return r;
}

/*! \brief The (n+1)-variable table f followed by g; new variable becomes x_1 */
inline TruthTable concat( const TruthTable& f, const TruthTable& g )
{
  detail::require_same_arity( f, g, "concat" );
  const unsigned n = f.arity();
  TruthTable r( n + 1 );
  if ( n < 6 )
  {
    const unsigned len = 1u << n;
    r.mutable_words()[0] = f.word() | ( g.word() << len );
    return r;
  }
  auto w = r.mutable_words();
  const auto wf = f.words();
  const auto wg = g.words();
  std::copy( wf.begin(), wf.end(), w.begin() );
  std::copy( wg.begin(), wg.end(), w.begin() + static_cast<std::ptrdiff_t>( wf.size() ) );
  return r;
}

/*! \brief Inserts a new variable at position `pos`

  The result h has h|x_pos=input constant `output` and h|x_pos=!input equal to
  f; old variables at positions >= pos move up by one.
*/
inline TruthTable merge( const TruthTable& f, unsigned pos, bool input, bool output )
{
  const unsigned n = f.arity();
  if ( pos < 1 || pos > n + 1 )
  {
    throw std::out_of_range( "merge position " + std::to_string( pos ) + " not in 1.." + std::to_string( n + 1 ) );
  }
  detail::require_arity( n + 1 );
  TruthTable r( n + 1 );
  const unsigned shift = n + 1 - pos;
  for ( uint64_t k = 0; k < f.num_bits(); ++k )
  {
    r.set_bit( detail::insert_bit( k, shift, !input ), f.bit( k ) );
    r.set_bit( detail::insert_bit( k, shift, input ), output );
  }
  return r;
}

inline uint64_t weight( const TruthTable& f ) noexcept
{
  uint64_t c = 0;
  for ( auto w : f.words() )
  {
    c += static_cast<uint64_t>( std::popcount( w ) );
  }
  return c;
}

inline uint64_t hamming( const TruthTable& f, const TruthTable& g )
{
  detail::require_same_arity( f, g, "hamming" );
  const auto wf = f.words();
  const auto wg = g.words();
  uint64_t c = 0;
  for ( std::size_t i = 0; i < wf.size(); ++i )
  {
    c += static_cast<uint64_t>( std::popcount( wf[i] ^ wg[i] ) );
  }
  return c;
}

/*! \brief min(H.D(f, 0), H.D(f, 1)) */
inline uint64_t min_const_hd( const TruthTable& f ) noexcept
{
  const auto w = weight( f );
  return std::min( w, f.num_bits() - w );
}

/* ---------------------------------------------------------------- codec */

/*! \brief Bits 0..2^n-1 left to right */
inline std::string to_binary( const TruthTable& f )
{
  std::string s( f.num_bits(), '0' );
  for ( uint64_t k = 0; k < f.num_bits(); ++k )
  {
    if ( f.bit( k ) )
    {
      s[k] = '1';
    }
  }
  return s;
}

inline TruthTable from_binary( std::string_view text, unsigned n )
{
  detail::require_arity( n );
  if ( n > 30 || text.size() != ( std::size_t{ 1 } << n ) )
  {
    throw std::invalid_argument( "binary encoding of a " + std::to_string( n ) + "-variable function needs " +
                                 ( n > 30 ? std::string( "too many" ) : std::to_string( std::size_t{ 1 } << n ) ) +
                                 " characters, got " + std::to_string( text.size() ) );
  }
  TruthTable tt( n );
  for ( std::size_t k = 0; k < text.size(); ++k )
  {
    const char c = text[k];
    if ( c != '0' && c != '1' )
    {
      throw std::invalid_argument( std::string( "invalid binary character '" ) + c + "' at position " + std::to_string( k ) );
    }
    tt.set_bit( k, c == '1' );
  }
  return tt;
}

/*! \brief One hex digit per 4 consecutive bits, leftmost bit of each nibble most significant */
inline std::string to_hex( const TruthTable& f )
{
  if ( f.arity() < 2 )
  {
    throw std::invalid_argument( "hex encoding needs arity >= 2" );
  }
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string s( f.num_bits() / 4, '0' );
  for ( uint64_t d = 0; d < s.size(); ++d )
  {
    unsigned v = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      v = ( v << 1 ) | unsigned{ f.bit( 4 * d + b ) };
    }
    s[d] = digits[v];
  }
  return s;
}

inline TruthTable from_hex( std::string_view text, unsigned n )
{
  detail::require_arity( n );
  if ( n < 2 )
  {
    throw std::invalid_argument( "hex encoding needs arity >= 2" );
  }
  if ( n > 30 || text.size() != ( std::size_t{ 1 } << n ) / 4 )
  {
    throw std::invalid_argument( "hex encoding of a " + std::to_string( n ) + "-variable function needs " +
                                 ( n > 30 ? std::string( "too many" ) : std::to_string( ( std::size_t{ 1 } << n ) / 4 ) ) +
                                 " digits, got " + std::to_string( text.size() ) );
  }
  TruthTable tt( n );
  for ( std::size_t d = 0; d < text.size(); ++d )
  {
    const char c = text[d];
    unsigned v;
    if ( c >= '0' && c <= '9' )
      v = static_cast<unsigned>( c - '0' );
    else if ( c >= 'a' && c <= 'f' )
      v = static_cast<unsigned>( c - 'a' + 10 );
    else if ( c >= 'A' && c <= 'F' )
      v = static_cast<unsigned>( c - 'A' + 10 );
    else
      throw std::invalid_argument( std::string( "invalid hex character '" ) + c + "' at position " + std::to_string( d ) );
    for ( unsigned b = 0; b < 4; ++b )
    {
      tt.set_bit( 4 * d + b, ( v >> ( 3 - b ) ) & 1u );
    }
  }
  return tt;
}

/*! \brief Decimal value sum_k f(k) 2^k, any arity */
inline std::string to_integer( const TruthTable& f )
{
  // little-endian base 10^9 limbs, built by doubling from the top bit down
  std::vector<uint32_t> limbs{ 0 };
  constexpr uint32_t base = 1000000000u;
  for ( uint64_t k = f.num_bits(); k-- > 0; )
  {
    uint32_t carry = f.bit( k ) ? 1u : 0u;
    for ( auto& l : limbs )
    {
      const uint64_t v = uint64_t{ l } * 2u + carry;
      l = static_cast<uint32_t>( v % base );
      carry = static_cast<uint32_t>( v / base );
    }
    if ( carry )
    {
      limbs.push_back( carry );
    }
  }
  std::string s = std::to_string( limbs.back() );
  for ( auto i = limbs.size() - 1; i-- > 0; )
  {
    const auto part = std::to_string( limbs[i] );
    s += std::string( 9 - part.size(), '0' ) + part;
  }
  return s;
}

inline TruthTable from_integer( std::string_view text, unsigned n )
{
  detail::require_arity( n );
  if ( text.empty() )
  {
    throw std::invalid_argument( "empty integer encoding" );
  }
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    if ( text[i] < '0' || text[i] > '9' )
    {
      throw std::invalid_argument( std::string( "invalid decimal character '" ) + text[i] + "' at position " + std::to_string( i ) );
    }
  }
  // repeated halving of the decimal digit string yields bits from k = 0 up
  std::vector<uint8_t> digits;
  for ( char c : text )
  {
    digits.push_back( static_cast<uint8_t>( c - '0' ) );
  }
  auto is_zero = [&] { return std::all_of( digits.begin(), digits.end(), []( uint8_t d ) { return d == 0; } ); };
  TruthTable tt( n );
  uint64_t k = 0;
  while ( !is_zero() )
  {
    unsigned rem = 0;
    for ( auto& d : digits )
    {
      const unsigned cur = rem * 10 + d;
      d = static_cast<uint8_t>( cur / 2 );
      rem = cur % 2;
    }
    if ( rem )
    {
      if ( k >= tt.num_bits() )
      {
        throw std::invalid_argument( "integer " + std::string( text ) + " is not below 2^(2^" + std::to_string( n ) + ")" );
      }
      tt.set_bit( k, true );
    }
    ++k;
  }
  return tt;
}

inline TruthTable parse( std::string_view text, Encoding encoding, unsigned n )
{
  switch ( encoding )
  {
  case Encoding::binary:
    return from_binary( text, n );
  case Encoding::hex:
    return from_hex( text, n );
  case Encoding::integer:
    return from_integer( text, n );
  }
  throw std::invalid_argument( "unknown encoding" );
}

inline std::string format( const TruthTable& f, Encoding encoding )
{
  switch ( encoding )
  {
  case Encoding::binary:
    return to_binary( f );
  case Encoding::hex:
    return to_hex( f );
  case Encoding::integer:
    return to_integer( f );
  }
  throw std::invalid_argument( "unknown encoding" );
}

/* ---------------------------------------------------------- enumeration */

/*! \brief Table of an n <= 5 function from its integer value */
inline TruthTable function_at( unsigned n, uint64_t index )
{
  return TruthTable::from_word( n, index );
}

/*! \brief Number of n-variable functions, for n <= 5 */
inline uint64_t function_count( unsigned n )
{
  if ( n > 5 )
  {
    throw std::domain_error( "cannot enumerate all functions of " + std::to_string( n ) + " variables" );
  }
  return uint64_t{ 1 } << ( uint64_t{ 1 } << n );
}

/*! \brief Lazy range over the n-variable functions with integer values in [first, last)

  Iterates in integer order.  Sub-ranges partition the space for parallel
  sweeps.
*/
class FunctionRange
{
public:
  class iterator
  {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = TruthTable;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = TruthTable;

    iterator() = default;
    iterator( unsigned n, uint64_t index ) : n_( n ), index_( index ) {}

    TruthTable operator*() const { return function_at( n_, index_ ); }
    iterator& operator++()
    {
      ++index_;
      return *this;
    }
    iterator operator++( int )
    {
      auto old = *this;
      ++index_;
      return old;
    }
    bool operator==( const iterator& other ) const noexcept { return index_ == other.index_; }
    uint64_t index() const noexcept { return index_; }

  private:
    unsigned n_ = 0;
    uint64_t index_ = 0;
  };

  FunctionRange( unsigned n, uint64_t first, uint64_t last )
      : n_( n ), first_( first ), last_( last )
  {
    if ( first > last || last > function_count( n ) )
    {
      throw std::out_of_range( "function range [" + std::to_string( first ) + ", " + std::to_string( last ) + ") out of bounds" );
    }
  }

  iterator begin() const { return { n_, first_ }; }
  iterator end() const { return { n_, last_ }; }
  uint64_t size() const noexcept { return last_ - first_; }
  unsigned arity() const noexcept { return n_; }

  FunctionRange subrange( uint64_t first, uint64_t last ) const
  {
    return FunctionRange( n_, first_ + first, first_ + last );
  }

private:
  unsigned n_;
  uint64_t first_;
  uint64_t last_;
};

inline FunctionRange enumerate_all( unsigned n )
{
  return FunctionRange( n, 0, function_count( n ) );
}

} // namespace canalyze

template<>
struct std::hash<canalyze::TruthTable>
{
  std::size_t operator()( const canalyze::TruthTable& tt ) const noexcept
  {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ tt.arity();
    for ( auto w : tt.words() )
    {
      h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    }
    return static_cast<std::size_t>( h );
  }
};
