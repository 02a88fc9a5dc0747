// Reads DIMACS on stdin and prints its exact model count. Uses plain
// enumeration, so it serves as an independent counter for --external-counter.
#include <pcensus/cnf.hpp>
#include <pcensus/errors.hpp>

#include <iostream>
#include <iterator>
#include <string>

int main( int argc, char** argv )
{
  std::size_t cap = 28;
  if ( argc > 1 )
  {
    cap = std::stoul( argv[1] );
  }
  std::string text( std::istreambuf_iterator<char>( std::cin ), {} );
  try
  {
    std::cout << pcensus::count_models( pcensus::from_dimacs( text ), cap ) << '\n';
  }
  catch ( pcensus::error const& e )
  {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
