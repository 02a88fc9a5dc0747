#include <pcensus/cli.hpp>

int main( int argc, char** argv )
{
  return pcensus::cli::main( argc, argv );
}
