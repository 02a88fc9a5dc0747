#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pcensus::cli
{

enum exit_code : int
{
  exit_ok = 0,
  exit_usage = 1,
  exit_resource_limit = 2,
  exit_inconsistent = 3,
  exit_mismatch = 4
};

/* argv[0] is the program name */
int run( std::span<std::string const> args, std::ostream& out, std::ostream& err );

int main( int argc, char** argv );

} // namespace pcensus::cli
