#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcensus
{

/*! \brief Root of every error raised by this library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Assignment length differs from the circuit's input count. */
class input_arity_error : public error
{
public:
  using error::error;
};

/*! \brief Malformed circuit, fragment, formula or parameter tuple. */
class construction_error : public error
{
public:
  using error::error;
};

/*! \brief An enumeration or search budget would be exceeded.
 *
 * Signals that the instance is not desk scale; it is never a wrong answer.
 */
class resource_limit_error : public error
{
public:
  using error::error;
};

/*! \brief DIMACS text that does not follow the accepted format. */
class parse_error : public error
{
public:
  parse_error( std::size_t line, std::string const& what )
      : error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief Answer set does not match the query battery it claims to answer. */
class protocol_error : public error
{
public:
  using error::error;
};

/*! \brief An external model counter disagrees with the internal one. */
class cross_check_error : public error
{
public:
  using error::error;
};

} // namespace pcensus
