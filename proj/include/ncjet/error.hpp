#pragma once

#include <stdexcept>
#include <string>

namespace ncjet {

// Each error category maps onto a distinct CLI exit status.
enum class ErrorKind { Parse = 1, Precondition = 2, IdentityFailure = 3, Resource = 4 };

class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, const std::string &what)
	    : std::runtime_error(what), kind_(kind)
	{}
	ErrorKind kind() const noexcept { return kind_; }
	int exit_code() const noexcept { return static_cast<int>(kind_); }

  private:
	ErrorKind kind_;
};

class ParseError : public Error
{
  public:
	ParseError(const std::string &what, std::size_t position)
	    : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
	      position_(position)
	{}
	std::size_t position() const noexcept { return position_; }

  private:
	std::size_t position_;
};

class PreconditionError : public Error
{
  public:
	explicit PreconditionError(const std::string &what)
	    : Error(ErrorKind::Precondition, what)
	{}
};

/// Thrown when a jet order exceeds the configured bound.
class ResourceError : public Error
{
  public:
	explicit ResourceError(const std::string &what)
	    : Error(ErrorKind::Resource, what)
	{}
};

} // namespace ncjet
