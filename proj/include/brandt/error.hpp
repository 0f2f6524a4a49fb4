#ifndef BRANDT_ERROR_HPP_
#define BRANDT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace brandt {

  //! Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Bad argument: out-of-range index, mismatched n, malformed name.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A table or structure failed one of its algebraic laws.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  //! A cache file could not be read, or was written by another format.
  class CacheError : public Error {
   public:
    using Error::Error;
  };

}  // namespace brandt

#endif  // BRANDT_ERROR_HPP_
