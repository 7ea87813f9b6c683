#pragma once

#include <stdexcept>
#include <string>

namespace bomega {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (supports, elements, neighbourhoods).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed value that does not belong to the structure it is used with.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Brandt element outside the image of the embedding.
class NotInImage : public Error {
 public:
  using Error::Error;
};

class NotTranslateEquivalent : public Error {
 public:
  using Error::Error;
};

}  // namespace bomega
