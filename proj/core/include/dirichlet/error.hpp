#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirichlet {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CoincidentPointsError : public Error {
  public:
    using Error::Error;
};

class InvalidPolygonError : public Error {
  public:
    using Error::Error;
};

class DegenerateAreaError : public Error {
  public:
    using Error::Error;
};

class EmptyGeneratingSetError : public Error {
  public:
    using Error::Error;
};

class DuplicateSiteError : public Error {
  public:
    using Error::Error;
};

class SiteOutsideBoxError : public Error {
  public:
    using Error::Error;
};

class InvalidBoundingBoxError : public Error {
  public:
    using Error::Error;
};

/// A density-weighted centroid was requested for a cell containing no
/// positive-density pixel.
class EmptySupportError : public Error {
  public:
    using Error::Error;
};

class InvalidMappingError : public Error {
  public:
    using Error::Error;
};

/// Malformed input document. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& message, std::size_t line = 0,
                        std::size_t column = 0)
        : Error(message), line(line), column(column) {}

    std::size_t line = 0;
    std::size_t column = 0;
};

}  // namespace dirichlet
