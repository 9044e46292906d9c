#pragma once

#include <stdexcept>
#include <string>

namespace coentropy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error { using Error::Error; };
class LoopEdge : public Error { using Error::Error; };
class MalformedGraph6 : public Error { using Error::Error; };
class MalformedEdgeList : public Error { using Error::Error; };
class IsolatedVertex : public Error { using Error::Error; };
class EmptyGraph : public Error { using Error::Error; };
class NoConvergence : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class WeightError : public Error { using Error::Error; };
class SizeLimit : public Error { using Error::Error; };
class SourceError : public Error { using Error::Error; };
class NotFound : public Error { using Error::Error; };

}  // namespace coentropy
