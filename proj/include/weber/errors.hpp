#pragma once

#include <stdexcept>
#include <string>

namespace weber {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/set dimensions disagree, or a dimension is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires min_i ||x - a_i|| >= eta_anchor was called
/// too close to an anchor.
class AnchorProximityError : public Error {
 public:
  using Error::Error;
};

/// A point required to lie in the constraint set does not.
class InfeasiblePointError : public Error {
 public:
  using Error::Error;
};

/// The anchors are collinear and the caller did not override.
class CollinearError : public Error {
 public:
  using Error::Error;
};

/// anchor_escape could not find a descent point; the anchor test and the
/// escape disagree. Never swallowed.
class EscapeError : public Error {
 public:
  using Error::Error;
};

/// Instance document violates the schema. `path` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace weber
