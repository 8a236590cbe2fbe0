#pragma once

#include <stdexcept>
#include <string>

namespace ellis {

struct EllisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A triple witnessing op(op(a,b),c) != op(a,op(b,c)).
struct AssociativityError : EllisError {
  int a, b, c;
  AssociativityError(int a_, int b_, int c_)
      : EllisError("operation table is not associative at (" + std::to_string(a_) + "," +
                   std::to_string(b_) + "," + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct InvalidGenerator : EllisError {
  using EllisError::EllisError;
};

struct NonMinimalIdeal : EllisError {
  using EllisError::EllisError;
};

/// Raised when the two-move isomorphism construction cannot find its
/// intermediate idempotent; impossible on a valid finite semigroup.
struct NoIntermediateIdempotent : EllisError {
  using EllisError::EllisError;
};

/// Carries a witness (point, atom) whose d-image escapes the algebra.
struct NotDClosed : EllisError {
  int point, atom;
  NotDClosed(int point_, int atom_)
      : EllisError("algebra is not d-closed: image of atom " + std::to_string(atom_) +
                   " under the d-map of point " + std::to_string(point_) +
                   " is not a member"),
        point(point_),
        atom(atom_) {}
};

struct InvalidPair : EllisError {
  using EllisError::EllisError;
};

/// An operation needed the section j but the pair does not carry one.
struct MissingSection : EllisError {
  using EllisError::EllisError;
};

struct SharpAlgebraNotWellDefined : EllisError {
  using EllisError::EllisError;
};

struct ParseError : EllisError {
  int line;
  ParseError(int line_, const std::string& what_)
      : EllisError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct ValidationError : EllisError {
  using EllisError::EllisError;
};

}  // namespace ellis
