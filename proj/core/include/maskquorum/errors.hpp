// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace maskquorum
{

// Invalid construction parameters, universe mismatches, malformed input.
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// A finite projective plane order the field arithmetic cannot handle.
class UnsupportedOrderError : public ParameterError
{
  public:
    using ParameterError::ParameterError;
};

// A bound or formula evaluated outside the regime where it holds.
class ApplicabilityError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// An instance is too large for an exhaustive / explicit algorithm.
class SizeError : public std::length_error
{
  public:
    using std::length_error::length_error;
};

class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace maskquorum
