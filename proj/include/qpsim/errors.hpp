// Copyright 2026 The qpsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace qpsim {

// Base class for every validation failure raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ZeroNormError : public Error {
  public:
    using Error::Error;
};
class BadShapeError : public Error {
  public:
    using Error::Error;
};
class DuplicateLabelError : public Error {
  public:
    using Error::Error;
};
class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};
class UnknownLabelError : public Error {
  public:
    using Error::Error;
};
class LabelMismatchError : public Error {
  public:
    using Error::Error;
};
class InvalidMeasurementError : public Error {
  public:
    using Error::Error;
};
class InvalidPovmError : public Error {
  public:
    using Error::Error;
};
class NotPsdError : public Error {
  public:
    using Error::Error;
};
class BadSpecError : public Error {
  public:
    using Error::Error;
};
class UnknownProtocolError : public Error {
  public:
    using Error::Error;
};

}  // namespace qpsim
