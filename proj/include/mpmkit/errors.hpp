// Copyright 2026 The mpmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <stdexcept>
#include <string>

namespace mpmkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MPMKIT_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

MPMKIT_DEFINE_ERROR(LabelCollision);
MPMKIT_DEFINE_ERROR(UnknownSubsystem);
MPMKIT_DEFINE_ERROR(LayoutMismatch);
MPMKIT_DEFINE_ERROR(NotHermitian);
MPMKIT_DEFINE_ERROR(UnsupportedDimension);
MPMKIT_DEFINE_ERROR(BadIndex);
MPMKIT_DEFINE_ERROR(NotAProjector);
MPMKIT_DEFINE_ERROR(TooManyNodes);
MPMKIT_DEFINE_ERROR(PairingMismatch);
MPMKIT_DEFINE_ERROR(PostSelectionDetected);
MPMKIT_DEFINE_ERROR(InvalidProcess);
MPMKIT_DEFINE_ERROR(TooLarge);
MPMKIT_DEFINE_ERROR(DimensionError);
MPMKIT_DEFINE_ERROR(ParseError);

#undef MPMKIT_DEFINE_ERROR

}  // namespace mpmkit
