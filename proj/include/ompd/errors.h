/*
Copyright 2026 The OMPD Authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Error types raised by the polarity toolkit.  Every failure the library
// reports derives from ompd::Error so callers can catch one type.

#ifndef OMPD_ERRORS_H_
#define OMPD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ompd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OMPD_DEFINE_ERROR(Name)        \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

OMPD_DEFINE_ERROR(InvalidArgumentError);
OMPD_DEFINE_ERROR(TooShortError);
OMPD_DEFINE_ERROR(NoVoicingError);
OMPD_DEFINE_ERROR(UnreliableFrameError);
OMPD_DEFINE_ERROR(DegenerateFrameError);
OMPD_DEFINE_ERROR(InsufficientHarmonicsError);
OMPD_DEFINE_ERROR(InsufficientFramesError);
OMPD_DEFINE_ERROR(FormatError);
OMPD_DEFINE_ERROR(NotFoundError);
OMPD_DEFINE_ERROR(IoError);

#undef OMPD_DEFINE_ERROR

}  // namespace ompd

#endif  // OMPD_ERRORS_H_
