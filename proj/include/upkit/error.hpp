/*
 * Copyright 2026 The upkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace upkit {

enum class Errc {
  NotContained,
  WrongTotal,
  ParityViolation,
  BoundExceeded,
  NotInI,
  NotInJ,
  NotCanonical,
  NotInPiece,
  MoveNotApplicable,
  NotSpringerType,
  MalformedOutput,
  BadParity,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotContained: return "NotContained";
    case Errc::WrongTotal: return "WrongTotal";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotInI: return "NotInI";
    case Errc::NotInJ: return "NotInJ";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::NotInPiece: return "NotInPiece";
    case Errc::MoveNotApplicable: return "MoveNotApplicable";
    case Errc::NotSpringerType: return "NotSpringerType";
    case Errc::MalformedOutput: return "MalformedOutput";
    case Errc::BadParity: return "BadParity";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

// All domain failures surface as this exception; `code()` is stable API.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace upkit
