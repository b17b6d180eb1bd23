/*
  Copyright (c) 2026 the mpl authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace mpl {

enum class ErrorKind {
  Input,    // malformed or invalid input data
  Domain,   // evaluation outside a function's domain
  Guard,    // configured search guard exceeded
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorKind::Input, msg); }
inline Error domain_error(const std::string& msg) { return Error(ErrorKind::Domain, msg); }
inline Error guard_error(const std::string& msg) { return Error(ErrorKind::Guard, msg); }

}  // namespace mpl
