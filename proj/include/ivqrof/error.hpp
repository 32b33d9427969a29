#ifndef IVQROF_ERROR_HPP_
#define IVQROF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ivqrof {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// number violates the q-rung orthopair constraints
class validity_error : public error {
 public:
  using error::error;
};

// argument outside an operation's domain (lambda <= 0, empty input, ...)
class domain_error : public error {
 public:
  using error::error;
};

class shape_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

// no finite rung q satisfies the data
class infeasible_error : public error {
 public:
  using error::error;
};

class parameter_error : public error {
 public:
  using error::error;
};

// NaN or a singular fuzzy expression during a solve
class numeric_error : public error {
 public:
  using error::error;
};

}  // namespace ivqrof

#endif
