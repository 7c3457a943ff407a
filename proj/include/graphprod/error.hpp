#ifndef GRAPHPROD_ERROR_HPP_
#define GRAPHPROD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace graphprod {

// All validation and precondition failures carry a short machine-readable
// code (e.g. "NonAssociative", "UnknownVertex") plus a human message that
// names a witness where one exists.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace graphprod

#endif  // GRAPHPROD_ERROR_HPP_
