#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace modelkit {

/* Input that could not be parsed or fails structural validation on load. */
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/* A condition the library guarantees can never fail did fail. */
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

/* A refused operation: which condition failed, and on what. */
struct Rejection {
  std::string condition;
  std::string detail;
  std::string to_string() const {
    return detail.empty() ? condition : condition + ": " + detail;
  }
};

/* Value-or-rejection. Rejections are ordinary results, not errors. */
template <class T>
class Result {
 public:
  Result(T v) : val_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Result(Rejection r) : rej_(std::move(r)) {}  // NOLINT

  bool ok() const { return val_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *val_; }
  const T* operator->() const { return &*val_; }
  T& operator*() { return *val_; }
  const Rejection& rejection() const { return rej_; }

 private:
  std::optional<T> val_;
  Rejection rej_;
};

/* Boolean verdict plus a human-readable reason when false. */
struct Check {
  bool ok = true;
  std::string why;
};

}  // namespace modelkit
