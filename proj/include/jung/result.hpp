#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace jung {

/// Value-or-error carrier (a minimal std::expected stand-in for C++20).
template <class T, class E>
class Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}  // NOLINT
  Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}   // NOLINT

  bool has_value() const { return v_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  const T& value() const& {
    if (!has_value()) throw std::logic_error("Result holds an error");
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!has_value()) throw std::logic_error("Result holds an error");
    return std::get<0>(std::move(v_));
  }
  const E& error() const {
    if (has_value()) throw std::logic_error("Result holds a value");
    return std::get<1>(v_);
  }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> v_;
};

}  // namespace jung
