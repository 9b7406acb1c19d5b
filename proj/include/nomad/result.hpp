#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace nomad {

struct Error {
    std::string message;
};

/// Value-or-error return type used across the pipeline. Flow-control errors
/// (format violations, backend refusals) travel as values so callers can feed
/// them back into retry loops instead of unwinding.
template <typename T>
class Result {
public:
    Result(T value) : data_(std::move(value)) {}
    Result(Error error) : data_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(data_); }
    explicit operator bool() const { return ok(); }

    T& value() {
        if (!ok()) throw std::runtime_error("Result::value on error: " + error());
        return std::get<T>(data_);
    }
    const T& value() const {
        if (!ok()) throw std::runtime_error("Result::value on error: " + error());
        return std::get<T>(data_);
    }
    T& operator*() { return value(); }
    const T& operator*() const { return value(); }
    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }

    const std::string& error() const {
        static const std::string kOk = "(ok)";
        if (ok()) return kOk;
        return std::get<Error>(data_).message;
    }

    Error error_object() const {
        return ok() ? Error{} : std::get<Error>(data_);
    }

private:
    std::variant<T, Error> data_;
};

/// Result for operations that produce no value.
class Status {
public:
    Status() = default;
    Status(Error error) : error_(std::move(error)) {}

    bool ok() const { return !error_.has_value(); }
    explicit operator bool() const { return ok(); }
    const std::string& error() const {
        static const std::string kOk = "(ok)";
        return error_ ? error_->message : kOk;
    }

private:
    std::optional<Error> error_;
};

inline Error make_error(std::string message) { return Error{std::move(message)}; }

}  // namespace nomad
