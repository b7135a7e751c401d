#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gext {

// Base of every error the library throws. `code` is a short machine-readable
// tag, `context` free-form detail (a line number, a clique, a degree).
class Error : public std::runtime_error
{
  public:
    Error(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context))
    {
    }

    const std::string& code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

  private:
    std::string code_;
    std::string context_;
};

class ParseError : public Error
{
  public:
    ParseError(const std::string& message, std::size_t line)
        : Error("parse_error", message, "line " + std::to_string(line)), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class DomainError : public Error
{
  public:
    explicit DomainError(const std::string& message, std::string context = {})
        : Error("domain_error", message, std::move(context))
    {
    }
};

// The clique complex was built with too small a cardinality cap for the
// requested operation. Rebuild with at least `required_max_card()`.
class CapacityError : public Error
{
  public:
    CapacityError(const std::string& what, std::size_t required, std::size_t available)
        : Error("capacity_error",
                what + ": clique complex built with max_card=" + std::to_string(available) +
                    ", rebuild with max_card>=" + std::to_string(required),
                "required_max_card=" + std::to_string(required)),
          required_(required)
    {
    }
    std::size_t required_max_card() const noexcept { return required_; }

  private:
    std::size_t required_;
};

} // namespace gext
