#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recolour
{
    /// Raised when an exhaustive computation would exceed its configured budget.
    class CapExceeded : public std::runtime_error
    {
    public:
        explicit CapExceeded(std::uint64_t cap) :
            std::runtime_error("cap exceeded: " + std::to_string(cap)),
            cap_(cap)
        {
        }

        auto cap() const -> std::uint64_t { return cap_; }

    private:
        std::uint64_t cap_;
    };

    /// Raised by operations that need at least one homomorphism to exist.
    class NoColourings : public std::runtime_error
    {
    public:
        NoColourings() :
            std::runtime_error("no homomorphisms exist between the given graphs")
        {
        }
    };

    class GraphFormatError : public std::runtime_error
    {
    public:
        GraphFormatError(int line, const std::string & what) :
            std::runtime_error("line " + std::to_string(line) + ": " + what),
            line_(line)
        {
        }

        auto line() const -> int { return line_; }

    private:
        int line_;
    };
}
