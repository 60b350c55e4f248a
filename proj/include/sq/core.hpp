#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sq {

using VertexId = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    constexpr Edge() = default;
    constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool shares_endpoint(const Edge& o) const
    {
        return u == o.u || u == o.v || v == o.u || v == o.v;
    }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Color : std::uint8_t { red, blue };

constexpr Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A configured limit (edge count, vertex budget) was exceeded.
class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, int lower_bound, int upper_bound)
        : Error(what), lower_(lower_bound), upper_(upper_bound)
    {
    }

    int lower_bound() const { return lower_; }
    int upper_bound() const { return upper_; }

private:
    int lower_;
    int upper_;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Something the underlying combinatorial argument guarantees did not hold.
class InternalInvariant : public Error {
public:
    using Error::Error;
};

} // namespace sq
