#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace stammerlab {

// The seven interchangeable representations. All pairs among the first six
// are connected by bijections (composed through chains); dyck-path is a
// projection target only.
//
// Size conventions (one object family, n >= 1):
//   rook placement of size n-1
//   stammering tableau of size n-1     (3(n-1)+1 vertices)
//   n-chain of Dyck shapes
//   permutation of size n
//   Laguerre history of length 2n
//   Dyck tableau of length 2n
//   dyck-path of length 2n             (the shape; not invertible)
enum class ObjectKind {
    Stammering,
    Rook,
    Chain,
    Permutation,
    Laguerre,
    DyckTableauKind,
    DyckPathKind,
};

std::optional<ObjectKind> kind_from_string(std::string_view name);
std::string kind_name(ObjectKind kind);

// Parses, validates, converts along the bijection graph, serializes.
// Throws std::invalid_argument on malformed or invalid input and on
// conversions out of dyck-path.
nlohmann::json convert(const nlohmann::json& input, ObjectKind from, ObjectKind to);

}  // namespace stammerlab
