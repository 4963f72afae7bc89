#include "stammerlab/convert.hpp"

#include <stdexcept>

#include "stammerlab/json_io.hpp"

namespace stammerlab {

std::optional<ObjectKind> kind_from_string(std::string_view name) {
    if (name == "stammering") return ObjectKind::Stammering;
    if (name == "rook") return ObjectKind::Rook;
    if (name == "chain") return ObjectKind::Chain;
    if (name == "permutation") return ObjectKind::Permutation;
    if (name == "laguerre") return ObjectKind::Laguerre;
    if (name == "dyck-tableau") return ObjectKind::DyckTableauKind;
    if (name == "dyck-path") return ObjectKind::DyckPathKind;
    return std::nullopt;
}

std::string kind_name(ObjectKind kind) {
    switch (kind) {
        case ObjectKind::Stammering: return "stammering";
        case ObjectKind::Rook: return "rook";
        case ObjectKind::Chain: return "chain";
        case ObjectKind::Permutation: return "permutation";
        case ObjectKind::Laguerre: return "laguerre";
        case ObjectKind::DyckTableauKind: return "dyck-tableau";
        case ObjectKind::DyckPathKind: return "dyck-path";
    }
    return "?";
}

namespace {

// Every bijective kind routes through the chain; rook <-> stammering is the
// one direct edge not passing through it.
ChainOfDyckShapes to_chain(const nlohmann::json& input, ObjectKind from) {
    switch (from) {
        case ObjectKind::Chain:
            return chain_from_json(input);
        case ObjectKind::Rook:
            return chain_from_rook(rook_from_json(input));
        case ObjectKind::Stammering:
            return chain_from_rook(stammering_to_rook(stammering_from_json(input)));
        case ObjectKind::Permutation:
            return chain_of(permutation_from_json(input));
        case ObjectKind::Laguerre:
            return chain_from_history(laguerre_from_json(input));
        case ObjectKind::DyckTableauKind:
            return chain_from_history(from_dyck_tableau(dyck_tableau_from_json(input)));
        case ObjectKind::DyckPathKind:
            break;
    }
    throw std::invalid_argument(
        "convert: dyck-path is a projection, it does not determine the other kinds");
}

nlohmann::json from_chain(const ChainOfDyckShapes& chain, ObjectKind to) {
    switch (to) {
        case ObjectKind::Chain:
            return to_json(chain);
        case ObjectKind::Rook:
            return to_json(rook_from_chain(chain));
        case ObjectKind::Stammering:
            return to_json(rook_to_stammering(rook_from_chain(chain)));
        case ObjectKind::Permutation:
            return to_json(permutation_of(chain));
        case ObjectKind::Laguerre:
            return to_json(history_from_chain(chain));
        case ObjectKind::DyckTableauKind:
            return to_json(to_dyck_tableau(history_from_chain(chain)));
        case ObjectKind::DyckPathKind:
            return to_json(chain.shape());
    }
    throw std::logic_error("convert: unhandled target kind");
}

nlohmann::json reserialize(const nlohmann::json& input, ObjectKind kind) {
    switch (kind) {
        case ObjectKind::Stammering: return to_json(stammering_from_json(input));
        case ObjectKind::Rook: return to_json(rook_from_json(input));
        case ObjectKind::Chain: return to_json(chain_from_json(input));
        case ObjectKind::Permutation: return to_json(permutation_from_json(input));
        case ObjectKind::Laguerre: return to_json(laguerre_from_json(input));
        case ObjectKind::DyckTableauKind: return to_json(dyck_tableau_from_json(input));
        case ObjectKind::DyckPathKind: return to_json(dyck_path_from_json(input));
    }
    throw std::logic_error("convert: unhandled kind");
}

}  // namespace

nlohmann::json convert(const nlohmann::json& input, ObjectKind from, ObjectKind to) {
    if (from == to) return reserialize(input, from);
    if (from == ObjectKind::Rook && to == ObjectKind::Stammering)
        return to_json(rook_to_stammering(rook_from_json(input)));
    if (from == ObjectKind::Stammering && to == ObjectKind::Rook)
        return to_json(stammering_to_rook(stammering_from_json(input)));
    if (from == ObjectKind::Rook && to == ObjectKind::DyckPathKind)
        return to_json(path_from_rook(rook_from_json(input)));
    if (from == ObjectKind::Permutation && to == ObjectKind::DyckPathKind)
        return to_json(profile(permutation_from_json(input)));
    return from_chain(to_chain(input, from), to);
}

}  // namespace stammerlab
