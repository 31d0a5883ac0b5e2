#pragma once

// Structured (JSON) encodings of library results. Every top-level record
// carries a "schema" tag; keys are emitted in a fixed order.

#include <json.hpp>

#include "gdeck/bounds.hpp"
#include "gdeck/constructions.hpp"
#include "gdeck/deck.hpp"
#include "gdeck/search.hpp"
#include "gdeck/wildcard.hpp"

namespace gdeck::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gdeck/1";

Json to_json(const DeckSignature& sig);
Json to_json(const Eq7Report& r);
Json to_json(const ConstructionPair& p);
Json to_json(const CollisionReport& r);
Json to_json(const Lemma3Report& r);
Json to_json(const BoundReport& r);

}  // namespace gdeck::cli
