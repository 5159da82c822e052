#pragma once

// JSON encodings shared by the library and the command-line tool. Integers
// travel as decimal strings; plain JSON integers are accepted on input.
//
// Every reader takes the JSON pointer of the value it is given and throws
// InputError naming the offending location.

#include <optional>
#include <string>

#include <json.hpp>

#include "varhom/abgroup.hpp"
#include "varhom/chain.hpp"
#include "varhom/obstruct.hpp"
#include "varhom/openbook.hpp"

namespace varhom::json_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Integer& n);
Json to_json(const IntMatrix& m);
Json to_json(const FgAbelianGroup& g);
Json to_json(const GroupHom& h);
Json to_json(const ChainComplex& c);
Json to_json(const BlockMatrix& b);
Json to_json(const Hypotheses& h);
Json to_json(const ObstructionVerdict& v);
Json to_json(const AutomorphismOrder& o);
Json to_json(const LoopVerdict& v);

Integer integer_from_json(const Json& j, const std::string& where);
IntMatrix matrix_from_json(const Json& j, const std::string& where);
FgAbelianGroup group_from_json(const Json& j, const std::string& where);
ChainComplex complex_from_json(const Json& j, const std::string& where);
std::vector<std::vector<std::size_t>> sub_indices_from_json(const Json& j, const std::string& where);
PageData page_from_json(const Json& j, const std::string& where);
Hypotheses hypotheses_from_json(const Json& j, const std::string& where);

struct OpenBookInput {
    PageData page;
    std::optional<Monodromy> monodromy;  // chain-level input
    std::optional<IntMatrix> variation;  // homology-level input
};
OpenBookInput open_book_from_json(const Json& j, const std::string& where);

enum class ProblemKind { ChainHomology, Double, OpenBook, Obstruction, Loop };
std::string to_string(ProblemKind k);

struct ProblemFile {
    std::string schema_version;
    ProblemKind kind;
    Json payload;
};

/// Parses and checks the envelope. Payload contents are checked by the
/// kind-specific readers.
ProblemFile parse_problem(const std::string& text);

} // namespace varhom::json_io
