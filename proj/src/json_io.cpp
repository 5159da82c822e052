#include "varhom/json_io.hpp"

#include <algorithm>
#include <array>

#include "varhom/errors.hpp"

namespace varhom::json_io {
namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& where, const char* key)
{
    if (!j.is_object())
        throw InputError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(child(where, key), "missing required field");
    return *it;
}

const Json* optional_field(const Json& j, const char* key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void reject_unknown(const Json& j, const std::string& where, std::initializer_list<const char*> known)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; });
        if (!ok)
            throw InputError(child(where, it.key()), "unknown field");
    }
}

bool bool_from_json(const Json& j, const std::string& where)
{
    if (!j.is_boolean())
        throw InputError(where, "expected a boolean");
    return j.get<bool>();
}

long small_int(const Json& j, const std::string& where, long lo, long hi)
{
    if (!j.is_number_integer())
        throw InputError(where, "expected an integer");
    const long v = j.get<long>();
    if (v < lo || v > hi)
        throw InputError(where, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
    return v;
}

const Json& array(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where, "expected an array");
    return j;
}

// Wraps library validation so that the location of the input travels with it.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const StructuralError& e) {
        throw InputError(where, e.what());
    }
}

constexpr long kMaxDimension = 10000;

} // namespace

Json to_json(const Integer& n) { return n.get_str(); }

Json to_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const FgAbelianGroup& g)
{
    Json t = Json::array();
    for (const auto& x : g.torsion())
        t.push_back(x.get_str());
    return Json{{"free_rank", g.free_rank()}, {"torsion", std::move(t)}};
}

Json to_json(const GroupHom& h)
{
    return Json{{"domain", to_json(h.domain())}, {"codomain", to_json(h.codomain())}, {"matrix", to_json(h.matrix())}};
}

Json to_json(const ChainComplex& c)
{
    Json b = Json::array();
    for (int i = 1; i <= c.top_degree(); ++i)
        b.push_back(to_json(c.boundary(i)));
    return Json{{"ranks", c.ranks()}, {"boundaries", std::move(b)}};
}

Json to_json(const BlockMatrix& b)
{
    return Json{{"top_left", to_json(b.top_left)},
                {"top_right", to_json(b.top_right)},
                {"bottom_left", to_json(b.bottom_left)},
                {"bottom_right", to_json(b.bottom_right)}};
}

Json to_json(const Hypotheses& h)
{
    return Json{{"dim", h.dim}, {"c1_vanishes_on_spheres", h.c1_vanishes_on_spheres}, {"page_flexible", h.page_flexible}};
}

Json to_json(const ObstructionVerdict& v)
{
    Json w = Json::array();
    for (const auto& t : v.witness)
        w.push_back(t.get_str());
    return Json{{"status", to_string(v.status)},
                {"witness", std::move(w)},
                {"reason", v.reason},
                {"citations", v.citations},
                {"assumptions", to_json(v.assumptions)}};
}

Json to_json(const AutomorphismOrder& o)
{
    return o.is_finite() ? Json(o.finite->get_str()) : Json("INFINITE");
}

Json to_json(const LoopVerdict& v)
{
    return Json{{"status", to_string(v.status)},
                {"order", v.order ? to_json(*v.order) : Json(nullptr)},
                {"preserves_form", v.preserves_form},
                {"acts_nontrivially", v.acts_nontrivially},
                {"formal_class_preserved", v.formal_class_preserved},
                {"reason", v.reason},
                {"citations", v.citations}};
}

Integer integer_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                      : Integer(std::to_string(j.get<long long>()));
    if (!j.is_string())
        throw InputError(where, "expected an integer or a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError(where, "not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

IntMatrix matrix_from_json(const Json& j, const std::string& where)
{
    const long rows = small_int(require(j, where, "rows"), child(where, "rows"), 0, kMaxDimension);
    const long cols = small_int(require(j, where, "cols"), child(where, "cols"), 0, kMaxDimension);
    const std::string ew = child(where, "entries");
    const Json& entries = array(require(j, where, "entries"), ew);
    reject_unknown(j, where, {"rows", "cols", "entries"});
    if (entries.size() != static_cast<std::size_t>(rows))
        throw InputError(ew, "expected " + std::to_string(rows) + " rows, found " + std::to_string(entries.size()));
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const std::string rw = child(ew, i);
        const Json& row = array(entries[i], rw);
        if (row.size() != static_cast<std::size_t>(cols))
            throw InputError(rw, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        for (long c = 0; c < cols; ++c)
            m(i, c) = integer_from_json(row[c], child(rw, c));
    }
    return m;
}

FgAbelianGroup group_from_json(const Json& j, const std::string& where)
{
    const long r = small_int(require(j, where, "free_rank"), child(where, "free_rank"), 0, kMaxDimension);
    const std::string tw = child(where, "torsion");
    const Json& t = array(require(j, where, "torsion"), tw);
    reject_unknown(j, where, {"free_rank", "torsion"});
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < t.size(); ++i) {
        Integer x = integer_from_json(t[i], child(tw, i));
        if (x < 2)
            throw InputError(child(tw, i), "torsion coefficients must be at least 2");
        if (!orders.empty() && x % orders.back() != 0)
            throw InputError(child(tw, i), "torsion coefficients must form a divisibility chain");
        orders.push_back(std::move(x));
    }
    return FgAbelianGroup::from_cyclic_orders(r, orders);
}

ChainComplex complex_from_json(const Json& j, const std::string& where)
{
    const std::string rw = child(where, "ranks");
    const Json& ranks_j = array(require(j, where, "ranks"), rw);
    const std::string bw = child(where, "boundaries");
    const Json& bounds = array(require(j, where, "boundaries"), bw);
    reject_unknown(j, where, {"ranks", "boundaries"});
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < ranks_j.size(); ++i)
        ranks.push_back(small_int(ranks_j[i], child(rw, i), 0, kMaxDimension));
    const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
    if (bounds.size() != expected)
        throw InputError(bw, "expected " + std::to_string(expected) + " boundary matrices (d_1 .. d_top), found " +
                                 std::to_string(bounds.size()));
    std::vector<IntMatrix> ds;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        const std::string dw = child(bw, k);
        IntMatrix d = matrix_from_json(bounds[k], dw);
        if (d.rows() != ranks[k] || d.cols() != ranks[k + 1])
            throw InputError(dw, "d_" + std::to_string(k + 1) + " must be " + std::to_string(ranks[k]) + " x " +
                                     std::to_string(ranks[k + 1]));
        ds.push_back(std::move(d));
    }
    return at(where, [&] { return ChainComplex(ranks, std::move(ds)); });
}

std::vector<std::vector<std::size_t>> sub_indices_from_json(const Json& j, const std::string& where)
{
    array(j, where);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string dw = child(where, i);
        const Json& deg = array(j[i], dw);
        std::vector<std::size_t> cells;
        for (std::size_t k = 0; k < deg.size(); ++k)
            cells.push_back(small_int(deg[k], child(dw, k), 0, kMaxDimension));
        out.push_back(std::move(cells));
    }
    return out;
}

PageData page_from_json(const Json& j, const std::string& where)
{
    ChainComplex c = complex_from_json(require(j, where, "complex"), child(where, "complex"));
    auto sub = sub_indices_from_json(require(j, where, "sub_indices"), child(where, "sub_indices"));
    const int q = static_cast<int>(small_int(require(j, where, "q"), child(where, "q"), 1, kMaxDimension));
    bool weinstein = false;
    if (const Json* w = optional_field(j, "weinstein_type"))
        weinstein = bool_from_json(*w, child(where, "weinstein_type"));
    reject_unknown(j, where, {"complex", "sub_indices", "q", "weinstein_type"});
    return at(where, [&] { return PageData(std::move(c), std::move(sub), q, weinstein); });
}

Hypotheses hypotheses_from_json(const Json& j, const std::string& where)
{
    const int dim = static_cast<int>(small_int(require(j, where, "dim"), child(where, "dim"), 3, 2 * kMaxDimension + 1));
    const bool c1 = bool_from_json(require(j, where, "c1_vanishes_on_spheres"), child(where, "c1_vanishes_on_spheres"));
    bool flexible = false;
    if (const Json* f = optional_field(j, "page_flexible"))
        flexible = bool_from_json(*f, child(where, "page_flexible"));
    reject_unknown(j, where, {"dim", "c1_vanishes_on_spheres", "page_flexible"});
    return at(child(where, "dim"), [&] { return Hypotheses(dim, c1, flexible); });
}

OpenBookInput open_book_from_json(const Json& j, const std::string& where)
{
    PageData page = page_from_json(require(j, where, "page"), child(where, "page"));
    const std::string mw = child(where, "monodromy");
    const Json& m = require(j, where, "monodromy");
    reject_unknown(j, where, {"page", "monodromy"});
    if (!m.is_object())
        throw InputError(mw, "expected an object");
    const Json* cm = optional_field(m, "chain_map");
    const Json* vm = optional_field(m, "variation_matrix");
    if ((cm == nullptr) == (vm == nullptr))
        throw InputError(mw, "exactly one of chain_map or variation_matrix is required");
    reject_unknown(m, mw, {"chain_map", "variation_matrix"});
    OpenBookInput in{page, std::nullopt, std::nullopt};
    if (cm) {
        const std::string cw = child(mw, "chain_map");
        array(*cm, cw);
        std::vector<IntMatrix> comps;
        for (std::size_t i = 0; i < cm->size(); ++i)
            comps.push_back(matrix_from_json((*cm)[i], child(cw, i)));
        in.monodromy = at(cw, [&] { return Monodromy(page, std::move(comps)); });
    } else {
        in.variation = matrix_from_json(*vm, child(mw, "variation_matrix"));
    }
    return in;
}

std::string to_string(ProblemKind k)
{
    switch (k) {
    case ProblemKind::ChainHomology: return "chain_homology";
    case ProblemKind::Double: return "double";
    case ProblemKind::OpenBook: return "open_book";
    case ProblemKind::Obstruction: return "obstruction";
    case ProblemKind::Loop: return "loop";
    }
    return "?";
}

ProblemFile parse_problem(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
    const Json& version = require(doc, "", "schema_version");
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
        throw InputError("/schema_version", std::string("unsupported schema version (expected \"") + kSchemaVersion + "\")");
    const Json& kind = require(doc, "", "kind");
    if (!kind.is_string())
        throw InputError("/kind", "expected a string");
    static constexpr std::array kinds{ProblemKind::ChainHomology, ProblemKind::Double, ProblemKind::OpenBook,
                                      ProblemKind::Obstruction, ProblemKind::Loop};
    auto it = std::find_if(kinds.begin(), kinds.end(), [&](ProblemKind k) { return to_string(k) == kind.get<std::string>(); });
    if (it == kinds.end())
        throw InputError("/kind", "unknown problem kind \"" + kind.get<std::string>() + "\"");
    const Json& payload = require(doc, "", "payload");
    if (!payload.is_object())
        throw InputError("/payload", "expected an object");
    reject_unknown(doc, "", {"schema_version", "kind", "payload"});
    return ProblemFile{version.get<std::string>(), *it, payload};
}

} // namespace varhom::json_io
