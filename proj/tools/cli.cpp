#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "varhom/errors.hpp"
#include "varhom/fixtures.hpp"
#include "varhom/json_io.hpp"
#include "varhom/obstruct.hpp"
#include "varhom/openbook.hpp"

namespace varhom::cli {
namespace {

using json_io::Json;
using json_io::ProblemKind;
using json_io::to_json;

// VARHOM_LOG=debug sends progress messages to stderr; anything else is quiet.
bool debug_logging()
{
    static const bool on = [] {
        const char* v = std::getenv("VARHOM_LOG");
        return v != nullptr && std::string(v) == "debug";
    }();
    return on;
}

void log_debug(const std::string& msg)
{
    if (debug_logging())
        std::clog << "[varhom] " << msg << '\n';
}

json_io::ProblemFile expect_kind(const std::string& text, std::initializer_list<ProblemKind> allowed)
{
    json_io::ProblemFile p = json_io::parse_problem(text);
    for (ProblemKind k : allowed)
        if (p.kind == k)
            return p;
    std::string names;
    for (ProblemKind k : allowed)
        names += (names.empty() ? "" : " or ") + json_io::to_string(k);
    throw InputError("/kind", "this command expects kind " + names + ", got " + json_io::to_string(p.kind));
}

Json envelope(ProblemKind k)
{
    return Json{{"schema_version", json_io::kSchemaVersion}, {"kind", json_io::to_string(k)}};
}

Json group_list(const std::vector<FgAbelianGroup>& gs)
{
    Json out = Json::array();
    for (const auto& g : gs)
        out.push_back(to_json(g));
    return out;
}

void print_groups(std::ostream& os, const std::string& symbol, const std::vector<FgAbelianGroup>& gs,
                  const std::string& space = "")
{
    for (std::size_t i = 0; i < gs.size(); ++i)
        os << symbol << i << space << " = " << to_string(gs[i]) << '\n';
}

std::string block_text(const BlockMatrix& b)
{
    std::ostringstream os;
    os << "  top left     " << to_string(b.top_left.matrix()) << '\n'
       << "  top right    " << to_string(b.top_right.matrix()) << '\n'
       << "  bottom left  " << to_string(b.bottom_left.matrix()) << '\n'
       << "  bottom right " << to_string(b.bottom_right.matrix()) << '\n';
    return os.str();
}

std::vector<FgAbelianGroup> all_homology(const ChainComplex& c)
{
    std::vector<FgAbelianGroup> out;
    for (int i = 0; i <= c.top_degree(); ++i)
        out.push_back(homology(c, i));
    return out;
}

Report double_report(const json_io::ProblemFile& p)
{
    const std::string where = "/payload";
    const Json& pl = p.payload;
    if (!pl.contains("page"))
        throw InputError(where + "/page", "missing required field");
    for (auto it = pl.begin(); it != pl.end(); ++it)
        if (it.key() != "page" && it.key() != "monodromy")
            throw InputError(where + "/" + it.key(), "unknown field");
    PageData page = json_io::page_from_json(pl["page"], where + "/page");
    Monodromy f = Monodromy::identity(page);
    if (pl.contains("monodromy")) {
        Json ob{{"page", pl["page"]}, {"monodromy", pl["monodromy"]}};
        auto in = json_io::open_book_from_json(ob, where);
        if (!in.monodromy)
            throw InputError(where + "/monodromy", "the double needs a chain-level monodromy");
        f = *in.monodromy;
    }
    log_debug("building double");
    DoubleData dw = build_double(page);
    const auto groups = all_homology(dw.complex);

    Report r;
    r.machine = envelope(ProblemKind::Double);
    r.machine["double_homology"] = group_list(groups);
    Json blocks = Json::array();
    std::ostringstream os;
    print_groups(os, "H_", groups, "(DW)");
    for (int i = 0; i <= page.complex().top_degree(); ++i) {
        BlockMatrix b = double_action_blocks(page, f, i);
        BlockMatrix mv = mayer_vietoris_blocks(page, f, i);
        const bool agrees = double_action(page, f, i) == assembled_double_action(page, f, i);
        if (!agrees)
            throw InvariantError("block assembly disagrees with e(f)_* in degree " + std::to_string(i));
        blocks.push_back(Json{{"degree", i}, {"action", to_json(b)}, {"mayer_vietoris", to_json(mv)},
                              {"assembly_agrees", agrees}});
        os << "e(f)_* on H_" << i << "(DW) = H_" << i << "(W_1) + H_" << i << "(W, dW):\n" << block_text(b);
    }
    r.machine["blocks"] = std::move(blocks);
    r.human = os.str();
    return r;
}

bool expect_bool(const Json& j, const std::string& where)
{
    if (!j.is_boolean())
        throw InputError(where, "expected a boolean");
    return j.get<bool>();
}

std::string read_input(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("", "cannot open input file '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Report cmd_homology(const std::string& text)
{
    auto p = expect_kind(text, {ProblemKind::ChainHomology, ProblemKind::Double});
    if (p.kind == ProblemKind::Double)
        return double_report(p);

    const Json& pl = p.payload;
    const std::string where = "/payload";
    if (!pl.contains("complex"))
        throw InputError(where + "/complex", "missing required field");
    for (auto it = pl.begin(); it != pl.end(); ++it)
        if (it.key() != "complex" && it.key() != "sub_indices")
            throw InputError(where + "/" + it.key(), "unknown field");
    ChainComplex c = json_io::complex_from_json(pl["complex"], where + "/complex");
    std::optional<SubcomplexPair> pair;
    if (pl.contains("sub_indices")) {
        auto sub = json_io::sub_indices_from_json(pl["sub_indices"], where + "/sub_indices");
        try {
            pair.emplace(c, std::move(sub));
        } catch (const StructuralError& e) {
            throw InputError(where + "/sub_indices", e.what());
        }
    }

    Report r;
    r.machine = envelope(ProblemKind::ChainHomology);
    std::ostringstream os;
    const auto h = all_homology(c);
    std::vector<FgAbelianGroup> co;
    for (int i = 0; i <= c.top_degree(); ++i)
        co.push_back(cohomology(c, i));
    r.machine["homology"] = group_list(h);
    r.machine["cohomology"] = group_list(co);
    print_groups(os, "H_", h);
    print_groups(os, "H^", co);
    if (pair) {
        std::vector<FgAbelianGroup> rel;
        for (int i = 0; i <= c.top_degree(); ++i)
            rel.push_back(relative_homology(*pair, i));
        r.machine["relative_homology"] = group_list(rel);
        print_groups(os, "H_", rel, "(X, A)");
    }
    r.human = os.str();
    return r;
}

Report cmd_openbook(const std::string& text, const CommandOptions& opts)
{
    auto p = expect_kind(text, {ProblemKind::OpenBook});
    auto in = json_io::open_book_from_json(p.payload, "/payload");
    const PageData& page = in.page;
    const int q = page.q();

    OpenBookHomology ob = [&] {
        if (in.monodromy) {
            log_debug("open book from chain-level monodromy");
            return open_book_homology(page, *in.monodromy, OpenBookOptions{opts.oracle_check});
        }
        log_debug("open book from variation matrix");
        try {
            return open_book_homology_from_variation(page, *in.variation);
        } catch (const StructuralError& e) {
            throw InputError("/payload/monodromy/variation_matrix", e.what());
        }
    }();

    Report r;
    r.machine = envelope(ProblemKind::OpenBook);
    r.machine["q"] = q;
    r.machine["dimension"] = page.manifold_dimension();
    r.machine["groups"] = group_list(ob.groups);
    Json methods = Json::array();
    for (Method m : ob.methods)
        methods.push_back(to_string(m));
    r.machine["methods"] = std::move(methods);
    r.machine["variation"] = to_json(ob.variation);

    std::ostringstream os;
    for (std::size_t i = 0; i < ob.groups.size(); ++i)
        os << "H_" << i << "(M) = " << to_string(ob.groups[i]) << "    [" << to_string(ob.methods[i]) << "]\n";
    os << "variation H_" << q << "(W, dW) -> H_" << q << "(W): " << to_string(ob.variation) << '\n';

    Json blocks = nullptr;
    Json skeleton = nullptr;
    if (in.monodromy) {
        BlockMatrix b = double_action_blocks(page, *in.monodromy, q);
        blocks = to_json(b);
        os << "e(f)_* on H_" << q << "(DW) = H_" << q << "(W_1) + H_" << q << "(W, dW):\n" << block_text(b);
        SkeletonCriterion sc = skeleton_criterion(page, *in.monodromy);
        skeleton = Json{{"homology_identity", sc.homology_identity},
                        {"cohomology_identity", sc.cohomology_identity},
                        {"holds", sc.holds()}};
        os << "identity on H_" << q << " of the double's " << q << "-skeleton: "
           << (sc.homology_identity ? "yes" : "no") << " (cohomology: " << (sc.cohomology_identity ? "yes" : "no")
           << ")\n";
    }
    r.machine["blocks"] = std::move(blocks);
    r.machine["skeleton_criterion"] = std::move(skeleton);

    const bool checked = opts.oracle_check && in.monodromy && page.weinstein_type();
    r.machine["oracle_check"] = Json{{"ran", checked}, {"agree", checked ? Json(true) : Json(nullptr)}};
    if (checked)
        os << "oracle check: formula and glued complex agree\n";
    r.human = os.str();
    return r;
}

Report cmd_obstruct(const std::string& text, const CommandOptions& opts)
{
    auto p = expect_kind(text, {ProblemKind::Obstruction});
    const Json& pl = p.payload;
    const std::string where = "/payload";
    if (!pl.contains("hypotheses"))
        throw InputError(where + "/hypotheses", "missing required field");
    for (auto it = pl.begin(); it != pl.end(); ++it)
        if (it.key() != "hypotheses" && it.key() != "hq" && it.key() != "open_book")
            throw InputError(where + "/" + it.key(), "unknown field");
    if (pl.contains("hq") == pl.contains("open_book"))
        throw InputError(where, "exactly one of hq or open_book is required");
    Hypotheses hyp = json_io::hypotheses_from_json(pl["hypotheses"], where + "/hypotheses");

    std::optional<FgAbelianGroup> supplied;
    std::optional<json_io::OpenBookInput> ob_in;
    if (pl.contains("hq")) {
        supplied = json_io::group_from_json(pl["hq"], where + "/hq");
    } else {
        ob_in = json_io::open_book_from_json(pl["open_book"], where + "/open_book");
        if (ob_in->page.manifold_dimension() != hyp.dim)
            throw InputError(where + "/hypotheses/dim",
                             "page has q = " + std::to_string(ob_in->page.q()) + ", so dim must be " +
                                 std::to_string(ob_in->page.manifold_dimension()));
    }

    const bool gated = hyp.dim < kObstructionMinDimension && !opts.force;
    std::optional<FgAbelianGroup> hq = supplied;
    Json filter = nullptr;
    if (ob_in && !gated) {
        log_debug("computing H_q(M) for the obstruction");
        OpenBookHomology ob = ob_in->monodromy ? open_book_homology(ob_in->page, *ob_in->monodromy)
                                               : open_book_homology_from_variation(ob_in->page, *ob_in->variation);
        hq = ob.groups[hyp.q()];
        if (ob_in->monodromy) {
            MonodromyFilterResult fr =
                flexible_monodromy_filter(double_skeleton_cohomology_action(ob_in->page, *ob_in->monodromy));
            filter = Json{{"admissible", fr.admissible}, {"failing_degrees", fr.failing_degrees}};
        }
    }

    ObstructionVerdict v = flexible_obstruction(hq.value_or(FgAbelianGroup{}), hyp);
    Report r;
    r.machine = envelope(ProblemKind::Obstruction);
    r.machine["verdict"] = to_json(v);
    r.machine["hq"] = hq ? to_json(*hq) : Json(nullptr);
    r.machine["forced"] = opts.force;
    r.machine["monodromy_filter"] = filter;

    std::ostringstream os;
    os << "verdict: " << to_string(v.status);
    if (!v.witness.empty()) {
        os << " [";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            os << (i ? ", " : "") << v.witness[i].get_str();
        os << "]";
    }
    os << '\n';
    if (hq)
        os << "H_" << hyp.q() << "(M) = " << to_string(*hq) << '\n';
    os << "reason: " << v.reason << '\n';
    os << "assumptions: dim = " << hyp.dim << ", c1 vanishes on 2-spheres = " << std::boolalpha
       << hyp.c1_vanishes_on_spheres << ", page flexible = " << hyp.page_flexible << '\n';
    if (!filter.is_null())
        os << "monodromy acts trivially on the double's " << hyp.q() << "-skeleton cohomology: "
           << filter["admissible"].get<bool>() << '\n';
    for (const auto& c : v.citations)
        os << "cites: " << c << '\n';
    r.human = os.str();
    return r;
}

Report cmd_loop(const std::string& text)
{
    auto p = expect_kind(text, {ProblemKind::Loop});
    const Json& pl = p.payload;
    const std::string where = "/payload";
    for (const char* key : {"g", "q_parity", "matrix", "formal_class_preserved"})
        if (!pl.contains(key))
            throw InputError(where + "/" + key, "missing required field");
    for (auto it = pl.begin(); it != pl.end(); ++it)
        if (it.key() != "g" && it.key() != "q_parity" && it.key() != "matrix" && it.key() != "formal_class_preserved")
            throw InputError(where + "/" + it.key(), "unknown field");
    const Json& gj = pl["g"];
    if (!gj.is_number_integer() || gj.get<long>() < 1 || gj.get<long>() > 1000)
        throw InputError(where + "/g", "expected an integer in [1, 1000]");
    const std::size_t g = gj.get<std::size_t>();
    const Json& pj = pl["q_parity"];
    if (!pj.is_string() || (pj.get<std::string>() != "odd" && pj.get<std::string>() != "even"))
        throw InputError(where + "/q_parity", "expected \"odd\" or \"even\"");
    const Parity parity = pj.get<std::string>() == "odd" ? Parity::Odd : Parity::Even;
    IntMatrix a = json_io::matrix_from_json(pl["matrix"], where + "/matrix");
    if (a.rows() != 2 * g || a.cols() != 2 * g)
        throw InputError(where + "/matrix", "expected a " + std::to_string(2 * g) + " x " + std::to_string(2 * g) + " matrix");
    const bool formal = expect_bool(pl["formal_class_preserved"], where + "/formal_class_preserved");

    BilinearForm j = hyperbolic_form(g, parity);
    LoopVerdict v = loop_verdict(a, j, formal);
    Report r;
    r.machine = envelope(ProblemKind::Loop);
    r.machine["verdict"] = to_json(v);
    r.machine["form"] = to_json(j.matrix());

    std::ostringstream os;
    os << "verdict: " << to_string(v.status);
    if (v.order)
        os << ", order " << to_string(*v.order);
    os << '\n'
       << std::boolalpha << "preserves form: " << v.preserves_form << '\n'
       << "acts nontrivially: " << v.acts_nontrivially << '\n'
       << "formal class preserved (assumed): " << v.formal_class_preserved << '\n'
       << "reason: " << v.reason << '\n';
    for (const auto& c : v.citations)
        os << "cites: " << c << '\n';
    r.human = os.str();
    return r;
}

Report cmd_selftest(const SelftestOptions& opts, bool& all_passed)
{
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;
    auto run_check = [&](const std::string& name, auto&& body) {
        try {
            std::string detail;
            const bool ok = body(detail);
            checks.push_back({name, ok, detail});
        } catch (const std::exception& e) {
            checks.push_back({name, false, e.what()});
        }
    };

    run_check("projective spaces", [](std::string&) {
        for (int n = 0; n <= 6; ++n) {
            ChainComplex c = fixtures::real_projective_space(n);
            for (int i = 0; i <= n; ++i) {
                FgAbelianGroup want;
                if (i == 0 || (i == n && n % 2 == 1))
                    want = FgAbelianGroup::free(1);
                else if (i % 2 == 1 && i < n)
                    want = FgAbelianGroup::from_cyclic_orders(0, {2});
                if (!(homology(c, i) == want))
                    return false;
            }
        }
        return true;
    });

    run_check("annulus twists give Z/n by both routes", [](std::string& detail) {
        PageData a = fixtures::annulus_page();
        for (long n = 1; n <= 10; ++n) {
            Monodromy f = fixtures::twist_monodromy(a, n);
            OpenBookHomology ob = open_book_homology(a, f, OpenBookOptions{true});
            FgAbelianGroup want = FgAbelianGroup::from_cyclic_orders(0, {Integer(n)});
            if (!(ob.groups[1] == want) || !(homology(twisted_double_complex(a, f), 1) == want)) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run_check("random block assembly and coker formula", [&](std::string& detail) {
        std::mt19937_64 rng(opts.seed);
        for (int t = 0; t < opts.random_cases; ++t) {
            PageData page = fixtures::random_page(rng);
            Monodromy f = fixtures::random_monodromy(page, rng);
            for (int i = 0; i <= page.complex().top_degree(); ++i)
                if (!(double_action(page, f, i) == assembled_double_action(page, f, i))) {
                    detail = "case " + std::to_string(t) + ", degree " + std::to_string(i);
                    return false;
                }
            OpenBookHomology ob = open_book_homology(page, f, OpenBookOptions{true});
            if (!(ob.groups[page.q()] == homology(twisted_double_complex(page, f), page.q()))) {
                detail = "case " + std::to_string(t);
                return false;
            }
        }
        detail = std::to_string(opts.random_cases) + " cases";
        return true;
    });

    run_check("RP7 obstruction", [](std::string&) {
        auto v = flexible_obstruction(FgAbelianGroup::from_cyclic_orders(0, {2}), Hypotheses(7, true, true));
        return v.status == ObstructionStatus::Obstructed && v.witness == std::vector<Integer>{2};
    });

    run_check("loop detector", [](std::string&) {
        BilinearForm j = hyperbolic_form(1, Parity::Odd);
        auto shear = loop_verdict(IntMatrix::from_rows({{1, 1}, {0, 1}}), j, true);
        auto order = [](const IntMatrix& m) { return to_string(automorphism_order(m)); };
        return shear.status == LoopStatus::NontrivialLoop && shear.order && !shear.order->is_finite() &&
               order(IntMatrix::identity(2)) == "1" && order(-IntMatrix::identity(2)) == "2" &&
               order(IntMatrix::from_rows({{0, 1}, {-1, 0}})) == "4";
    });

    all_passed = true;
    Report r;
    r.machine = Json{{"schema_version", json_io::kSchemaVersion}, {"kind", "selftest"}};
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& c : checks) {
        all_passed = all_passed && c.passed;
        arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        os << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
    r.machine["checks"] = std::move(arr);
    r.machine["passed"] = all_passed;
    r.human = os.str();
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact homology of open books and flexible-page obstructions", "varhom"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string input;
    CommandOptions copts;
    SelftestOptions sopts;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Problem file (JSON), or - for stdin")->required();
        sub->add_flag("--json", as_json, "Machine-readable output");
    };
    CLI::App* homology_cmd = app.add_subcommand("homology", "Homology of a chain complex or of a page's double");
    add_input(homology_cmd);
    CLI::App* openbook_cmd = app.add_subcommand("openbook", "Homology of the manifold carried by an open book");
    add_input(openbook_cmd);
    openbook_cmd->add_flag("--oracle-check", copts.oracle_check, "Cross-check the formula degrees on the glued complex");
    CLI::App* obstruct_cmd = app.add_subcommand("obstruct", "Torsion obstruction to flexible pages");
    add_input(obstruct_cmd);
    obstruct_cmd->add_flag("--force", copts.force, "Compute H_q even below the dimension bound");
    CLI::App* loop_cmd = app.add_subcommand("loop", "Loop detector for automorphisms of the middle cohomology");
    add_input(loop_cmd);
    CLI::App* self_cmd = app.add_subcommand("selftest", "Run the built-in checks");
    self_cmd->add_flag("--json", as_json, "Machine-readable output");
    self_cmd->add_option("--seed", sopts.seed, "Seed for the random cases");
    self_cmd->add_option("--cases", sopts.random_cases, "Number of random cases")->check(CLI::Range(0, 100000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        Report report;
        int code = kSuccess;
        if (self_cmd->parsed()) {
            bool ok = false;
            report = cmd_selftest(sopts, ok);
            code = ok ? kSuccess : kInternalError;
        } else {
            const std::string text = read_input(input);
            if (homology_cmd->parsed())
                report = cmd_homology(text);
            else if (openbook_cmd->parsed())
                report = cmd_openbook(text, copts);
            else if (obstruct_cmd->parsed())
                report = cmd_obstruct(text, copts);
            else
                report = cmd_loop(text);
        }
        if (as_json)
            out << report.machine.dump(2) << '\n';
        else
            out << report.human;
        return code;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const StructuralError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (...) {
        err << "internal error\n";
        return kInternalError;
    }
}

} // namespace varhom::cli
