#include "fphom/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fphom/applications.hpp"
#include "fphom/diagrams.hpp"
#include "fphom/homalg.hpp"
#include "fphom/w1.hpp"

namespace fphom {

namespace {

using nlohmann::json;

struct Report {
    json body = json::object();
    std::optional<BigradedTable> table;
    std::optional<GradedVectorSpace> series;
    std::vector<std::string> summary;
    int exit_code = 0;

    void set_table(const BigradedTable& t)
    {
        table = t;
        body["table"] = t.to_json();
    }
    void set_series(const GradedVectorSpace& v)
    {
        series = v;
        body["dims"] = v.to_json()["dims"];
    }
};

json read_input(const RunConfig& c, bool required = true)
{
    if (c.input.empty()) {
        if (required)
            throw ValidationError("this command needs an input file");
        return json::object();
    }
    std::ifstream in(c.input);
    if (!in)
        throw ValidationError("cannot open input file '" + c.input + "'");
    try {
        return json::parse(in);
    }
    catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + c.input + "': " + e.what());
    }
}

std::string series_text(const GradedVectorSpace& v)
{
    std::ostringstream os;
    os << std::setw(8) << "degree" << std::setw(8) << "dim" << '\n';
    for (const auto& [d, n] : v.dims())
        os << std::setw(8) << d << std::setw(8) << n << '\n';
    return os.str();
}

std::string render(const std::string& command, const RunConfig& c, const Report& r)
{
    switch (c.format) {
    case OutputFormat::json: {
        json j = r.body;
        j["command"] = command;
        j["p"] = c.p;
        j["cap"] = c.cap;
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        if (r.table)
            return r.table->to_csv();
        if (r.series) {
            std::ostringstream os;
            os << "degree,dim\n";
            for (const auto& [d, n] : r.series->dims())
                os << d << ',' << n << '\n';
            return os.str();
        }
        throw ValidationError("command '" + command + "' has no single table; use --format json");
    }
    case OutputFormat::table:
        break;
    }
    std::ostringstream os;
    for (const auto& line : r.summary)
        os << line << '\n';
    if (r.table)
        os << r.table->to_string() << '\n';
    else if (r.series)
        os << series_text(*r.series);
    return os.str();
}

std::shared_ptr<const Alphabet> read_alphabet(const json& j)
{
    return std::make_shared<const Alphabet>(Alphabet::from_json(j));
}

std::shared_ptr<const FiniteAlgebra> read_algebra(const json& j, const RunConfig& c)
{
    return std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_json(j, c.p, c.cap));
}

/// {"kind":"trivial","dims":{...}}, {"kind":"regular"} or
/// {"kind":"actions","dims":{...},"actions":{"x":{"<degree>":[[...]]}}}; absent means k in degree 0.
AlgebraModule read_module(const std::shared_ptr<const FiniteAlgebra>& a, const json* j)
{
    if (j == nullptr)
        return AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
    const std::string kind = j->value("kind", "trivial");
    if (kind == "regular")
        return AlgebraModule::regular(a);
    const GradedVectorSpace space = GradedVectorSpace::from_json(j->at("dims"));
    if (kind == "trivial")
        return AlgebraModule::trivial(a, space);
    if (kind != "actions")
        throw ValidationError("unknown module kind '" + kind + "'");
    const PrimeField& f = a->field();
    std::vector<GradedMap> actions;
    const json acts = j->value("actions", json::object());
    for (const auto& g : a->generators()) {
        GradedMap m(f, space, space, g.degree);
        if (acts.contains(g.name))
            for (const auto& [key, rows] : acts.at(g.name).items()) {
                const int deg = std::stoi(key);
                Matrix blk(f, static_cast<std::size_t>(space.dim(deg + g.degree)),
                           static_cast<std::size_t>(space.dim(deg)));
                if (rows.size() != blk.rows())
                    throw ValidationError("action of '" + g.name + "' on degree " + key + " has the wrong row count");
                for (std::size_t r = 0; r < blk.rows(); ++r) {
                    if (rows[r].size() != blk.cols())
                        throw ValidationError("action of '" + g.name + "' on degree " + key +
                                              " has the wrong column count");
                    for (std::size_t col = 0; col < blk.cols(); ++col)
                        blk.at(r, col) = f.reduce(rows[r][col].get<long long>());
                }
                m.set_block(deg, std::move(blk));
            }
        actions.push_back(std::move(m));
    }
    for (const auto& [name, v] : acts.items()) {
        bool known = false;
        for (const auto& g : a->generators())
            known = known || g.name == name;
        if (!known)
            throw ValidationError("action given for unknown generator '" + name + "'");
    }
    return AlgebraModule::from_generator_actions(a, space, actions);
}

/// Either {"algebra":..., "module":...} or a bare algebra presentation.
std::pair<std::shared_ptr<const FiniteAlgebra>, const json*> algebra_and_module(const json& in, const RunConfig& c,
                                                                                 const char* key = "module")
{
    if (in.contains("algebra"))
        return {read_algebra(in.at("algebra"), c), in.contains(key) ? &in.at(key) : nullptr};
    return {read_algebra(in, c), nullptr};
}

void add_verdict(Report& r, const BigradedTable& t)
{
    const auto v = parity_verdict(t);
    r.body["parity"] = to_string(v.parity);
    r.summary.push_back("parity: " + to_string(v.parity) + (v.empty ? " (empty table)" : ""));
}

Diagram read_diagram(const json& j, const RunConfig& c)
{
    if (j.contains("facets"))
        return Diagram::stanley_reisner_diagram(j, c.p, c.cap, c.vertex_degree);
    return Diagram::from_json(j, c.p, c.cap);
}

// ---------------------------------------------------------------- commands

Report cmd_free_lie(const RunConfig& c)
{
    auto a = read_alphabet(read_input(c));
    const PrimeField f(c.p);
    const auto basis = lyndon_basis(a, f, kMaxWordLength, c.cap);
    const auto closure = bracket_closure_dims(a, f, c.cap);
    if (!(basis.dims == closure))
        throw CrossCheckError("Lyndon count " + basis.dims.to_string() + " differs from the bracket closure " +
                              closure.to_string());
    Report r;
    r.set_series(basis.dims);
    json el = json::array();
    for (const auto& e : basis.elements)
        el.push_back({{"bracket", e.bracketing}, {"degree", e.symbol.v_degree}, {"weight", e.symbol.weight}});
    r.body["elements"] = el;
    r.body["independent"] = basis.independent();
    r.summary.push_back("free shifted Lie algebra, weight <= " + std::to_string(kMaxWordLength) +
                        ", cross-checked against bracket closure");
    return r;
}

Report cmd_restricted(const RunConfig& c)
{
    auto a = read_alphabet(read_input(c));
    const PrimeField f(c.p);
    const auto basis = restricted_basis(a, f, c.cap);
    const auto closure = restricted_closure_dims(a, f, c.cap);
    if (!(basis.dims == closure))
        throw CrossCheckError("restricted basis count " + basis.dims.to_string() +
                              " differs from the restricted closure " + closure.to_string());
    Report r;
    r.set_series(basis.dims);
    json el = json::array();
    for (const auto& e : basis.elements)
        el.push_back({{"element", e.symbol.to_string(*a)}, {"degree", e.symbol.v_degree}});
    r.body["elements"] = el;
    r.summary.push_back("free shifted restricted Lie algebra, cross-checked against restricted closure");
    return r;
}

Report cmd_free_w1(const RunConfig& c)
{
    auto a = read_alphabet(read_input(c));
    const auto s = free_w1_dims(*a, c.p, c.cap, c.abelian ? W1Mode::abelian : W1Mode::free);
    Report r;
    r.set_series(s.to_space());
    r.body["mode"] = c.abelian ? "abelian" : "free";
    r.summary.push_back(std::string(c.abelian ? "abelian" : "free") + " W1-algebra: " + s.to_space().to_string());
    return r;
}

Report cmd_axioms(const RunConfig& c)
{
    auto a = read_alphabet(read_input(c));
    const auto rep = check_axioms(a, PrimeField(c.p), c.cap, c.trials, c.seed);
    Report r;
    r.body = rep.to_json();
    for (const auto& res : rep.results)
        r.summary.push_back(res.axiom + ": " + std::to_string(res.passed) + " passed, " + std::to_string(res.failed) +
                            " failed, " + std::to_string(res.skipped) + " skipped");
    if (!rep.all_passed())
        throw CrossCheckError("axiom failures: " + rep.to_json().dump());
    return r;
}

Report cmd_ext(const RunConfig& c)
{
    const json in = read_input(c);
    auto [a, mj] = algebra_and_module(in, c);
    const auto m = read_module(a, mj);
    Report r;
    r.set_table(ext_dims(a, m, c.s_max));
    add_verdict(r, *r.table);
    return r;
}

Report cmd_hochschild(const RunConfig& c)
{
    const json in = read_input(c);
    auto [a, mj] = algebra_and_module(in, c);
    const auto m = read_module(a, mj);
    const auto h = hochschild_dims(a, m, c.s_max);
    Report r;
    r.set_table(h.table);
    r.summary.push_back("Hochschild cohomology (Ext convolution and cochains agree)");
    add_verdict(r, h.table);
    return r;
}

Report cmd_aq(const RunConfig& c)
{
    const json in = read_input(c);
    auto [a, mj] = algebra_and_module(in, c);
    const auto m = read_module(a, mj);
    const auto aq = aq_ass_dims(a, m, c.s_max);
    Report r;
    r.set_table(aq.table);
    r.body["parity"] = to_string(aq.verdict.parity);
    r.body["notes"] = aq.notes;
    r.summary.push_back("parity: " + to_string(aq.verdict.parity) + (aq.verdict.empty ? " (empty table)" : ""));
    for (const auto& n : aq.notes)
        r.summary.push_back("note: " + n);
    return r;
}

Report cmd_tor(const RunConfig& c)
{
    const json in = read_input(c);
    auto [a, lj] = algebra_and_module(in, c, "left");
    const json* rj = in.contains("right") ? &in.at("right") : nullptr;
    const auto left = read_module(a, lj);
    const auto right = read_module(a, rj);
    Report r;
    r.set_table(tor_dims(a, left, right, c.s_max));
    r.body["totals"] = r.table->total_degrees().to_json()["dims"];
    r.summary.push_back("total degrees: " + r.table->total_degrees().to_string());
    return r;
}

Report cmd_bar(const RunConfig& c)
{
    const json in = read_input(c);
    auto a = in.contains("algebra") ? read_algebra(in.at("algebra"), c) : read_algebra(in, c);
    Report r;
    r.set_table(bar_homology_dims(*a, c.s_max));
    r.body["totals"] = r.table->total_degrees().to_json()["dims"];
    r.summary.push_back("total degrees: " + r.table->total_degrees().to_string());
    return r;
}

Report cmd_diagram_lim(const RunConfig& c)
{
    const Diagram d = read_diagram(read_input(c), c);
    Report r;
    const auto lim = limit_dims(d, c.cap);
    r.set_table(derived_lim_dims(d, c.cap));
    r.body["limit"] = lim.to_json()["dims"];
    r.summary.push_back("limit: " + lim.to_string());
    r.summary.push_back("derived limits (s = lim^s, t = degree):");
    return r;
}

Report cmd_diagram_aq(const RunConfig& c)
{
    const json in = read_input(c);
    if (!in.contains("generators") || !in.contains("coefficients"))
        throw ValidationError("diagram AQ input needs \"generators\" and \"coefficients\" diagrams");
    const Diagram v = read_diagram(in.at("generators"), c);
    const Diagram m = read_diagram(in.at("coefficients"), c);
    const auto res = diagram_aq_table(v, m, c.s_max, c.q_max);
    Report r;
    r.body = res.to_json();
    r.summary.push_back(std::string("coefficients injective: ") + (res.coefficients_injective ? "yes" : "no"));
    r.summary.push_back(std::string("concentrated in s = 0: ") + (res.concentrated ? "yes" : "no"));
    for (const auto& n : res.notes)
        r.summary.push_back("note: " + n);
    for (const auto& [q, t] : res.by_q) {
        r.summary.push_back("q = " + std::to_string(q) + ":");
        r.summary.push_back(t.to_string());
    }
    return r;
}

Report cmd_injective(const RunConfig& c)
{
    const Diagram d = read_diagram(read_input(c), c);
    const auto rep = injective_by_criterion(d, c.cap);
    Report r;
    r.body = rep.to_json();
    r.summary.push_back(std::string("injective: ") + (rep.injective ? "yes" : "no"));
    for (const auto& fl : rep.failures)
        r.summary.push_back("  object " + fl.object + ", degree " + std::to_string(fl.degree) + ": rank " +
                            std::to_string(fl.value_rank) + " < matching dim " + std::to_string(fl.matching_dim));
    return r;
}

Report cmd_invariants(const RunConfig& c)
{
    const auto g = GroupAction::from_json(read_input(c), c.p);
    const auto inv = invariant_dims(g, c.cap);
    const auto poly = polynomial_semidecision(inv, c.cap);
    Report r;
    r.body = inv.to_json();
    r.set_series(inv.dims);
    r.body["group_order"] = g.order();
    r.body["polynomial"] = poly.to_string();
    r.summary.push_back("group order " + std::to_string(g.order()));
    r.summary.push_back(poly.to_string());
    return r;
}

Report cmd_lie_check(const RunConfig& c)
{
    const auto g = GroupAction::from_json(read_input(c), c.p);
    const auto chk = lie_formality_checklist(g, c.cap);
    Report r;
    r.body = chk.to_json();
    r.set_series(chk.invariants.dims);
    r.summary.push_back("group order " + std::to_string(chk.group_order) + (chk.p_divides_order ? "" : " not") +
                        " divisible by p = " + std::to_string(c.p));
    r.summary.push_back("invariants: " + chk.polynomial.to_string());
    r.summary.push_back(chk.criteria_satisfied ? "criteria satisfied" : "criteria not satisfied");
    return r;
}

Report cmd_stanley_reisner(const RunConfig& c)
{
    const auto res = stanley_reisner_dims(read_input(c), c.p, c.vertex_degree, c.cap);
    Report r;
    r.body = res.to_json();
    r.set_series(res.monomial_count);
    r.summary.push_back("face ring (monomial count equals the face-poset limit)");
    return r;
}

Report cmd_emss(const RunConfig& c)
{
    const EMSSInput in = c.projective_unitary ? EMSSInput::projective_unitary(*c.projective_unitary, c.p)
                                              : EMSSInput::from_json(read_input(c), c.p);
    const auto hyp = emss_hypothesis_check(in, c.cap);
    const auto tor = emss_tor_algebra(in, c.cap);
    Report r;
    r.body = tor.to_json();
    r.body["hypotheses"] = hyp.to_json();
    r.body["input"] = in.to_json();
    r.body["interpretation"] = "algebraic E2 term; collapse prediction assuming convergence";
    r.set_table(tor.table);
    auto side = [](const char* name, const EMSSHypothesisReport::Side& s) {
        std::string line = std::string(name) + ": " + (s.surjective ? "surjective" : "not surjective");
        if (!s.surjective)
            line += " (first failure in degree " + std::to_string(s.first_failure) + ")";
        line += s.linear ? ", linear on generators" : ", generator '" + s.nonlinear_generator + "' maps nonlinearly";
        return line;
    };
    r.summary.push_back(side("B -> X", hyp.x));
    r.summary.push_back(side("B -> Y", hyp.y));
    r.summary.push_back("Tor totals (E2 / collapse prediction, assuming convergence): " + tor.totals.to_string());
    for (std::size_t k = 0; k < tor.classes.size(); ++k) {
        std::string line = "  class " + std::to_string(k) + " (s=" + std::to_string(tor.classes[k].s) +
                           ", t=" + std::to_string(tor.classes[k].t) + "): " + tor.classes[k].label;
        if (tor.square_known[k])
            line += tor.square_zero[k] ? "  [square 0]" : "  [square nonzero]";
        r.summary.push_back(line);
    }
    return r;
}

Report cmd_loops(const RunConfig& c)
{
    const auto v = GradedVectorSpace::from_json(read_input(c));
    const auto res = loop_cohomology_dims(v, c.p, c.cap);
    Report r;
    r.body = res.to_json();
    r.set_series(res.koszul);
    r.summary.push_back("loop-space cohomology (Koszul Tor = bar homology = exterior series)");
    return r;
}

Report cmd_obstruction(const RunConfig& c)
{
    const json in = read_input(c);
    Report r;
    if (in.is_object() && (in.contains("xi") || in.contains("generators"))) {
        const auto s = W1StructureTable::from_json(in);
        const auto rep = triviality_check(s);
        r.body = rep.to_json();
        r.summary.push_back(rep.trivial ? "operations trivial: pass" : "operations trivial: fail");
        for (const auto& o : rep.offenders)
            r.summary.push_back("  " + o.operation + "(" + o.generator + ") = " + o.value);
        r.exit_code = rep.trivial ? 0 : 1;
        return r;
    }
    const BigradedTable t = BigradedTable::from_json(in.is_object() && in.contains("table") ? in.at("table") : in);
    const auto rep = obstruction_line_vanishes(t);
    r.body = rep.to_json();
    r.summary.push_back(rep.passes ? "obstruction line vanishes: pass" : "obstruction line vanishes: fail");
    for (const auto& line : rep.implication_chain)
        r.summary.push_back("  " + line);
    r.exit_code = rep.passes ? 0 : 1;
    return r;
}

using Handler = Report (*)(const RunConfig&);

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h{
        {"free-lie", cmd_free_lie},         {"restricted", cmd_restricted},
        {"free-w1", cmd_free_w1},           {"axioms", cmd_axioms},
        {"ext", cmd_ext},                   {"hochschild", cmd_hochschild},
        {"aq", cmd_aq},                     {"tor", cmd_tor},
        {"bar", cmd_bar},                   {"diagram-lim", cmd_diagram_lim},
        {"diagram-aq", cmd_diagram_aq},     {"injective", cmd_injective},
        {"invariants", cmd_invariants},     {"lie-check", cmd_lie_check},
        {"stanley-reisner", cmd_stanley_reisner}, {"emss", cmd_emss},
        {"loops", cmd_loops},               {"obstruction", cmd_obstruction},
    };
    return h;
}

}  // namespace

OutputFormat output_format_from_string(const std::string& s)
{
    if (s == "table")
        return OutputFormat::table;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    throw ValidationError("unknown format '" + s + "' (table, json, csv)");
}

void RunConfig::validate() const
{
    PrimeField check(p);
    if (cap < 0 || cap > 64)
        throw ValidationError("cap must lie in [0, 64]");
    if (s_max < 0 || s_max > 32)
        throw ValidationError("smax must lie in [0, 32]");
    if (q_max < 0 || q_max > 16)
        throw ValidationError("qmax must lie in [0, 16]");
    if (trials < 0)
        throw ValidationError("trials must be nonnegative");
}

const std::vector<std::string>& cli_commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers())
            out.push_back(name);
        return out;
    }();
    return names;
}

RunResult run(const std::string& command, const RunConfig& config)
{
    RunResult res;
    try {
        auto it = handlers().find(command);
        if (it == handlers().end())
            throw ValidationError("unknown command '" + command + "'");
        RunConfig c = config;
        if (!c.p_given && !c.input.empty()) {
            const json in = read_input(c);
            if (in.is_object() && in.contains("p"))
                c.p = in.at("p").get<int>();
        }
        c.validate();
        const Report rep = it->second(c);
        res.output = render(command, c, rep);
        res.exit_code = rep.exit_code;
        if (!config.output.empty()) {
            std::ofstream out(config.output);
            if (!out)
                throw ValidationError("cannot write '" + config.output + "'");
            out << res.output;
        }
    }
    catch (const ValidationError& e) {
        res.exit_code = 2;
        res.output.clear();
        res.error = std::string("validation error: ") + e.what();
    }
    catch (const json::exception& e) {
        res.exit_code = 2;
        res.output.clear();
        res.error = std::string("malformed input: ") + e.what();
    }
    catch (const CrossCheckError& e) {
        res.exit_code = 3;
        res.output.clear();
        res.error = std::string("cross-check mismatch: ") + e.what();
    }
    catch (const std::logic_error& e) {
        res.exit_code = 2;
        res.output.clear();
        res.error = std::string("invalid input: ") + e.what();
    }
    return res;
}

}  // namespace fphom
