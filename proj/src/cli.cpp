#include "mskl/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mskl/bruhat.hpp"
#include "mskl/error.hpp"
#include "mskl/kl.hpp"
#include "mskl/matrix_schubert.hpp"
#include "mskl/oracle.hpp"
#include "mskl/render.hpp"
#include "mskl/statmodel.hpp"

namespace mskl {
namespace {

using Json = nlohmann::ordered_json;

enum class Fmt { json, ascii, dot };

struct Ctx {
    bool want_json = false;
    bool want_ascii = false;
    bool want_dot = false;
    std::string out_path;
    std::ostream* out = nullptr;
    int exit_code = 0;
};

// Resolves the requested output format, rejecting formats a command does not
// produce.  JSON is always available and is the default.
Fmt pick_format(const Ctx& ctx, bool allow_ascii, bool allow_dot) {
    if (ctx.want_ascii) {
        if (!allow_ascii) throw CLI::ValidationError("--ascii is not available for this command");
        return Fmt::ascii;
    }
    if (ctx.want_dot) {
        if (!allow_dot) throw CLI::ValidationError("--dot is not available for this command");
        return Fmt::dot;
    }
    return Fmt::json;
}

void deliver(const Ctx& ctx, const std::string& text) {
    if (!ctx.out_path.empty()) {
        std::ofstream file(ctx.out_path);
        if (!file) throw domain_error("cannot open output file: " + ctx.out_path);
        file << text;
        return;
    }
    *ctx.out << text;
}

void emit_text(const Ctx& ctx, std::string text) {
    if (text.empty() || text.back() != '\n') text.push_back('\n');
    deliver(ctx, text);
}

Json envelope(const std::string& command, Json inputs, Fmt fmt, Json payload) {
    Json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["format"] = fmt == Fmt::json ? "json" : fmt == Fmt::ascii ? "ascii" : "dot";
    env["payload"] = std::move(payload);
    return env;
}

void emit_json(const Ctx& ctx, Json env) { deliver(ctx, env.dump(2) + "\n"); }

// Permutation arguments are parsed inside the command callbacks so that a
// malformed word surfaces as a usage error (exit 2), not a domain error.
Permutation parse_perm(const std::string& text) {
    try {
        return Permutation::parse(text);
    } catch (const domain_error& e) {
        throw CLI::ValidationError(e.what());
    }
}

// "1,2" -> {1, 2}; "-" or "" -> the empty set.
std::vector<int> parse_set(const std::string& text, const std::string& name) {
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(name + ": bad entry '" + tok + "'");
        }
    }
    return out;
}

// --- JSON views of the domain types -----------------------------------------

Json cell_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json cells_json(const std::vector<Cell>& cells) {
    Json arr = Json::array();
    for (const Cell& c : cells) arr.push_back(cell_json(c));
    return arr;
}

Json cells_json(const Diagram& d) { return cells_json(d.cells()); }

Json graph_json(const DiGraph& g) {
    Json j;
    Json verts = Json::array();
    for (const VertexId& v : g.vertices()) verts.push_back(v.str());
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a.str(), b.str()}));
    j["vertices"] = std::move(verts);
    j["edges"] = std::move(edges);
    j["components"] = g.component_count();
    j["cyclomatic"] = g.cyclomatic();
    return j;
}

Json polys_json(const std::vector<Polynomial>& polys) {
    Json arr = Json::array();
    for (const Polynomial& p : polys) arr.push_back(p.str());
    return arr;
}

const char* kind_name(ColumnKind k) {
    switch (k) {
        case ColumnKind::hook: return "hook";
        case ColumnKind::alpha: return "alpha";
        case ColumnKind::beta: return "beta";
        case ColumnKind::none: break;
    }
    return "none";
}

const char* delta_name(ConeDelta d) {
    switch (d) {
        case ConeDelta::no_change: return "no_change";
        case ConeDelta::gains_edge: return "gains_edge";
        case ConeDelta::loses_edge: return "loses_edge";
        case ConeDelta::new_hook: return "new_hook";
        case ConeDelta::hook_shorter: return "hook_shorter";
        case ConeDelta::hook_taller: return "hook_taller";
        case ConeDelta::hook_narrower: return "hook_narrower";
        case ConeDelta::hook_wider: return "hook_wider";
    }
    return "?";
}

Json variant_json(const MSVariantReport& v, const char* model) {
    Json j;
    j["model"] = model;
    j["sw_above_diagonal"] = v.sw_above_diagonal;
    j["dim_x"] = v.dim_x;
    j["free_dim"] = v.free_dim;
    j["dim_y"] = v.dim_y;
    j["dim_sigma"] = v.dim_sigma;
    j["complexity"] = v.complexity;
    j["graph"] = graph_json(v.g);
    return j;
}

Json ms_payload(const MSReport& rep) {
    Json p;
    p["n"] = rep.w.n();
    p["w"] = rep.w.str();
    p["length"] = rep.w.inversions();
    p["diagram"] = cells_json(rep.reg.dcirc);
    p["essential"] = cells_json(rep.reg.essential);
    p["sw_size"] = rep.reg.sw.size();
    p["dom_size"] = rep.reg.dom.size();
    p["l_size"] = rep.reg.l.size();
    p["lprime_size"] = rep.reg.lprime.size();
    p["dim_x"] = rep.dim_x;
    p["free_dim"] = rep.free_dim;
    p["dim_y"] = rep.dim_y;
    p["dim_sigma"] = rep.dim_sigma;
    p["complexity"] = rep.complexity;
    p["toric"] = rep.toric;
    p["avoids_4312_3412"] = rep.toric_pattern;
    p["graph"] = graph_json(rep.g);
    if (rep.staircase) {
        Json hooks = Json::array();
        for (const Hook& h : rep.staircase->hooks) {
            Json hj;
            hj["corner"] = cell_json(h.corner);
            hj["height"] = h.height;
            hj["width"] = h.width;
            hooks.push_back(std::move(hj));
        }
        p["hooks"] = std::move(hooks);
    }
    return p;
}

std::string ms_ascii(const MSReport& rep, const MSVariantReport* variant) {
    std::ostringstream out;
    out << ascii_regions(rep.reg);
    out << "w = " << rep.w.str() << "  length = " << rep.w.inversions() << '\n';
    out << "dim X = " << rep.dim_x << "  free = " << rep.free_dim << "  dim Y = " << rep.dim_y
        << "  dim sigma = " << rep.dim_sigma << "  complexity = " << rep.complexity
        << "  toric = " << (rep.toric ? "yes" : "no") << '\n';
    if (variant) {
        out << "variant: dim X = " << variant->dim_x << "  dim Y = " << variant->dim_y
            << "  dim sigma = " << variant->dim_sigma << "  complexity = " << variant->complexity
            << '\n';
    }
    return out.str();
}

Json verdict_json(const ReflectionVerdict& v) {
    Json j;
    j["m"] = v.m;
    Json col;
    col["kind"] = kind_name(v.label.kind);
    if (v.label.kind != ColumnKind::none) {
        col["block"] = v.label.block;
        col["step"] = v.label.step;
        col["pos"] = v.label.pos;
        col["last_col_of_step"] = v.label.last_col_of_step;
        col["last_step"] = v.label.last_step;
    }
    j["column"] = std::move(col);
    j["labeled"] = v.labeled;
    if (v.theorem_case != 0) j["nontoric_case"] = v.theorem_case;
    if (v.corollary_case != 0) j["toric_case"] = v.corollary_case;
    j["predicted_toric"] = v.predicted_toric;
    if (v.predicted_delta) j["predicted_delta"] = delta_name(*v.predicted_delta);
    if (v.edge) j["edge"] = Json::array({v.edge->first.str(), v.edge->second.str()});
    if (v.affected_hook >= 0) j["affected_hook"] = v.affected_hook;
    return j;
}

Json kl_payload(const KLReport& rep, bool with_generators) {
    Json p;
    p["n"] = rep.v.n();
    p["v"] = rep.v.str();
    p["w"] = rep.w.str();
    p["dim"] = rep.dim;
    p["forced_zeros"] = cells_json(rep.zeros);
    p["graph"] = graph_json(rep.g);
    p["dim_sigma"] = rep.dim_sigma;
    p["complexity"] = rep.complexity;
    p["toric"] = rep.complexity == 0;
    if (with_generators) p["generators"] = polys_json(rep.generators);
    return p;
}

Json sweep_json(const SweepReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["n"] = rep.n;
    j["pass"] = rep.pass;
    j["checked"] = rep.checked;
    j["seconds"] = rep.seconds;
    j["engine"] = rep.engine;
    if (!rep.counterexample.empty()) {
        Json parsed = Json::parse(rep.counterexample, nullptr, false);
        j["counterexample"] = parsed.is_discarded() ? Json(rep.counterexample) : parsed;
    }
    return j;
}

Json qi_json(const QIModel& model) {
    Json j;
    j["rows"] = model.m;
    j["cols"] = model.n;
    Json states = Json::array();
    for (const auto& [r, c] : model.states) states.push_back(Json::array({r, c}));
    j["states"] = std::move(states);
    j["graph"] = graph_json(model.graph);
    j["rational_mle"] = rational_mle(model);
    return j;
}

// --- command wiring ----------------------------------------------------------

void add_ms(CLI::App& app, Ctx& ctx) {
    CLI::App* ms = app.add_subcommand("ms", "matrix Schubert varieties");
    ms->fallthrough();
    ms->require_subcommand(1);

    {
        CLI::App* cmd = ms->add_subcommand("analyze", "full invariant report for one permutation");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        auto sym = std::make_shared<bool>(false);
        auto low = std::make_shared<bool>(false);
        cmd->add_option("w", *word, "permutation, one-line notation")->required();
        CLI::Option* fsym = cmd->add_flag("--sym", *sym, "include the symmetric variant");
        cmd->add_flag("--low", *low, "include the lower-triangular variant")->excludes(fsym);
        cmd->callback([&ctx, word, sym, low]() {
            const Fmt fmt = pick_format(ctx, true, false);
            const MSReport rep = analyze(parse_perm(*word));
            const char* model = *sym ? "symmetric" : "lower_triangular";
            if (fmt == Fmt::ascii) {
                emit_text(ctx, ms_ascii(rep, (*sym || *low) ? &rep.sym : nullptr));
                return;
            }
            Json payload = ms_payload(rep);
            if (*sym || *low) payload["variant"] = variant_json(rep.sym, model);
            emit_json(ctx, envelope("ms analyze", Json{{"w", *word}}, fmt, std::move(payload)));
        });
    }

    {
        CLI::App* cmd = ms->add_subcommand("reflect", "classify one column swap of a toric variety");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        cmd->add_option("w", *word, "permutation, one-line notation")->required();
        cmd->add_option("M", *m, "swap columns M and M+1")->required();
        cmd->callback([&ctx, word, m]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation w = parse_perm(*word);
            const MSReport base = analyze(w);
            const ReflectionVerdict v = reflection_classify(base, *m);
            Json payload = verdict_json(v);
            payload["observed_toric"] = analyze(w.right_simple(*m)).toric;
            emit_json(ctx, envelope("ms reflect", Json{{"w", *word}, {"M", *m}}, fmt,
                                    std::move(payload)));
        });
    }

    {
        CLI::App* cmd =
            ms->add_subcommand("scan-reflections", "classify every column swap of a toric variety");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("w", *word, "permutation, one-line notation")->required();
        cmd->callback([&ctx, word]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation w = parse_perm(*word);
            const MSReport base = analyze(w);
            Json verdicts = Json::array();
            for (const ReflectionVerdict& v : scan_reflections(base)) {
                Json jv = verdict_json(v);
                jv["observed_toric"] = analyze(w.right_simple(v.m)).toric;
                verdicts.push_back(std::move(jv));
            }
            Json payload;
            payload["w"] = *word;
            payload["verdicts"] = std::move(verdicts);
            emit_json(ctx, envelope("ms scan-reflections", Json{{"w", *word}}, fmt,
                                    std::move(payload)));
        });
    }
}

void add_kl(CLI::App& app, Ctx& ctx) {
    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig varieties on chart coordinates");
    kl->fallthrough();
    kl->require_subcommand(1);

    {
        CLI::App* cmd = kl->add_subcommand("analyze", "invariants and generators of one pair v <= w");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        auto no_gens = std::make_shared<bool>(false);
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->add_flag("--no-gens", *no_gens, "skip the generator expansion");
        cmd->callback([&ctx, vw, no_gens]() {
            const Fmt fmt = pick_format(ctx, true, false);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            const KLReport rep = kl_analyze(v, w, !*no_gens);
            if (fmt == Fmt::ascii) {
                std::ostringstream out;
                out << ascii_chart(v, w);
                out << "dim = " << rep.dim << "  dim sigma = " << rep.dim_sigma
                    << "  complexity = " << rep.complexity << '\n';
                emit_text(ctx, out.str());
                return;
            }
            emit_json(ctx, envelope("kl analyze", Json{{"v", vw->first}, {"w", vw->second}}, fmt,
                                    kl_payload(rep, !*no_gens)));
        });
    }

    {
        CLI::App* cmd = kl->add_subcommand("graph", "weight graph of one pair v <= w");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->callback([&ctx, vw]() {
            const Fmt fmt = pick_format(ctx, false, true);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            const DiGraph g = weight_graph(v, w);
            if (fmt == Fmt::dot) {
                emit_text(ctx, g.dot("weights"));
                return;
            }
            emit_json(ctx, envelope("kl graph", Json{{"v", vw->first}, {"w", vw->second}}, fmt,
                                    graph_json(g)));
        });
    }

    {
        CLI::App* cmd = kl->add_subcommand(
            "pv", "pair decomposition of a chart: matched pairs, corners, antidiagonal points");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("v", *word, "chart permutation")->required();
        cmd->callback([&ctx, word]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation v = parse_perm(*word);
            Json pairs = Json::array();
            for (const auto& [a, b] : diagonal_pairs(v))
                pairs.push_back(Json::array({cell_json(a), cell_json(b)}));
            Json payload;
            payload["v"] = *word;
            payload["pairs"] = std::move(pairs);
            payload["pair_count"] = diagonal_pairs(v).size();
            payload["corners"] = cells_json(corner_cells(v));
            Json lone = Json::array();
            for (int i : lone_antidiagonal_points(v)) lone.push_back(i);
            payload["lone_antidiagonal"] = std::move(lone);
            payload["cyclomatic_full"] = weight_graph_full(v).cyclomatic();
            emit_json(ctx, envelope("kl pv", Json{{"v", *word}}, fmt, std::move(payload)));
        });
    }

    {
        CLI::App* cmd = kl->add_subcommand("interval", "list a Bruhat interval; optionally test a "
                                                       "one-cover toric extension");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        auto ext = std::make_shared<std::string>();
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->add_option("--extend", *ext, "cover of w: predict whether [v, w'] stays toric");
        cmd->callback([&ctx, vw, ext]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            std::vector<Permutation> elems = interval(v, w);
            if (elems.empty()) throw domain_error("kl interval: v is not below w");
            std::sort(elems.begin(), elems.end(), [](const Permutation& a, const Permutation& b) {
                const int la = a.inversions(), lb = b.inversions();
                if (la != lb) return la < lb;
                return a.str() < b.str();
            });
            Json list = Json::array();
            for (const Permutation& u : elems) {
                Json e;
                e["word"] = u.str();
                e["length"] = u.inversions();
                list.push_back(std::move(e));
            }
            Json payload;
            payload["size"] = elems.size();
            payload["elements"] = std::move(list);
            payload["maximal_chains"] = count_maximal_chains(v, w);
            if (!ext->empty()) {
                const Permutation top = parse_perm(*ext);
                if (!is_cover(w, top)) throw domain_error("kl interval: --extend is not a cover of w");
                Json x;
                x["w_top"] = *ext;
                x["predicted_toric"] = extend_stays_toric(v, w, top);
                x["observed_toric"] = kl_analyze(v, top, false).complexity == 0;
                payload["extend"] = std::move(x);
            }
            emit_json(ctx, envelope("kl interval", Json{{"v", vw->first}, {"w", vw->second}}, fmt,
                                    std::move(payload)));
        });
    }
}

void add_bruhat(CLI::App& app, Ctx& ctx) {
    CLI::App* br = app.add_subcommand("bruhat", "Bruhat order queries");
    br->fallthrough();
    br->require_subcommand(1);

    {
        CLI::App* cmd = br->add_subcommand("leq", "compare two permutations");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->callback([&ctx, vw]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            Json payload;
            payload["leq"] = bruhat_leq(v, w);
            payload["subword"] = subword_leq(v, w);
            emit_json(ctx, envelope("bruhat leq", Json{{"v", vw->first}, {"w", vw->second}}, fmt,
                                    std::move(payload)));
        });
    }

    {
        CLI::App* cmd = br->add_subcommand("interval", "list the elements of [v, w]");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->callback([&ctx, vw]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            std::vector<Permutation> elems = interval(v, w);
            if (elems.empty()) throw domain_error("bruhat interval: v is not below w");
            std::sort(elems.begin(), elems.end(), [](const Permutation& a, const Permutation& b) {
                const int la = a.inversions(), lb = b.inversions();
                if (la != lb) return la < lb;
                return a.str() < b.str();
            });
            Json list = Json::array();
            for (const Permutation& u : elems) {
                Json e;
                e["word"] = u.str();
                e["length"] = u.inversions();
                list.push_back(std::move(e));
            }
            Json payload;
            payload["size"] = elems.size();
            payload["elements"] = std::move(list);
            payload["maximal_chains"] = count_maximal_chains(v, w);
            emit_json(ctx, envelope("bruhat interval", Json{{"v", vw->first}, {"w", vw->second}},
                                    fmt, std::move(payload)));
        });
    }

    {
        CLI::App* cmd = br->add_subcommand("chain", "export one maximal chain of [v, w]");
        cmd->fallthrough();
        auto vw = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("v", vw->first, "lower permutation")->required();
        cmd->add_option("w", vw->second, "upper permutation")->required();
        cmd->callback([&ctx, vw]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const Permutation v = parse_perm(vw->first);
            const Permutation w = parse_perm(vw->second);
            if (!bruhat_leq(v, w)) throw domain_error("bruhat chain: v is not below w");
            const Chain chain = some_chain(v, w);
            Json elems = Json::array();
            for (const Permutation& u : chain.elems) elems.push_back(u.str());
            Json labels = Json::array();
            for (const auto& [a, b] : chain.labels) labels.push_back(Json::array({a, b}));
            const DiGraph g = chain_graph(chain);
            Json payload;
            payload["elements"] = std::move(elems);
            payload["labels"] = std::move(labels);
            payload["graph"] = graph_json(g);
            emit_json(ctx, envelope("bruhat chain", Json{{"v", vw->first}, {"w", vw->second}}, fmt,
                                    std::move(payload)));
        });
    }
}

void add_stat(CLI::App& app, Ctx& ctx) {
    CLI::App* st = app.add_subcommand("stat", "statistical-model bridges");
    st->fallthrough();
    st->require_subcommand(1);

    {
        CLI::App* cmd = st->add_subcommand(
            "ci-realize", "realize a Gaussian CI statement as a symmetric determinantal ideal");
        cmd->fallthrough();
        auto abc = std::make_shared<std::array<std::string, 3>>();
        auto m_opt = std::make_shared<int>(0);
        cmd->add_option("A", (*abc)[0], "first set, e.g. 1,2")->required();
        cmd->add_option("B", (*abc)[1], "second set")->required();
        cmd->add_option("C", (*abc)[2], "conditioning set; '-' for empty");
        cmd->add_option("--m", *m_opt, "number of variables (default: largest entry)");
        cmd->callback([&ctx, abc, m_opt]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const std::vector<int> a = parse_set((*abc)[0], "A");
            const std::vector<int> b = parse_set((*abc)[1], "B");
            const std::vector<int> c = parse_set((*abc)[2], "C");
            int m = *m_opt;
            if (m == 0) {
                for (const auto* set : {&a, &b, &c})
                    for (int x : *set) m = std::max(m, x);
            }
            const CIStatement stmt = make_ci(m, a, b, c);
            Json payload;
            payload["m"] = m;
            payload["a"] = a;
            payload["b"] = b;
            payload["c"] = c;
            const auto w = ci_realize_ms(stmt);
            payload["realizable"] = w.has_value();
            if (w) {
                payload["w"] = w->str();
                payload["complexity"] = ms_ci_complexity(stmt);
                payload["toric"] = ms_ci_complexity(stmt) == 0;
            }
            payload["generators"] = polys_json(ci_condition(stmt));
            Json inputs;
            inputs["a"] = (*abc)[0];
            inputs["b"] = (*abc)[1];
            inputs["c"] = (*abc)[2];
            inputs["m"] = m;
            emit_json(ctx, envelope("stat ci-realize", std::move(inputs), fmt, std::move(payload)));
        });
    }

    {
        CLI::App* cmd = st->add_subcommand(
            "qi", "quasi-independence models attached to the hooks of a toric variety");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("w", *word, "toric permutation")->required();
        cmd->callback([&ctx, word]() {
            const Fmt fmt = pick_format(ctx, false, true);
            const std::vector<QIModel> models = qi_from_toric(parse_perm(*word));
            if (fmt == Fmt::dot) {
                std::ostringstream out;
                for (std::size_t i = 0; i < models.size(); ++i)
                    out << models[i].graph.dot("qi_" + std::to_string(i), true);
                emit_text(ctx, out.str());
                return;
            }
            Json arr = Json::array();
            for (const QIModel& m : models) arr.push_back(qi_json(m));
            Json payload;
            payload["w"] = *word;
            payload["models"] = std::move(arr);
            emit_json(ctx, envelope("stat qi", Json{{"w", *word}}, fmt, std::move(payload)));
        });
    }

    {
        CLI::App* cmd = st->add_subcommand(
            "mle", "rational-MLE test for the quasi-independence models of a toric variety");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("w", *word, "toric permutation")->required();
        cmd->callback([&ctx, word]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const std::vector<QIModel> models = qi_from_toric(parse_perm(*word));
            Json arr = Json::array();
            bool all = true;
            for (const QIModel& m : models) {
                const bool ok = rational_mle(m);
                all = all && ok;
                Json j;
                j["rows"] = m.m;
                j["cols"] = m.n;
                j["state_count"] = m.states.size();
                j["rational_mle"] = ok;
                arr.push_back(std::move(j));
            }
            Json payload;
            payload["w"] = *word;
            payload["models"] = std::move(arr);
            payload["all_rational"] = all;
            emit_json(ctx, envelope("stat mle", Json{{"w", *word}}, fmt, std::move(payload)));
        });
    }
}

void add_oracle(CLI::App& app, Ctx& ctx) {
    CLI::App* orc = app.add_subcommand("oracle", "exhaustive re-verification sweeps");
    orc->fallthrough();
    orc->require_subcommand(1);

    {
        CLI::App* cmd = orc->add_subcommand("list", "list the registered checks");
        cmd->fallthrough();
        cmd->callback([&ctx]() {
            const Fmt fmt = pick_format(ctx, false, false);
            Json arr = Json::array();
            for (const TheoremInfo& t : theorem_registry()) {
                Json j;
                j["id"] = t.id;
                j["summary"] = t.summary;
                j["default_n"] = t.default_n;
                arr.push_back(std::move(j));
            }
            emit_json(ctx, envelope("oracle list", Json::object(), fmt, std::move(arr)));
        });
    }

    auto add_sweep_options = [](CLI::App* cmd, const std::shared_ptr<SweepConfig>& cfg) {
        cmd->add_option("--n", cfg->n, "symmetric-group bound (default: per check)");
        cmd->add_option("--jobs", cfg->jobs, "worker threads")->envname("MSKL_JOBS");
        cmd->add_flag("--serial", cfg->force_serial, "use the serial reference sweep");
    };

    {
        CLI::App* cmd = orc->add_subcommand("verify", "run one registered check");
        cmd->fallthrough();
        auto id = std::make_shared<std::string>();
        auto cfg = std::make_shared<SweepConfig>();
        cmd->add_option("id", *id, "check id (see `oracle list`)")->required();
        add_sweep_options(cmd, cfg);
        cmd->callback([&ctx, id, cfg]() {
            const Fmt fmt = pick_format(ctx, false, false);
            if (!is_registered(*id)) throw CLI::ValidationError("unknown check id '" + *id + "'");
            const SweepReport rep = verify(*id, *cfg);
            if (!rep.pass) ctx.exit_code = 1;
            Json inputs;
            inputs["id"] = *id;
            inputs["n"] = rep.n;
            emit_json(ctx, envelope("oracle verify", std::move(inputs), fmt, sweep_json(rep)));
        });
    }

    {
        CLI::App* cmd = orc->add_subcommand("verify-all", "run every registered check");
        cmd->fallthrough();
        auto cfg = std::make_shared<SweepConfig>();
        add_sweep_options(cmd, cfg);
        cmd->callback([&ctx, cfg]() {
            const Fmt fmt = pick_format(ctx, false, false);
            const std::vector<SweepReport> reports = verify_all(*cfg);
            bool all = true;
            Json arr = Json::array();
            for (const SweepReport& rep : reports) {
                all = all && rep.pass;
                arr.push_back(sweep_json(rep));
            }
            if (!all) ctx.exit_code = 1;
            Json payload;
            payload["reports"] = std::move(arr);
            payload["all_pass"] = all;
            emit_json(ctx, envelope("oracle verify-all", Json::object(), fmt, std::move(payload)));
        });
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial invariants of matrix Schubert and Kazhdan-Lusztig varieties"};
    app.name("mskl");
    app.fallthrough();
    app.require_subcommand(1);

    Ctx ctx;
    ctx.out = &out;
    CLI::Option* fj = app.add_flag("--json", ctx.want_json, "JSON envelope output (default)");
    CLI::Option* fa = app.add_flag("--ascii", ctx.want_ascii, "plain-text grid output");
    CLI::Option* fd = app.add_flag("--dot", ctx.want_dot, "GraphViz output");
    fj->excludes(fa)->excludes(fd);
    fa->excludes(fd);
    app.add_option("--out", ctx.out_path, "write output to a file instead of stdout");

    add_ms(app, ctx);
    add_kl(app, ctx);
    add_bruhat(app, ctx);
    add_stat(app, ctx);
    add_oracle(app, ctx);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mskl");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return ctx.exit_code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace mskl
