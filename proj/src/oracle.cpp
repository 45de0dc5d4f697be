#include "mskl/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mskl/bruhat.hpp"
#include "mskl/diagram.hpp"
#include "mskl/error.hpp"
#include "mskl/graph.hpp"
#include "mskl/kl.hpp"
#include "mskl/matrix_schubert.hpp"
#include "mskl/permutation.hpp"
#include "mskl/statmodel.hpp"
#include "mskl/symbolic.hpp"

namespace mskl {
namespace {

// --- reporting plumbing -----------------------------------------------------

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// Tiny compact-JSON object composer for counterexample payloads.
class Json {
public:
    Json& put(const std::string& key, const std::string& value) {
        next(key);
        body_ += '"' + json_escape(value) + '"';
        return *this;
    }
    Json& put(const std::string& key, const char* value) { return put(key, std::string(value)); }
    Json& put(const std::string& key, std::int64_t value) {
        next(key);
        body_ += std::to_string(value);
        return *this;
    }
    Json& put(const std::string& key, int value) { return put(key, static_cast<std::int64_t>(value)); }
    Json& put(const std::string& key, std::uint64_t value) {
        next(key);
        body_ += std::to_string(value);
        return *this;
    }
    Json& put(const std::string& key, bool value) {
        next(key);
        body_ += value ? "true" : "false";
        return *this;
    }
    Json& put_raw(const std::string& key, const std::string& raw) {
        next(key);
        body_ += raw;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    void next(const std::string& key) {
        if (!body_.empty()) body_ += ',';
        body_ += '"' + json_escape(key) + "\":";
    }
    std::string body_;
};

std::string cells_str(const std::vector<Cell>& cells) {
    std::string out;
    for (const Cell& c : cells)
        out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    return out;
}

// --- sweep harness -----------------------------------------------------------

class SweepState {
public:
    bool failed() const { return failed_.load(std::memory_order_relaxed); }
    void count(std::uint64_t k = 1) { checked_.fetch_add(k, std::memory_order_relaxed); }
    void fail(const std::string& counterexample) {
        std::lock_guard<std::mutex> lock(mu_);
        if (counterexample_.empty()) counterexample_ = counterexample;
        failed_.store(true, std::memory_order_relaxed);
    }
    std::uint64_t checked() const { return checked_.load(); }
    // Only meaningful after all workers have returned.
    const std::string& counterexample() const { return counterexample_; }

private:
    std::atomic<bool> failed_{false};
    std::atomic<std::uint64_t> checked_{0};
    std::mutex mu_;
    std::string counterexample_;
};

// Runs body(0..total-1), in parallel when OpenMP is enabled and the config
// does not force the serial reference path.  Exceptions become failures so
// they never escape a parallel region.
void sweep_indexed(std::uint64_t total, const SweepConfig& cfg, SweepState& st,
                   const std::function<void(std::uint64_t)>& body) {
    (void)cfg;  // only consulted when OpenMP is compiled in
    auto guarded = [&](std::uint64_t i) {
        try {
            body(i);
        } catch (const std::exception& e) {
            st.fail(Json().put("error", e.what()).str());
        }
    };
#ifdef _OPENMP
    if (!cfg.force_serial) {
        if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
        const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < n; ++i) {
            if (st.failed()) continue;
            guarded(static_cast<std::uint64_t>(i));
        }
        return;
    }
#endif
    for (std::uint64_t i = 0; i < total && !st.failed(); ++i) guarded(i);
}

bool parallel_engine(const SweepConfig& cfg) {
#ifdef _OPENMP
    return !cfg.force_serial;
#else
    (void)cfg;
    return false;
#endif
}

// Union-find over 1..n with O(1) rollback, for walking chain trees.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n) + 1), size_(static_cast<std::size_t>(n) + 1, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            hist_.push_back(-1);
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        hist_.push_back(b);
        return true;
    }
    void undo() {
        const int b = hist_.back();
        hist_.pop_back();
        if (b >= 0) {
            size_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(b)])] -= size_[static_cast<std::size_t>(b)];
            parent_[static_cast<std::size_t>(b)] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> hist_;
};

Permutation perm_at(int n, std::uint64_t rank) { return Permutation::from_lex_index(n, rank); }

std::vector<std::pair<VertexId, VertexId>> sorted_edges(const DiGraph& g) {
    auto e = g.edges();
    std::sort(e.begin(), e.end());
    return e;
}

std::string edge_str(const std::pair<VertexId, VertexId>& e) {
    return e.first.str() + "->" + e.second.str();
}

// --- reflection surgery observation ------------------------------------------

enum class DeltaObs {
    no_change,
    gains_edge,
    loses_edge,
    new_hook,
    hook_shorter,
    hook_taller,
    hook_narrower,
    hook_wider,
    other,
};

const char* delta_obs_name(DeltaObs d) {
    switch (d) {
        case DeltaObs::no_change: return "no_change";
        case DeltaObs::gains_edge: return "gains_edge";
        case DeltaObs::loses_edge: return "loses_edge";
        case DeltaObs::new_hook: return "new_hook";
        case DeltaObs::hook_shorter: return "hook_shorter";
        case DeltaObs::hook_taller: return "hook_taller";
        case DeltaObs::hook_narrower: return "hook_narrower";
        case DeltaObs::hook_wider: return "hook_wider";
        case DeltaObs::other: return "other";
    }
    return "?";
}

const char* cone_delta_name(ConeDelta d) {
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

struct DeltaResult {
    DeltaObs kind = DeltaObs::other;
    std::optional<std::pair<VertexId, VertexId>> edge;
    int affected = -1;  // base-list index for shrink/grow, next-list index for new_hook
    std::string note;
};

bool same_hook(const Hook& a, const Hook& b) {
    return a.corner == b.corner && a.height == b.height && a.width == b.width;
}

// Multiset difference of two sorted cell lists.
std::pair<std::vector<Cell>, std::vector<Cell>> cell_diff(const Diagram& from, const Diagram& to) {
    std::vector<Cell> added, removed;
    std::set_difference(to.cells().begin(), to.cells().end(), from.cells().begin(), from.cells().end(),
                        std::back_inserter(added));
    std::set_difference(from.cells().begin(), from.cells().end(), to.cells().begin(), to.cells().end(),
                        std::back_inserter(removed));
    return {added, removed};
}

// Classifies the observed difference between a toric base report and the
// (also toric) report after one column swap.
DeltaResult classify_delta(const MSReport& base, const MSReport& next) {
    DeltaResult r;
    const bool l_same = base.reg.l == next.reg.l;
    const bool lp_same = base.reg.lprime == next.reg.lprime;
    if (l_same && lp_same) {
        r.kind = DeltaObs::no_change;
        return r;
    }
    if (lp_same) {
        // Hooks identical; only dominant-piece cells moved in or out of L.
        auto [added, removed] = cell_diff(base.reg.l, next.reg.l);
        if (added.size() == 1 && removed.empty()) {
            r.kind = DeltaObs::gains_edge;
            r.edge = {plain(added[0].row), starred(added[0].col)};
        } else if (removed.size() == 1 && added.empty()) {
            r.kind = DeltaObs::loses_edge;
            r.edge = {plain(removed[0].row), starred(removed[0].col)};
        } else {
            r.note = "L changed by +" + cells_str(added) + " -" + cells_str(removed);
        }
        return r;
    }
    const auto hb = hook_split(base.reg.lprime);
    const auto hn = hook_split(next.reg.lprime);
    if (!hb || !hn) {
        r.note = "hook split missing";
        return r;
    }
    const auto& a = *hb;
    const auto& b = *hn;
    if (b.size() == a.size() + 1) {
        // Find the inserted hook; the rest should be untouched.
        std::size_t i = 0, j = 0;
        int inserted = -1;
        bool clean = true;
        while (j < b.size()) {
            if (i < a.size() && same_hook(a[i], b[j])) {
                ++i;
                ++j;
            } else if (inserted < 0) {
                inserted = static_cast<int>(j);
                ++j;
            } else {
                clean = false;
                break;
            }
        }
        r.kind = DeltaObs::new_hook;
        r.affected = inserted;
        if (!clean || i < a.size()) r.note = "other hooks changed too";
        return r;
    }
    if (a.size() == b.size() + 1) {
        // One hook disappeared: report it as the extreme narrowing.
        std::size_t i = 0, j = 0;
        int removed = -1;
        bool clean = true;
        while (i < a.size()) {
            if (j < b.size() && same_hook(a[i], b[j])) {
                ++i;
                ++j;
            } else if (removed < 0) {
                removed = static_cast<int>(i);
                ++i;
            } else {
                clean = false;
                break;
            }
        }
        r.kind = DeltaObs::hook_narrower;
        r.affected = removed;
        r.note = clean ? "hook disappeared" : "other hooks changed too";
        return r;
    }
    if (a.size() == b.size()) {
        int diff = -1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!same_hook(a[i], b[i])) {
                if (diff >= 0) {
                    r.note = "several hooks changed";
                    return r;
                }
                diff = static_cast<int>(i);
            }
        }
        if (diff < 0) {
            r.note = "lprime changed but hooks identical";
            return r;
        }
        const Hook& x = a[static_cast<std::size_t>(diff)];
        const Hook& y = b[static_cast<std::size_t>(diff)];
        r.affected = diff;
        if (y.corner == x.corner && y.width == x.width && y.height == x.height + 1) {
            r.kind = DeltaObs::hook_taller;
        } else if (y.corner == x.corner && y.width == x.width && y.height + 1 == x.height) {
            r.kind = DeltaObs::hook_shorter;
        } else if (y.corner == x.corner && y.height == x.height && y.width + 1 == x.width) {
            r.kind = DeltaObs::hook_narrower;
        } else if (y.corner.row == x.corner.row && y.corner.col > x.corner.col &&
                   y.last_col() == x.last_col()) {
            // The hook re-rooted east of its old corner: the west column is
            // gone and the leg now stands on the shortened arm.
            r.kind = DeltaObs::hook_narrower;
        } else if (y.corner.row == x.corner.row && y.width == x.width + 1 &&
                   (y.corner.col == x.corner.col || y.last_col() == x.last_col())) {
            // Arm grew by one cell, at the east end or (corner shifting) west.
            r.kind = DeltaObs::hook_wider;
        } else {
            r.note = "hook reshaped: (" + std::to_string(x.corner.row) + "," + std::to_string(x.corner.col) +
                     ")h" + std::to_string(x.height) + "w" + std::to_string(x.width) + " -> (" +
                     std::to_string(y.corner.row) + "," + std::to_string(y.corner.col) + ")h" +
                     std::to_string(y.height) + "w" + std::to_string(y.width);
        }
        return r;
    }
    r.note = "hook count changed by more than one";
    return r;
}

bool delta_matches(const ReflectionVerdict& v, const DeltaResult& obs) {
    if (!v.predicted_delta) return true;
    switch (*v.predicted_delta) {
        case ConeDelta::no_change:
            return obs.kind == DeltaObs::no_change;
        case ConeDelta::gains_edge:
            return obs.kind == DeltaObs::gains_edge && v.edge && obs.edge && *v.edge == *obs.edge;
        case ConeDelta::loses_edge:
            return obs.kind == DeltaObs::loses_edge && v.edge && obs.edge && *v.edge == *obs.edge;
        case ConeDelta::new_hook:
            return obs.kind == DeltaObs::new_hook;
        case ConeDelta::hook_shorter:
            return obs.kind == DeltaObs::hook_shorter && (v.affected_hook < 0 || v.affected_hook == obs.affected);
        case ConeDelta::hook_taller:
            return obs.kind == DeltaObs::hook_taller && (v.affected_hook < 0 || v.affected_hook == obs.affected);
        case ConeDelta::hook_narrower:
            return obs.kind == DeltaObs::hook_narrower && (v.affected_hook < 0 || v.affected_hook == obs.affected);
        case ConeDelta::hook_wider:
            return obs.kind == DeltaObs::hook_wider && (v.affected_hook < 0 || v.affected_hook == obs.affected);
    }
    return false;
}

std::string verdict_code(const ReflectionVerdict& v) {
    if (!v.labeled) return "unlabeled";
    std::string s;
    switch (v.label.kind) {
        case ColumnKind::hook: s = "h"; break;
        case ColumnKind::alpha: s = "a"; break;
        case ColumnKind::beta: s = "b"; break;
        case ColumnKind::none: s = "?"; break;
    }
    s += "/T" + std::to_string(v.theorem_case) + "C" + std::to_string(v.corollary_case);
    // i flags the step within the block, k the column within the step; a
    // single-step block or width-one step sets both its 1 and L flags.
    s += "/i";
    if (v.label.step == 0) s += "1";
    if (v.label.last_step) s += "L";
    if (v.label.step != 0 && !v.label.last_step) s += "m";
    s += "k";
    if (v.label.pos == 1) s += "1";
    if (v.label.last_col_of_step) s += "L";
    if (v.label.pos != 1 && !v.label.last_col_of_step) s += "m";
    return s;
}

std::string verdict_prediction(const ReflectionVerdict& v) {
    if (!v.labeled) return "none";
    if (!v.predicted_toric) return "nontoric";
    std::string s = "toric";
    if (v.predicted_delta) {
        s += "+";
        s += cone_delta_name(*v.predicted_delta);
        if (v.edge) s += "(" + edge_str(*v.edge) + ")";
        if (v.affected_hook >= 0) s += "@" + std::to_string(v.affected_hook);
    }
    return s;
}

// --- individual checks --------------------------------------------------------
//
// Each check recomputes the two sides of a claimed identity by separate
// routes and calls st.fail() with a serialized witness on the first mismatch.

void check_diagram_regions(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const Regions reg = regions(w);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "diagram-regions").put("n", nn).put("w", w.str()).put("what", what).str());
            };
            // Diagram size against length.
            if (static_cast<int>(reg.dcirc.size()) != nn * (nn - 1) / 2 - w.inversions()) return bad("|D| != n(n-1)/2 - l(w)");
            // Cell membership from the definition.
            const Permutation wi = w.inverse();
            for (int r = 1; r <= nn; ++r)
                for (int c = 1; c <= nn; ++c) {
                    const bool in = w(c) < r && wi(r) > c;
                    if (reg.dcirc.contains(r, c) != in) return bad("diagram membership");
                }
            // Essential cells: no cell directly above, none directly right.
            std::vector<Cell> ess;
            for (const Cell& c : reg.dcirc.cells())
                if (!reg.dcirc.contains(c.row - 1, c.col) && !reg.dcirc.contains(c.row, c.col + 1)) ess.push_back(c);
            if (ess != reg.essential) return bad("essential set");
            // Rank function.
            for (int a = 1; a <= nn; ++a)
                for (int b = 1; b <= nn; ++b) {
                    int cnt = 0;
                    for (int i = 1; i <= b; ++i) cnt += w(i) >= a ? 1 : 0;
                    if (w.rank(a, b) != cnt) return bad("rank function");
                }
            // sw from essential rectangles.
            std::vector<int> top(static_cast<std::size_t>(nn) + 1, nn + 1);
            for (const Cell& e : ess)
                for (int c = 1; c <= e.col; ++c) top[static_cast<std::size_t>(c)] = std::min(top[static_cast<std::size_t>(c)], e.row);
            for (int r = 1; r <= nn; ++r)
                for (int c = 1; c <= nn; ++c)
                    if (reg.sw.contains(r, c) != (r >= top[static_cast<std::size_t>(c)])) return bad("sw region");
            // Dominant piece: 4-adjacency component of (n, 1).
            Diagram dom(nn, {});
            if (reg.dcirc.contains(nn, 1)) {
                for (const auto& comp : reg.dcirc.components())
                    if (std::find(comp.begin(), comp.end(), Cell{nn, 1}) != comp.end()) dom = Diagram(nn, comp);
            }
            if (dom != reg.dom) return bad("dominant piece");
            // Region arithmetic and containments.
            if (reg.l != reg.sw.set_minus(reg.dom)) return bad("l = sw minus dom");
            if (reg.lprime != reg.sw.set_minus(reg.dcirc)) return bad("lprime = sw minus diagram");
            for (const Cell& c : reg.dcirc.cells())
                if (!reg.sw.contains(c)) return bad("diagram not inside sw");
            st.count();
        });
    }
}

void check_toric_equivalence(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            const bool hooks = hook_split(rep.reg.lprime).has_value();
            const bool avoids = !w.contains_pattern({4, 3, 1, 2}) && !w.contains_pattern({3, 4, 1, 2});
            const bool flat = rep.complexity == 0;
            if (hooks != avoids || avoids != flat || rep.toric != hooks || rep.toric_hooks != hooks ||
                rep.toric_pattern != avoids) {
                st.fail(Json()
                            .put("check", "toric-equivalence")
                            .put("n", nn)
                            .put("w", w.str())
                            .put("hooks", hooks)
                            .put("avoids", avoids)
                            .put("complexity", rep.complexity)
                            .str());
                return;
            }
            st.count();
        });
    }
}

void check_no_complexity_one(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            if (rep.complexity == 1) {
                st.fail(Json().put("check", "no-complexity-one").put("n", nn).put("w", w.str()).str());
                return;
            }
            st.count();
        });
    }
}

void check_staircase_layout(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "staircase-layout").put("n", nn).put("w", w.str()).put("what", what).str());
            };
            if (rep.staircase.has_value() != rep.toric) return bad("layout exists iff toric");
            if (!rep.toric) {
                st.count();
                return;
            }
            const StaircaseStructure& sc = *rep.staircase;
            const auto hooks = hook_split(rep.reg.lprime);
            if (!hooks || hooks->size() != sc.hooks.size()) return bad("hook lists differ");
            for (std::size_t i = 0; i < sc.hooks.size(); ++i)
                if (!same_hook((*hooks)[i], sc.hooks[i])) return bad("hook lists differ");
            // Column tops of the sw region.
            std::vector<int> top(static_cast<std::size_t>(nn) + 1, 0);
            int max_col = 0;
            for (const Cell& c : rep.reg.sw.cells()) {
                auto& t = top[static_cast<std::size_t>(c.col)];
                if (t == 0 || c.row < t) t = c.row;
                max_col = std::max(max_col, c.col);
            }
            if (sc.max_sw_col != max_col) return bad("max sw column");
            const Diagram above_arm = rep.reg.l.set_minus(rep.reg.lprime);  // diagram cells stacked over arms
            auto owner = [&](int c) -> int {
                for (std::size_t j = 0; j < sc.hooks.size(); ++j)
                    if (c > sc.hooks[j].corner.col && c <= sc.hooks[j].last_col()) return static_cast<int>(j);
                return -1;
            };
            for (int c = 1; c <= nn; ++c) {
                const ColumnLabel& lab = sc.label(c);
                const int own = owner(c);
                bool corner_col = false;
                for (const Hook& h : sc.hooks) corner_col |= h.corner.col == c;
                switch (lab.kind) {
                    case ColumnKind::hook:
                        if (!corner_col) return bad("hook label off a corner column");
                        break;
                    case ColumnKind::alpha: {
                        if (own < 0 || lab.block != own) return bad("alpha label outside its hook");
                        bool stacked = false;
                        for (const Cell& cc : above_arm.cells()) stacked |= cc.col == c;
                        if (!stacked) return bad("alpha column with nothing above the arm");
                        break;
                    }
                    case ColumnKind::beta: {
                        if (corner_col || own >= 0) return bad("beta label on a hook column");
                        if (c > sc.max_sw_col) return bad("beta label east of sw");
                        for (const Cell& cc : rep.reg.sw.cells())
                            if (cc.col == c && !rep.reg.dom.contains(cc)) return bad("beta column not dominant");
                        break;
                    }
                    case ColumnKind::none: {
                        const bool east = c > sc.max_sw_col;
                        const bool bare_arm = own >= 0 && top[static_cast<std::size_t>(c)] == sc.hooks[static_cast<std::size_t>(own)].corner.row;
                        if (!east && !bare_arm) return bad("unlabeled column inside the staircase");
                        break;
                    }
                }
            }
            // Step bookkeeping: contiguous columns, strictly rising tops, height rules.
            auto check_block = [&](const Block& blk, bool is_alpha, int j) -> bool {
                int prev_top = 0;
                for (std::size_t si = 0; si < blk.steps.size(); ++si) {
                    const Step& s = blk.steps[si];
                    if (s.width <= 0) return false;
                    for (int c = s.first_col; c < s.first_col + s.width; ++c) {
                        if (top[static_cast<std::size_t>(c)] != s.top_row) return false;
                        const ColumnLabel& lab = sc.label(c);
                        if (lab.kind != (is_alpha ? ColumnKind::alpha : ColumnKind::beta)) return false;
                        if (lab.block != j || lab.step != static_cast<int>(si)) return false;
                        if (lab.pos != c - s.first_col + 1) return false;
                        if (lab.last_col_of_step != (c == s.first_col + s.width - 1)) return false;
                        if (lab.last_step != (si + 1 == blk.steps.size())) return false;
                    }
                    if (si > 0) {
                        if (s.top_row <= prev_top) return false;
                        if (s.height != s.top_row - prev_top) return false;
                    } else if (!is_alpha) {
                        const int base = j == 0 ? 0 : sc.hooks[static_cast<std::size_t>(j - 1)].corner.row;
                        if (s.height != s.top_row - base - 1) return false;
                    } else {
                        const Hook& h = sc.hooks[static_cast<std::size_t>(j)];
                        if (sc.beta[static_cast<std::size_t>(j)].empty()) {
                            if (s.height != (j == 0 ? s.top_row - 1 : 0)) return false;
                        } else {
                            int cnt = 0;
                            for (const Cell& cc : rep.reg.dcirc.cells())
                                if (cc.col == h.corner.col - 1 && cc.row < s.top_row) ++cnt;
                            if (s.height != cnt) return false;
                        }
                    }
                    if (s.height < 0) return false;
                    prev_top = s.top_row;
                }
                return true;
            };
            if (sc.alpha.size() != sc.hooks.size() || sc.beta.size() != sc.hooks.size() + 1)
                return bad("block lists sized wrong");
            for (std::size_t j = 0; j < sc.alpha.size(); ++j)
                if (!sc.alpha[j].empty() && !check_block(sc.alpha[j], true, static_cast<int>(j)))
                    return bad("alpha block bookkeeping");
            for (std::size_t j = 0; j < sc.beta.size(); ++j)
                if (!sc.beta[j].empty() && !check_block(sc.beta[j], false, static_cast<int>(j)))
                    return bad("beta block bookkeeping");
            st.count();
        });
    }
}

void check_reflection_theorem(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            if (!rep.toric) return;
            if (!rep.staircase) {
                st.fail(Json().put("check", "reflection-theorem").put("n", nn).put("w", w.str()).put("what", "no layout").str());
                return;
            }
            for (int m = 1; m < nn; ++m) {
                if (st.failed()) return;
                const ReflectionVerdict verdict = reflection_classify(rep, m);
                const MSReport next = analyze(w.right_simple(m));
                auto bad = [&](const std::string& what, const std::string& extra) {
                    st.fail(Json()
                                .put("check", "reflection-theorem")
                                .put("n", nn)
                                .put("w", w.str())
                                .put("m", m)
                                .put("case", verdict_code(verdict))
                                .put("predicted", verdict_prediction(verdict))
                                .put("what", what)
                                .put("detail", extra)
                                .str());
                };
                if (verdict.labeled != (verdict.label.kind != ColumnKind::none)) {
                    bad("labeled flag disagrees with the column label", "");
                    return;
                }
                if (verdict.predicted_toric != next.toric) {
                    bad("toricity prediction wrong", next.toric ? "direct is toric" : "direct is not toric");
                    return;
                }
                if (verdict.labeled) {
                    // A labeled verdict lands in exactly one numbered case.
                    const bool cases_ok =
                        verdict.predicted_toric
                            ? verdict.corollary_case >= 1 && verdict.corollary_case <= 8 &&
                                  verdict.theorem_case == 0
                            : verdict.theorem_case >= 1 && verdict.theorem_case <= 5 &&
                                  verdict.corollary_case == 0;
                    if (!cases_ok) {
                        bad("case numbering malformed",
                            "T" + std::to_string(verdict.theorem_case) + " C" +
                                std::to_string(verdict.corollary_case));
                        return;
                    }
                }
                if (next.toric) {
                    const DeltaResult obs = classify_delta(rep, next);
                    if (verdict.predicted_delta && !delta_matches(verdict, obs)) {
                        std::string detail = delta_obs_name(obs.kind);
                        if (obs.edge) detail += "(" + edge_str(*obs.edge) + ")";
                        if (obs.affected >= 0) detail += "@" + std::to_string(obs.affected);
                        if (!obs.note.empty()) detail += " " + obs.note;
                        bad("cone delta prediction wrong", detail);
                        return;
                    }
                    // A reflection that preserves the free dimension keeps the
                    // hooks themselves and only retunes the dominant tail.
                    if (rep.dim_y == next.dim_y) {
                        const bool tame = obs.kind == DeltaObs::no_change ||
                                          obs.kind == DeltaObs::gains_edge ||
                                          obs.kind == DeltaObs::loses_edge;
                        if (!(rep.reg.lprime == next.reg.lprime) || !tame) {
                            bad("dimension-preserving reflection moved the hooks",
                                delta_obs_name(obs.kind));
                            return;
                        }
                    }
                }
                st.count();
            }
        });
    }
}

void check_bruhat_order(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        sweep_indexed(fact * fact, cfg, st, [&, nn, fact](std::uint64_t idx) {
            const Permutation v = perm_at(nn, idx / fact);
            const Permutation w = perm_at(nn, idx % fact);
            if (bruhat_leq(v, w) != subword_leq(v, w)) {
                st.fail(Json()
                            .put("check", "bruhat-order")
                            .put("n", nn)
                            .put("v", v.str())
                            .put("w", w.str())
                            .put("rank_leq", bruhat_leq(v, w))
                            .put("subword_leq", subword_leq(v, w))
                            .str());
                return;
            }
            st.count();
        });
        // Cover lists against the brute-force definition (small n only).
        if (nn <= 4 && !st.failed()) {
            sweep_indexed(fact, cfg, st, [&, nn, fact](std::uint64_t idx) {
                const Permutation v = perm_at(nn, idx);
                std::vector<Permutation> brute;
                for (std::uint64_t j = 0; j < fact; ++j) {
                    const Permutation u = perm_at(nn, j);
                    if (u.inversions() == v.inversions() + 1 && bruhat_leq(v, u)) brute.push_back(u);
                }
                std::sort(brute.begin(), brute.end());
                auto ups = covers_above(v);
                std::sort(ups.begin(), ups.end());
                if (ups != brute) {
                    st.fail(Json().put("check", "bruhat-order").put("n", nn).put("v", v.str()).put("what", "covers_above").str());
                    return;
                }
                st.count();
            });
        }
    }
}

void check_chain_components(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        sweep_indexed(fact * fact, cfg, st, [&, nn, fact](std::uint64_t idx) {
            const Permutation v = perm_at(nn, idx / fact);
            const Permutation w = perm_at(nn, idx % fact);
            if (!bruhat_leq(v, w)) return;
            const auto ref = atom_graph(v, w).components();
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "chain-components").put("n", nn).put("v", v.str()).put("w", w.str()).put("what", what).str());
            };
            const KLReport rep = kl_analyze(v, w, false);
            if (rep.g.components() != ref) return bad("weight graph components differ from atom components");
            if (rep.dim_sigma != nn - static_cast<int>(ref.size())) return bad("dim sigma vs components");
            if (rep.complexity == 0 && matched_cycles(v, w).size() != ref.size())
                return bad("matched cycles vs components on a toric pair");
            const std::uint64_t chains = for_each_maximal_chain(v, w, [&](const Chain& chain) {
                if (chain_graph(chain).components() != ref) {
                    bad("chain components depend on the chain");
                    return false;
                }
                st.count();
                return true;
            });
            if (chains == 0) bad("no maximal chain found");
        });
    }
}

void check_kl_chain_complexity(int n, const SweepConfig& cfg, SweepState& st) {
    struct CoverEdge {
        std::uint32_t to = 0;
        std::int8_t a = 0, b = 0;
    };
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        // Cover DAG of the whole group, built once and shared read-only.
        std::vector<std::vector<CoverEdge>> up(fact);
        for (std::uint64_t i = 0; i < fact; ++i) {
            const Permutation u = perm_at(nn, i);
            for (const Permutation& c : covers_above(u)) {
                int lo = 0, hi = 0;
                for (int p = 1; p <= nn; ++p)
                    if (u(p) != c(p)) (lo == 0 ? lo : hi) = p;
                // Chain labels are the exchanged values, matching the chart's
                // weight graph vertices.
                up[i].push_back({static_cast<std::uint32_t>(c.lex_index()), static_cast<std::int8_t>(u(lo)),
                                 static_cast<std::int8_t>(u(hi))});
            }
        }
        sweep_indexed(fact, cfg, st, [&, nn, fact](std::uint64_t vi) {
            const Permutation v = perm_at(nn, vi);
            // Complexity of every interval above v, by the weight-graph route.
            std::vector<int> cx(fact, -1);
            for (std::uint64_t j = 0; j < fact; ++j) {
                const Permutation u = perm_at(nn, j);
                if (bruhat_leq(v, u)) cx[j] = kl_analyze(v, u, false).complexity;
            }
            // Every saturated chain starting at v is a maximal chain of the
            // interval it spans; its cycle count must equal that complexity.
            RollbackDsu dsu(nn);
            std::function<bool(std::uint32_t, int, int)> walk = [&](std::uint32_t at, int depth, int merges) -> bool {
                if (st.failed()) return false;
                st.count();
                const int nu = depth - merges;  // independent cycles among the chain labels
                if (nu != cx[at]) {
                    st.fail(Json()
                                .put("check", "kl-chain-complexity")
                                .put("n", nn)
                                .put("v", v.str())
                                .put("w", perm_at(nn, at).str())
                                .put("chain_cycles", nu)
                                .put("complexity", cx[at])
                                .str());
                    return false;
                }
                for (const CoverEdge& e : up[at]) {
                    const bool merged = dsu.unite(e.a, e.b);
                    const bool ok = walk(e.to, depth + 1, merges + (merged ? 1 : 0));
                    dsu.undo();
                    if (!ok) return false;
                }
                return true;
            };
            walk(static_cast<std::uint32_t>(vi), 0, 0);
            // Cover steps may only keep or raise complexity by one.
            for (std::uint64_t j = 0; j < fact && !st.failed(); ++j) {
                if (cx[j] < 0) continue;
                for (const CoverEdge& e : up[j]) {
                    const int d = cx[e.to] - cx[j];  // e.to >= v through j
                    if (d != 0 && d != 1) {
                        st.fail(Json()
                                    .put("check", "kl-chain-complexity")
                                    .put("n", nn)
                                    .put("v", v.str())
                                    .put("u", perm_at(nn, j).str())
                                    .put("u_cover", perm_at(nn, e.to).str())
                                    .put("delta", d)
                                    .str());
                        return;
                    }
                }
            }
        });
    }
}

void check_diagram_pairs(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation v = perm_at(nn, idx);
            const DiGraph g = weight_graph_full(v);
            const auto comps = g.components();
            int big = 0, iso = 0;
            for (const auto& comp : comps) (comp.size() > 1 ? big : iso) += 1;
            const auto pairs = diagonal_pairs(v);
            const auto corners = corner_cells(v);
            const auto lone = lone_antidiagonal_points(v);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "diagram-pairs").put("n", nn).put("v", v.str()).put("what", what).str());
            };
            if (g.cyclomatic() != static_cast<int>(pairs.size())) return bad("cyclomatic vs recursive pairs");
            if (big != static_cast<int>(corners.size())) return bad("multi-vertex components vs corner cells");
            if (iso != static_cast<int>(lone.size())) return bad("isolated vertices vs untouched antidiagonal points");
            if (cone_dimension(g) != nn - static_cast<int>(comps.size())) return bad("cone dimension");
            st.count();
        });
    }
}

void check_pair_zeros(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        sweep_indexed(fact * fact, cfg, st, [&, nn, fact](std::uint64_t idx) {
            const Permutation v = perm_at(nn, idx / fact);
            const Permutation w = perm_at(nn, idx % fact);
            if (!bruhat_leq(v, w)) return;
            const KLReport rep = kl_analyze(v, w, false);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "pair-zeros").put("n", nn).put("v", v.str()).put("w", w.str()).put("what", what).str());
            };
            const Diagram dv = opposite_rothe(v);
            const Diagram dw = opposite_rothe(w);
            if (rep.dim != static_cast<int>(dv.size()) - static_cast<int>(dw.size())) return bad("dimension");
            if (rep.complexity != rep.dim - rep.dim_sigma) return bad("complexity arithmetic");
            if (!rep.g.is_dag()) return bad("weight graph not a DAG");
            // Re-derive the forced zeros from the reflection criterion.
            std::vector<Cell> zeros;
            for (const Cell& c : dv.cells())
                if (!bruhat_leq(v.swap_values(v(c.col), c.row), w)) zeros.push_back(c);
            std::vector<Cell> got = rep.zeros;
            std::sort(got.begin(), got.end());
            std::sort(zeros.begin(), zeros.end());
            if (zeros != got) return bad("forced zeros");
            if (zeros.empty()) {
                if (sorted_edges(rep.g) != sorted_edges(weight_graph_full(v))) return bad("graph vs full graph");
                if (rep.g.cyclomatic() != static_cast<int>(diagonal_pairs(v).size()))
                    return bad("cyclomatic vs pairs without forced zeros");
                if (rep.complexity != static_cast<int>(diagonal_pairs(v).size()) - static_cast<int>(dw.size()))
                    return bad("complexity vs pairs minus diagram");
            }
            st.count();
        });
    }
}

void check_rectangle_complexity(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        sweep_indexed(fact, cfg, st, [&, nn, fact](std::uint64_t wi) {
            const Permutation w = perm_at(nn, wi);
            const Diagram d = opposite_rothe(w);
            // Independent rectangle test.
            bool rect = !d.empty();
            if (rect) {
                int rlo = nn + 1, rhi = 0, clo = nn + 1, chi = 0;
                for (const Cell& c : d.cells()) {
                    rlo = std::min(rlo, c.row);
                    rhi = std::max(rhi, c.row);
                    clo = std::min(clo, c.col);
                    chi = std::max(chi, c.col);
                }
                rect = static_cast<int>(d.size()) == (rhi - rlo + 1) * (chi - clo + 1);
                if (rect)
                    for (int r = rlo; r <= rhi && rect; ++r)
                        for (int c = clo; c <= chi && rect; ++c) rect = d.contains(r, c);
            }
            const auto shape = rectangle_shape(w);
            if (shape.has_value() != rect) {
                st.fail(Json().put("check", "rectangle-complexity").put("n", nn).put("w", w.str()).put("what", "shape detection").str());
                return;
            }
            if (!shape) return;
            for (std::uint64_t vi = 0; vi < fact && !st.failed(); ++vi) {
                const Permutation v = perm_at(nn, vi);
                if (!bruhat_leq(v, w)) continue;
                const int direct = kl_analyze(v, w, false).complexity;
                const int formula = rectangle_complexity(v, w);
                if (direct != formula) {
                    st.fail(Json()
                                .put("check", "rectangle-complexity")
                                .put("n", nn)
                                .put("v", v.str())
                                .put("w", w.str())
                                .put("formula", formula)
                                .put("direct", direct)
                                .str());
                    return;
                }
                st.count();
            }
        });
    }
}

void check_longest_swap_complexity(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        std::vector<std::pair<int, int>> params;
        for (int l = 1; l < nn; ++l)
            for (int k = l + 1; k <= nn; ++k) params.emplace_back(l, k);
        sweep_indexed(params.size(), cfg, st, [&, nn, fact](std::uint64_t pi) {
            const auto [l, k] = params[pi];
            const Permutation w = Permutation::longest(nn).swap_positions(l, k);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "longest-swap-complexity").put("n", nn).put("l", l).put("k", k).put("what", what).str());
            };
            const Regions reg = regions(w);
            if (static_cast<int>(reg.dcirc.size()) != 2 * (k - l) - 1) return bad("diagram size");
            std::vector<Cell> ess{{nn - k + 2, l}, {nn - l + 1, k - 1}};
            std::sort(ess.begin(), ess.end());
            ess.erase(std::unique(ess.begin(), ess.end()), ess.end());
            if (reg.essential != ess) return bad("essential set");
            for (const Cell& e : ess)
                if (w.rank(e.row, e.col) != l - 1) return bad("essential rank bound");
            for (std::uint64_t vi = 0; vi < fact && !st.failed(); ++vi) {
                const Permutation v = perm_at(nn, vi);
                if (!bruhat_leq(v, w)) continue;
                const int direct = kl_analyze(v, w, false).complexity;
                const int formula = longest_times_swap_complexity(v, l, k);
                if (direct != formula) {
                    st.fail(Json()
                                .put("check", "longest-swap-complexity")
                                .put("n", nn)
                                .put("v", v.str())
                                .put("w", w.str())
                                .put("formula", formula)
                                .put("direct", direct)
                                .str());
                    return;
                }
                st.count();
            }
        });
    }
}

void check_complexity_range(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        const Permutation id = Permutation::identity(nn);
        const Permutation w0 = Permutation::longest(nn);
        const int cmax = (nn - 1) * (nn - 2) / 2;
        std::vector<std::atomic<char>> seen_w(static_cast<std::size_t>(cmax) + 1);
        std::vector<std::atomic<char>> seen_v(static_cast<std::size_t>(cmax) + 1);
        sweep_indexed(fact, cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation u = perm_at(nn, idx);
            // Bottom fixed: complexity against length minus support.
            const int cw = kl_analyze(id, u, false).complexity;
            const int expect_w = u.inversions() - static_cast<int>(support(u).size());
            if (cw != expect_w) {
                st.fail(Json().put("check", "complexity-range").put("n", nn).put("w", u.str()).put("got", cw).put("expected", expect_w).str());
                return;
            }
            // Top fixed: complexity equals the recursive pair count.
            const int cv = kl_analyze(u, w0, false).complexity;
            if (cv != static_cast<int>(diagonal_pairs(u).size())) {
                st.fail(Json().put("check", "complexity-range").put("n", nn).put("v", u.str()).put("what", "pairs vs complexity below longest").str());
                return;
            }
            if (cw <= cmax) seen_w[static_cast<std::size_t>(cw)].store(1, std::memory_order_relaxed);
            if (cv <= cmax) seen_v[static_cast<std::size_t>(cv)].store(1, std::memory_order_relaxed);
            if (cw > cmax || cv > cmax) {
                st.fail(Json().put("check", "complexity-range").put("n", nn).put("u", u.str()).put("what", "complexity above the full-interval value").str());
                return;
            }
            st.count(2);
        });
        if (st.failed()) return;
        const int full = kl_analyze(id, w0, false).complexity;
        if (full != cmax) {
            st.fail(Json().put("check", "complexity-range").put("n", nn).put("what", "full interval complexity").put("got", full).put("expected", cmax).str());
            return;
        }
        for (int c = 0; c <= cmax; ++c) {
            if (!seen_w[static_cast<std::size_t>(c)].load() || !seen_v[static_cast<std::size_t>(c)].load()) {
                st.fail(Json().put("check", "complexity-range").put("n", nn).put("value", c).put("what", "complexity value not attained").str());
                return;
            }
        }
    }
}

void check_kl_extend(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        sweep_indexed(fact, cfg, st, [&, nn, fact](std::uint64_t vi) {
            const Permutation v = perm_at(nn, vi);
            for (std::uint64_t wi = 0; wi < fact && !st.failed(); ++wi) {
                const Permutation wb = perm_at(nn, wi);
                if (!bruhat_leq(v, wb)) continue;
                if (kl_analyze(v, wb, false).complexity != 0) continue;
                for (const Permutation& wc : covers_above(wb)) {
                    const bool predicted = extend_stays_toric(v, wb, wc);
                    const bool direct = kl_analyze(v, wc, false).complexity == 0;
                    if (predicted != direct) {
                        st.fail(Json()
                                    .put("check", "kl-extend")
                                    .put("n", nn)
                                    .put("v", v.str())
                                    .put("w_base", wb.str())
                                    .put("w_cover", wc.str())
                                    .put("predicted", predicted)
                                    .put("direct", direct)
                                    .str());
                        return;
                    }
                    st.count();
                }
            }
        });
    }
}

void check_kl_glue(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        const std::uint64_t fact = factorial(nn);
        // Shared tables: comparability and pair complexity (-1 = incomparable).
        std::vector<signed char> cx(fact * fact, -1);
        {
            SweepState prep;
            sweep_indexed(fact * fact, cfg, prep, [&, nn, fact](std::uint64_t idx) {
                const Permutation a = perm_at(nn, idx / fact);
                const Permutation b = perm_at(nn, idx % fact);
                if (bruhat_leq(a, b))
                    cx[idx] = static_cast<signed char>(kl_analyze(a, b, false).complexity);
            });
            if (prep.failed()) {
                st.fail(prep.counterexample());
                return;
            }
        }
        // One chain graph per toric pair, computed once and shared.
        std::vector<std::vector<std::pair<std::uint32_t, DiGraph>>> ups(fact);
        for (std::uint64_t a = 0; a < fact; ++a) {
            const Permutation pa = perm_at(nn, a);
            for (std::uint64_t b = 0; b < fact; ++b)
                if (cx[a * fact + b] == 0)
                    ups[a].emplace_back(static_cast<std::uint32_t>(b), chain_graph(some_chain(pa, perm_at(nn, b))));
        }
        sweep_indexed(fact, cfg, st, [&, nn, fact](std::uint64_t ui) {
            for (const auto& [vi, lower] : ups[ui]) {
                for (const auto& [wi, upper] : ups[vi]) {
                    if (st.failed()) return;
                    const bool predicted = glue_stays_toric(lower, upper);
                    const bool direct = cx[ui * fact + wi] == 0;
                    if (predicted != direct) {
                        st.fail(Json()
                                    .put("check", "kl-glue")
                                    .put("n", nn)
                                    .put("u", perm_at(nn, ui).str())
                                    .put("v", perm_at(nn, vi).str())
                                    .put("w", perm_at(nn, wi).str())
                                    .put("predicted", predicted)
                                    .put("direct", direct)
                                    .str());
                        return;
                    }
                    st.count();
                }
            }
        });
    }
}

void check_sym_lower(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "sym-lower").put("n", nn).put("w", w.str()).put("what", what).str());
            };
            int sw_up = 0;
            for (const Cell& c : rep.reg.sw.cells()) sw_up += c.row < c.col ? 1 : 0;
            if (rep.sym.sw_above_diagonal != sw_up) return bad("sw cells above the diagonal");
            if (rep.sym.dim_x != rep.dim_x - nn * (nn - 1) / 2) return bad("symmetric ambient dimension");
            if (rep.sym.dim_y != rep.dim_y - sw_up) return bad("symmetric orbit dimension");
            if (rep.sym.dim_sigma != rep.dim_sigma) return bad("symmetric cone dimension differs");
            if (rep.sym.complexity != rep.sym.dim_y - rep.sym.dim_sigma) return bad("symmetric complexity arithmetic");
            if (rep.sym.complexity != rep.complexity - sw_up) return bad("complexity drop vs upper sw cells");
            st.count();
        });
    }
    // The doubling embedding preserves complexity into the symmetric variant.
    for (int mm = 1; 2 * mm <= n && !st.failed(); ++mm) {
        sweep_indexed(factorial(mm), cfg, st, [&, mm](std::uint64_t idx) {
            const Permutation v = perm_at(mm, idx);
            const Permutation w = sym_embedding(v);
            const MSReport outer = analyze(w);
            const MSReport inner = analyze(v);
            if (outer.sym.sw_above_diagonal != 0 || outer.sym.complexity != inner.complexity) {
                st.fail(Json()
                            .put("check", "sym-lower")
                            .put("m", mm)
                            .put("v", v.str())
                            .put("embedded", w.str())
                            .put("what", "embedding complexity")
                            .str());
                return;
            }
            st.count();
        });
    }
}

void check_ci_bridge(int n, const SweepConfig& cfg, SweepState& st) {
    for (int m = 2; m <= n && !st.failed(); ++m) {
        std::uint64_t total = 1;
        for (int i = 0; i < m; ++i) total *= 4;
        sweep_indexed(total, cfg, st, [&, m](std::uint64_t mask) {
            std::vector<int> a, b, c;
            std::uint64_t rest = mask;
            for (int x = 1; x <= m; ++x, rest /= 4) {
                switch (rest % 4) {
                    case 1: a.push_back(x); break;
                    case 2: b.push_back(x); break;
                    case 3: c.push_back(x); break;
                    default: break;
                }
            }
            if (a.empty() || b.empty()) return;
            const CIStatement stmt = make_ci(m, a, b, c);
            // Realizability from the two closed shapes.
            bool expect = false;
            const int i = a.back(), j = b.front();
            if (a.front() == 1 && i == static_cast<int>(a.size()) && b.back() == m &&
                j == m - static_cast<int>(b.size()) + 1 && i < j) {
                if (c.empty())
                    expect = true;
                else
                    expect = c.front() == i + 1 && c.back() == j - 1 && static_cast<int>(c.size()) == j - i - 1;
            }
            const auto w = ci_realize_ms(stmt);
            auto bad = [&](const std::string& what) {
                std::string label = "[";
                for (int x : a) label += std::to_string(x);
                label += "|";
                for (int x : b) label += std::to_string(x);
                label += "|";
                for (int x : c) label += std::to_string(x);
                label += "]";
                st.fail(Json().put("check", "ci-bridge").put("m", m).put("stmt", label).put("what", what).str());
            };
            if (w.has_value() != expect) return bad("realizability");
            if (!w) {
                st.count();
                return;
            }
            const MSReport rep = analyze(*w);
            if (ms_ci_complexity(stmt) != rep.sym.complexity) return bad("closed-form complexity");
            if ((rep.sym.complexity == 0) != (c.size() <= 1)) return bad("toric iff conditioning set small");
            // The symmetric determinantal ideal of w must be the statement's ideal.
            const SymMatrix sym = generic_symmetric_matrix(m);
            std::vector<Polynomial> gens;
            for (const RankCondition& cond : fulton_conditions(*w))
                for (Polynomial& p : expand_minors(sym, cond)) gens.push_back(std::move(p));
            std::sort(gens.begin(), gens.end());
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            std::vector<Polynomial> want = ci_condition(stmt);
            std::sort(want.begin(), want.end());
            if (gens != want) return bad("generators");
            st.count();
        });
    }
}

void check_kl_ci(int n, const SweepConfig& cfg, SweepState& st) {
    struct Param {
        int n, m, kase, p, q;
    };
    std::vector<Param> params;
    for (int nn = 3; nn <= n; ++nn)
        for (int m = 2; m < nn; ++m) {
            for (int k = 1; k < m; ++k)
                for (int l = 1; k + l <= m; ++l) params.push_back({nn, m, 1, k, l});
            for (int s = 1; m >= 3 && s + 1 <= m - 1; ++s) params.push_back({nn, m, 2, s, m - 1 - s});
        }
    sweep_indexed(params.size(), cfg, st, [&](std::uint64_t pi) {
        const Param p = params[pi];
        const KLCIRealization r =
            p.kase == 1 ? kl_ci_case1(p.n, p.m, p.p, p.q) : kl_ci_case2(p.n, p.m, p.p, p.q);
        auto bad = [&](const std::string& what) {
            st.fail(Json()
                        .put("check", "kl-ci")
                        .put("n", p.n)
                        .put("m", p.m)
                        .put("case", p.kase)
                        .put("p", p.p)
                        .put("q", p.q)
                        .put("v", r.v.str())
                        .put("w", r.w.str())
                        .put("what", what)
                        .str());
        };
        if (!bruhat_leq(r.v, r.w)) return bad("v not below w");
        const bool with_gens = p.n <= 6;
        const KLReport rep = kl_analyze(r.v, r.w, with_gens);
        const int ab = static_cast<int>(r.stmt.a.size() * r.stmt.b.size());
        if (rep.complexity != r.predicted_complexity) return bad("complexity");
        if (r.predicted_complexity != p.m * (p.m - 1) / 2 - ab) return bad("closed form");
        if (rep.dim_sigma != r.predicted_dim_sigma) return bad("cone dimension");
        if (rep.dim != p.m * (p.m + 1) / 2 - ab) return bad("chart dimension");
        if (with_gens) {
            std::vector<Polynomial> got;
            for (const Polynomial& g : rep.generators)
                got.push_back(
                    g.rename([&](const Var& z) { return kl_ci_rename(p.n, p.m, z); })
                        .sign_normalized());
            std::sort(got.begin(), got.end());
            got.erase(std::unique(got.begin(), got.end()), got.end());
            std::vector<Polynomial> want = ci_condition(r.stmt);
            std::sort(want.begin(), want.end());
            if (got != want) return bad("generators after renaming");
        }
        st.count();
    });
}

void check_rational_mle(int n, const SweepConfig& cfg, SweepState& st) {
    if (rational_mle(double_square())) {
        st.fail(Json().put("check", "rational-mle").put("what", "double square should fail").str());
        return;
    }
    st.count();
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w);
            if (!rep.toric) return;
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "rational-mle").put("n", nn).put("w", w.str()).put("what", what).str());
            };
            for (const QIModel& model : qi_from_toric(rep)) {
                auto has = [&](int x, int y) {
                    return std::binary_search(model.states.begin(), model.states.end(), std::make_pair(x, y));
                };
                for (int x = 1; x <= model.m; ++x) {
                    if (!has(x, 1)) return bad("first column not full");
                    if (model.n >= 2 && !has(x, 2)) return bad("second column not full");
                }
                for (int y = 1; y <= model.n; ++y) {
                    if (!has(model.m, y)) return bad("last row not full");
                    if (model.m >= 2 && !has(model.m - 1, y)) return bad("second-to-last row not full");
                }
                if (!rational_mle(model)) return bad("model fails the chordality test");
                st.count();
            }
        });
    }
}

void check_kl_binomials(int n, const SweepConfig& cfg, SweepState& st) {
    for (int nn = 3; nn <= n && !st.failed(); ++nn) {
        sweep_indexed(factorial(nn), cfg, st, [&, nn](std::uint64_t idx) {
            const Permutation v = perm_at(nn, idx);
            const Diagram d = opposite_rothe(v);
            const Permutation vi = v.inverse();
            const auto binoms = toric_binomials(v);
            auto bad = [&](const std::string& what) {
                st.fail(Json().put("check", "kl-binomials").put("n", nn).put("v", v.str()).put("what", what).str());
            };
            // Count the cells that admit a relay cell pair.
            int expect = 0;
            for (const Cell& kj : d.cells()) {
                bool found = false;
                for (int i = v(kj.col) + 1; i < kj.row && !found; ++i)
                    found = d.contains(i, kj.col) && d.contains(kj.row, vi(i));
                expect += found ? 1 : 0;
            }
            if (static_cast<int>(binoms.size()) != expect) return bad("binomial count");
            for (const Polynomial& p : binoms) {
                const auto& terms = p.terms();
                if (terms.size() != 2) return bad("not a binomial");
                // One linear term with coefficient +1, one quadratic with -1,
                // in whatever order the polynomial normalizes to.
                const int lin = terms[0].degree() == 1 ? 0 : 1;
                const Monomial& linear = terms[static_cast<std::size_t>(lin)];
                const Monomial& quad = terms[static_cast<std::size_t>(1 - lin)];
                if (linear.degree() != 1 || quad.degree() != 2) return bad("degrees");
                if (linear.coeff != 1 || quad.coeff != -1) return bad("coefficients");
                // Torus-weight homogeneity: weight(z_rc) = e_r - e_{v(c)}.
                std::vector<int> weight(static_cast<std::size_t>(nn) + 1, 0);
                for (const Var& z : linear.vars) {
                    weight[static_cast<std::size_t>(z.row)] += 1;
                    weight[static_cast<std::size_t>(v(z.col))] -= 1;
                }
                for (const Var& z : quad.vars) {
                    weight[static_cast<std::size_t>(z.row)] -= 1;
                    weight[static_cast<std::size_t>(v(z.col))] += 1;
                }
                for (int x = 1; x <= nn; ++x)
                    if (weight[static_cast<std::size_t>(x)] != 0) return bad("not weight homogeneous");
                for (const Monomial& mono : terms)
                    for (const Var& z : mono.vars)
                        if (!d.contains(z.row, z.col)) return bad("variable outside the diagram");
            }
            st.count();
        });
    }
}

// --- registry ------------------------------------------------------------------

struct Checker {
    const char* id;
    const char* summary;
    int default_n;
    void (*run)(int n, const SweepConfig&, SweepState&);
};

const std::vector<Checker>& checkers() {
    static const std::vector<Checker> table = {
        {"diagram-regions", "diagram, essential set, rank function, and region arithmetic from first principles", 7,
         check_diagram_regions},
        {"toric-equivalence", "hook decomposition == pattern avoidance (4312, 3412) == complexity zero", 7,
         check_toric_equivalence},
        {"no-complexity-one", "no matrix Schubert variety has torus complexity exactly one", 7, check_no_complexity_one},
        {"staircase-layout", "staircase labels, blocks, steps, and heights describe the sw region exactly", 7,
         check_staircase_layout},
        {"reflection-theorem", "single-swap toricity verdicts and weight-cone deltas match direct recomputation", 6,
         check_reflection_theorem},
        {"bruhat-order", "rank-table comparison equals the reduced-subword comparison; cover lists are exact", 5,
         check_bruhat_order},
        {"chain-components", "chain-graph components are chain-independent and match atom and weight graphs", 4,
         check_chain_components},
        {"kl-chain-complexity", "cycle count of every maximal chain equals the pair complexity; covers step by 0 or 1", 5,
         check_kl_chain_complexity},
        {"diagram-pairs", "recursive pair count equals the cyclomatic number; corners/antidiagonal points count components",
         7, check_diagram_pairs},
        {"pair-zeros", "forced zeros from the reflection criterion; pair formulas when no zero is forced", 6,
         check_pair_zeros},
        {"rectangle-complexity", "closed-form complexity below a rectangle-diagram permutation", 6,
         check_rectangle_complexity},
        {"longest-swap-complexity", "closed-form complexity below longest-element-times-transposition", 6,
         check_longest_swap_complexity},
        {"complexity-range", "complexity formulas at the interval ends; every value up to the maximum is attained", 6,
         check_complexity_range},
        {"kl-extend", "extending a toric interval through one cover stays toric iff the new labels join components", 5,
         check_kl_extend},
        {"kl-glue", "gluing toric intervals end to end is toric iff the combined chain graph is a forest", 5,
         check_kl_glue},
        {"sym-lower", "symmetric/lower variant dimensions, complexity drop, and the doubling embedding", 6,
         check_sym_lower},
        {"ci-bridge", "Gaussian CI statements realized as symmetric matrix Schubert ideals, with complexity", 6,
         check_ci_bridge},
        {"kl-ci", "CI statements realized on block-permutation charts: complexity, cone, and generators", 8, check_kl_ci},
        {"rational-mle", "every quasi-independence model of a toric variety passes the double-chordality test", 7,
         check_rational_mle},
        {"kl-binomials", "difference-of-path binomials are weight-homogeneous and counted by relay cells", 7,
         check_kl_binomials},
    };
    return table;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> table = [] {
        std::vector<TheoremInfo> out;
        for (const Checker& c : checkers()) out.push_back({c.id, c.summary, c.default_n});
        return out;
    }();
    return table;
}

bool is_registered(const std::string& id) {
    for (const Checker& c : checkers())
        if (id == c.id) return true;
    return false;
}

SweepReport verify(const std::string& id, const SweepConfig& cfg) {
    const Checker* found = nullptr;
    for (const Checker& c : checkers())
        if (id == c.id) found = &c;
    if (!found) throw domain_error("oracle: unknown theorem id '" + id + "'");
    if (cfg.n != 0 && (cfg.n < 3 || cfg.n > 10))
        throw domain_error("oracle: group bound must be between 3 and 10");
    const int n = cfg.n != 0 ? cfg.n : found->default_n;
    SweepReport rep;
    rep.id = found->id;
    rep.n = n;
    rep.engine = parallel_engine(cfg) ? "openmp" : "serial";
    SweepState st;
    const auto start = std::chrono::steady_clock::now();
    found->run(n, cfg, st);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.pass = !st.failed();
    rep.checked = st.checked();
    rep.counterexample = st.counterexample();
    if (!cfg.report_path.empty()) {
        std::ofstream out(cfg.report_path);
        if (!out) throw domain_error("oracle: cannot write report to " + cfg.report_path);
        out << reports_to_json({rep}) << "\n";
    }
    return rep;
}

std::vector<SweepReport> verify_all(const SweepConfig& cfg) {
    std::vector<SweepReport> out;
    SweepConfig each = cfg;
    each.report_path.clear();
    for (const Checker& c : checkers()) out.push_back(verify(c.id, each));
    if (!cfg.report_path.empty()) {
        std::ofstream f(cfg.report_path);
        if (!f) throw domain_error("oracle: cannot write report to " + cfg.report_path);
        f << reports_to_json(out) << "\n";
    }
    return out;
}

std::string reports_to_json(const std::vector<SweepReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const SweepReport& r = reports[i];
        Json row;
        row.put("id", r.id)
            .put("n", r.n)
            .put("pass", r.pass)
            .put("checked", r.checked)
            .put_raw("seconds", [&] {
                std::ostringstream s;
                s.precision(6);
                s << std::fixed << r.seconds;
                return s.str();
            }())
            .put("engine", r.engine);
        if (r.counterexample.empty())
            row.put_raw("counterexample", "null");
        else
            row.put_raw("counterexample", r.counterexample);
        out += (i ? "," : "") + row.str();
    }
    return out + "]";
}

std::string reflection_survey(int n, HeightRule rule) {
    if (n < 3 || n > 9) throw domain_error("oracle: survey bound must be between 3 and 9");
    struct Row {
        std::uint64_t count = 0;
        std::string first;
    };
    std::map<std::array<std::string, 3>, Row> tally;
    for (int nn = 3; nn <= n; ++nn) {
        const std::uint64_t fact = factorial(nn);
        for (std::uint64_t idx = 0; idx < fact; ++idx) {
            const Permutation w = perm_at(nn, idx);
            const MSReport rep = analyze(w, rule);
            if (!rep.toric || !rep.staircase) continue;
            for (int m = 1; m < nn; ++m) {
                const ReflectionVerdict verdict = reflection_classify(rep, m);
                const MSReport next = analyze(w.right_simple(m), rule);
                std::string observed;
                if (!next.toric) {
                    observed = "nontoric";
                } else {
                    const DeltaResult obs = classify_delta(rep, next);
                    observed = delta_obs_name(obs.kind);
                    if (obs.edge) observed += "(" + edge_str(*obs.edge) + ")";
                    if (!obs.note.empty()) observed += " [" + obs.note + "]";
                    // Name the gained/lost edge the corollary would predict, to
                    // make exactness visible in the table.
                    if (obs.kind == DeltaObs::gains_edge && obs.edge &&
                        *obs.edge == std::make_pair(plain(w(m)), starred(m)))
                        observed += " =w(M)->M*";
                    if (obs.kind == DeltaObs::loses_edge && obs.edge &&
                        *obs.edge == std::make_pair(plain(w(m + 1)), starred(m)))
                        observed += " =w(M+1)->M*";
                }
                Row& row = tally[{verdict_code(verdict), verdict_prediction(verdict), observed}];
                row.count += 1;
                if (row.first.empty()) row.first = "w=" + w.str() + " M=" + std::to_string(m);
            }
        }
    }
    std::ostringstream out;
    for (const auto& [key, row] : tally) {
        out << key[0] << "  pred=" << key[1] << "  obs=" << key[2] << "  count=" << row.count
            << "  first: " << row.first << "\n";
    }
    return out.str();
}

}  // namespace mskl
