#include "mskl/bruhat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mskl/error.hpp"

namespace mskl {

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw domain_error("bruhat: size mismatch");
    const auto rv = v.rank_table();
    const auto rw = w.rank_table();
    for (int a = 1; a <= v.n(); ++a) {
        for (int b = 1; b <= v.n(); ++b) {
            if (rv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >
                rw[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Positions (a, b), a < b, such that v * t_{a,b} covers v.
std::vector<std::pair<int, int>> cover_positions(const Permutation& v) {
    std::vector<std::pair<int, int>> out;
    const int n = v.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (v(a) >= v(b)) continue;
            bool blocked = false;
            for (int c = a + 1; c < b && !blocked; ++c) {
                if (v(a) < v(c) && v(c) < v(b)) blocked = true;
            }
            if (!blocked) out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace

bool is_cover(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw domain_error("bruhat: size mismatch");
    if (w.inversions() != v.inversions() + 1) return false;
    int lo = 0, hi = 0;
    for (int i = 1; i <= v.n(); ++i) {
        if (v(i) != w(i)) {
            if (lo == 0) {
                lo = i;
            } else if (hi == 0) {
                hi = i;
            } else {
                return false;
            }
        }
    }
    return hi != 0 && v(lo) == w(hi) && v(hi) == w(lo);
}

std::vector<Permutation> covers_above(const Permutation& v) {
    std::vector<Permutation> out;
    for (const auto& [a, b] : cover_positions(v)) out.push_back(v.swap_positions(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> covers_above_in(const Permutation& v, const Permutation& w) {
    std::vector<Permutation> out;
    for (Permutation& u : covers_above(v)) {
        if (bruhat_leq(u, w)) out.push_back(std::move(u));
    }
    return out;
}

std::vector<Permutation> covers_below(const Permutation& w) {
    std::vector<Permutation> out;
    const int n = w.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (w(a) <= w(b)) continue;
            Permutation v = w.swap_positions(a, b);
            if (is_cover(v, w)) out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chain make_chain(std::vector<Permutation> elems) {
    if (elems.empty()) throw domain_error("chain: empty");
    Chain chain;
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        const Permutation& u = elems[i];
        const Permutation& next = elems[i + 1];
        if (!is_cover(u, next)) {
            throw domain_error("chain: step " + u.str() + " -> " + next.str() + " is not a cover");
        }
        int lo = 0, hi = 0;
        for (int p = 1; p <= u.n(); ++p) {
            if (u(p) != next(p)) (lo == 0 ? lo : hi) = p;
        }
        chain.labels.emplace_back(u(lo), u(hi));
    }
    chain.elems = std::move(elems);
    return chain;
}

DiGraph chain_graph(const Chain& chain) {
    const int n = chain.elems.front().n();
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(plain(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : chain.labels) edges.emplace_back(plain(a), plain(b));
    return DiGraph(std::move(verts), std::move(edges));
}

std::vector<Permutation> atoms(const Permutation& v, const Permutation& w) {
    return covers_above_in(v, w);
}

DiGraph atom_graph(const Permutation& v, const Permutation& w) {
    const int n = v.n();
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(plain(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : cover_positions(v)) {
        if (bruhat_leq(v.swap_positions(a, b), w)) edges.emplace_back(plain(v(a)), plain(v(b)));
    }
    return DiGraph(std::move(verts), std::move(edges));
}

std::vector<Permutation> interval(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw domain_error("bruhat: size mismatch");
    if (!bruhat_leq(v, w)) return {};
    std::set<Permutation> seen{v};
    std::vector<Permutation> frontier{v};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& u : frontier) {
            for (Permutation& up : covers_above_in(u, w)) {
                if (seen.insert(up).second) next.push_back(std::move(up));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::uint64_t count_maximal_chains(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) return 0;
    const auto elems = interval(v, w);
    std::map<Permutation, std::uint64_t> ways;
    ways[v] = 1;
    std::vector<Permutation> by_length = elems;
    std::sort(by_length.begin(), by_length.end(),
              [](const Permutation& a, const Permutation& b) {
                  const int la = a.inversions(), lb = b.inversions();
                  return la != lb ? la < lb : a < b;
              });
    std::set<Permutation> members(elems.begin(), elems.end());
    for (const Permutation& u : by_length) {
        const std::uint64_t from = ways[u];
        if (from == 0) continue;
        for (const Permutation& up : covers_above_in(u, w)) {
            if (members.count(up)) ways[up] += from;
        }
    }
    return ways[w];
}

namespace {

bool chain_dfs(Chain& chain, const Permutation& w, std::uint64_t& visited,
               const std::function<bool(const Chain&)>& visit, bool& stop) {
    // By value: the recursive push_back below may reallocate chain.elems.
    const Permutation at = chain.elems.back();
    if (at == w) {
        ++visited;
        if (!visit(chain)) stop = true;
        return !stop;
    }
    for (const Permutation& up : covers_above_in(at, w)) {
        int lo = 0, hi = 0;
        for (int p = 1; p <= at.n(); ++p) {
            if (at(p) != up(p)) (lo == 0 ? lo : hi) = p;
        }
        chain.elems.push_back(up);
        chain.labels.emplace_back(at(lo), at(hi));
        const bool keep_going = chain_dfs(chain, w, visited, visit, stop);
        chain.elems.pop_back();
        chain.labels.pop_back();
        if (!keep_going) return false;
    }
    return !stop;
}

}  // namespace

std::uint64_t for_each_maximal_chain(const Permutation& v, const Permutation& w,
                                     const std::function<bool(const Chain&)>& visit) {
    if (!bruhat_leq(v, w)) return 0;
    Chain chain;
    chain.elems.push_back(v);
    std::uint64_t visited = 0;
    bool stop = false;
    chain_dfs(chain, w, visited, visit, stop);
    return visited;
}

Chain some_chain(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) throw domain_error("chain: " + v.str() + " is not below " + w.str());
    std::vector<Permutation> elems{v};
    while (elems.back() != w) {
        auto ups = covers_above_in(elems.back(), w);
        // covers_above_in returns sorted permutations; take the smallest.
        elems.push_back(ups.front());
    }
    return make_chain(std::move(elems));
}

bool subword_leq(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw domain_error("bruhat: size mismatch");
    std::set<Permutation> reachable{Permutation::identity(w.n())};
    for (int letter : reduced_word(w)) {
        std::vector<Permutation> added;
        for (const Permutation& u : reachable) {
            Permutation next = u.right_simple(letter);
            if (next.inversions() > u.inversions()) added.push_back(std::move(next));
        }
        reachable.insert(added.begin(), added.end());
    }
    return reachable.count(v) > 0;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation u = w;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i < u.n(); ++i) {
            if (u(i) > u(i + 1)) {
                word.push_back(i);
                u = u.right_simple(i);
                progress = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> support(const Permutation& w) {
    std::vector<int> out;
    int max_seen = 0;
    for (int i = 1; i < w.n(); ++i) {
        max_seen = std::max(max_seen, w(i));
        if (max_seen > i) out.push_back(i);
    }
    return out;
}

}  // namespace mskl
