#include "mskl/render.hpp"

#include <algorithm>

#include "mskl/kl.hpp"

namespace mskl {

namespace {

std::string grid_to_string(const std::vector<std::string>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

std::vector<std::string> blank_grid(int n) {
    return std::vector<std::string>(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), '.'));
}

void put(std::vector<std::string>& g, int row, int col, char ch) {
    g[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = ch;
}

}  // namespace

std::string ascii_regions(const Regions& reg) {
    const int n = reg.n();
    auto g = blank_grid(n);
    for (const Cell& c : reg.sw.cells()) put(g, c.row, c.col, '+');
    for (const Cell& c : reg.dcirc.cells()) put(g, c.row, c.col, '#');
    for (const Cell& c : reg.essential) put(g, c.row, c.col, '*');
    for (int j = 1; j <= n; ++j) put(g, reg.w(j), j, '1');
    return grid_to_string(g);
}

std::string ascii_cells(const Permutation& w, const Diagram& d) {
    const int n = w.n();
    auto g = blank_grid(n);
    for (const Cell& c : d.cells()) put(g, c.row, c.col, '#');
    for (int j = 1; j <= n; ++j) put(g, w(j), j, '1');
    return grid_to_string(g);
}

std::string ascii_chart(const Permutation& v) {
    const int n = v.n();
    auto g = blank_grid(n);
    const Diagram dv = opposite_rothe(v);
    for (const Cell& c : dv.cells()) put(g, c.row, c.col, 'z');
    for (int j = 1; j <= n; ++j) put(g, v(j), j, '1');
    return grid_to_string(g);
}

std::string ascii_chart(const Permutation& v, const Permutation& w) {
    std::string out = ascii_chart(v);
    const int n = v.n();
    for (const Cell& c : forced_zeros(v, w)) {
        out[static_cast<std::size_t>((c.row - 1) * (n + 1) + (c.col - 1))] = 'x';
    }
    return out;
}

}  // namespace mskl
