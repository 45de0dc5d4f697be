#include "mskl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mskl/error.hpp"

namespace mskl {

namespace {

void validate_window(const std::vector<int>& win) {
    const int n = static_cast<int>(win.size());
    if (n == 0) throw domain_error("permutation: empty one-line word");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : win) {
        if (v < 1 || v > n) {
            throw domain_error("permutation: value " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw domain_error("permutation: repeated value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

}  // namespace

Permutation::Permutation(int n) {
    if (n < 1) throw domain_error("permutation: n must be positive");
    win_.resize(static_cast<std::size_t>(n));
    std::iota(win_.begin(), win_.end(), 1);
}

Permutation::Permutation(std::vector<int> window) : win_(std::move(window)) {
    validate_window(win_);
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::longest(int n) {
    Permutation w(n);
    std::reverse(w.win_.begin(), w.win_.end());
    return w;
}

Permutation Permutation::parse(const std::string& text) {
    std::string body = text;
    // Strip optional brackets.
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!body.empty() && is_space(body.front())) body.erase(body.begin());
    while (!body.empty() && is_space(body.back())) body.pop_back();
    if (!body.empty() && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) throw domain_error("permutation: empty input");

    std::vector<int> win;
    const bool has_sep = body.find_first_of(", \t") != std::string::npos;
    if (has_sep) {
        std::string token;
        std::istringstream in(body);
        int entry = 0;
        while (std::getline(in, token, ',')) {
            std::istringstream parts(token);
            std::string piece;
            while (parts >> piece) {
                ++entry;
                try {
                    std::size_t used = 0;
                    int v = std::stoi(piece, &used);
                    if (used != piece.size()) throw std::invalid_argument(piece);
                    win.push_back(v);
                } catch (const std::exception&) {
                    throw domain_error("permutation: bad token '" + piece + "' at entry " +
                                       std::to_string(entry));
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < body.size(); ++i) {
            const char c = body[i];
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw domain_error(std::string("permutation: bad character '") + c +
                                   "' at position " + std::to_string(i + 1));
            }
            win.push_back(c - '0');
        }
    }
    return Permutation(std::move(win));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(win_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>(win_[i - 1]) - 1] = i;
    Permutation out(1);
    out.win_ = std::move(inv);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw domain_error("permutation: size mismatch in composition");
    std::vector<int> win(a.win_.size());
    for (int i = 1; i <= a.n(); ++i) win[i - 1] = a(b(i));
    Permutation out(1);
    out.win_ = std::move(win);
    return out;
}

Permutation Permutation::swap_positions(int a, int b) const {
    if (a < 1 || b < 1 || a > n() || b > n() || a == b) {
        throw domain_error("permutation: bad transposition positions");
    }
    Permutation out = *this;
    std::swap(out.win_[a - 1], out.win_[b - 1]);
    return out;
}

Permutation Permutation::swap_values(int a, int b) const {
    if (a < 1 || b < 1 || a > n() || b > n() || a == b) {
        throw domain_error("permutation: bad transposition values");
    }
    Permutation out = *this;
    for (int& v : out.win_) {
        if (v == a) {
            v = b;
        } else if (v == b) {
            v = a;
        }
    }
    return out;
}

Permutation Permutation::right_simple(int i) const {
    if (i < 1 || i >= n()) throw domain_error("permutation: simple reflection out of range");
    return swap_positions(i, i + 1);
}

int Permutation::rank(int a, int b) const {
    int count = 0;
    for (int i = 1; i <= b; ++i) {
        if ((*this)(i) >= a) ++count;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::rank_table() const {
    const int nn = n();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(nn) + 1,
                                    std::vector<int>(static_cast<std::size_t>(nn) + 1, 0));
    for (int a = nn; a >= 1; --a) {
        for (int b = 1; b <= nn; ++b) {
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) - 1] +
                ((*this)(b) >= a ? 1 : 0);
        }
    }
    return t;
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 1; i <= n(); ++i) {
        for (int j = i + 1; j <= n(); ++j) {
            if ((*this)(i) > (*this)(j)) ++count;
        }
    }
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

bool Permutation::contains_pattern(const std::vector<int>& pattern) const {
    const int k = static_cast<int>(pattern.size());
    if (k == 0 || k > n()) return k == 0;
    // Depth-first search over index subsequences, pruning on relative order.
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    auto consistent = [&](int next_pos) {
        const int j = static_cast<int>(chosen.size());  // pattern position being filled
        for (int t = 0; t < j; ++t) {
            const bool pat_less = pattern[static_cast<std::size_t>(t)] < pattern[static_cast<std::size_t>(j)];
            const bool win_less = (*this)(chosen[static_cast<std::size_t>(t)]) < (*this)(next_pos);
            if (pat_less != win_less) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        const int remaining = k - static_cast<int>(chosen.size());
        for (int pos = start; pos + remaining - 1 <= n(); ++pos) {
            if (!consistent(pos)) continue;
            chosen.push_back(pos);
            if (self(self, pos + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 1);
}

std::uint64_t Permutation::lex_index() const {
    const int nn = n();
    std::uint64_t idx = 0;
    for (int i = 1; i <= nn; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j <= nn; ++j) {
            if ((*this)(j) < (*this)(i)) ++smaller_later;
        }
        idx += static_cast<std::uint64_t>(smaller_later) * factorial(nn - i);
    }
    return idx;
}

Permutation Permutation::from_lex_index(int n, std::uint64_t idx) {
    if (n < 1) throw domain_error("permutation: n must be positive");
    if (idx >= factorial(n)) throw domain_error("permutation: lex index out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> win;
    win.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto digit = static_cast<std::size_t>(idx / f);
        idx %= f;
        win.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(std::move(win));
}

std::string Permutation::str() const {
    std::string out;
    if (n() <= 9) {
        for (int v : win_) out += static_cast<char>('0' + v);
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < win_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(win_[i]);
    }
    out += "]";
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw domain_error("factorial: out of 64-bit range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace mskl
