#include "zacyclic/presentation.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace zac {

namespace {

constexpr int kUndefined = -1;

// HLT-style Todd-Coxeter over the trivial subgroup. Columns: generator g
// at 2(g-1), its inverse at 2(g-1)+1.
class CosetTable {
public:
    CosetTable(int generators, std::size_t max_cosets)
        : ncols_(2 * generators), max_(max_cosets) {
        define_first();
    }

    static int column(int letter) {
        int g = std::abs(letter) - 1;
        return 2 * g + (letter < 0 ? 1 : 0);
    }
    static int inverse_column(int col) { return col ^ 1; }

    int entry(int coset, int col) const { return table_[coset][col]; }
    bool alive(int c) const { return rep_[c] == c; }
    std::size_t defined() const { return table_.size(); }

    std::size_t live_count() const {
        std::size_t n = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (alive(c)) ++n;
        return n;
    }

    bool overflowed() const { return overflow_; }

    // Defines a new coset as `coset`·col; false on table overflow.
    bool define(int coset, int col) {
        if (table_.size() >= max_) {
            overflow_ = true;
            return false;
        }
        int fresh = static_cast<int>(table_.size());
        table_.push_back(std::vector<int>(ncols_, kUndefined));
        rep_.push_back(fresh);
        set(coset, col, fresh);
        return true;
    }

    int rep(int c) {
        while (rep_[c] != c) c = rep_[c] = rep_[rep_[c]];
        return c;
    }

    void set(int a, int col, int b) {
        table_[a][col] = b;
        table_[b][inverse_column(col)] = a;
    }

    // Records that two cosets are equal and processes the consequences.
    void coincide(int a, int b) {
        std::deque<std::pair<int, int>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            rep_[y] = x;
            for (int col = 0; col < ncols_; ++col) {
                int t = table_[y][col];
                if (t == kUndefined) continue;
                // drop the stale back-pointer to y
                if (table_[t][inverse_column(col)] == y)
                    table_[t][inverse_column(col)] = kUndefined;
                int rt = rep(t);
                int xt = table_[x][col];
                if (xt == kUndefined) {
                    // column actions are injective: an existing preimage of
                    // rt must coincide with x
                    int back = table_[rt][inverse_column(col)];
                    if (back != kUndefined && rep(back) != x) queue.push_back({back, x});
                    set(x, col, rt);
                } else if (rep(xt) != rt) {
                    queue.push_back({xt, t});
                }
            }
        }
    }

    // Scans relator `w` from coset c, filling gaps by defining cosets.
    // Returns false on overflow.
    bool scan_and_fill(int c, const Word& w) {
        while (true) {
            c = rep(c);
            // forward
            int f = c;
            std::size_t i = 0;
            while (i < w.size()) {
                int nxt = table_[f][column(w[i])];
                if (nxt == kUndefined) break;
                f = rep(nxt);
                ++i;
            }
            if (i == w.size()) {
                if (f != c) coincide(f, c);
                return true;
            }
            // backward
            int b = c;
            std::size_t j = w.size();
            while (j > i) {
                int prev = table_[b][column(-w[j - 1])];
                if (prev == kUndefined) break;
                b = rep(prev);
                --j;
            }
            if (j == i) {
                coincide(f, b);  // complete scan with a mismatch
                continue;        // rescan after coincidences
            }
            if (j == i + 1) {
                // deduction: f · w[i] = b
                set(f, column(w[i]), b);
                continue;
            }
            if (!define(f, column(w[i]))) return false;
        }
    }

private:
    void define_first() {
        table_.push_back(std::vector<int>(ncols_, kUndefined));
        rep_.push_back(0);
    }

    int ncols_;
    std::size_t max_;
    bool overflow_ = false;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
};

}  // namespace

CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets) {
    CosetResult result;
    if (p.generators == 0) {
        result.completed = true;
        result.order = 1;
        result.cosets_defined = 1;
        return result;
    }

    CosetTable table(p.generators, max_cosets);
    for (int c = 0; c < static_cast<int>(table.defined()); ++c) {
        if (!table.alive(c)) continue;
        for (const auto& r : p.relators) {
            if (!table.scan_and_fill(c, r)) {
                result.cosets_defined = table.defined();
                return result;  // exceeded
            }
            if (!table.alive(c)) break;  // c got merged away
        }
        if (!table.alive(c)) continue;
        for (int col = 0; col < 2 * p.generators; ++col) {
            if (!table.alive(c)) break;
            if (table.entry(c, col) == kUndefined) {
                if (!table.define(c, col)) {
                    result.cosets_defined = table.defined();
                    return result;
                }
            }
        }
    }

    result.completed = true;
    result.order = table.live_count();
    result.cosets_defined = table.defined();
    return result;
}

}  // namespace zac
