#include "zacyclic/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace zac {

Word free_reduce(Word w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(std::move(w));
    }
    return w;
}

Word invert_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

std::size_t Presentation::total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
}

void Presentation::normalize() {
    std::vector<Word> out;
    for (auto& r : relators) {
        Word w = cyclic_reduce(std::move(r));
        if (!w.empty()) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    relators = std::move(out);
}

Presentation edge_path_presentation(const SimplicialComplex& K, const Label& basepoint) {
    if (!K.has_vertex(basepoint))
        throw std::invalid_argument("edge_path_presentation: unknown basepoint " + basepoint);
    if (!is_connected(K))
        throw std::invalid_argument("edge_path_presentation: complex is disconnected");

    auto adj = adjacency(K);
    std::set<std::pair<Label, Label>> tree;  // sorted pairs
    std::set<Label> visited{basepoint};
    std::queue<Label> q;
    q.push(basepoint);
    while (!q.empty()) {
        Label v = q.front();
        q.pop();
        for (const auto& w : adj[v]) {
            if (visited.insert(w).second) {
                Label a = v, b = w;
                tree.insert({std::min(a, b), std::max(a, b)});
                q.push(w);
            }
        }
    }

    // generator per non-tree edge, in lexicographic edge order
    std::map<std::pair<Label, Label>, int> gen;
    int next = 1;
    for (const auto& e : K.faces(1)) {
        std::pair<Label, Label> p{e[0], e[1]};
        if (!tree.count(p)) gen[p] = next++;
    }

    auto letter = [&](const Label& a, const Label& b) -> int {
        // directed edge a -> b; 0 for a tree edge
        std::pair<Label, Label> p{std::min(a, b), std::max(a, b)};
        auto it = gen.find(p);
        if (it == gen.end()) return 0;
        return a < b ? it->second : -it->second;
    };

    Presentation p;
    p.generators = next - 1;
    for (const auto& t : K.faces(2)) {
        Word w;
        for (auto [a, b] : {std::pair{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}) {
            int l = letter(a, b);
            if (l != 0) w.push_back(l);
        }
        p.relators.push_back(std::move(w));
    }
    p.normalize();
    return p;
}

namespace {

// Rewrites p by the substitution gen -> replacement (a word not containing
// ±gen), removes the generator and renumbers the ones above it.
Presentation eliminate_generator(const Presentation& p, int gen, const Word& replacement) {
    auto renumber = [&](int letter) {
        int g = std::abs(letter);
        int sign = letter > 0 ? 1 : -1;
        if (g > gen) g -= 1;
        return sign * g;
    };
    Presentation out;
    out.generators = p.generators - 1;
    for (const auto& r : p.relators) {
        Word w;
        for (int letter : r) {
            if (std::abs(letter) == gen) {
                Word sub = letter > 0 ? replacement : invert_word(replacement);
                for (int s : sub) w.push_back(renumber(s));
            } else {
                w.push_back(renumber(letter));
            }
        }
        out.relators.push_back(free_reduce(std::move(w)));
    }
    out.normalize();
    return out;
}

// If some relator pins a generator to a word over the others, returns
// (generator, replacement, relator index).
std::optional<std::tuple<int, Word>> find_elimination(const Presentation& p) {
    // length-1 relators first: g = 1
    for (const auto& r : p.relators)
        if (r.size() == 1) return std::make_tuple(std::abs(r[0]), Word{});
    // length-2 relators over two distinct generators: g = h^±1
    for (const auto& r : p.relators) {
        if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
            // r = x y, so x = y^{-1}
            int g = std::abs(r[0]);
            Word repl = invert_word({r[1]});
            if (r[0] < 0) repl = invert_word(repl);
            return std::make_tuple(g, repl);
        }
    }
    // a generator occurring exactly once in some relator (and possibly in
    // other relators); prefer the shortest such relator
    std::map<int, std::size_t> occurrences;
    for (const auto& r : p.relators)
        for (int letter : r) occurrences[std::abs(letter)]++;
    std::optional<std::tuple<int, Word>> best;
    std::size_t best_len = 0;
    for (const auto& r : p.relators) {
        std::map<int, int> local;
        for (int letter : r) local[std::abs(letter)]++;
        for (std::size_t i = 0; i < r.size(); ++i) {
            int g = std::abs(r[i]);
            if (local[g] != 1) continue;
            // cyclic rotation putting r[i] first: r = x w  =>  x = w^{-1}
            Word rest;
            for (std::size_t k = 1; k < r.size(); ++k) rest.push_back(r[(i + k) % r.size()]);
            Word repl = invert_word(rest);
            if (r[i] < 0) repl = invert_word(repl);
            if (!best || r.size() < best_len) {
                best = std::make_tuple(g, repl);
                best_len = r.size();
            }
            break;
        }
    }
    return best;
}

}  // namespace

TietzeResult tietze_simplify(Presentation p, std::size_t max_total_length, int max_passes) {
    p.normalize();
    TietzeResult result;
    for (int pass = 0; pass < max_passes; ++pass) {
        if (p.generators == 0) break;
        auto elim = find_elimination(p);
        if (!elim) break;
        auto [gen, repl] = *elim;
        Presentation next = eliminate_generator(p, gen, repl);
        if (next.total_length() > max_total_length) {
            result.budget_exceeded = true;
            break;
        }
        p = std::move(next);
    }
    result.presentation = std::move(p);
    return result;
}

HomologyGroup abelianization(const Presentation& p) {
    IntegerMatrix m(p.relators.size(), p.generators);
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int letter : p.relators[i])
            m(i, std::abs(letter) - 1) += (letter > 0 ? 1 : -1);
    auto snf = smith_normal_form(m);
    HomologyGroup h;
    h.rank = p.generators - snf.rank;
    for (const Int& d : snf.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int i : images) {
        if (i < 0 || i >= static_cast<int>(images.size()) || seen[i])
            throw std::invalid_argument("permutation is not a bijection");
        seen[i] = true;
    }
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> img(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) img[i] = images[other.images[i]];
    Permutation p;
    p.images = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) img[images[i]] = static_cast<int>(i);
    Permutation p;
    p.images = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::string s;
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i] || images[i] == static_cast<int>(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(images[j]);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

std::vector<Permutation> PermGroup::elements() const {
    std::set<Permutation> closed;
    std::queue<Permutation> frontier;
    Permutation id = Permutation::identity(degree);
    closed.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        Permutation g = frontier.front();
        frontier.pop();
        for (const auto& h : generators) {
            Permutation gh = h.compose(g);
            if (closed.insert(gh).second) frontier.push(gh);
        }
    }
    return {closed.begin(), closed.end()};
}

PermGroup alternating_group(int n) {
    if (n < 3) throw std::invalid_argument("alternating_group: need n >= 3");
    PermGroup g;
    g.degree = n;
    // (0 1 2) and, for n > 3, the n-cycle or (n-1)-cycle generating A_n
    std::vector<int> c3(n);
    for (int i = 0; i < n; ++i) c3[i] = i;
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    g.generators.push_back(Permutation(c3));
    if (n > 3) {
        std::vector<int> big(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even for odd n
        } else {
            big[0] = 0;
            for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (n-1)-cycle fixing 0
        }
        g.generators.push_back(Permutation(big));
    }
    return g;
}

namespace {

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images, int degree) {
    Permutation acc = Permutation::identity(degree);
    for (int letter : w) {
        const Permutation& g = images[std::abs(letter) - 1];
        acc = acc.compose(letter > 0 ? g : g.inverse());
    }
    return acc;
}

bool generates_whole(const std::vector<Permutation>& images, std::size_t target_order,
                     int degree) {
    PermGroup sub;
    sub.degree = degree;
    sub.generators = images;
    return sub.elements().size() == target_order;
}

}  // namespace

bool verify_homomorphism(const Presentation& p, const std::vector<Permutation>& images) {
    if (static_cast<int>(images.size()) != p.generators) return false;
    int degree = images.empty() ? 1 : images[0].degree();
    for (const auto& r : p.relators)
        if (!evaluate_word(r, images, degree).is_identity()) return false;
    return true;
}

std::optional<std::vector<Permutation>> find_epimorphism(const Presentation& p,
                                                         const PermGroup& target,
                                                         int max_generators) {
    if (p.generators > max_generators)
        throw std::invalid_argument("find_epimorphism: presentation has " +
                                    std::to_string(p.generators) + " generators, above bound " +
                                    std::to_string(max_generators));
    auto elements = target.elements();
    const std::size_t order = elements.size();

    if (p.generators == 0) return std::nullopt;  // trivial group never surjects

    // search order: generators by descending relator participation
    std::vector<std::size_t> occurrences(p.generators, 0);
    for (const auto& r : p.relators)
        for (int letter : r) occurrences[std::abs(letter) - 1]++;
    std::vector<int> order_of_assign(p.generators);
    for (int i = 0; i < p.generators; ++i) order_of_assign[i] = i;
    std::stable_sort(order_of_assign.begin(), order_of_assign.end(),
                     [&](int a, int b) { return occurrences[a] > occurrences[b]; });

    std::vector<int> position(p.generators, -1);  // generator -> assignment slot
    for (int slot = 0; slot < p.generators; ++slot) position[order_of_assign[slot]] = slot;

    // relator checkable once all its generators are assigned
    std::vector<std::vector<Word>> checks(p.generators + 1);
    for (const auto& r : p.relators) {
        int last = -1;
        for (int letter : r) last = std::max(last, position[std::abs(letter) - 1]);
        checks[last + 1].push_back(r);
    }

    std::vector<Permutation> images(p.generators);
    std::vector<std::size_t> choice(p.generators, 0);

    std::function<std::optional<std::vector<Permutation>>(int)> descend =
        [&](int slot) -> std::optional<std::vector<Permutation>> {
        if (slot == p.generators) {
            if (generates_whole(images, order, target.degree)) return images;
            return std::nullopt;
        }
        for (const auto& elem : elements) {
            images[order_of_assign[slot]] = elem;
            bool ok = true;
            for (const auto& r : checks[slot + 1]) {
                if (!evaluate_word(r, images, target.degree).is_identity()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (auto found = descend(slot + 1)) return found;
        }
        return std::nullopt;
    };
    return descend(0);
}

}  // namespace zac
