#pragma once

#include "zacyclic/homology.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace zac {

// A word is a sequence of non-zero letters: +g means generator g, -g its
// inverse; generators are numbered 1..generators.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word invert_word(const Word& w);

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;  // freely and cyclically reduced, non-empty

    std::size_t total_length() const;
    void normalize();  // reduce relators, drop empties, sort
};

// Generators: non-tree edges of a BFS spanning tree rooted at `basepoint`
// (lexicographic neighbor order), numbered in lexicographic edge order.
// Relators: one per triangle.
Presentation edge_path_presentation(const SimplicialComplex& K, const Label& basepoint);

struct TietzeResult {
    Presentation presentation;
    bool budget_exceeded = false;
};

// Fixpoint iteration of: free/cyclic reduction, removal of empty relators,
// elimination of a generator defined by a length-1/length-2 relator or
// occurring exactly once in some relator. Never grows the presentation
// beyond max_total_length.
TietzeResult tietze_simplify(Presentation p, std::size_t max_total_length = 1000000,
                             int max_passes = 1000);

// SNF of the relator exponent-sum matrix.
HomologyGroup abelianization(const Presentation& p);

// Permutation of {0..degree-1}.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int degree);
    // one-line notation constructor; validates bijectivity
    explicit Permutation(std::vector<int> imgs);
    Permutation() = default;

    int degree() const { return static_cast<int>(images.size()); }
    Permutation compose(const Permutation& other) const;  // this ∘ other
    Permutation inverse() const;
    bool is_identity() const;
    auto operator<=>(const Permutation&) const = default;
    std::string cycle_string() const;  // e.g. "(1 2 3)(4 5)"
};

struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;

    // full element list by closure, sorted
    std::vector<Permutation> elements() const;
};

PermGroup alternating_group(int n);

// Backtracking search for a surjective homomorphism onto `target`.
// Requires p.generators <= max_generators. Returns generator images, or
// nullopt if no epimorphism exists.
std::optional<std::vector<Permutation>> find_epimorphism(const Presentation& p,
                                                         const PermGroup& target,
                                                         int max_generators = 8);

// Re-checks a claimed homomorphism: every relator maps to the identity.
bool verify_homomorphism(const Presentation& p, const std::vector<Permutation>& images);

struct CosetResult {
    bool completed = false;
    std::size_t order = 0;        // valid iff completed
    std::size_t cosets_defined = 0;
};

// Todd-Coxeter coset enumeration (HLT) over the trivial subgroup.
CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets = 100000);

}  // namespace zac
