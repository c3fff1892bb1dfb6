#include "zacyclic/homology.hpp"

#include <map>
#include <stdexcept>

namespace zac {

std::string HomologyGroup::to_string() const {
    if (trivial()) return "0";
    std::string s;
    if (rank > 0) {
        s = "Z";
        if (rank > 1) s += "^" + std::to_string(rank);
    }
    for (const Int& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.get_str();
    }
    return s;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k) {
    if (k < 1 || k > K.dimension())
        throw std::invalid_argument("boundary_matrix: dimension out of range");
    auto rows = K.faces(k - 1);
    auto cols = K.faces(k);
    std::map<Simplex, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    IntegerMatrix d(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t l = 0; l < s.size(); ++l)
                if (l != i) face.push_back(s[l]);
            d(row_index.at(face), j) = sign;
            sign = -sign;
        }
    }
    return d;
}

HomologyGroup homology_from_boundaries(const IntegerMatrix& dk, const IntegerMatrix& dk1) {
    const std::size_t nk = dk.cols();
    if (dk1.rows() != nk)
        throw std::invalid_argument("homology_from_boundaries: chain dimension mismatch");
    auto snf_k = smith_normal_form(dk);
    auto snf_k1 = smith_normal_form(dk1);
    const std::size_t ker = nk - snf_k.rank;
    if (snf_k1.rank > ker)
        throw std::invalid_argument("homology_from_boundaries: not a chain complex");
    HomologyGroup h;
    h.rank = ker - snf_k1.rank;
    for (const Int& d : snf_k1.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

namespace {

IntegerMatrix zero_matrix(std::size_t r, std::size_t c) { return IntegerMatrix(r, c); }

// Augmentation map C0 -> Z (all ones).
IntegerMatrix augmentation(const SimplicialComplex& K) {
    auto f = K.f_vector();
    IntegerMatrix d(1, f.empty() ? 0 : f[0]);
    for (std::size_t j = 0; j < d.cols(); ++j) d(0, j) = 1;
    return d;
}

}  // namespace

HomologyGroup homology(const SimplicialComplex& K, int k) {
    const int dim = K.dimension();
    if (k < 0 || k > dim) throw std::invalid_argument("homology: degree out of range");
    auto f = K.f_vector();
    IntegerMatrix dk = (k == 0) ? zero_matrix(0, f[0]) : boundary_matrix(K, k);
    IntegerMatrix dk1 = (k == dim) ? zero_matrix(f[static_cast<std::size_t>(k)], 0)
                                   : boundary_matrix(K, k + 1);
    return homology_from_boundaries(dk, dk1);
}

std::vector<HomologyGroup> reduced_homology_all(const SimplicialComplex& K) {
    const int dim = K.dimension();
    std::vector<HomologyGroup> out;
    if (dim < 0) return out;
    auto f = K.f_vector();
    for (int k = 0; k <= dim; ++k) {
        IntegerMatrix dk = (k == 0) ? augmentation(K) : boundary_matrix(K, k);
        IntegerMatrix dk1 = (k == dim) ? zero_matrix(f[static_cast<std::size_t>(k)], 0)
                                       : boundary_matrix(K, k + 1);
        out.push_back(homology_from_boundaries(dk, dk1));
    }
    return out;
}

bool is_z_acyclic(const SimplicialComplex& K) {
    for (const auto& h : reduced_homology_all(K))
        if (!h.trivial()) return false;
    return !K.vertex_set().empty();
}

}  // namespace zac
