#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tav/permutation.hpp"
#include "tav/word.hpp"

namespace tav {

inline constexpr size_t kDefaultOrderBound = 10000;

// Permutation group with an explicit element list. Elements are numbered in
// breadth-first order from the identity (index 0), multiplying on the right
// by the generators in order. Products read left to right: g*h applies g
// first, then h.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_generators(size_t degree, const std::vector<Perm>& gens,
                                       size_t order_bound = kDefaultOrderBound);

    size_t order() const { return elements_.size(); }
    size_t degree() const { return degree_; }
    size_t identity() const { return 0; }
    const std::vector<Perm>& generators() const { return gens_; }
    // element index of each generator
    const std::vector<size_t>& generator_indices() const { return gen_index_; }

    const Perm& element(size_t i) const { return elements_.at(i); }
    std::optional<size_t> find(const Perm& p) const;
    size_t index_of(const Perm& p) const;

    size_t mul(size_t a, size_t b) const;
    size_t inv(size_t a) const { return inv_[a]; }
    // g x g^-1
    size_t conj(size_t g, size_t x) const { return mul(mul(g, x), inv_[g]); }
    size_t pow(size_t a, int64_t e) const;
    size_t element_order(size_t a) const;
    // evaluate a word in the generators
    size_t evaluate(const Word& w) const;
    // a word in the generators representing element i (BFS tree path)
    Word word_for(size_t i) const;

    bool is_abelian() const;
    // sorted element indices of the subgroup generated by gens
    std::vector<size_t> subgroup_closure(const std::vector<size_t>& gens) const;
    std::vector<size_t> normal_closure(const std::vector<size_t>& seeds) const;
    std::vector<size_t> commutator_subgroup() const;
    // classes ordered by smallest element index, each sorted
    const std::vector<std::vector<size_t>>& conjugacy_classes() const;
    size_t class_of(size_t g) const;

private:
    size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<size_t> gen_index_;
    std::vector<Perm> elements_;
    std::vector<size_t> inv_;
    std::vector<size_t> parent_;
    std::vector<uint32_t> parent_gen_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<uint32_t> table_; // multiplication table for small groups
    std::vector<std::vector<size_t>> classes_;
    std::vector<size_t> class_index_;

    static std::string key(const Perm& p);
};

// right regular representation: e_h * rho(g) = e_{hg}; entry [h] of the
// returned permutation is the index of h*g
Perm regular_permutation(const FiniteGroup& g, size_t elem);
// dense 0/1 matrix of the above, M[i][perm[i]] = 1
std::vector<std::vector<int>> regular_representation(const FiniteGroup& g, size_t elem);

} // namespace tav
