// Finite abelian groups Z_{N1} x ... x Z_{Nk}, their subgroups, annihilators
// and canonical coset transversals.
//
// Elements are addressed two ways: as coordinate tuples (Element) and as a
// flat index in mixed radix with the first coordinate most significant.
// The flat index order coincides with the lexicographic order of the
// coordinates, so "sorted by index" and "sorted lexicographically" are the
// same thing everywhere in this library.
//
// The dual group is identified with G itself through the pairing
//     (x, gamma) = exp(2 pi i sum_i x_i gamma_i / N_i).

#ifndef SIS_GROUP_HPP
#define SIS_GROUP_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sis {

using Complex = std::complex<double>;

struct Element {
    std::vector<std::int64_t> coords;

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

std::string to_string(const Element& e);

class Group {
public:
    /// Throws std::invalid_argument on an empty list or a modulus < 1.
    explicit Group(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t order() const { return order_; }
    std::size_t rank() const { return moduli_.size(); }
    /// lcm of the moduli; every character value is an exponent()-th root of unity.
    std::int64_t exponent() const { return exponent_; }

    std::size_t index(const Element& e) const;
    Element element(std::size_t index) const;
    /// Reduces arbitrary integer coordinates mod N_i; throws on wrong arity.
    Element reduce(std::span<const std::int64_t> coords) const;
    bool is_valid(const Element& e) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t sub(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;

    /// Integer p in [0, exponent()) with (x, gamma) = exp(2 pi i p / exponent()).
    std::int64_t pairing_phase(std::size_t x, std::size_t gamma) const;
    Complex character(std::size_t x, std::size_t gamma) const;

    bool operator==(const Group& other) const { return moduli_ == other.moduli_; }

private:
    std::vector<std::int64_t> moduli_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
    std::int64_t exponent_ = 1;
};

Group make_group(const std::vector<std::int64_t>& moduli);

Complex character(const Group& g, const Element& x, const Element& gamma);

class Subgroup {
public:
    Subgroup(Group parent, std::vector<Element> generators, std::vector<std::size_t> elements);

    const Group& parent() const { return parent_; }
    const std::vector<Element>& generators() const { return generators_; }
    /// Flat indices, strictly increasing.
    const std::vector<std::size_t>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(std::size_t index) const { return member_[index] != 0; }
    bool contains(const Element& e) const { return contains(parent_.index(e)); }
    /// True when every element of this subgroup lies in `other`.
    bool is_subset_of(const Subgroup& other) const;
    bool is_whole_group() const { return order() == parent_.order(); }

    /// Same element set; generators are ignored.
    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elements_ == other.elements_;
    }

private:
    Group parent_;
    std::vector<Element> generators_;
    std::vector<std::size_t> elements_;
    std::vector<char> member_;
};

/// Smallest subgroup containing `gens`.
Subgroup subgroup_closure(const Group& g, const std::vector<Element>& gens);
Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Subgroup with exactly the given elements; throws sis::InconsistencyError
/// when they are not closed under the group operation.
Subgroup subgroup_from_elements(const Group& g, std::vector<std::size_t> elements);

/// True when `indices` is closed under addition and negation and contains 0.
bool is_subgroup(const Group& g, std::span<const std::size_t> indices);

/// K* = { gamma : (k, gamma) = 1 for all k in K }, as a subgroup of the
/// same Group value.
Subgroup annihilator(const Group& g, const Subgroup& k);

/// Lexicographically minimal representatives of the cosets of `sub` inside
/// `ambient`, sorted. Also records, for every element of `ambient`, which
/// representative and which element of `sub` decompose it.
class Transversal {
public:
    Transversal(const Subgroup& ambient, const Subgroup& sub);

    const Group& parent() const { return sub_.parent(); }
    const Subgroup& subgroup() const { return sub_; }
    /// Flat indices of the representatives, increasing; reps()[0] == 0.
    const std::vector<std::size_t>& reps() const { return reps_; }
    std::size_t size() const { return reps_.size(); }

    /// Position in reps() of the representative of gamma's coset; gamma must
    /// lie in the ambient subgroup.
    std::size_t rep_position(std::size_t gamma) const { return rep_pos_[gamma]; }
    /// Position in subgroup().elements() of gamma - rep.
    std::size_t offset_position(std::size_t gamma) const { return offset_pos_[gamma]; }
    /// Position of `index` among reps(), or npos when it is not a representative.
    std::size_t find_rep(std::size_t index) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Subgroup sub_;
    std::vector<std::size_t> reps_;
    std::vector<std::size_t> rep_pos_;
    std::vector<std::size_t> offset_pos_;
};

/// Transversal of G / K.
Transversal transversal(const Group& g, const Subgroup& k);
/// Transversal of ambient / K, K a subgroup of ambient.
Transversal transversal(const Subgroup& ambient, const Subgroup& k);

/// Every subgroup M with H <= M <= G, ordered by (order, elements).
std::vector<Subgroup> subgroups_between(const Group& g, const Subgroup& h);

}  // namespace sis

#endif  // SIS_GROUP_HPP
