#include "sis/group.hpp"

#include "sis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sis {

std::string to_string(const Element& e) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i) os << ',';
        os << e.coords[i];
    }
    os << ')';
    return os.str();
}

Group::Group(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    for (auto n : moduli_) {
        if (n < 1) throw std::invalid_argument("group modulus must be >= 1, got " + std::to_string(n));
    }
    strides_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        strides_[i] = order_;
        order_ *= static_cast<std::size_t>(moduli_[i]);
        exponent_ = std::lcm(exponent_, moduli_[i]);
    }
}

std::size_t Group::index(const Element& e) const {
    if (!is_valid(e)) throw std::invalid_argument("element " + to_string(e) + " is not a reduced element of the group");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) idx += static_cast<std::size_t>(e.coords[i]) * strides_[i];
    return idx;
}

Element Group::element(std::size_t index) const {
    if (index >= order_) throw std::out_of_range("element index out of range");
    Element e;
    e.coords.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        e.coords[i] = static_cast<std::int64_t>(index / strides_[i]);
        index %= strides_[i];
    }
    return e;
}

Element Group::reduce(std::span<const std::int64_t> coords) const {
    if (coords.size() != moduli_.size()) {
        throw std::invalid_argument("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                                    std::to_string(moduli_.size()) + " factors");
    }
    Element e;
    e.coords.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        auto r = coords[i] % moduli_[i];
        e.coords[i] = r < 0 ? r + moduli_[i] : r;
    }
    return e;
}

bool Group::is_valid(const Element& e) const {
    if (e.coords.size() != moduli_.size()) return false;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (e.coords[i] < 0 || e.coords[i] >= moduli_[i]) return false;
    }
    return true;
}

std::size_t Group::add(std::size_t a, std::size_t b) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = static_cast<std::size_t>(moduli_[i]);
        const auto ca = (a / strides_[i]) % n;
        const auto cb = (b / strides_[i]) % n;
        out += ((ca + cb) % n) * strides_[i];
    }
    return out;
}

std::size_t Group::neg(std::size_t a) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = static_cast<std::size_t>(moduli_[i]);
        const auto ca = (a / strides_[i]) % n;
        out += ((n - ca) % n) * strides_[i];
    }
    return out;
}

std::size_t Group::sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

std::int64_t Group::pairing_phase(std::size_t x, std::size_t gamma) const {
    std::int64_t phase = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = moduli_[i];
        const auto cx = static_cast<std::int64_t>((x / strides_[i]) % static_cast<std::size_t>(n));
        const auto cg = static_cast<std::int64_t>((gamma / strides_[i]) % static_cast<std::size_t>(n));
        phase = (phase + ((cx * cg) % n) * (exponent_ / n)) % exponent_;
    }
    return phase;
}

Complex Group::character(std::size_t x, std::size_t gamma) const {
    const auto p = pairing_phase(x, gamma);
    if (p == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(exponent_);
    return std::polar(1.0, angle);
}

Group make_group(const std::vector<std::int64_t>& moduli) { return Group(moduli); }

Complex character(const Group& g, const Element& x, const Element& gamma) {
    return g.character(g.index(x), g.index(gamma));
}

Subgroup::Subgroup(Group parent, std::vector<Element> generators, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), generators_(std::move(generators)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(parent_.order(), 0);
    for (auto e : elements_) member_.at(e) = 1;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    if (!(parent_ == other.parent_)) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](std::size_t e) { return other.contains(e); });
}

namespace {

std::vector<std::size_t> close_indices(const Group& g, std::vector<std::size_t> seeds) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> out{0};
    seen[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (auto s : seeds) {
            const auto next = g.add(cur, s);
            if (!seen[next]) {
                seen[next] = 1;
                out.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return out;
}

}  // namespace

Subgroup subgroup_closure(const Group& g, const std::vector<Element>& gens) {
    std::vector<std::size_t> seeds;
    seeds.reserve(gens.size());
    for (const auto& e : gens) seeds.push_back(g.index(e));
    return Subgroup(g, gens, close_indices(g, std::move(seeds)));
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {}, {0}); }

Subgroup whole_group(const Group& g) {
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<Element> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        Element e;
        e.coords.assign(g.rank(), 0);
        if (g.moduli()[i] > 1) {
            e.coords[i] = 1;
            gens.push_back(std::move(e));
        }
    }
    return Subgroup(g, std::move(gens), std::move(all));
}

bool is_subgroup(const Group& g, std::span<const std::size_t> indices) {
    std::vector<char> member(g.order(), 0);
    for (auto i : indices) {
        if (i >= g.order()) return false;
        member[i] = 1;
    }
    if (!member[0]) return false;
    for (auto a : indices) {
        if (!member[g.neg(a)]) return false;
        for (auto b : indices) {
            if (!member[g.add(a, b)]) return false;
        }
    }
    return true;
}

namespace {

// Keeps each element (in increasing order) that is not already generated by
// the ones kept before it.
std::vector<Element> greedy_generators(const Group& g, const std::vector<std::size_t>& elements) {
    std::vector<Element> gens;
    std::vector<std::size_t> seeds;
    std::vector<char> covered(g.order(), 0);
    covered[0] = 1;
    for (auto e : elements) {
        if (covered[e]) continue;
        seeds.push_back(e);
        gens.push_back(g.element(e));
        for (auto x : close_indices(g, seeds)) covered[x] = 1;
    }
    return gens;
}

}  // namespace

Subgroup subgroup_from_elements(const Group& g, std::vector<std::size_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(g, elements)) throw InconsistencyError("element set is not a subgroup");
    auto gens = greedy_generators(g, elements);
    return Subgroup(g, std::move(gens), std::move(elements));
}

Subgroup annihilator(const Group& g, const Subgroup& k) {
    std::vector<std::size_t> out;
    for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        const bool kills = std::all_of(k.elements().begin(), k.elements().end(),
                                       [&](std::size_t x) { return g.pairing_phase(x, gamma) == 0; });
        if (kills) out.push_back(gamma);
    }
    auto gens = greedy_generators(g, out);
    return Subgroup(g, std::move(gens), std::move(out));
}

Transversal::Transversal(const Subgroup& ambient, const Subgroup& sub) : sub_(sub) {
    const Group& g = ambient.parent();
    if (!(g == sub.parent()) || !sub.is_subset_of(ambient)) {
        throw std::invalid_argument("transversal: subgroup is not contained in the ambient subgroup");
    }
    rep_pos_.assign(g.order(), npos);
    offset_pos_.assign(g.order(), npos);
    for (auto x : ambient.elements()) {
        if (rep_pos_[x] != npos) continue;
        const auto pos = reps_.size();
        reps_.push_back(x);
        for (std::size_t j = 0; j < sub.elements().size(); ++j) {
            const auto y = g.add(x, sub.elements()[j]);
            rep_pos_[y] = pos;
            offset_pos_[y] = j;
        }
    }
}

std::size_t Transversal::find_rep(std::size_t index) const {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), index);
    if (it == reps_.end() || *it != index) return npos;
    return static_cast<std::size_t>(it - reps_.begin());
}

Transversal transversal(const Group& g, const Subgroup& k) { return Transversal(whole_group(g), k); }

Transversal transversal(const Subgroup& ambient, const Subgroup& k) { return Transversal(ambient, k); }

std::vector<Subgroup> subgroups_between(const Group& g, const Subgroup& h) {
    if (!(h.parent() == g)) throw std::invalid_argument("subgroups_between: H lives in a different group");
    // Breadth-first walk up the lattice: every subgroup above H is reached by
    // adjoining one coset representative at a time.
    std::set<std::vector<std::size_t>> seen{h.elements()};
    std::vector<Subgroup> found{h};
    for (std::size_t next = 0; next < found.size(); ++next) {
        const Subgroup cur = found[next];
        const Transversal cosets = transversal(g, cur);
        for (std::size_t i = 1; i < cosets.size(); ++i) {
            auto gens = greedy_generators(g, cur.elements());
            gens.push_back(g.element(cosets.reps()[i]));
            Subgroup bigger = subgroup_closure(g, gens);
            if (seen.insert(bigger.elements()).second) found.push_back(std::move(bigger));
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return found;
}

}  // namespace sis
