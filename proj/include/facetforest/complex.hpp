#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facetforest/bits.hpp"

namespace facetforest {

// Ordered list of distinct vertex names. Shared immutably between all vertex
// sets built over it; set operations require both sides to share a universe.
class Universe {
public:
    static std::shared_ptr<const Universe> make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index(std::string_view name) const;

    // True when every vertex name is a single character, which selects the
    // compact rendering "xyz" instead of "x*y*z".
    bool single_letter() const { return single_letter_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    bool single_letter_ = true;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Subset of a universe's vertices. Identified with the squarefree monomial
// whose support it is, so "degree" means cardinality and "lcm" means union.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(UniversePtr universe, Bits bits);

    static VertexSet empty_set(UniversePtr universe);
    static VertexSet of(UniversePtr universe, const std::vector<std::string>& names);

    const UniversePtr& universe() const { return universe_; }
    const Bits& bits() const { return bits_; }

    int size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(int vertex) const { return bits_.test(vertex); }
    bool contains(const VertexSet& other) const { return same(other), other.bits_.subset_of(bits_); }
    bool intersects(const VertexSet& other) const { return same(other), bits_.intersects(other.bits_); }

    VertexSet operator|(const VertexSet& o) const { return same(o), VertexSet(universe_, bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return same(o), VertexSet(universe_, bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return same(o), VertexSet(universe_, bits_ - o.bits_); }

    bool operator==(const VertexSet& o) const { return same(o), bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::vector<std::string> names() const;
    std::string to_string() const;  // "yz" or "y*z"; empty set renders as "1"

private:
    UniversePtr universe_;
    Bits bits_;

    bool same(const VertexSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("VertexSet: universe mismatch");
        return true;
    }
};

// Nonempty vertex set playing the role of a facet (equivalently a minimal
// monomial generator).
class Facet {
public:
    explicit Facet(VertexSet vertices);

    const VertexSet& vertices() const { return v_; }
    int degree() const { return v_.size(); }
    const UniversePtr& universe() const { return v_.universe(); }
    std::string to_string() const { return v_.to_string(); }

    bool operator==(const Facet& o) const { return v_ == o.v_; }
    bool operator!=(const Facet& o) const { return v_ != o.v_; }

private:
    VertexSet v_;
};

inline Facet lcm_facets(const Facet& a, const Facet& b) { return Facet(a.vertices() | b.vertices()); }

// Label-sensitive fingerprint of (universe names, facet mask multiset as a
// sorted set). Used as a memo key; equal keys mean equal complexes.
using CanonicalKey = std::string;

// Facet complex: ordered list of pairwise inclusion-incomparable facets over
// one universe. The facet order is part of the value (facets are addressed by
// index everywhere), but canonical_key() and same_facet_set() ignore it.
class Complex {
public:
    Complex() = default;
    Complex(UniversePtr universe, std::vector<Facet> facets);

    int facet_count() const { return static_cast<int>(facets_.size()); }
    bool empty() const { return facets_.empty(); }
    const Facet& facet(int i) const { return facets_.at(i); }
    const std::vector<Facet>& facets() const { return facets_; }
    const UniversePtr& universe() const { return universe_; }

    Complex remove_facet(int i) const;
    // Keeps exactly the facets at the given indices, in the given order.
    Complex subcollection(const std::vector<int>& indices) const;

    VertexSet vertex_support() const;

    bool same_facet_set(const Complex& o) const;
    CanonicalKey canonical_key() const;

    std::string to_string() const;  // "xyz, yzv, yu"

private:
    UniversePtr universe_;
    std::vector<Facet> facets_;
};

// Drops every set that contains another one earlier or later in the list and
// drops duplicates (first occurrence wins). Survivors keep their order. This
// is both generator minimalization and the cleanup step after localization.
std::vector<VertexSet> keep_inclusion_minimal(const std::vector<VertexSet>& sets);

// Monomial comparison in the universe's variable order (earlier variable =
// higher rank): at the first variable where membership differs, the set that
// has it is the greater monomial.
bool lex_greater(const VertexSet& a, const VertexSet& b);

struct ParseOptions {
    // Empty: single-letter mode, each [a-zA-Z] character is a vertex.
    // Nonempty: the vertex names; facets are written name("*"name)*.
    std::vector<std::string> vars;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

struct ParseResult {
    Complex complex;
    // Set when comparable generators were dropped to restore minimality.
    bool minimalized = false;
};

// Parses "xyz, yzv, yu" (single-letter) or "x*y, y*z*u" (with vars). Vertex
// order of the universe is first appearance unless vars are given.
ParseResult parse_ideal(std::string_view text, const ParseOptions& opts = {});

std::string render_ideal(const Complex& c);

}  // namespace facetforest
