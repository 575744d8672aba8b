#include "facetforest/complex.hpp"

#include <algorithm>
#include <cctype>

namespace facetforest {

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> names) {
    auto u = std::make_shared<Universe>();
    u->names_ = std::move(names);
    for (int i = 0; i < static_cast<int>(u->names_.size()); ++i) {
        const std::string& n = u->names_[i];
        if (n.empty()) throw std::invalid_argument("Universe: empty vertex name");
        if (!u->index_.emplace(n, i).second)
            throw std::invalid_argument("Universe: duplicate vertex name '" + n + "'");
        if (n.size() > 1) u->single_letter_ = false;
    }
    return u;
}

std::optional<int> Universe::index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexSet::VertexSet(UniversePtr universe, Bits bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
    if (!universe_) throw std::invalid_argument("VertexSet: null universe");
    if (bits_.capacity() != universe_->size()) throw std::invalid_argument("VertexSet: bits sized for a different universe");
}

VertexSet VertexSet::empty_set(UniversePtr universe) {
    int n = universe->size();
    return VertexSet(std::move(universe), Bits(n));
}

VertexSet VertexSet::of(UniversePtr universe, const std::vector<std::string>& names) {
    Bits b(universe->size());
    for (const std::string& n : names) {
        auto i = universe->index(n);
        if (!i) throw std::invalid_argument("VertexSet: unknown vertex '" + n + "'");
        b.set(*i);
    }
    return VertexSet(std::move(universe), std::move(b));
}

std::vector<std::string> VertexSet::names() const {
    std::vector<std::string> out;
    bits_.for_each_bit([&](int i) { out.push_back(universe_->name(i)); });
    return out;
}

std::string VertexSet::to_string() const {
    if (bits_.none()) return "1";
    std::string out;
    bool sep = !universe_->single_letter();
    bits_.for_each_bit([&](int i) {
        if (sep && !out.empty()) out += '*';
        out += universe_->name(i);
    });
    return out;
}

Facet::Facet(VertexSet vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw std::invalid_argument("Facet: empty vertex set");
}

Complex::Complex(UniversePtr universe, std::vector<Facet> facets)
    : universe_(std::move(universe)), facets_(std::move(facets)) {
    if (!universe_) throw std::invalid_argument("Complex: null universe");
    for (const Facet& f : facets_)
        if (f.universe() != universe_) throw std::invalid_argument("Complex: facet from a different universe");
    for (int i = 0; i < facet_count(); ++i)
        for (int j = i + 1; j < facet_count(); ++j) {
            const VertexSet& a = facets_[i].vertices();
            const VertexSet& b = facets_[j].vertices();
            if (a.contains(b) || b.contains(a))
                throw std::invalid_argument("Complex: facets F" + std::to_string(i) + " and F" + std::to_string(j) +
                                            " are comparable");
        }
}

Complex Complex::remove_facet(int i) const {
    if (i < 0 || i >= facet_count()) throw std::out_of_range("remove_facet: no facet F" + std::to_string(i));
    std::vector<Facet> rest;
    rest.reserve(facets_.size() - 1);
    for (int k = 0; k < facet_count(); ++k)
        if (k != i) rest.push_back(facets_[k]);
    return Complex(universe_, std::move(rest));
}

Complex Complex::subcollection(const std::vector<int>& indices) const {
    std::vector<Facet> sel;
    sel.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= facet_count()) throw std::out_of_range("subcollection: no facet F" + std::to_string(i));
        sel.push_back(facets_[i]);
    }
    return Complex(universe_, std::move(sel));
}

VertexSet Complex::vertex_support() const {
    if (!universe_) throw std::logic_error("vertex_support: default-constructed complex");
    VertexSet s = VertexSet::empty_set(universe_);
    for (const Facet& f : facets_) s = s | f.vertices();
    return s;
}

bool Complex::same_facet_set(const Complex& o) const {
    if (universe_ != o.universe_) throw std::invalid_argument("same_facet_set: universe mismatch");
    if (facet_count() != o.facet_count()) return false;
    // Facets are pairwise distinct, so mutual inclusion of the lists suffices.
    for (const Facet& f : facets_) {
        bool found = false;
        for (const Facet& g : o.facets_)
            if (f == g) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

CanonicalKey Complex::canonical_key() const {
    std::string key;
    if (universe_) {
        for (const std::string& n : universe_->names()) {
            key += n;
            key += '\0';
        }
    }
    key += '\1';
    std::vector<Bits> masks;
    masks.reserve(facets_.size());
    for (const Facet& f : facets_) masks.push_back(f.vertices().bits());
    std::sort(masks.begin(), masks.end(), [](const Bits& a, const Bits& b) { return Bits::compare(a, b) < 0; });
    for (const Bits& m : masks) {
        for (int k = 0; k < m.word_count(); ++k) {
            std::uint64_t w = m.word(k);
            for (int byte = 0; byte < 8; ++byte) key += static_cast<char>((w >> (8 * byte)) & 0xff);
        }
    }
    return key;
}

std::string Complex::to_string() const {
    std::string out;
    for (const Facet& f : facets_) {
        if (!out.empty()) out += ", ";
        out += f.to_string();
    }
    return out;
}

std::vector<VertexSet> keep_inclusion_minimal(const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < sets.size() && !drop; ++j) {
            if (j == i) continue;
            if (sets[i] == sets[j]) {
                drop = j < i;  // keep the first copy
            } else if (sets[i].contains(sets[j])) {
                drop = true;
            }
        }
        if (!drop) out.push_back(sets[i]);
    }
    return out;
}

bool lex_greater(const VertexSet& a, const VertexSet& b) {
    Bits d = a.bits() ^ b.bits();
    int i = d.lowest_bit();
    return i >= 0 && a.bits().test(i);
}

namespace {

struct RawFacets {
    std::vector<std::string> names;                // discovered universe, in order
    std::unordered_map<std::string, int> name_ix;
    std::vector<std::vector<int>> facets;

    int vertex(const std::string& n, std::size_t pos, bool allow_new) {
        auto it = name_ix.find(n);
        if (it != name_ix.end()) return it->second;
        if (!allow_new) throw ParseError("unknown vertex '" + n + "'", pos);
        int i = static_cast<int>(names.size());
        names.push_back(n);
        name_ix.emplace(n, i);
        return i;
    }
};

void finish_facet(RawFacets& raw, std::vector<int>& cur, std::size_t pos) {
    if (cur.empty()) throw ParseError("empty facet", pos);
    raw.facets.push_back(cur);
    cur.clear();
}

RawFacets scan_single_letter(std::string_view text) {
    RawFacets raw;
    std::vector<int> cur;
    std::size_t last = 0;
    bool saw_any = false;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        saw_any = true;
        last = pos;
        if (ch == ',') {
            finish_facet(raw, cur, pos);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            int v = raw.vertex(std::string(1, ch), pos, true);
            if (std::find(cur.begin(), cur.end(), v) != cur.end())
                throw ParseError(std::string("repeated vertex '") + ch + "' in facet (generators must be squarefree)",
                                 pos);
            cur.push_back(v);
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", pos);
        }
    }
    if (!saw_any) throw ParseError("empty ideal", 0);
    finish_facet(raw, cur, last + 1);
    return raw;
}

RawFacets scan_with_vars(std::string_view text, const std::vector<std::string>& vars) {
    RawFacets raw;
    for (const std::string& v : vars) {
        if (v.empty()) throw std::invalid_argument("parse_ideal: empty vertex name in vars");
        if (raw.name_ix.count(v)) throw std::invalid_argument("parse_ideal: duplicate vertex name '" + v + "' in vars");
        raw.name_ix.emplace(v, static_cast<int>(raw.names.size()));
        raw.names.push_back(v);
    }
    std::vector<int> cur;
    std::string token;
    std::size_t token_pos = 0;
    bool saw_any = false;
    auto flush_token = [&](std::size_t pos) {
        if (token.empty()) throw ParseError("missing vertex name", pos);
        int v = raw.vertex(token, token_pos, false);
        if (std::find(cur.begin(), cur.end(), v) != cur.end())
            throw ParseError("repeated vertex '" + token + "' in facet (generators must be squarefree)", token_pos);
        cur.push_back(v);
        token.clear();
    };
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        saw_any = true;
        if (ch == ',') {
            flush_token(pos);
            finish_facet(raw, cur, pos);
        } else if (ch == '*') {
            flush_token(pos);
        } else {
            if (token.empty()) token_pos = pos;
            token += ch;
        }
    }
    if (!saw_any) throw ParseError("empty ideal", 0);
    flush_token(text.size());
    finish_facet(raw, cur, text.size());
    return raw;
}

}  // namespace

ParseResult parse_ideal(std::string_view text, const ParseOptions& opts) {
    RawFacets raw = opts.vars.empty() ? scan_single_letter(text) : scan_with_vars(text, opts.vars);
    UniversePtr u = Universe::make(raw.names);
    std::vector<VertexSet> sets;
    sets.reserve(raw.facets.size());
    for (const std::vector<int>& fc : raw.facets) {
        Bits b(u->size());
        for (int v : fc) b.set(v);
        sets.emplace_back(u, std::move(b));
    }
    std::vector<VertexSet> minimal = keep_inclusion_minimal(sets);
    ParseResult res;
    res.minimalized = minimal.size() != sets.size();
    std::vector<Facet> facets;
    facets.reserve(minimal.size());
    for (VertexSet& s : minimal) facets.emplace_back(std::move(s));
    res.complex = Complex(u, std::move(facets));
    return res;
}

std::string render_ideal(const Complex& c) { return c.to_string(); }

}  // namespace facetforest
