#include "facetforest/betti_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace facetforest {

void BettiTable::add(int i, int j, std::int64_t value) {
    if (i < 0) throw std::invalid_argument("BettiTable::add: only rows i >= 0 are stored");
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace({i, j}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

void BettiTable::add_shifted(const BettiTable& src, int di, int dj) {
    if (di < 1) throw std::invalid_argument("BettiTable::add_shifted: shift must keep rows nonnegative");
    add(di - 1, dj, 1);  // src's implicit β_{-1,0}
    for (const auto& [ij, v] : src.entries_) add(ij.first + di, ij.second + dj, v);
}

int BettiTable::projdim() const {
    if (entries_.empty()) throw std::domain_error("projdim: undefined for the zero ideal");
    int m = 0;
    for (const auto& [ij, v] : entries_) m = std::max(m, ij.first);
    return m;
}

int BettiTable::reg_literal() const {
    if (entries_.empty()) throw std::domain_error("reg_literal: undefined for the zero ideal");
    int m = 0;
    for (const auto& [ij, v] : entries_) m = std::max(m, ij.second - ij.first);
    return m;
}

int BettiTable::reg_diagram() const {
    if (entries_.empty()) throw std::domain_error("reg_diagram: undefined for the zero ideal");
    int m = 0;
    for (const auto& [ij, v] : entries_) m = std::max(m, ij.second - ij.first - 1);
    return m;
}

std::string betti_diagram(const BettiTable& t, bool literal_rows) {
    if (t.is_zero_ideal()) return "(zero ideal)\n";
    int imax = 0, rmin = 0, rmax = 0;
    bool first = true;
    int drop = literal_rows ? 0 : 1;
    for (const auto& [ij, v] : t.entries()) {
        int r = ij.second - ij.first - drop;
        if (first) {
            rmin = rmax = r;
            first = false;
        }
        imax = std::max(imax, ij.first);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    std::int64_t vmax = 0;
    for (const auto& [ij, v] : t.entries()) vmax = std::max(vmax, v);

    auto width_of = [](std::int64_t x) {
        int w = 1;
        while (x >= 10) {
            x /= 10;
            ++w;
        }
        return w;
    };
    int cell = std::max(width_of(vmax), width_of(imax));
    int label = std::max(width_of(std::max(rmax, 0)), width_of(std::max(-rmin, 0)) + (rmin < 0 ? 1 : 0));

    auto pad = [](const std::string& s, int w) { return std::string(w > (int)s.size() ? w - s.size() : 0, ' ') + s; };

    std::string out = pad("", label + 1);
    for (int i = 0; i <= imax; ++i) out += " " + pad(std::to_string(i), cell);
    out += '\n';
    for (int r = rmin; r <= rmax; ++r) {
        out += pad(std::to_string(r), label) + ":";
        for (int i = 0; i <= imax; ++i) {
            std::int64_t v = t.beta(i, i + r + drop);
            out += " " + pad(v == 0 ? "." : std::to_string(v), cell);
        }
        out += '\n';
    }
    return out;
}

}  // namespace facetforest
