#include "core/vertex_set.hpp"

#include <bit>
#include <string>

#include "core/errors.hpp"

namespace spt {

VertexSet VertexSet::of(uint32_t universe, std::initializer_list<uint32_t> members) {
    VertexSet s(universe);
    for (uint32_t v : members) s.set(v);
    return s;
}

VertexSet VertexSet::of(uint32_t universe, const std::vector<uint32_t>& members) {
    VertexSet s(universe);
    for (uint32_t v : members) s.set(v);
    return s;
}

void VertexSet::check_range(uint32_t v) const {
    if (v >= universe_)
        fail(ErrorCode::invalid_argument,
             "vertex " + std::to_string(v) + " outside universe of size " +
                 std::to_string(universe_));
}

bool VertexSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

uint32_t VertexSet::count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
}

bool VertexSet::test(uint32_t v) const {
    if (v >= universe_) return false;
    return (words_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::set(uint32_t v) {
    check_range(v);
    words_[v / 64] |= uint64_t{1} << (v % 64);
}

void VertexSet::reset(uint32_t v) {
    check_range(v);
    words_[v / 64] &= ~(uint64_t{1} << (v % 64));
}

std::vector<uint32_t> VertexSet::elements() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            unsigned b = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(static_cast<uint32_t>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

uint32_t VertexSet::next(uint32_t from) const {
    if (from >= universe_) return universe_;
    size_t wi = from / 64;
    uint64_t w = words_[wi] >> (from % 64);
    if (w) return from + static_cast<uint32_t>(std::countr_zero(w));
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi])
            return static_cast<uint32_t>(wi * 64 + std::countr_zero(words_[wi]));
    return universe_;
}

bool VertexSet::intersects(const VertexSet& other) const {
    size_t n = std::min(words_.size(), other.words_.size());
    for (size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::contains(const VertexSet& other) const {
    for (size_t i = 0; i < other.words_.size(); ++i) {
        uint64_t w = i < words_.size() ? words_[i] : 0;
        if (other.words_[i] & ~w) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (universe_ != other.universe_)
        fail(ErrorCode::invalid_argument, "set union over mismatched universes");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    if (universe_ != other.universe_)
        fail(ErrorCode::invalid_argument, "set intersection over mismatched universes");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
    if (universe_ != other.universe_)
        fail(ErrorCode::invalid_argument, "set difference over mismatched universes");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator<(const VertexSet& other) const {
    // Walk both member lists in ascending order without materializing them.
    uint32_t a = next(0), b = other.next(0);
    while (true) {
        bool a_done = a >= universe_, b_done = b >= other.universe_;
        if (a_done || b_done) return a_done && !b_done; // exhausted prefix first
        if (a != b) return a < b;
        a = next(a + 1);
        b = other.next(b + 1);
    }
}

size_t VertexSet::Hash::operator()(const VertexSet& s) const {
    size_t h = std::hash<uint32_t>()(s.universe_);
    for (uint64_t w : s.words_)
        h ^= std::hash<uint64_t>()(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (uint32_t v : elements()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace spt
