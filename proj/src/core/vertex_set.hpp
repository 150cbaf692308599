#ifndef SPT_VERTEX_SET_HPP
#define SPT_VERTEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spt {

// Canonical fixed-width bit-vector over vertex ids 0..n-1. Two equal sets
// compare equal bitwise; trailing bits past the universe are always zero.
class VertexSet {
public:
    VertexSet() : universe_(0) {}
    explicit VertexSet(uint32_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(uint32_t universe, std::initializer_list<uint32_t> members);
    static VertexSet of(uint32_t universe, const std::vector<uint32_t>& members);

    uint32_t universe() const { return universe_; }
    bool empty() const;
    uint32_t count() const;

    bool test(uint32_t v) const;
    void set(uint32_t v);
    void reset(uint32_t v);

    // Ascending member list.
    std::vector<uint32_t> elements() const;
    // Smallest member >= from, or universe() when none.
    uint32_t next(uint32_t from) const;

    bool intersects(const VertexSet& other) const;
    bool contains(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& subtract(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Lexicographic order on ascending member lists: {0,2} < {0,3} < {1,3},
    // and a set precedes any proper superset sharing its prefix.
    bool operator<(const VertexSet& other) const;

    struct Hash {
        size_t operator()(const VertexSet& s) const;
    };

    std::string to_string() const; // "{0,2,5}"

private:
    void check_range(uint32_t v) const;

    uint32_t universe_;
    std::vector<uint64_t> words_;
};

} // namespace spt

#endif // SPT_VERTEX_SET_HPP
