#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxstar/element.hpp"

namespace coxstar {

/// Breadth-first closure of a fully enumerable group, with index tables
/// for multiplication by generators. BFS depth doubles as an independent
/// length function.
struct GroupEnumeration {
    const Group* group = nullptr;
    std::vector<Element> elements;  // BFS order; index 0 is the identity
    std::vector<int> length;        // BFS depth per index
    std::vector<std::vector<int>> by_length;
    std::vector<std::vector<std::uint32_t>> right_mul;  // [label-1][idx]
    std::unordered_map<Element, std::uint32_t, ElementHash> index;

    std::uint32_t index_of(const Element& x) const { return index.at(x); }
    std::size_t size() const { return elements.size(); }
};

/// Product of the classical orders of the components, capped at `cap`.
std::uint64_t classical_order(const CoxeterDiagram& d, std::uint64_t cap = UINT64_MAX);

/// Enumerates the group; throws GuardExceeded if the classical order
/// exceeds size_guard. The closure size is checked against that order.
GroupEnumeration enumerate(const Group& g, std::uint64_t size_guard = 50000);

/// Bitset (64-bit words over enumeration indices) of {u : u <= w}, built
/// definitionally: products of all subsequences of one reduced word of w.
std::vector<std::uint64_t> bruhat_downset(const GroupEnumeration& en, const Element& w);

/// Definitional subword test for the Bruhat order.
bool bruhat_subword(const Element& u, const Element& w, const GroupEnumeration& en);

/// Maximum of {uv : u <= x, v <= y}; throws NoUniqueExtremum if the set
/// has no unique maximum (which would falsify the product lemma).
Element star_def(const Element& x, const Element& y, const GroupEnumeration& en);

/// Minimum of {uy : u <= x}; throws NoUniqueExtremum if not unique.
Element down_def(const Element& x, const Element& y, const GroupEnumeration& en);

struct CrossCheckReport {
    std::string type_name;
    std::size_t group_size = 0;
    long bruhat_pairs = 0;
    long star_pairs = 0;
    long down_pairs = 0;
    long witness_pairs = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Exhaustive agreement of the definitional oracles with the fold
/// algorithms, plus the max-lemma witness equations, over all pairs.
CrossCheckReport cross_check(const Group& g, std::uint64_t size_guard = 50000);

}  // namespace coxstar
