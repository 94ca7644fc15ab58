#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coxstar/errors.hpp"

namespace coxstar {

enum class Family : std::uint8_t { A, B, D, E, F, H, I2 };

/// A subset of the node set I, stored as a bit mask over 1-based labels.
class NodeSet {
  public:
    constexpr NodeSet() = default;

    static constexpr NodeSet from_mask(std::uint32_t mask) {
        NodeSet s;
        s.bits_ = mask;
        return s;
    }
    static NodeSet of(std::initializer_list<int> labels);
    static constexpr NodeSet full(int rank) {
        return from_mask(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
    }
    /// Parses "1,2,4" (or "-" for the empty set); labels must lie in 1..rank.
    static NodeSet parse(const std::string& text, int rank);

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool contains(int label) const {
        return label >= 1 && label <= 32 && ((bits_ >> (label - 1)) & 1u) != 0;
    }
    constexpr bool is_empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    int smallest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    constexpr NodeSet with(int label) const { return from_mask(bits_ | (std::uint32_t{1} << (label - 1))); }
    constexpr NodeSet without(int label) const { return from_mask(bits_ & ~(std::uint32_t{1} << (label - 1))); }
    constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return from_mask(a.bits_ & b.bits_); }
    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return from_mask(a.bits_ | b.bits_); }
    friend constexpr bool operator==(NodeSet a, NodeSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(NodeSet a, NodeSet b) { return a.bits_ != b.bits_; }

    std::vector<int> labels() const;
    /// "1,2,4"; the empty set renders as "-".
    std::string str() const;

  private:
    std::uint32_t bits_ = 0;
};

struct IrreducibleComponent {
    Family family;
    int rank;      // node count; always 2 for I2
    int bond = 3;  // I2 only: the dihedral order m
    int first = 1; // global label of this component's local node 1

    std::string name() const;
    /// I2(m) with m outside {3,4,6}: realized without a root system.
    bool general_dihedral() const { return family == Family::I2 && bond != 6; }
};

/// Edges of one irreducible diagram in local 1-based labels: (i, j, m_ij).
/// Bourbaki labeling: A/B/D/E/F/H as usual, the branch node of E is 2,
/// the 4-bond of B sits between n-1 and n, the fork of D at n-2.
std::vector<std::array<int, 3>> component_edges(Family family, int rank, int bond);

/// A validated finite Coxeter type: components, consecutive global labels,
/// and the full Coxeter matrix. Immutable after construction.
class CoxeterDiagram {
  public:
    CoxeterDiagram() = default;  // empty diagram; placeholder only
    explicit CoxeterDiagram(std::vector<IrreducibleComponent> components);

    const std::vector<IrreducibleComponent>& components() const { return components_; }
    int rank() const { return rank_; }
    /// Coxeter matrix entry m_ij, labels 1-based.
    int bond(int i, int j) const { return coxmat_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)]; }
    bool adjacent(int i, int j) const { return i != j && bond(i, j) >= 3; }
    bool irreducible() const { return components_.size() == 1; }
    bool general_dihedral() const {
        return components_.size() == 1 && components_.front().general_dihedral();
    }
    NodeSet nodes() const { return NodeSet::full(rank_); }
    std::string name() const;

    bool operator==(const CoxeterDiagram& other) const;

  private:
    std::vector<IrreducibleComponent> components_;
    int rank_ = 0;
    std::vector<int> coxmat_;
};

/// Parses the grammar TYPE := COMP ("x" COMP)*;
/// COMP := ("A"|"B"|"D"|"E"|"F"|"H") rank | "I2(" m ")".
/// I2(3), I2(4) normalize to A2, B2; I2(6) is kept (crystallographic);
/// any other I2(m) is valid only as a standalone diagram.
CoxeterDiagram parse_type(const std::string& text);

/// Connected components of the Coxeter graph restricted to J,
/// sorted by smallest member.
std::vector<NodeSet> components_of(const CoxeterDiagram& d, NodeSet j);

/// Nodes with exactly one neighbor (the single node for rank 1).
/// Requires an irreducible diagram.
std::vector<int> end_points(const CoxeterDiagram& d);

}  // namespace coxstar
