#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxstar/diagram.hpp"
#include "coxstar/rootsys.hpp"

namespace coxstar {

using Word = std::vector<int>;

class Element;

/// Computation context for one diagram: the root system for every type that
/// has one, or the dihedral order m for a standalone general I2(m).
/// Immutable once built; elements hold a pointer to their group.
class Group {
  public:
    explicit Group(CoxeterDiagram d);
    static Group of(const std::string& type) { return Group(parse_type(type)); }

    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;

    const CoxeterDiagram& diagram() const { return diag_; }
    int rank() const { return diag_.rank(); }
    bool dihedral() const { return dihedral_m_ > 0; }
    int dihedral_bond() const { return dihedral_m_; }
    const RootSystem& roots() const { return *rs_; }

    Element identity() const;
    Element generator(int label) const;
    Element from_word(const Word& w) const;

  private:
    CoxeterDiagram diag_;
    std::optional<RootSystem> rs_;
    int dihedral_m_ = 0;
};

/// A group element. Root-system groups store the images of the positive
/// roots under the element's action (the negative half is determined by
/// commutation with negation); general dihedral groups store the normal
/// form (length, first letter). Length is cached.
class Element {
  public:
    int length() const { return static_cast<int>(len_); }
    const Group& group() const { return *group_; }
    bool is_identity() const { return len_ == 0; }

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    std::size_t hash() const;

  private:
    friend class Group;
    friend Element mul(const Element&, const Element&);
    friend Element inverse(const Element&);
    friend NodeSet left_descents(const Element&);
    friend NodeSet right_descents(const Element&);
    friend bool has_left_descent(const Element&, int);
    friend void left_mul_in_place(Element&, int);

    const Group* group_ = nullptr;
    std::vector<RootIndex> perm_;  // root-system groups only
    std::uint32_t len_ = 0;
    std::uint8_t first_ = 0;  // dihedral normal form: first letter when len_ > 0
};

struct ElementHash {
    std::size_t operator()(const Element& x) const { return x.hash(); }
};

/// Group product x y (not the Demazure product).
Element mul(const Element& x, const Element& y);
Element inverse(const Element& x);

/// i is a left descent of x iff l(s_i x) < l(x) iff x^{-1}(alpha_i) < 0.
NodeSet left_descents(const Element& x);
/// i is a right descent of x iff x(alpha_i) < 0.
NodeSet right_descents(const Element& x);
bool has_left_descent(const Element& x, int label);

/// x <- s_label * x.
void left_mul_in_place(Element& x, int label);

/// ShortLex-minimal reduced word: repeatedly emit the smallest left descent.
Word canonical_word(const Element& x);

/// Letters appearing in any (hence every) reduced word of x.
NodeSet support(const Element& x);

/// Bruhat order, via the lifting property on the smallest descent of w.
bool bruhat_leq(const Element& u, const Element& w);

/// "1 2 1"; the identity renders as the empty string.
std::string word_str(const Word& w);
/// Parses a space-separated generator word; letters must lie in 1..rank.
Word parse_word(const std::string& text, int rank);

}  // namespace coxstar
