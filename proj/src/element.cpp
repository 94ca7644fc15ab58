#include "coxstar/element.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coxstar/errors.hpp"

namespace coxstar {

namespace {

int other_letter(int label) { return label == 1 ? 2 : 1; }

void check_same_group(const Element& x, const Element& y) {
    if (&x.group() == &y.group()) return;
    if (!(x.group().diagram() == y.group().diagram()))
        throw DiagramMismatch("elements belong to different diagrams");
}

void check_label(const Group& g, int label) {
    if (label < 1 || label > g.rank())
        throw std::out_of_range("generator label " + std::to_string(label) + " out of range 1.." +
                                std::to_string(g.rank()));
}

// Last letter of the alternating word (first, other, first, ...) of length k.
int dihedral_last(int first, int k) { return k % 2 == 1 ? first : other_letter(first); }

}  // namespace

Group::Group(CoxeterDiagram d) : diag_(std::move(d)) {
    if (diag_.rank() == 0) throw std::invalid_argument("empty diagram");
    if (diag_.general_dihedral())
        dihedral_m_ = diag_.components().front().bond;
    else
        rs_.emplace(RootSystem::build(diag_));
}

Element Group::identity() const {
    Element e;
    e.group_ = this;
    if (!dihedral()) {
        e.perm_.resize(rs_->npos());
        std::iota(e.perm_.begin(), e.perm_.end(), RootIndex{0});
    }
    return e;
}

Element Group::generator(int label) const {
    check_label(*this, label);
    Element e;
    e.group_ = this;
    e.len_ = 1;
    if (dihedral()) {
        e.first_ = static_cast<std::uint8_t>(label);
    } else {
        const auto& tbl = rs_->reflection_table(label);
        e.perm_.assign(tbl.begin(), tbl.begin() + rs_->npos());
    }
    return e;
}

Element Group::from_word(const Word& w) const {
    for (int l : w) check_label(*this, l);
    Element z = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) left_mul_in_place(z, *it);
    return z;
}

bool Element::operator==(const Element& other) const {
    if (group_ != other.group_ && !(group_->diagram() == other.group_->diagram())) return false;
    if (len_ != other.len_) return false;
    if (group_->dihedral()) {
        const auto m = static_cast<std::uint32_t>(group_->dihedral_bond());
        return len_ == 0 || len_ == m || first_ == other.first_;
    }
    return perm_ == other.perm_;
}

std::size_t Element::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(len_);
    mix(first_);
    for (RootIndex p : perm_) mix(p);
    return h;
}

void left_mul_in_place(Element& x, int label) {
    const Group& g = *x.group_;
    check_label(g, label);
    if (g.dihedral()) {
        const int m = g.dihedral_bond();
        const int k = static_cast<int>(x.len_);
        if (k == 0) {
            x.len_ = 1;
            x.first_ = static_cast<std::uint8_t>(label);
        } else if (k == static_cast<int>(m)) {
            x.len_ = static_cast<std::uint32_t>(m - 1);
            x.first_ = static_cast<std::uint8_t>(other_letter(label));
        } else if (label == x.first_) {
            x.len_ = static_cast<std::uint32_t>(k - 1);
            x.first_ = static_cast<std::uint8_t>(k == 1 ? 0 : other_letter(label));
        } else {
            x.len_ = static_cast<std::uint32_t>(k + 1);
            x.first_ = static_cast<std::uint8_t>(k + 1 == m ? 1 : label);
        }
        return;
    }
    const RootSystem& rs = g.roots();
    const auto& tbl = rs.reflection_table(label);
    const int n = rs.npos();
    const RootIndex target = static_cast<RootIndex>(label - 1 + n);
    bool descent = false;
    for (int k = 0; k < n; ++k) {
        const RootIndex p = x.perm_[k];
        if (p == target) descent = true;
        x.perm_[k] = tbl[p];
    }
    x.len_ += descent ? -1 : 1;
}

Element mul(const Element& x, const Element& y) {
    check_same_group(x, y);
    const Group& g = x.group();
    if (g.dihedral()) {
        Element z = y;
        const Word xw = canonical_word(x);
        for (auto it = xw.rbegin(); it != xw.rend(); ++it) left_mul_in_place(z, *it);
        return z;
    }
    const int n = g.roots().npos();
    Element z;
    z.group_ = x.group_;
    z.perm_.resize(n);
    std::uint32_t len = 0;
    for (int k = 0; k < n; ++k) {
        const RootIndex t = y.perm_[k];
        const RootIndex img = t < n ? x.perm_[t] : g.roots().flip(x.perm_[t - n]);
        z.perm_[k] = img;
        if (img >= n) ++len;
    }
    z.len_ = len;
    return z;
}

Element inverse(const Element& x) {
    const Group& g = x.group();
    if (g.dihedral()) {
        Element z = x;
        if (z.len_ > 0 && z.len_ < static_cast<std::uint32_t>(g.dihedral_bond()))
            z.first_ = static_cast<std::uint8_t>(dihedral_last(z.first_, static_cast<int>(z.len_)));
        return z;
    }
    const int n = g.roots().npos();
    Element z;
    z.group_ = x.group_;
    z.perm_.resize(n);
    for (int k = 0; k < n; ++k) {
        const RootIndex j = x.perm_[k];
        if (j < n)
            z.perm_[j] = static_cast<RootIndex>(k);
        else
            z.perm_[j - n] = static_cast<RootIndex>(k + n);
    }
    z.len_ = x.len_;
    return z;
}

NodeSet left_descents(const Element& x) {
    const Group& g = x.group();
    if (g.dihedral()) {
        if (x.len_ == 0) return NodeSet{};
        if (x.len_ == static_cast<std::uint32_t>(g.dihedral_bond())) return NodeSet::of({1, 2});
        return NodeSet::of({x.first_});
    }
    const int n = g.roots().npos();
    const int r = g.rank();
    NodeSet s;
    for (int k = 0; k < n; ++k) {
        const RootIndex p = x.perm_[k];
        if (p >= n && p - n < r) s = s.with(p - n + 1);
    }
    return s;
}

NodeSet right_descents(const Element& x) {
    const Group& g = x.group();
    if (g.dihedral()) {
        if (x.len_ == 0) return NodeSet{};
        if (x.len_ == static_cast<std::uint32_t>(g.dihedral_bond())) return NodeSet::of({1, 2});
        return NodeSet::of({dihedral_last(x.first_, static_cast<int>(x.len_))});
    }
    const int n = g.roots().npos();
    NodeSet s;
    for (int i = 1; i <= g.rank(); ++i)
        if (x.perm_[i - 1] >= n) s = s.with(i);
    return s;
}

bool has_left_descent(const Element& x, int label) {
    const Group& g = x.group();
    if (g.dihedral()) return left_descents(x).contains(label);
    const int n = g.roots().npos();
    const RootIndex target = static_cast<RootIndex>(label - 1 + n);
    for (int k = 0; k < n; ++k)
        if (x.perm_[k] == target) return true;
    return false;
}

Word canonical_word(const Element& x) {
    Word w;
    w.reserve(x.length());
    Element z = x;
    while (z.length() > 0) {
        const int i = left_descents(z).smallest();
        w.push_back(i);
        left_mul_in_place(z, i);
    }
    return w;
}

NodeSet support(const Element& x) {
    NodeSet s;
    for (int l : canonical_word(x)) s = s.with(l);
    return s;
}

bool bruhat_leq(const Element& u, const Element& w) {
    check_same_group(u, w);
    const Group& g = u.group();
    if (g.dihedral()) return u == w || u.length() < w.length();
    if (u.length() > w.length()) return false;
    Element a = u, b = w;
    while (b.length() > 0) {
        const int i = left_descents(b).smallest();
        if (has_left_descent(a, i)) left_mul_in_place(a, i);
        left_mul_in_place(b, i);
    }
    return a.length() == 0;
}

std::string word_str(const Word& w) {
    std::string out;
    for (int l : w) {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(l);
    }
    return out;
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string tok = text.substr(start, pos - start);
        if (!std::all_of(tok.begin(), tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }))
            throw ParseError("bad word letter '" + tok + "'");
        const long label = std::stol(tok);
        if (label < 1 || label > rank)
            throw ParseError("word letter " + tok + " out of range 1.." + std::to_string(rank));
        w.push_back(static_cast<int>(label));
    }
    return w;
}

}  // namespace coxstar
