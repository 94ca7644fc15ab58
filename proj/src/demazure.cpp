#include "coxstar/demazure.hpp"

#include "coxstar/errors.hpp"

namespace coxstar {

namespace {

void check_same_group(const Element& x, const Element& y) {
    if (&x.group() == &y.group()) return;
    if (!(x.group().diagram() == y.group().diagram()))
        throw DiagramMismatch("elements belong to different diagrams");
}

}  // namespace

Element star_fold(const Word& xword, Element z) {
    for (auto it = xword.rbegin(); it != xword.rend(); ++it)
        if (!has_left_descent(z, *it)) left_mul_in_place(z, *it);
    return z;
}

Element down_fold(const Word& xword, Element z) {
    for (auto it = xword.rbegin(); it != xword.rend(); ++it)
        if (has_left_descent(z, *it)) left_mul_in_place(z, *it);
    return z;
}

Element star(const Element& x, const Element& y) {
    check_same_group(x, y);
    return star_fold(canonical_word(x), y);
}

Element down(const Element& x, const Element& y) {
    check_same_group(x, y);
    return down_fold(canonical_word(x), y);
}

Element longest(const Group& g, NodeSet j) {
    Element z = g.identity();
    while (true) {
        const NodeSet missing = NodeSet::from_mask(j.mask() & ~left_descents(z).mask());
        if (missing.is_empty()) break;
        left_mul_in_place(z, missing.smallest());
    }
    return z;
}

Element w0J_w0I(const Group& g, NodeSet j) {
    return mul(longest(g, j), longest(g, g.diagram().nodes()));
}

}  // namespace coxstar
