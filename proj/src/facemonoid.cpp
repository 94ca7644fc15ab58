#include "coxstar/facemonoid.hpp"

#include <cstdlib>
#include <random>
#include <unordered_map>

#include "coxstar/errors.hpp"

namespace coxstar {

bool StarTable::all_ok(std::uint8_t bit) const {
    for (std::uint8_t s : status)
        if ((s & bit) == 0) return false;
    return true;
}

NodeSet recognize_w0J(const Element& z) {
    const NodeSet j = left_descents(z);
    if (support(z) != j || !(z == longest(z.group(), j)))
        throw NotALongestElement("not a parabolic longest element: '" +
                                 word_str(canonical_word(z)) + "'");
    return j;
}

namespace {

/// Shared lazy caches for one diagram: longest elements per subset,
/// w_0^J w_0^I elements and their canonical words, and the memo table of
/// the inductive evaluation.
class FaceContext {
  public:
    explicit FaceContext(const Group& g)
        : g_(g), full_(NodeSet::full(g.rank()).mask()) {}

    const Group& group() const { return g_; }
    std::uint32_t full() const { return full_; }

    const Element& longest_of(std::uint32_t mask) {
        auto it = longest_.find(mask);
        if (it == longest_.end())
            it = longest_.emplace(mask, longest(g_, NodeSet::from_mask(mask))).first;
        return it->second;
    }

    const Element& x_elem(std::uint32_t mask) {
        auto it = xelem_.find(mask);
        if (it == xelem_.end())
            it = xelem_.emplace(mask, mul(longest_of(mask), longest_of(full_))).first;
        return it->second;
    }

    const Word& x_word(std::uint32_t mask) {
        auto it = xword_.find(mask);
        if (it == xword_.end()) it = xword_.emplace(mask, canonical_word(x_elem(mask))).first;
        return it->second;
    }

    std::uint32_t recognize_mask(const Element& z) {
        const std::uint32_t j = left_descents(z).mask();
        if (!(z == longest_of(j)))
            throw NotALongestElement("not a parabolic longest element: '" +
                                     word_str(canonical_word(z)) + "'");
        return j;
    }

    // (w_0^{J1} w_0^I) |> w_0^{J2}, recognized as a subset.
    std::uint32_t down_pair(std::uint32_t m1, std::uint32_t m2) {
        return recognize_mask(down_fold(x_word(m1), longest_of(m2)));
    }

    // The inductive route of the main theorem's proof, within ambient
    // node set S: unit/zero rows, componentwise splits, then the
    // endpoint-complement base case plus recursion into both parabolics.
    std::uint32_t inductive(std::uint32_t s, std::uint32_t m1, std::uint32_t m2) {
        if (m2 == s) return m1;
        if (m1 == s) return m2;
        if (m1 == 0 || m2 == 0) return 0;

        const std::uint64_t key =
            (static_cast<std::uint64_t>(s) << 32) | (static_cast<std::uint64_t>(m1) << 16) | m2;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const CoxeterDiagram& d = g_.diagram();
        std::uint32_t result = 0;
        const auto s_parts = components_of(d, NodeSet::from_mask(s));
        if (s_parts.size() > 1) {
            for (const NodeSet& c : s_parts)
                result |= inductive(c.mask(), m1 & c.mask(), m2 & c.mask());
        } else {
            const auto parts2 = components_of(d, NodeSet::from_mask(m2));
            const auto parts1 = components_of(d, NodeSet::from_mask(m1));
            if (parts2.size() > 1) {
                for (const NodeSet& k : parts2) result |= inductive(s, m1, k.mask());
            } else if (parts1.size() > 1) {
                // commutativity swaps the arguments
                for (const NodeSet& k : parts1) result |= inductive(s, k.mask(), m2);
            } else {
                // proper connected arguments inside irreducible S
                const int i = endpoint_outside(s, m1);
                const int ip = endpoint_outside(s, m2);
                const std::uint32_t s1 = NodeSet::from_mask(s).without(i).mask();
                const std::uint32_t s2 = NodeSet::from_mask(s).without(ip).mask();

                const Element base_x = mul(longest_of(s2), longest_of(s));
                const std::uint32_t j3 =
                    recognize_mask(down_fold(canonical_word(base_x), longest_of(s1)));
                if ((j3 & ~(s1 & s2)) != 0)
                    throw InternalMismatch("endpoint base case left its containment");
                const std::uint32_t j4 = inductive(s2, m2, j3);
                if ((j4 & ~(s1 & m2)) != 0)
                    throw InternalMismatch("first parabolic recursion left its containment");
                const std::uint32_t j5 = inductive(s1, m1, j4);
                if ((j5 & ~(m1 & m2)) != 0)
                    throw InternalMismatch("second parabolic recursion left its containment");
                result = j5;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

  private:
    // Smallest endpoint of the graph restricted to s that avoids m.
    int endpoint_outside(std::uint32_t s, std::uint32_t m) {
        const CoxeterDiagram& d = g_.diagram();
        const NodeSet ss = NodeSet::from_mask(s);
        for (int i = 1; i <= d.rank(); ++i) {
            if (!ss.contains(i) || NodeSet::from_mask(m).contains(i)) continue;
            int degree = 0;
            for (int j = 1; j <= d.rank(); ++j)
                if (ss.contains(j) && d.adjacent(i, j)) ++degree;
            if (degree <= 1) return i;
        }
        throw InternalMismatch("no endpoint outside a proper connected subset");
    }

    const Group& g_;
    std::uint32_t full_;
    std::unordered_map<std::uint32_t, Element> longest_;
    std::unordered_map<std::uint32_t, Element> xelem_;
    std::unordered_map<std::uint32_t, Word> xword_;
    std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

std::uint32_t mask_interval(int lo, int hi) {
    std::uint32_t m = 0;
    for (int l = lo; l <= hi; ++l) m |= 1u << (l - 1);
    return m;
}

std::uint32_t mask_progression(int start, int last) {
    std::uint32_t m = 0;
    for (int l = start; l <= last; l += 2) m |= 1u << (l - 1);
    return m;
}

std::uint32_t bit_of(int label) { return 1u << (label - 1); }

void interval_bounds(std::uint32_t mask, int n, int& a, int& b) {
    a = std::countr_zero(mask) + 1;
    b = n - (31 - std::countl_zero(mask) + 1);
}

// The fork of D_n is {n-1, n}; the leaf-swap automorphism fixes everything else.
std::uint32_t dn_sigma(std::uint32_t mask, int n) {
    const bool has_n1 = (mask & bit_of(n - 1)) != 0;
    const bool has_n = (mask & bit_of(n)) != 0;
    std::uint32_t out = mask & ~(bit_of(n - 1) | bit_of(n));
    if (has_n1) out |= bit_of(n);
    if (has_n) out |= bit_of(n - 1);
    return out;
}

std::uint32_t star_connected_a(int n, std::uint32_t c1, std::uint32_t c2) {
    int a, b, ap, bp;
    interval_bounds(c1, n, a, b);
    interval_bounds(c2, n, ap, bp);
    return mask_interval(a + ap - 1, n - b - bp);
}

std::uint32_t star_connected_b(int n, std::uint32_t c1, std::uint32_t c2) {
    int a, b, ap, bp;
    interval_bounds(c1, n, a, b);
    interval_bounds(c2, n, ap, bp);
    if (b > 0 && bp == 0) {
        std::swap(a, ap);
        std::swap(b, bp);
    }
    if (b == 0 && bp == 0) return mask_interval(a + ap - 1, n);
    if (b == 0) return mask_interval(a + ap - 1, n - bp - 1);
    return 0;
}

std::uint32_t star_connected_d(int n, std::uint32_t c1, std::uint32_t c2) {
    const std::uint32_t full = mask_interval(1, n);
    const std::uint32_t fork = bit_of(n - 1) | bit_of(n);
    const std::uint32_t compl_n = full & ~bit_of(n);
    const std::uint32_t compl_n1 = full & ~bit_of(n - 1);
    const bool odd = n % 2 == 1;

    const bool leaf1 = c1 == compl_n || c1 == compl_n1;
    const bool leaf2 = c2 == compl_n || c2 == compl_n1;
    if (leaf1 && leaf2) {
        if (c1 == compl_n && c2 == compl_n)
            return odd ? mask_progression(2, n - 1) : mask_progression(1, n - 1);
        if (c1 == compl_n1 && c2 == compl_n1)
            return (odd ? mask_progression(2, n - 3) : mask_progression(1, n - 3)) | bit_of(n);
        return odd ? mask_progression(1, n - 2) : mask_progression(2, n - 2);
    }
    const bool fork1 = (c1 & fork) == fork;
    const bool fork2 = (c2 & fork) == fork;
    if (!fork1 && !fork2) return 0;
    if (!fork1) std::swap(c1, c2);

    const int a = std::countr_zero(c1) + 1;
    if ((c2 & fork) == fork) {
        const int ap = std::countr_zero(c2) + 1;
        return mask_interval(a + ap - 1, n);
    }
    std::uint32_t c2i = c2;
    if ((c2i & bit_of(n)) != 0) c2i = dn_sigma(c2i, n);  // now an interval ending below n
    int ap, bp;
    interval_bounds(c2i, n, ap, bp);
    return mask_interval(a + ap - 1, n - bp - 1);
}

std::uint32_t star_connected_e(int n, std::uint32_t c1, std::uint32_t c2) {
    const std::uint32_t full = mask_interval(1, n);
    auto compl1 = [&](int i) { return full & ~bit_of(i); };
    auto compl2 = [&](int i, int j) { return full & ~bit_of(i) & ~bit_of(j); };
    auto unordered = [&](std::uint32_t a, std::uint32_t b) {
        return (c1 == a && c2 == b) || (c1 == b && c2 == a);
    };
    if (n == 6) {
        if (unordered(compl1(1), compl1(2))) return bit_of(4) | bit_of(6);
        if (unordered(compl1(6), compl1(2))) return bit_of(1) | bit_of(4);
        if (unordered(compl1(1), compl1(1))) return bit_of(2) | bit_of(4) | bit_of(5);
        if (unordered(compl1(6), compl1(6))) return bit_of(2) | bit_of(3) | bit_of(4);
        if (unordered(compl1(1), compl1(6))) return bit_of(3) | bit_of(4) | bit_of(5);
        if (unordered(compl1(1), compl2(1, 6))) return bit_of(4);
        if (unordered(compl1(6), compl2(1, 6))) return bit_of(4);
        return 0;
    }
    if (n == 7) {
        if (unordered(compl1(1), compl1(1))) return bit_of(2) | bit_of(5) | bit_of(7);
        if (unordered(compl1(7), compl1(7))) return bit_of(2) | bit_of(3) | bit_of(4) | bit_of(5);
        if (unordered(compl1(1), compl1(7))) return bit_of(3) | bit_of(4) | bit_of(5);
        if (unordered(compl1(7), compl2(1, 7))) return bit_of(4);
        if (unordered(compl1(7), compl2(6, 7))) return bit_of(4);
        return 0;
    }
    if (unordered(compl1(8), compl1(8))) return bit_of(2) | bit_of(3) | bit_of(4) | bit_of(5);
    return 0;
}

std::uint32_t star_connected(const IrreducibleComponent& comp, std::uint32_t c1, std::uint32_t c2) {
    switch (comp.family) {
        case Family::A: return star_connected_a(comp.rank, c1, c2);
        case Family::B: return star_connected_b(comp.rank, c1, c2);
        case Family::D: return star_connected_d(comp.rank, c1, c2);
        case Family::E: return star_connected_e(comp.rank, c1, c2);
        case Family::F:
        case Family::H:
        case Family::I2: return 0;
    }
    return 0;
}

// Connected components of a local mask within one irreducible component.
std::vector<std::uint32_t> local_components(const IrreducibleComponent& comp, std::uint32_t mask) {
    std::uint32_t adj[17] = {};
    for (const auto& [i, j, m] : component_edges(comp.family, comp.rank, comp.bond)) {
        adj[i] |= bit_of(j);
        adj[j] |= bit_of(i);
    }
    std::vector<std::uint32_t> parts;
    std::uint32_t seen = 0;
    for (int seed = 1; seed <= comp.rank; ++seed) {
        if ((mask & bit_of(seed)) == 0 || (seen & bit_of(seed)) != 0) continue;
        std::uint32_t part = bit_of(seed);
        while (true) {
            std::uint32_t grown = part;
            for (int v = 1; v <= comp.rank; ++v)
                if ((part & bit_of(v)) != 0) grown |= adj[v] & mask;
            if (grown == part) break;
            part = grown;
        }
        seen |= part;
        parts.push_back(part);
    }
    return parts;
}

std::uint32_t irreducible_closed_form(const IrreducibleComponent& comp, std::uint32_t l1,
                                      std::uint32_t l2) {
    const std::uint32_t full = mask_interval(1, comp.rank);
    if (l1 == full) return l2;
    if (l2 == full) return l1;
    std::uint32_t res = 0;
    for (std::uint32_t c1 : local_components(comp, l1))
        for (std::uint32_t c2 : local_components(comp, l2)) res |= star_connected(comp, c1, c2);
    return res;
}

}  // namespace

NodeSet closed_form(const CoxeterDiagram& d, NodeSet j1, NodeSet j2) {
    std::uint32_t res = 0;
    for (const auto& comp : d.components()) {
        const std::uint32_t lmask = mask_interval(1, comp.rank);
        const std::uint32_t l1 = (j1.mask() >> (comp.first - 1)) & lmask;
        const std::uint32_t l2 = (j2.mask() >> (comp.first - 1)) & lmask;
        res |= irreducible_closed_form(comp, l1, l2) << (comp.first - 1);
    }
    return NodeSet::from_mask(res);
}

NodeSet star_sets(const Group& g, NodeSet j1, NodeSet j2) {
    FaceContext ctx(g);
    return NodeSet::from_mask(ctx.down_pair(j1.mask(), j2.mask()));
}

NodeSet star_sets_inductive(const Group& g, NodeSet j1, NodeSet j2) {
    FaceContext ctx(g);
    const std::uint32_t inductive = ctx.inductive(ctx.full(), j1.mask(), j2.mask());
    const std::uint32_t direct = ctx.down_pair(j1.mask(), j2.mask());
    if (inductive != direct)
        throw InternalMismatch("inductive route gave " + NodeSet::from_mask(inductive).str() +
                               ", direct route " + NodeSet::from_mask(direct).str());
    return NodeSet::from_mask(inductive);
}

int default_rank_bound() {
    if (const char* env = std::getenv("COXSTAR_RANK_BOUND")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 9;
}

VerificationReport verify(const Group& g, CheckSet checks, int rank_bound) {
    const int r = g.rank();
    const int bound = rank_bound < 0 ? default_rank_bound() : rank_bound;
    if (r > bound)
        throw RankBoundExceeded("rank " + std::to_string(r) + " exceeds table bound " +
                                std::to_string(bound));

    const bool with_bridge = checks == CheckSet::all || checks == CheckSet::lemmas;
    const bool with_closed = checks == CheckSet::all || checks == CheckSet::closedform;
    const bool with_inductive = checks == CheckSet::all || checks == CheckSet::inductive;
    const bool with_assoc = checks == CheckSet::all || checks == CheckSet::theorem;

    VerificationReport rep;
    rep.type_name = g.diagram().name();
    rep.rank = r;
    const std::uint32_t nsub = 1u << r;
    rep.table.type_name = rep.type_name;
    rep.table.rank = r;
    rep.table.entries.assign(static_cast<std::size_t>(nsub) * nsub, 0);
    rep.table.status.assign(static_cast<std::size_t>(nsub) * nsub, 0);

    FaceContext ctx(g);
    auto set_status = [&](std::uint32_t a, std::uint32_t b, std::uint8_t bit) {
        rep.table.status[(static_cast<std::size_t>(a) << r) | b] |= bit;
    };
    auto fail = [&](const char* check, std::uint32_t m1, std::uint32_t m2, std::string detail) {
        rep.failures.push_back(
            {check, m1, m2,
             "J1=" + NodeSet::from_mask(m1).str() + " J2=" + NodeSet::from_mask(m2).str() + ": " +
                 std::move(detail)});
    };

    bool closure_ok = true;
    for (std::uint32_t m1 = 0; m1 < nsub; ++m1) {
        for (std::uint32_t m2 = m1; m2 < nsub; ++m2) {
            ++rep.pairs;
            bool have12 = false, have21 = false;
            std::uint32_t j12 = 0, j21 = 0;
            try {
                j12 = ctx.down_pair(m1, m2);
                have12 = true;
                set_status(m1, m2, StarTable::kClosure);
            } catch (const NotALongestElement& e) {
                closure_ok = false;
                fail("closure", m1, m2, e.what());
            }
            try {
                j21 = ctx.down_pair(m2, m1);
                have21 = true;
                set_status(m2, m1, StarTable::kClosure);
            } catch (const NotALongestElement& e) {
                if (m1 != m2) {
                    closure_ok = false;
                    fail("closure", m2, m1, e.what());
                }
            }
            rep.table.entries[(static_cast<std::size_t>(m1) << r) | m2] = j12;
            rep.table.entries[(static_cast<std::size_t>(m2) << r) | m1] = j21;

            if (have12 && have21) {
                if (j12 == j21) {
                    set_status(m1, m2, StarTable::kCommutative);
                    set_status(m2, m1, StarTable::kCommutative);
                } else {
                    fail("commutativity", m1, m2,
                         NodeSet::from_mask(j12).str() + " vs " + NodeSet::from_mask(j21).str());
                }
            }
            if (have12) {
                if ((j12 & ~(m1 & m2)) == 0) {
                    set_status(m1, m2, StarTable::kContainment);
                    set_status(m2, m1, StarTable::kContainment);
                } else {
                    fail("containment", m1, m2,
                         NodeSet::from_mask(j12).str() + " not inside the intersection");
                }
            }
            if (with_bridge && have12) {
                const Element via_star = star_fold(ctx.x_word(m1), ctx.x_elem(m2));
                if (!(via_star == ctx.x_elem(j12)))
                    fail("star-down-agreement", m1, m2,
                         "star form disagrees with the downward form");
            }
            if (with_closed) {
                const std::uint32_t cf =
                    closed_form(g.diagram(), NodeSet::from_mask(m1), NodeSet::from_mask(m2)).mask();
                if (have12 && cf == j12) {
                    set_status(m1, m2, StarTable::kClosedForm);
                    set_status(m2, m1, StarTable::kClosedForm);
                } else if (have12) {
                    fail("closed-form", m1, m2,
                         "computed " + NodeSet::from_mask(j12).str() + ", closed form " +
                             NodeSet::from_mask(cf).str());
                }
            }
            if (with_inductive && have12) {
                try {
                    const std::uint32_t ji = ctx.inductive(ctx.full(), m1, m2);
                    if (ji != j12)
                        fail("inductive", m1, m2,
                             "inductive " + NodeSet::from_mask(ji).str() + ", direct " +
                                 NodeSet::from_mask(j12).str());
                } catch (const InternalMismatch& e) {
                    rep.internal_mismatch = true;
                    fail("inductive", m1, m2, e.what());
                } catch (const NotALongestElement& e) {
                    rep.internal_mismatch = true;
                    fail("inductive", m1, m2, e.what());
                }
            }
        }
    }

    if (with_assoc && closure_ok) {
        auto entry = [&](std::uint32_t a, std::uint32_t b) {
            return rep.table.entries[(static_cast<std::size_t>(a) << r) | b];
        };
        auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
            ++rep.assoc_triples;
            if (entry(entry(a, b), c) != entry(a, entry(b, c)))
                fail("associativity", a, b,
                     "triple with J3=" + NodeSet::from_mask(c).str() + " does not associate");
        };
        if (3 * r <= 24) {  // 8^rank triples within budget

            rep.assoc_exhaustive = true;
            for (std::uint32_t a = 0; a < nsub; ++a)
                for (std::uint32_t b = 0; b < nsub; ++b)
                    for (std::uint32_t c = 0; c < nsub; ++c) check_triple(a, b, c);
        } else {
            std::mt19937 rng(0xC05157A4u);
            std::uniform_int_distribution<std::uint32_t> pick(0, nsub - 1);
            for (int t = 0; t < 5000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }
    return rep;
}

StarTable full_table(const Group& g, int rank_bound) {
    return verify(g, CheckSet::all, rank_bound).table;
}

}  // namespace coxstar
