#include "coxstar/oracle.hpp"

#include <algorithm>

#include "coxstar/demazure.hpp"
#include "coxstar/errors.hpp"

namespace coxstar {

namespace {

std::uint64_t component_order(const IrreducibleComponent& c, std::uint64_t cap) {
    auto capped_mul = [cap](std::uint64_t x, std::uint64_t y) {
        if (y != 0 && x > cap / y) return cap;
        return x * y;
    };
    std::uint64_t out = 1;
    switch (c.family) {
        case Family::A:
            for (int k = 2; k <= c.rank + 1; ++k) out = capped_mul(out, k);
            return out;
        case Family::B:
            for (int k = 2; k <= c.rank; ++k) out = capped_mul(out, k);
            for (int k = 0; k < c.rank; ++k) out = capped_mul(out, 2);
            return out;
        case Family::D:
            for (int k = 2; k <= c.rank; ++k) out = capped_mul(out, k);
            for (int k = 0; k < c.rank - 1; ++k) out = capped_mul(out, 2);
            return out;
        case Family::E:
            return c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600;
        case Family::F: return 1152;
        case Family::H: return c.rank == 3 ? 120 : 14400;
        case Family::I2: return capped_mul(2, c.bond);
    }
    return cap;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t i) { bits[i >> 6] |= 1ull << (i & 63); }
bool get_bit(const std::vector<std::uint64_t>& bits, std::uint32_t i) {
    return ((bits[i >> 6] >> (i & 63)) & 1) != 0;
}

// Subsequence-product closure along one reduced word, by index.
std::vector<std::uint64_t> downset_by_index(const GroupEnumeration& en, std::uint32_t w_idx) {
    std::vector<std::uint64_t> d((en.size() + 63) / 64, 0);
    set_bit(d, 0);
    const Word word = canonical_word(en.elements[w_idx]);
    for (int letter : word) {
        const auto& rmul = en.right_mul[letter - 1];
        std::vector<std::uint64_t> grown = d;
        for (std::uint32_t i = 0; i < en.size(); ++i)
            if (get_bit(d, i)) set_bit(grown, rmul[i]);
        d = std::move(grown);
    }
    return d;
}

std::vector<std::uint32_t> bits_to_indices(const std::vector<std::uint64_t>& bits, std::size_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n; ++i)
        if (get_bit(bits, i)) out.push_back(i);
    return out;
}

}  // namespace

std::uint64_t classical_order(const CoxeterDiagram& d, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (const auto& c : d.components()) {
        const std::uint64_t f = component_order(c, cap);
        if (f != 0 && out > cap / f) return cap;
        out *= f;
    }
    return out;
}

GroupEnumeration enumerate(const Group& g, std::uint64_t size_guard) {
    const std::uint64_t order = classical_order(g.diagram(), size_guard + 1);
    if (order > size_guard)
        throw GuardExceeded("group order " + std::to_string(order) + "+ exceeds guard " +
                            std::to_string(size_guard));

    GroupEnumeration en;
    en.group = &g;
    en.elements.push_back(g.identity());
    en.length.push_back(0);
    en.index.emplace(en.elements[0], 0);
    en.right_mul.assign(g.rank(), {});

    for (std::uint32_t head = 0; head < en.elements.size(); ++head) {
        for (int label = 1; label <= g.rank(); ++label) {
            const Element next = mul(en.elements[head], g.generator(label));
            auto [it, fresh] = en.index.emplace(next, static_cast<std::uint32_t>(en.elements.size()));
            if (fresh) {
                en.elements.push_back(next);
                en.length.push_back(en.length[head] + 1);
            }
            en.right_mul[label - 1].resize(en.elements.size());
            en.right_mul[label - 1][head] = it->second;
        }
    }
    for (auto& tbl : en.right_mul) tbl.resize(en.elements.size());

    if (en.elements.size() != order)
        throw std::logic_error("closure size " + std::to_string(en.elements.size()) +
                               " does not match the classical order " + std::to_string(order));
    for (std::uint32_t i = 0; i < en.elements.size(); ++i) {
        if (en.length[i] != en.elements[i].length())
            throw std::logic_error("BFS depth disagrees with the cached length");
        if (static_cast<std::size_t>(en.length[i]) >= en.by_length.size())
            en.by_length.resize(en.length[i] + 1);
        en.by_length[en.length[i]].push_back(static_cast<int>(i));
    }
    return en;
}

std::vector<std::uint64_t> bruhat_downset(const GroupEnumeration& en, const Element& w) {
    return downset_by_index(en, en.index_of(w));
}

bool bruhat_subword(const Element& u, const Element& w, const GroupEnumeration& en) {
    return get_bit(bruhat_downset(en, w), en.index_of(u));
}

Element star_def(const Element& x, const Element& y, const GroupEnumeration& en) {
    const auto u_set = bits_to_indices(bruhat_downset(en, x), en.size());
    const auto v_set = bits_to_indices(bruhat_downset(en, y), en.size());
    std::vector<std::uint64_t> products((en.size() + 63) / 64, 0);
    for (std::uint32_t u : u_set)
        for (std::uint32_t v : v_set) set_bit(products, en.index_of(mul(en.elements[u], en.elements[v])));

    const auto prods = bits_to_indices(products, en.size());
    std::uint32_t best = prods.front();
    for (std::uint32_t p : prods)
        if (en.length[p] > en.length[best]) best = p;
    const auto best_down = downset_by_index(en, best);
    for (std::uint32_t p : prods)
        if (!get_bit(best_down, p))
            throw NoUniqueExtremum("product set has no unique maximal element");
    return en.elements[best];
}

Element down_def(const Element& x, const Element& y, const GroupEnumeration& en) {
    const auto u_set = bits_to_indices(bruhat_downset(en, x), en.size());
    std::vector<std::uint32_t> prods;
    prods.reserve(u_set.size());
    std::vector<std::uint64_t> seen((en.size() + 63) / 64, 0);
    for (std::uint32_t u : u_set) {
        const std::uint32_t p = en.index_of(mul(en.elements[u], y));
        if (!get_bit(seen, p)) {
            set_bit(seen, p);
            prods.push_back(p);
        }
    }
    std::uint32_t best = prods.front();
    for (std::uint32_t p : prods)
        if (en.length[p] < en.length[best]) best = p;
    const auto best_idx = best;
    for (std::uint32_t p : prods)
        if (!get_bit(downset_by_index(en, p), best_idx))
            throw NoUniqueExtremum("coset image has no unique minimal element");
    return en.elements[best];
}

CrossCheckReport cross_check(const Group& g, std::uint64_t size_guard) {
    const GroupEnumeration en = enumerate(g, size_guard);
    const std::size_t n = en.size();
    if (n > 4096)
        throw GuardExceeded("cross_check is meant for small groups; got " + std::to_string(n) +
                            " elements");

    CrossCheckReport rep;
    rep.type_name = g.diagram().name();
    rep.group_size = n;
    auto note = [&rep](std::string what) {
        if (rep.mismatches.size() < 100) rep.mismatches.push_back(std::move(what));
    };
    auto word_of = [&](std::uint32_t i) { return word_str(canonical_word(en.elements[i])); };

    // All downsets once; also the full index multiplication table.
    std::vector<std::vector<std::uint64_t>> down_bits(n);
    for (std::uint32_t i = 0; i < n; ++i) down_bits[i] = downset_by_index(en, i);
    std::vector<std::uint32_t> mul_idx(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            mul_idx[i * n + j] = en.index_of(mul(en.elements[i], en.elements[j]));
    std::vector<std::uint32_t> inv_idx(n);
    for (std::uint32_t i = 0; i < n; ++i) inv_idx[i] = en.index_of(inverse(en.elements[i]));

    auto leq_idx = [&](std::uint32_t u, std::uint32_t w) { return get_bit(down_bits[w], u); };

    for (std::uint32_t wi = 0; wi < n; ++wi) {
        for (std::uint32_t ui = 0; ui < n; ++ui) {
            ++rep.bruhat_pairs;
            if (leq_idx(ui, wi) != bruhat_leq(en.elements[ui], en.elements[wi]))
                note("bruhat mismatch at u=" + word_of(ui) + " w=" + word_of(wi));
        }
    }

    for (std::uint32_t xi = 0; xi < n; ++xi) {
        const auto u_set = bits_to_indices(down_bits[xi], n);
        for (std::uint32_t yi = 0; yi < n; ++yi) {
            ++rep.star_pairs;
            ++rep.down_pairs;
            ++rep.witness_pairs;
            const Element& x = en.elements[xi];
            const Element& y = en.elements[yi];

            // star: length-max product, dominance checked against the oracle order
            const auto v_set = bits_to_indices(down_bits[yi], n);
            std::uint32_t best = 0;
            std::vector<std::uint32_t> prods;
            prods.reserve(u_set.size() * v_set.size());
            for (std::uint32_t u : u_set)
                for (std::uint32_t v : v_set) {
                    const std::uint32_t p = mul_idx[u * n + v];
                    prods.push_back(p);
                    if (en.length[p] > en.length[best]) best = p;
                }
            bool unique = true;
            for (std::uint32_t p : prods)
                if (!leq_idx(p, best)) unique = false;
            const std::uint32_t star_fold_idx = en.index_of(star(x, y));
            if (!unique)
                note("star max not unique at x=" + word_of(xi) + " y=" + word_of(yi));
            else if (best != star_fold_idx)
                note("star mismatch at x=" + word_of(xi) + " y=" + word_of(yi));

            // down: length-min of {u y}, minimality checked the same way
            std::uint32_t bestmin = mul_idx[u_set.front() * n + yi];
            std::vector<std::uint32_t> coset;
            coset.reserve(u_set.size());
            for (std::uint32_t u : u_set) {
                const std::uint32_t p = mul_idx[u * n + yi];
                coset.push_back(p);
                if (en.length[p] < en.length[bestmin]) bestmin = p;
            }
            bool unique_min = true;
            for (std::uint32_t p : coset)
                if (!leq_idx(bestmin, p)) unique_min = false;
            const std::uint32_t down_fold_idx = en.index_of(down(x, y));
            if (!unique_min)
                note("down min not unique at x=" + word_of(xi) + " y=" + word_of(yi));
            else if (bestmin != down_fold_idx)
                note("down mismatch at x=" + word_of(xi) + " y=" + word_of(yi));

            // witness equations for the product lemma
            const std::uint32_t z = star_fold_idx;
            const std::uint32_t u_w = mul_idx[z * n + inv_idx[yi]];
            const std::uint32_t v_w = mul_idx[inv_idx[xi] * n + z];
            if (!leq_idx(u_w, xi) || !leq_idx(v_w, yi) ||
                en.length[z] != en.length[u_w] + en.length[yi] ||
                en.length[z] != en.length[xi] + en.length[v_w])
                note("witness equations fail at x=" + word_of(xi) + " y=" + word_of(yi));
        }
    }
    return rep;
}

}  // namespace coxstar
