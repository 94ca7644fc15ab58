#include "coxstar/rootsys.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace coxstar {

namespace {

// -1 negative, 0 zero, +1 positive; throws on a mixed-sign vector.
int vector_sign(const std::vector<Scalar>& v) {
    bool has_pos = false, has_neg = false;
    for (const auto& c : v) {
        const int s = c.sign();
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
    }
    if (has_pos && has_neg) throw std::logic_error("mixed-sign root encountered");
    if (has_pos) return 1;
    if (has_neg) return -1;
    return 0;
}

using Key = std::vector<std::pair<std::int64_t, std::int64_t>>;

Key key_of(const std::vector<Scalar>& v) {
    Key k;
    k.reserve(v.size());
    for (const auto& c : v) k.emplace_back(c.unit_part(), c.phi_part());
    return k;
}

}  // namespace

RootSystem RootSystem::build(const CoxeterDiagram& d) {
    if (d.general_dihedral() ||
        std::any_of(d.components().begin(), d.components().end(),
                    [](const IrreducibleComponent& c) { return c.general_dihedral(); }))
        throw std::invalid_argument("no root system for general dihedral components");

    RootSystem rs(d);
    const int r = d.rank();

    // Pairing matrix c[i][j]; see the header for the bond orientations.
    rs.cartan_.assign(static_cast<std::size_t>(r) * r, Scalar(0));
    auto cart = [&](int i, int j) -> Scalar& {
        return rs.cartan_[static_cast<std::size_t>(i - 1) * r + (j - 1)];
    };
    for (int i = 1; i <= r; ++i) cart(i, i) = Scalar(2);
    for (const auto& c : d.components()) {
        for (const auto& [li, lj, m] : component_edges(c.family, c.rank, c.bond)) {
            const int i = c.first + li - 1, j = c.first + lj - 1;
            switch (m) {
                case 3:
                    cart(i, j) = Scalar(-1);
                    cart(j, i) = Scalar(-1);
                    break;
                case 4:
                    cart(i, j) = Scalar(-1);  // i < j: the higher label carries -2
                    cart(j, i) = Scalar(-2);
                    break;
                case 5:
                    cart(i, j) = Scalar(0, -1);
                    cart(j, i) = Scalar(0, -1);
                    break;
                case 6:
                    cart(i, j) = Scalar(-1);
                    cart(j, i) = Scalar(-3);
                    break;
                default:
                    throw std::invalid_argument("unsupported bond order in root system");
            }
        }
    }

    // Close the simple roots under the reflections. Simple roots enter
    // first, so positive root i-1 is alpha_i.
    std::map<Key, int> index;
    for (int i = 0; i < r; ++i) {
        std::vector<Scalar> alpha(r, Scalar(0));
        alpha[i] = Scalar(1);
        index[key_of(alpha)] = i;
        rs.pos_.push_back(std::move(alpha));
    }
    auto reflect_coords = [&](const std::vector<Scalar>& v, int label) {
        Scalar coeff(0);
        for (int j = 1; j <= r; ++j) {
            const Scalar& c = rs.cartan_[static_cast<std::size_t>(label - 1) * r + (j - 1)];
            if (!c.is_zero()) coeff = coeff + c * v[j - 1];
        }
        std::vector<Scalar> w = v;
        w[label - 1] = w[label - 1] - coeff;
        return w;
    };
    for (std::size_t head = 0; head < rs.pos_.size(); ++head) {
        for (int i = 1; i <= r; ++i) {
            const auto image = reflect_coords(rs.pos_[head], i);
            if (vector_sign(image) < 0) continue;  // only alpha_i flips sign
            const Key k = key_of(image);
            if (index.emplace(k, static_cast<int>(rs.pos_.size())).second)
                rs.pos_.push_back(image);
        }
    }
    rs.npos_ = static_cast<int>(rs.pos_.size());
    if (rs.npos_ > 30000) throw std::overflow_error("root system too large for 16-bit indices");
    const int n = rs.npos_;

    rs.refl_.assign(r, std::vector<RootIndex>(static_cast<std::size_t>(2) * n));
    for (int i = 1; i <= r; ++i) {
        auto& tbl = rs.refl_[i - 1];
        for (int k = 0; k < n; ++k) {
            const auto image = reflect_coords(rs.pos_[k], i);
            RootIndex target;
            if (vector_sign(image) > 0) {
                target = static_cast<RootIndex>(index.at(key_of(image)));
            } else {
                std::vector<Scalar> neg;
                neg.reserve(image.size());
                for (const auto& c : image) neg.push_back(-c);
                target = static_cast<RootIndex>(index.at(key_of(neg)) + n);
            }
            tbl[k] = target;
            tbl[k + n] = rs.flip(target);
        }
    }
    return rs;
}

}  // namespace coxstar
