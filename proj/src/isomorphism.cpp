#include "fointerp/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "fointerp/error.hpp"

namespace fointerp {

namespace {

// Per element: for every relation and argument position the number of tuples
// with the element there, plus the number of constant tuples (e, ..., e).
std::vector<std::vector<int>> degree_vectors(const FiniteStructure& s) {
    const auto& rels = s.signature().relations();
    std::vector<std::vector<int>> deg(s.size());
    for (auto& d : deg)
        for (const auto& r : rels)
            d.resize(d.size() + r.arity + 1, 0);
    std::size_t base = 0;
    for (std::size_t r = 0; r < rels.size(); ++r) {
        for (const auto& t : s.tuples(static_cast<int>(r))) {
            for (int p = 0; p < rels[r].arity; ++p)
                ++deg[t[p]][base + p];
            if (std::all_of(t.begin(), t.end(), [&](Element e) { return e == t.front(); }))
                ++deg[t.front()][base + rels[r].arity];
        }
        base += rels[r].arity + 1;
    }
    return deg;
}

class Search {
public:
    Search(const FiniteStructure& a, const FiniteStructure& b) : a_(a), b_(b), n_(a.size()) {
        deg_a_ = degree_vectors(a);
        deg_b_ = degree_vectors(b);
        // Rarest degree vectors first.
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> frequency(n_, 0);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                frequency[x] += deg_a_[x] == deg_a_[y];
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return frequency[x] < frequency[y]; });
        map_.assign(n_, -1);
        used_.assign(n_, false);
    }

    std::optional<Bijection> run() {
        if (extend(0))
            return map_;
        return std::nullopt;
    }

private:
    bool consistent(Element x, Element y) const {
        const auto& rels = a_.signature().relations();
        for (std::size_t r = 0; r < rels.size(); ++r) {
            const int rel = static_cast<int>(r);
            if (rels[r].arity == 1) {
                Element tx[1] = {x}, ty[1] = {y};
                if (a_.holds(rel, tx) != b_.holds(rel, ty))
                    return false;
            } else if (rels[r].arity == 2) {
                Element tx[2] = {x, x}, ty[2] = {y, y};
                if (a_.holds(rel, tx) != b_.holds(rel, ty))
                    return false;
                for (Element u = 0; u < n_; ++u) {
                    if (map_[u] < 0 || u == x)
                        continue;
                    Element p[2] = {x, u}, q[2] = {y, map_[u]};
                    if (a_.holds(rel, p) != b_.holds(rel, q))
                        return false;
                    Element p2[2] = {u, x}, q2[2] = {map_[u], y};
                    if (a_.holds(rel, p2) != b_.holds(rel, q2))
                        return false;
                }
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size())
            return is_isomorphism(a_, b_, map_);
        Element x = order_[depth];
        for (Element y = 0; y < n_; ++y) {
            if (used_[y] || deg_a_[x] != deg_b_[y])
                continue;
            map_[x] = y;
            if (consistent(x, y)) {
                used_[y] = true;
                if (extend(depth + 1))
                    return true;
                used_[y] = false;
            }
            map_[x] = -1;
        }
        return false;
    }

    const FiniteStructure& a_;
    const FiniteStructure& b_;
    int n_;
    std::vector<std::vector<int>> deg_a_, deg_b_;
    std::vector<Element> order_;
    Bijection map_;
    std::vector<bool> used_;
};

} // namespace

bool is_isomorphism(const FiniteStructure& a, const FiniteStructure& b, const Bijection& f) {
    if (!(a.signature() == b.signature()) || a.size() != b.size() || static_cast<int>(f.size()) != a.size())
        return false;
    std::vector<bool> hit(b.size(), false);
    for (Element y : f) {
        if (y < 0 || y >= b.size() || hit[y])
            return false;
        hit[y] = true;
    }
    for (std::size_t r = 0; r < a.signature().size(); ++r) {
        const int rel = static_cast<int>(r);
        if (a.tuple_count(rel) != b.tuple_count(rel))
            return false;
        for (const auto& t : a.tuples(rel)) {
            Tuple image;
            for (Element e : t)
                image.push_back(f[e]);
            if (!b.holds(rel, image))
                return false;
        }
    }
    return true;
}

std::optional<Bijection> isomorphism(const FiniteStructure& a, const FiniteStructure& b) {
    if (!(a.signature() == b.signature()))
        fail(ErrorKind::Structural, "isomorphism needs equal signatures: " + a.signature().to_string() + " vs " +
                                        b.signature().to_string());
    if (a.size() != b.size())
        return std::nullopt;
    for (std::size_t r = 0; r < a.signature().size(); ++r)
        if (a.tuple_count(static_cast<int>(r)) != b.tuple_count(static_cast<int>(r)))
            return std::nullopt;
    auto da = degree_vectors(a), db = degree_vectors(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return std::nullopt;
    return Search(a, b).run();
}

} // namespace fointerp
