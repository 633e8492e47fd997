#include "tdl/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tdl {
namespace {

// Maps exact values to small integers so the search compares ints only.
class Interner {
public:
    explicit Interner(unsigned order) : order_(order) {}

    int id(const Cyclo& value) {
        std::string key;
        const Cyclo v = value.lifted(std::lcm(order_, value.order()));
        for (const auto& c : v.coefficients()) key += c.get_str() + ",";
        key += "@" + std::to_string(v.order());
        return ids_.emplace(std::move(key), static_cast<int>(ids_.size())).first->second;
    }

private:
    unsigned order_;
    std::map<std::string, int> ids_;
};

unsigned common_order(const std::vector<const InvariantData*>& sets) {
    unsigned L = 1;
    auto absorb = [&L](const Cyclo& c) { L = std::lcm(L, c.order()); };
    for (const auto* d : sets) {
        const int n = static_cast<int>(d->labels.size());
        for (const auto& t : d->T) absorb(t);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                absorb(d->S(a, b));
                if (d->W) absorb((*d->W)(a, b));
            }
    }
    return L;
}

struct Encoded {
    int n = 0;
    std::vector<int> dims, T, S, W;
    bool has_w = false;
    std::vector<std::vector<int>> fingerprint;
};

Encoded encode(const InvariantData& d, Interner& in, bool use_w) {
    Encoded e;
    e.n = static_cast<int>(d.labels.size());
    e.dims = d.dims;
    e.has_w = use_w;
    for (const auto& t : d.T) e.T.push_back(in.id(t));
    for (int a = 0; a < e.n; ++a)
        for (int b = 0; b < e.n; ++b) {
            e.S.push_back(in.id(d.S(a, b)));
            if (use_w) e.W.push_back(in.id((*d.W)(a, b)));
        }
    for (int a = 0; a < e.n; ++a) {
        std::vector<int> fp{e.dims[a], e.T[a]};
        std::vector<int> row(e.S.begin() + a * e.n, e.S.begin() + (a + 1) * e.n);
        std::sort(row.begin(), row.end());
        fp.insert(fp.end(), row.begin(), row.end());
        fp.push_back(-1);
        if (use_w) {
            std::vector<int> wrow(e.W.begin() + a * e.n, e.W.begin() + (a + 1) * e.n);
            std::sort(wrow.begin(), wrow.end());
            fp.insert(fp.end(), wrow.begin(), wrow.end());
        }
        e.fingerprint.push_back(std::move(fp));
    }
    return e;
}

struct Backtracker {
    const Encoded& x;
    const Encoded& y;
    std::vector<std::vector<int>> candidates;
    std::vector<int> order;
    std::vector<int> image;
    std::vector<char> used;
    std::int64_t nodes = 0;

    bool consistent(int a, int b) const {
        const int n = x.n;
        if (x.S[a * n + a] != y.S[b * n + b]) return false;
        if (x.has_w && x.W[a * n + a] != y.W[b * n + b]) return false;
        for (int a2 : order) {
            const int b2 = image[a2];
            if (b2 < 0) continue;
            if (x.S[a * n + a2] != y.S[b * n + b2] || x.S[a2 * n + a] != y.S[b2 * n + b]) return false;
            if (x.has_w && (x.W[a * n + a2] != y.W[b * n + b2] || x.W[a2 * n + a] != y.W[b2 * n + b])) return false;
        }
        return true;
    }

    bool solve(std::size_t depth) {
        if (depth == order.size()) return true;
        const int a = order[depth];
        for (int b : candidates[a]) {
            if (used[b]) continue;
            ++nodes;
            if (!consistent(a, b)) continue;
            image[a] = b;
            used[b] = 1;
            if (solve(depth + 1)) return true;
            image[a] = -1;
            used[b] = 0;
        }
        return false;
    }
};

std::vector<int> t_allowed(const InvariantData& first, const InvariantData& second, int a) {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(second.labels.size()); ++b)
        if (second.dims[b] == first.dims[a] && second.T[b] == first.T[a]) out.push_back(b);
    return out;
}

}  // namespace

InvariantData InvariantData::from(const ModularData& md, const WMatrix* w) {
    InvariantData d{md.labels, md.dims, md.S, md.T, std::nullopt, 0};
    if (w) d.W = w->W;
    return d;
}

SearchResult equivalence_search(const InvariantData& first, const InvariantData& second) {
    SearchResult res;
    if (first.labels.size() != second.labels.size()) {
        res.reason = "ranks differ";
        return res;
    }
    const bool use_w = first.W.has_value() && second.W.has_value();
    Interner in(common_order({&first, &second}));
    const Encoded x = encode(first, in, use_w);
    const Encoded y = encode(second, in, use_w);

    Backtracker bt{x, y, {}, {}, std::vector<int>(x.n, -1), std::vector<char>(x.n, 0)};
    bt.candidates.resize(x.n);
    for (int a = 0; a < x.n; ++a) {
        if (a == first.unit) {
            if (x.fingerprint[a] == y.fingerprint[second.unit]) bt.candidates[a] = {second.unit};
        } else {
            for (int b = 0; b < y.n; ++b)
                if (b != second.unit && x.fingerprint[a] == y.fingerprint[b]) bt.candidates[a].push_back(b);
        }
        if (bt.candidates[a].empty()) {
            res.reason = "no label has the fingerprint of " + first.labels[a] +
                         (use_w ? " (d, theta, S row, W row)" : " (d, theta, S row)");
            return res;
        }
    }
    bt.order.resize(x.n);
    std::iota(bt.order.begin(), bt.order.end(), 0);
    std::stable_sort(bt.order.begin(), bt.order.end(), [&](int a, int b) {
        return bt.candidates[a].size() < bt.candidates[b].size();
    });
    res.equivalent = bt.solve(0);
    res.nodes = bt.nodes;
    if (res.equivalent) res.witness = bt.image;
    else res.reason = "backtracking exhausted all fingerprint-compatible assignments";
    return res;
}

bool Obstruction::disjoint() const {
    for (int v : t_allowed)
        if (std::find(w_required.begin(), w_required.end(), v) != w_required.end()) return false;
    return true;
}

Obstruction t_versus_w(const InvariantData& first, const InvariantData& second, int anchor, int target) {
    if (!first.W || !second.W) throw std::invalid_argument("T-versus-W obstruction needs W on both sides");
    Obstruction ob{anchor, target, t_allowed(first, second, target), {}};
    const Cyclo& want = (*first.W)(anchor, target);
    for (int y = 0; y < static_cast<int>(second.labels.size()); ++y) {
        if (second.dims[y] != first.dims[target]) continue;
        for (int b : t_allowed(first, second, anchor)) {
            if ((*second.W)(b, y) == want) {
                ob.w_required.push_back(y);
                break;
            }
        }
    }
    return ob;
}

std::vector<Obstruction> t_versus_w_all(const InvariantData& first, const InvariantData& second) {
    std::vector<Obstruction> out;
    const int n = static_cast<int>(first.labels.size());
    for (int anchor = 0; anchor < n; ++anchor)
        for (int target = 0; target < n; ++target) {
            Obstruction ob = t_versus_w(first, second, anchor, target);
            if (ob.disjoint()) out.push_back(std::move(ob));
        }
    return out;
}

std::vector<std::vector<int>> equivalence_classes(const std::vector<InvariantData>& data) {
    const int m = static_cast<int>(data.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (find(i) == find(j)) continue;
            if (equivalence_search(data[i], data[j]).equivalent) parent[find(j)] = find(i);
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tdl
