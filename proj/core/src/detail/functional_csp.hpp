#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace cohesion::detail {

// Finite-domain constraint problem whose constraints all have the form
// value[dst] == map[value[src]]. Assigning a variable propagates along every
// constraint leaving it, so search only branches on unforced variables.
class FunctionalCsp {
public:
    static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    explicit FunctionalCsp(std::vector<std::size_t> domain_sizes)
        : domains_(std::move(domain_sizes)), edges_(domains_.size()) {}

    void add_constraint(std::size_t src, std::size_t dst, const std::vector<std::size_t>* map) {
        edges_[src].push_back({dst, map});
    }

    // Visits solutions in lexicographic order; emit returns false to stop.
    void solve(const std::function<bool(const std::vector<std::size_t>&)>& emit) const {
        std::vector<std::size_t> values(domains_.size(), kUnset);
        for (auto d : domains_)
            if (d == 0) return;
        std::vector<std::size_t> trail;
        search(0, values, trail, emit);
    }

    [[nodiscard]] std::size_t count(std::size_t stop_after = std::numeric_limits<std::size_t>::max()) const {
        std::size_t n = 0;
        solve([&](const std::vector<std::size_t>&) { return ++n < stop_after; });
        return n;
    }

private:
    struct Edge {
        std::size_t dst;
        const std::vector<std::size_t>* map;
    };

    bool assign(std::size_t var, std::size_t value, std::vector<std::size_t>& values,
                std::vector<std::size_t>& trail) const {
        std::vector<std::pair<std::size_t, std::size_t>> stack{{var, value}};
        while (!stack.empty()) {
            auto [v, x] = stack.back();
            stack.pop_back();
            if (values[v] != kUnset) {
                if (values[v] != x) return false;
                continue;
            }
            values[v] = x;
            trail.push_back(v);
            for (const auto& e : edges_[v]) stack.emplace_back(e.dst, (*e.map)[x]);
        }
        return true;
    }

    bool search(std::size_t next, std::vector<std::size_t>& values, std::vector<std::size_t>& trail,
                const std::function<bool(const std::vector<std::size_t>&)>& emit) const {
        while (next < values.size() && values[next] != kUnset) ++next;
        if (next == values.size()) return emit(values);
        for (std::size_t x = 0; x < domains_[next]; ++x) {
            const std::size_t mark = trail.size();
            const bool ok = assign(next, x, values, trail);
            bool keep_going = true;
            if (ok) keep_going = search(next + 1, values, trail, emit);
            while (trail.size() > mark) {
                values[trail.back()] = kUnset;
                trail.pop_back();
            }
            if (!keep_going) return false;
        }
        return true;
    }

    std::vector<std::size_t> domains_;
    std::vector<std::vector<Edge>> edges_;
};

// Union-find with path halving; the representative of a class is its least member.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent_[b] = a;
        else
            parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace cohesion::detail
