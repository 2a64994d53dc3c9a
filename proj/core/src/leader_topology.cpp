#include "dirichlet/leader_topology.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "dirichlet/error.hpp"

namespace dirichlet {

RegionFamily neighbor_family(const VoronoiDiagram& d, std::size_t p_id, double tol) {
    if (p_id >= d.cells.size()) throw Error("site id out of range");
    RegionFamily family;
    for (std::size_t y = 0; y < d.cells.size(); ++y) {
        if (y == p_id || are_proximal(d.cells[y], d.cells[p_id], tol)) {
            family.insert(y);
        }
    }
    return family;
}

namespace {

RegionFamily family_union(const RegionFamily& a, const RegionFamily& b) {
    RegionFamily out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

RegionFamily family_intersection(const RegionFamily& a, const RegionFamily& b) {
    RegionFamily out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

// Closure under pairwise union/intersection. Every unordered pair is
// combined exactly once: element i meets all earlier elements, and newly
// produced families are appended to get their own turn.
template <typename T, typename Join, typename Meet>
std::vector<T> pairwise_closure(std::vector<T> items, Join join, Meet meet,
                                std::size_t max_size) {
    std::unordered_set<T> seen;  // requires std::hash<T>
    std::vector<T> out;
    const auto add = [&](const T& value) {
        if (seen.insert(value).second) {
            out.push_back(value);
            if (out.size() > max_size) {
                throw Error("topology closure exceeded " + std::to_string(max_size) +
                            " families");
            }
        }
    };
    for (const T& item : items) add(item);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            add(join(out[i], out[j]));
            add(meet(out[i], out[j]));
        }
    }
    return out;
}

}  // namespace

LeaderTopology build_leader_topology(const VoronoiDiagram& d, double tol,
                                     std::size_t max_families) {
    LeaderTopology topo;
    const std::size_t n = d.cells.size();
    topo.region_count = n;

    std::vector<RegionFamily> base;
    base.reserve(n);
    for (std::size_t p = 0; p < n; ++p) base.push_back(neighbor_family(d, p, tol));

    if (n <= 64) {
        std::vector<std::uint64_t> masks;
        masks.reserve(n + 2);
        masks.push_back(0);
        masks.push_back(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
        for (const RegionFamily& fam : base) {
            std::uint64_t mask = 0;
            for (const std::size_t id : fam) mask |= std::uint64_t{1} << id;
            masks.push_back(mask);
        }
        const auto closed = pairwise_closure(
            std::move(masks), [](std::uint64_t a, std::uint64_t b) { return a | b; },
            [](std::uint64_t a, std::uint64_t b) { return a & b; }, max_families);
        for (const std::uint64_t mask : closed) {
            RegionFamily fam;
            for (std::size_t id = 0; id < n; ++id) {
                if (mask & (std::uint64_t{1} << id)) fam.insert(id);
            }
            topo.families.insert(std::move(fam));
        }
        return topo;
    }

    // generic path for very large diagrams
    RegionFamily full;
    for (std::size_t i = 0; i < n; ++i) full.insert(i);
    std::set<RegionFamily> families(base.begin(), base.end());
    families.insert(full);
    families.insert(RegionFamily{});
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<RegionFamily> snapshot(families.begin(), families.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                changed |= families.insert(family_union(snapshot[i], snapshot[j])).second;
                changed |=
                    families.insert(family_intersection(snapshot[i], snapshot[j])).second;
                if (families.size() > max_families) {
                    throw Error("topology closure exceeded " + std::to_string(max_families) +
                                " families");
                }
            }
        }
    }
    topo.families = std::move(families);
    return topo;
}

TopologyAxiomReport verify_topology_axioms(const LeaderTopology& t) {
    TopologyAxiomReport report;

    RegionFamily full;
    for (std::size_t i = 0; i < t.region_count; ++i) full.insert(i);
    report.has_full_family = t.families.count(full) > 0;
    report.has_empty_family = t.families.count(RegionFamily{}) > 0;

    const std::vector<RegionFamily> all(t.families.begin(), t.families.end());

    if (t.region_count <= 64) {
        std::vector<std::uint64_t> masks;
        masks.reserve(all.size());
        std::unordered_set<std::uint64_t> member;
        for (const RegionFamily& fam : all) {
            std::uint64_t mask = 0;
            for (const std::size_t id : fam) mask |= std::uint64_t{1} << id;
            masks.push_back(mask);
            member.insert(mask);
        }
        for (std::size_t i = 0; i < masks.size(); ++i) {
            for (std::size_t j = i; j < masks.size(); ++j) {
                ++report.pairs_checked;
                TopologyAxiomViolation v;
                v.union_missing = member.count(masks[i] | masks[j]) == 0;
                v.intersection_missing = member.count(masks[i] & masks[j]) == 0;
                if (v.union_missing || v.intersection_missing) {
                    v.a = all[i];
                    v.b = all[j];
                    report.violations.push_back(std::move(v));
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i; j < all.size(); ++j) {
                ++report.pairs_checked;
                TopologyAxiomViolation v;
                v.union_missing = t.families.count(family_union(all[i], all[j])) == 0;
                v.intersection_missing =
                    t.families.count(family_intersection(all[i], all[j])) == 0;
                if (v.union_missing || v.intersection_missing) {
                    v.a = all[i];
                    v.b = all[j];
                    report.violations.push_back(std::move(v));
                }
            }
        }
    }
    report.valid =
        report.has_full_family && report.has_empty_family && report.violations.empty();
    return report;
}

}  // namespace dirichlet
